#include "affhecke/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "affhecke/errors.hpp"
#include "affhecke/io.hpp"
#include "affhecke/springer.hpp"

namespace affhecke {

namespace {

// Collects failed sub-checks; keeps the first few messages.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << count_ << " checks";
    if (failures_) os << ", " << failures_ << " failed: " << messages_;
    return os.str();
  }

 private:
  std::size_t count_ = 0, failures_ = 0;
  std::string messages_;
};

const std::vector<std::string>& four_data() {
  static const std::vector<std::string> names = {"sl2", "pgl2", "gl2", "sl3"};
  return names;
}

Weight vec(std::initializer_list<std::int64_t> xs) { return Weight(xs); }

HeckeElt theta_sum(const HeckeAlgebra& H, const GroupAlgebraElt& g) {
  HeckeElt out;
  for (const auto& [mu, c] : g.terms()) out += H.theta(mu).scaled(c);
  return out;
}

LaurentPoly v_minus_vinv() { return LaurentPoly::v() - LaurentPoly::v_inv(); }

// ------------------------------------------------------------------ 1
void crit_pgl2_lengths(Checker& c) {
  const AffineWeylGroup G(load_datum("pgl2"));
  const AffineElt s = G.generators()[0].elt;
  for (int m = -10; m <= 10; ++m) {
    const AffineElt t = G.translation(vec({m}));
    c.check(G.length(t) == std::abs(m), "l(t_" + std::to_string(m) + ")");
    c.check(G.length(G.mul(t, s)) == std::abs(m - 1), "l(t_" + std::to_string(m) + " s)");
  }
  const auto omega = G.length_zero_elements(10);
  const std::vector<AffineElt> expected = {G.identity(), G.mul(G.translation(vec({1})), s)};
  c.check(omega == expected, "Omega(pgl2) != {id, t_varpi s}");
}

// ------------------------------------------------------------------ 2
void crit_length_oracle(Checker& c) {
  for (const char* name : {"sl2", "sl3", "c2", "gl2"}) {
    const AffineWeylGroup G(load_datum(name));
    std::size_t n = 0;
    for (const auto& x : G.elements_up_to(10, 5)) {
      ++n;
      c.check(G.length(x) == G.length_by_hyperplanes(x), std::string(name) + ": " + G.to_string(x));
    }
    c.check(n > 0, std::string(name) + ": no elements enumerated");
  }
}

// ------------------------------------------------------------------ 3
void crit_hecke_relations(Checker& c) {
  std::mt19937_64 rng(20261015);
  for (const auto& name : four_data()) {
    const HeckeAlgebra H(load_datum(name));
    const auto& G = H.group();
    const auto& gens = G.generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const HeckeElt ds = H.delta_gen(static_cast<int>(g));
      HeckeElt rhs = H.one();
      rhs += ds.scaled(LaurentPoly::v_inv() - LaurentPoly::v());
      c.check(H.mul(ds, ds) == rhs, name + ": quadratic relation for " + gens[g].name);
    }
    // Braid relations: for generators s != t with st of finite order m,
    // the alternating words of length m agree as group elements and in H.
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        const AffineElt st = G.mul(gens[a].elt, gens[b].elt);
        AffineElt p = st;
        int m = 1;
        while (!(p == G.identity()) && m <= 6) p = G.mul(p, st), ++m;
        if (!(p == G.identity())) continue;
        std::vector<int> w1, w2;
        for (int k = 0; k < m; ++k) {
          w1.push_back(static_cast<int>(k % 2 ? b : a));
          w2.push_back(static_cast<int>(k % 2 ? a : b));
        }
        const AffineElt x1 = G.from_word(G.identity(), w1), x2 = G.from_word(G.identity(), w2);
        c.check(x1 == x2, name + ": braid relation in W");
        HeckeElt h1 = H.one(), h2 = H.one();
        for (int g : w1) h1 = H.mul_gen_right(h1, g);
        for (int g : w2) h2 = H.mul_gen_right(h2, g);
        c.check(h1 == h2 && h1 == H.delta(x1), name + ": braid relation in H");
      }
    const auto pool = G.elements_up_to(6, 3);
    for (const auto& x : pool) {
      auto rw = G.reduced_word(x);
      c.check(G.from_word(rw.omega, rw.word) == x && static_cast<int>(rw.word.size()) == G.length(x),
              name + ": reduced word reassembly of " + G.to_string(x));
    }
    int found = 0, tries = 0;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    while (found < 50 && tries < 200000) {
      ++tries;
      const AffineElt& x = pool[pick(rng)];
      const AffineElt& y = pool[pick(rng)];
      const AffineElt xy = G.mul(x, y);
      if (G.length(xy) != G.length(x) + G.length(y)) continue;
      ++found;
      c.check(H.mul(H.delta(x), H.delta(y)) == H.delta(xy), name + ": length-additive product");
    }
    c.check(found == 50, name + ": too few length-additive pairs sampled");
  }
}

// ------------------------------------------------------------------ 4
void crit_theta_well_defined(Checker& c) {
  std::mt19937_64 rng(4);
  for (const auto& name : four_data()) {
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    std::vector<Weight> dominant;
    for (const auto& mu : lattice_box(d.rank(), 2))
      if (is_dominant(d, mu, Lattice::Coweight)) dominant.push_back(mu);
    std::uniform_int_distribution<std::size_t> pick(0, dominant.size() - 1);
    for (const auto& lambda : lattice_box(d.rank(), 3)) {
      const HeckeElt ref = H.theta(lambda);
      const auto [plus, minus] = H.dominant_decomposition(lambda);
      for (int k = 0; k < 20; ++k) {
        const Weight mu = dominant[pick(rng)] + dominant[pick(rng)];
        c.check(H.theta_from(plus + mu, minus + mu) == ref, name + ": theta_" + to_string(lambda));
      }
    }
  }
}

// ------------------------------------------------------------------ 5
void crit_bernstein_relation(Checker& c) {
  for (const auto& name : four_data()) {
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    for (int i = 0; i < d.semisimple_rank(); ++i)
      for (const auto& lambda : lattice_box(d.rank(), 3)) {
        const HeckeElt ds = H.delta_gen(i);
        const Weight slambda = reflect(d, i, lambda);
        const HeckeElt lhs = H.mul(ds, H.theta(slambda)) - H.mul(H.theta(lambda), ds);
        const HeckeElt rhs = theta_sum(H, H.relation_fraction(i, lambda)).scaled(v_minus_vinv());
        c.check(lhs == rhs, name + ": relation for s" + std::to_string(i + 1) + ", lambda " + to_string(lambda));
      }
  }
  // PGL2, lambda = varpi: delta_s theta_{-varpi} = theta_varpi delta_s + (v - v^-1) theta_varpi.
  const HeckeAlgebra H(load_datum("pgl2"));
  const HeckeElt ds = H.delta_gen(0);
  const HeckeElt tv = H.theta(vec({1}));
  c.check(H.mul(ds, H.theta(vec({-1}))) == H.mul(tv, ds) + tv.scaled(v_minus_vinv()),
          "pgl2 worked instance at varpi");
  // theta_varpi = delta_varpi delta_s with varpi = t_varpi s.
  const AffineElt varpi = H.group().omega_generator();
  c.check(tv == H.mul(H.delta(varpi), ds), "pgl2: theta_varpi = delta_varpi delta_s");
}

// ------------------------------------------------------------------ 6
void crit_centrality(Checker& c) {
  for (const auto& name : four_data()) {
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    for (const auto& lambda : lattice_box(d.rank(), 3))
      if (is_dominant(d, lambda, Lattice::Coweight))
        c.check(H.is_central(H.z_center(lambda), 2), name + ": z_" + to_string(lambda) + " central");
  }
  const HeckeAlgebra H(load_datum("gl2"));
  const auto& G = H.group();
  const AffineElt varpi = G.omega_generator();
  const int s = 0, s0 = 1;
  const HeckeElt z_nat = H.theta(vec({1, 0})) + H.theta(vec({0, 1}));
  const HeckeElt form2 = H.mul(H.delta(varpi), H.delta_gen(s) + H.inv_std(G.generators()[s0].elt));
  const HeckeElt form3 = H.mul(H.delta(varpi), H.inv_std(G.generators()[s].elt) + H.delta_gen(s0));
  c.check(z_nat == H.z_center(vec({1, 0})), "gl2: z_nat = z_(1,0)");
  c.check(z_nat == form2, "gl2: z_nat = delta_varpi (delta_s + delta_s0^-1)");
  c.check(z_nat == form3, "gl2: z_nat = delta_varpi (delta_s^-1 + delta_s0)");
  c.check(H.is_central(z_nat, 2), "gl2: z_nat central");
  const AffineElt s0s = G.mul(G.generators()[s0].elt, G.generators()[s].elt);
  c.check(H.mul(z_nat, H.kl_gen(s)) == H.mul(H.delta(varpi), H.kl_b(s0s)), "gl2: z_nat b_s = delta_varpi b_{s0 s}");
}

// ------------------------------------------------------------------ 7
void crit_kl(Checker& c) {
  for (const char* name : {"sl2", "sl3", "c2", "gl2", "pgl2"}) {
    const HeckeAlgebra H(load_datum(name));
    for (std::size_t g = 0; g < H.group().generators().size(); ++g) {
      HeckeElt expect = H.delta_gen(static_cast<int>(g));
      expect.add_term(H.group().identity(), LaurentPoly::v());
      c.check(H.kl_b(H.group().generators()[g].elt) == expect, std::string(name) + ": b_s");
    }
  }
  for (const char* name : {"sl2", "sl3", "c2"}) {
    const HeckeAlgebra H(load_datum(name));
    const auto& W = H.group().finite();
    const int top = W.length(W.longest());
    HeckeElt expect;
    for (auto w : W.elements()) expect.add_term(H.group().from_finite(w), LaurentPoly::monomial(1, top - W.length(w)));
    c.check(H.kl_b(H.group().from_finite(W.longest())) == expect, std::string(name) + ": b_{w_f}");
  }
  for (auto [name, max_len] : {std::pair{"sl2", 8}, std::pair{"sl3", 6}}) {
    const HeckeAlgebra H(load_datum(name));
    const auto& G = H.group();
    const HeckeElt v_plus = HeckeElt::delta(G.identity(), LaurentPoly::v() + LaurentPoly::v_inv());
    for (const auto& x : G.coxeter_ball(max_len)) {
      const HeckeElt b = H.kl_b(x);
      c.check(H.bar(b) == b, std::string(name) + ": bar-invariance of b_" + G.to_string(x));
      c.check(b.coeff(x) == LaurentPoly(1), std::string(name) + ": leading coefficient");
      for (const auto& [y, h] : b.terms()) {
        if (y == x) continue;
        bool positive = h.min_degree() >= 1;
        for (const auto& [e, coef] : h.terms()) positive = positive && coef > 0;
        c.check(positive && G.bruhat_leq(y, x), std::string(name) + ": h_{y,x} in vN[v] for x = " + G.to_string(x));
      }
      for (std::size_t g = 0; g < G.generators().size(); ++g) {
        if (G.length(G.mul(x, G.generators()[g].elt)) > G.length(x)) continue;
        c.check(H.mul(b, H.kl_gen(static_cast<int>(g))) == H.mul(b, v_plus),
                std::string(name) + ": b_x b_s = (v + v^-1) b_x");
      }
    }
  }
}

// ------------------------------------------------------------------ 8
void crit_dl_oracle(Checker& c) {
  for (const auto& name : four_data()) {
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    const ReflectionDatum rd = ReflectionDatum::hecke_side(d);
    for (int s = 0; s < d.semisimple_rank(); ++s) {
      const HeckeElt bs = H.kl_gen(s);
      for (const auto& lambda : lattice_box(d.rank(), 3)) {
        const GroupAlgebraElt m = GroupAlgebraElt::monomial(lambda);
        c.check(dl_action_bs(rd, s, m) == induced_action(H, bs, m, SignChar::Sgn),
                name + ": s" + std::to_string(s + 1) + " on theta_" + to_string(lambda));
      }
    }
  }
}

// ------------------------------------------------------------------ 9
void crit_intertwiner(Checker& c) {
  const auto sl2 = load_datum("sl2");
  std::vector<Weight> ms;
  for (int m = -6; m <= 6; ++m) ms.push_back(vec({m}));
  const auto rep = intertwiner_check(*sl2, ms);
  for (const auto& r : rep.results)
    if (r.convention == kGoldenConvention) c.check(r.passed(), "sl2: theta_m -> x^{m-1} fails");
  // Spelled out for theta_m -> x^{m-1}.
  const ReflectionDatum hecke = ReflectionDatum::hecke_side(*sl2->dual());
  const ReflectionDatum kside = ReflectionDatum::ktheory_side(*sl2);
  for (int m = -6; m <= 6; ++m) {
    const auto lhs = dl_action_bs(hecke, 0, GroupAlgebraElt::monomial(vec({m}))).translated(vec({-1}));
    const auto rhs = ktheory_action_qs(kside, 0, GroupAlgebraElt::monomial(vec({m - 1})), QsScale::MinusV);
    c.check(lhs == rhs, "sl2: intertwining at m = " + std::to_string(m));
  }
  for (const char* name : {"sl3", "c2"}) {
    const auto d = load_datum(name);
    const auto sweep = intertwiner_check(*d, lattice_box(d->rank(), 3));
    const auto passing = sweep.passing();
    c.check(passing.size() == 1, std::string(name) + ": " + std::to_string(passing.size()) + " conventions pass");
    c.check(passing.size() == 1 && passing.front() == kGoldenConvention,
            std::string(name) + ": passing convention differs from the frozen one");
  }
}

// ------------------------------------------------------------------ 10
void crit_kp1(Checker& c) {
  const ReflectionDatum kside = ReflectionDatum::ktheory_side(*load_datum("sl2"));
  for (int m = -5; m <= 5; ++m) {
    const GroupAlgebraElt push = divided_sum(kside, vec({m}), 0, Shift::MinusA);
    c.check(push.augmentation() == LaurentPoly(m + 1), "chi(O(" + std::to_string(m) + "))");
  }
}

// ------------------------------------------------------------------ 11
void crit_characters(Checker& c) {
  const WeylGroup W(load_datum("sl2"));
  auto chi = [&](int m) { return m < 0 ? GroupAlgebraElt() : weyl_character(W, vec({m})); };
  for (int m = 1; m <= 8; ++m)
    c.check(chi(1) * chi(m) == chi(m + 1) + chi(m - 1), "sl2: chi_1 chi_" + std::to_string(m));
  const auto gl2 = load_datum("gl2");
  const HeckeAlgebra H(gl2);
  const HeckeElt z_nat = H.theta(vec({1, 0})) + H.theta(vec({0, 1}));
  c.check(H.center_to_lattice(z_nat) == weyl_character(H.group().finite(), vec({1, 0})),
          "gl2: image of z_nat is the natural character");
}

// ------------------------------------------------------------------ 12
void crit_springer(Checker& c) {
  struct Golden {
    int n;
    std::vector<std::vector<int>> parts;
    std::vector<std::int64_t> dim, codim, fiber;
  };
  const std::vector<Golden> tables = {
      {2, {{2}, {1, 1}}, {2, 0}, {0, 2}, {0, 1}},
      {3, {{3}, {2, 1}, {1, 1, 1}}, {6, 4, 0}, {0, 2, 6}, {0, 1, 3}},
      {4, {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}, {12, 10, 8, 6, 0}, {0, 2, 4, 6, 12}, {0, 1, 2, 3, 6}},
  };
  for (const auto& g : tables) {
    const auto rows = springer_table(g.n);
    bool same = rows.size() == g.parts.size();
    for (std::size_t k = 0; same && k < rows.size(); ++k)
      same = rows[k].partition.parts() == g.parts[k] && rows[k].dim_orbit == g.dim[k] && rows[k].codim == g.codim[k] &&
             rows[k].fiber_dim == g.fiber[k];
    c.check(same, "table n = " + std::to_string(g.n));
  }
  std::int64_t fact = 1;
  for (int n = 1; n <= 7; ++n) {
    fact *= n;
    std::int64_t sum = 0;
    for (const auto& p : partitions_of(n)) sum += syt_count(p) * syt_count(p);
    c.check(sum == fact, "sum of squares for n = " + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
    std::size_t count = 0;
    do {
      ++count;
      const auto [p, q] = rs(w);
      std::vector<int> winv(w.size());
      for (std::size_t k = 0; k < w.size(); ++k) winv[static_cast<std::size_t>(w[k] - 1)] = static_cast<int>(k) + 1;
      const auto [pi, qi] = rs(winv);
      c.check(p.is_standard() && q.is_standard() && p.shape() == q.shape(), "rs output not standard");
      c.check(pi == q && qi == p, "rs(w^-1) != swap");
      images.emplace(p.rows, q.rows);
    } while (std::next_permutation(w.begin(), w.end()));
    c.check(images.size() == count, "rs not injective for n = " + std::to_string(n));
  }
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) c.check(orbit_dim(p) % 2 == 0, "odd orbit dimension " + p.to_string());
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  std::ostringstream os;
  os << buf << r.title;
  char t[32];
  std::snprintf(t, sizeof t, " (%.2f s)", r.seconds);
  os << t;
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  struct Entry {
    int id;
    const char* title;
    double budget;  // seconds; 0 means none
    void (*run)(Checker&);
  };
  static const Entry entries[] = {
      {1, "PGL2 lengths and Omega", 1, crit_pgl2_lengths},
      {2, "IM length formula equals hyperplane count", 30, crit_length_oracle},
      {3, "Hecke quadratic, length-additive and braid relations", 10, crit_hecke_relations},
      {4, "theta is independent of the dominant decomposition", 0, crit_theta_well_defined},
      {5, "Bernstein relation in the standard basis", 0, crit_bernstein_relation},
      {6, "centrality of z_lambda and the GL2 identities", 0, crit_centrality},
      {7, "Kazhdan-Lusztig basis", 60, crit_kl},
      {8, "Demazure-Lusztig formula equals the induced action", 0, crit_dl_oracle},
      {9, "intertwiner: SL2 and the rank-2 convention sweep", 0, crit_intertwiner},
      {10, "K(P^1) pushforward: x^m -> m+1", 0, crit_kp1},
      {11, "characters: Clebsch-Gordan and the GL2 center", 0, crit_characters},
      {12, "Springer tables, tableaux and Robinson-Schensted", 20, crit_springer},
  };
  const auto total_start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    CriterionResult r{e.id, e.title, false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    Checker c;
    try {
      e.run(c);
      r.seconds = elapsed(start);
      r.passed = c.ok() && (e.budget == 0 || r.seconds < e.budget);
      r.detail = c.summary();
      if (e.budget > 0 && r.seconds >= e.budget) r.detail += "; over the time budget";
    } catch (const std::exception& ex) {
      r.seconds = elapsed(start);
      r.detail = std::string("exception: ") + ex.what();
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  CriterionResult last{13, "whole suite under 3 minutes, no network use", false, {}, elapsed(total_start)};
  last.passed = last.seconds < 180;
  last.detail = "the library opens no sockets or files beyond datum input";
  if (on_result) on_result(last);
  results.push_back(std::move(last));
  return results;
}

}  // namespace affhecke
