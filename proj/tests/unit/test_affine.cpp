#include "helpers.hpp"

#include <algorithm>
#include <set>

#include "affhecke/errors.hpp"

using namespace testing;

namespace {

// Point of the fundamental alcove: (2 rho^vee) / (2 (h + 1)) pairs to
// height(alpha) / (h + 1) with every positive root, h the largest height.
std::vector<Rational> alcove_point(const RootDatum& d) {
  int h = 0;
  for (std::size_t r : d.positive_roots()) h = std::max(h, d.height(r));
  std::vector<Rational> p;
  for (auto x : d.two_rho_vee()) p.push_back(Rational(x, 2 * (h + 1)));
  return p;
}

Rational floor_of(const Rational& q) {
  BigInt n = numerator(q), den = denominator(q);
  BigInt f = n / den;
  if (n < 0 && f * den != n) f -= 1;
  return Rational(f);
}

// Hyperplanes H_{alpha, m} separating p from x(p), counted root by root.
int oracle_length(const AffineWeylGroup& G, const AffineElt& x) {
  const auto& d = G.datum();
  const auto p = alcove_point(d);
  const auto& M = G.finite().matrix(x.finite);
  std::vector<Rational> xp(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    xp[i] = Rational(x.translation[i]);
    for (std::size_t j = 0; j < p.size(); ++j) xp[i] += Rational(M[i][j]) * p[j];
  }
  int count = 0;
  for (std::size_t r : d.positive_roots()) {
    Rational a = 0, b = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      a += p[i] * Rational(d.roots()[r][i]);
      b += xp[i] * Rational(d.roots()[r][i]);
    }
    const Rational diff = floor_of(b) - floor_of(a);
    count += static_cast<int>(numerator(diff < 0 ? Rational(-diff) : diff));
  }
  return count;
}

// x <= y iff x is the product of a subword of a reduced word of y.
bool oracle_bruhat(const AffineWeylGroup& G, const AffineElt& x, const AffineElt& y) {
  const auto rw = G.reduced_word(y);
  const std::size_t n = rw.word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    AffineElt z = rw.omega;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) z = G.mul(z, G.generators()[static_cast<std::size_t>(rw.word[k])].elt);
    if (z == x) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("affine: PGL2 lengths and the length-zero subgroup") {
  const AffineWeylGroup G(load_datum("pgl2"));
  const AffineElt s = G.generators()[0].elt;
  for (int m = -10; m <= 10; ++m) {
    CHECK(G.length(G.translation(vec({m}))) == std::abs(m));
    CHECK(G.length(G.mul(G.translation(vec({m})), s)) == std::abs(m - 1));
  }
  const auto omega = G.length_zero_elements(6);
  REQUIRE(omega.size() == 2);
  CHECK(omega[1] == G.mul(G.translation(vec({1})), s));
  CHECK(G.omega_generator() == omega[1]);
  CHECK(G.generators().size() == 2);
  CHECK(G.generators()[1].name == "s0");
  CHECK(G.generators()[0].name == "s");
}

TEST_CASE("affine: length-zero subgroups of the presets") {
  CHECK(AffineWeylGroup(load_datum("sl2")).length_zero_elements(5).size() == 1);
  CHECK(AffineWeylGroup(load_datum("sl3")).length_zero_elements(5).size() == 1);
  CHECK(AffineWeylGroup(load_datum("c2")).length_zero_elements(5).size() == 1);
  CHECK_THROWS_AS(AffineWeylGroup(load_datum("sl2")).omega_generator(), InputError);
  const AffineWeylGroup gl2(load_datum("gl2"));
  const AffineElt w = gl2.omega_generator();
  CHECK(w.translation == vec({1, 0}));
  CHECK(w.finite == gl2.finite().simple(0));
  // Omega is infinite cyclic for GL2.
  AffineElt p = gl2.identity();
  for (int k = 1; k <= 4; ++k) {
    p = gl2.mul(p, w);
    CHECK(gl2.length(p) == 0);
    CHECK(p != gl2.identity());
  }
}

TEST_CASE("affine: closed length formula agrees with the hyperplane oracle") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const AffineWeylGroup G(load_datum(name));
    for (const auto& x : G.elements_up_to(6, 3)) {
      CAPTURE(G.to_string(x));
      CHECK(G.length(x) == oracle_length(G, x));
      CHECK(G.length_by_hyperplanes(x) == oracle_length(G, x));
    }
  }
}

TEST_CASE("affine: group laws and reduced words") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const AffineWeylGroup G(load_datum(name));
    const auto elts = G.elements_up_to(4, 2);
    REQUIRE(elts.size() > 4);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
      const auto& a = elts[pick(rng)];
      const auto& b = elts[pick(rng)];
      const auto& c = elts[pick(rng)];
      CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      CHECK(G.mul(a, G.inv(a)) == G.identity());
      CHECK(G.length(G.inv(a)) == G.length(a));
      CHECK(G.length(G.mul(a, b)) <= G.length(a) + G.length(b));
      const Weight lambda = random_weight(rng, G.datum().rank(), 3);
      CHECK(G.act(G.mul(a, b), lambda) == G.act(a, G.act(b, lambda)));
    }
    for (const auto& x : elts) {
      const auto rw = G.reduced_word(x);
      CHECK(static_cast<int>(rw.word.size()) == G.length(x));
      CHECK(G.length(rw.omega) == 0);
      CHECK(G.from_word(rw.omega, rw.word) == x);
      const auto [omega, y] = G.omega_decompose(x);
      CHECK(G.length(omega) == 0);
      CHECK(G.in_coxeter_part(y));
      CHECK(G.mul(omega, y) == x);
      for (const auto& g : G.generators()) {
        CHECK(G.mul(g.elt, g.elt) == G.identity());
        CHECK(std::abs(G.length(G.mul(x, g.elt)) - G.length(x)) == 1);
      }
    }
  }
}

TEST_CASE("affine: Bruhat order agrees with the subword oracle") {
  for (const char* name : {"sl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const AffineWeylGroup G(load_datum(name));
    const auto elts = G.elements_up_to(4, 2);
    for (const auto& y : elts)
      for (const auto& x : elts) {
        if (G.length(x) > G.length(y)) continue;
        CAPTURE(G.to_string(x));
        CAPTURE(G.to_string(y));
        CHECK(G.bruhat_leq(x, y) == oracle_bruhat(G, x, y));
      }
  }
}

TEST_CASE("affine: Coxeter ball sizes and minimal coset representatives") {
  // The infinite dihedral group has 2k elements of length k >= 1.
  const AffineWeylGroup sl2(load_datum("sl2"));
  CHECK(sl2.coxeter_ball(5).size() == 11);
  // Affine A2: count elements by breadth-first search over generator words.
  const AffineWeylGroup sl3(load_datum("sl3"));
  std::vector<int> by_length(5, 0), bfs(5, 0);
  for (const auto& x : sl3.coxeter_ball(4)) ++by_length[static_cast<std::size_t>(sl3.length(x))];
  std::set<AffineElt> seen = {sl3.identity()};
  std::vector<AffineElt> layer = {sl3.identity()};
  bfs[0] = 1;
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    std::vector<AffineElt> next;
    for (const auto& x : layer)
      for (const auto& g : sl3.generators())
        if (seen.insert(sl3.mul(x, g.elt)).second) next.push_back(sl3.mul(x, g.elt));
    bfs[k] = static_cast<int>(next.size());
    layer = std::move(next);
  }
  CHECK(by_length == bfs);
  CHECK(bfs[1] == 3);

  for (const auto& x : sl3.coxeter_ball(4)) {
    bool minimal = true;
    for (int i = 0; i < 2; ++i)
      minimal = minimal && sl3.length(sl3.mul(sl3.generators()[static_cast<std::size_t>(i)].elt, x)) > sl3.length(x);
    CHECK(sl3.is_minimal_coset_rep(x) == minimal);
  }
}

TEST_CASE("affine: output order is total and starts with the identity") {
  const AffineWeylGroup G(load_datum("c2"));
  auto elts = G.elements_up_to(3, 2);
  std::sort(elts.begin(), elts.end(), [&](const auto& a, const auto& b) { return G.output_less(a, b); });
  CHECK(elts.front() == G.identity());
  for (std::size_t k = 1; k < elts.size(); ++k) {
    CHECK(G.output_less(elts[k - 1], elts[k]));
    CHECK_FALSE(G.output_less(elts[k], elts[k - 1]));
    CHECK(G.length(elts[k - 1]) <= G.length(elts[k]));
  }
}

TEST_CASE("affine: length parity and invariance under length-zero elements") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const AffineWeylGroup G(load_datum(name));
    const auto elts = G.elements_up_to(4, 2);
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& a = elts[pick(rng)];
      const auto& b = elts[pick(rng)];
      CHECK((G.length(G.mul(a, b)) - G.length(a) - G.length(b)) % 2 == 0);
    }
    for (const auto& w : G.length_zero_elements(3))
      for (const auto& x : elts) {
        CHECK(G.length(G.mul(w, x)) == G.length(x));
        CHECK(G.length(G.mul(x, w)) == G.length(x));
      }
  }
}

TEST_CASE("affine: GL2 relations between varpi and the simple reflections") {
  const AffineWeylGroup G(load_datum("gl2"));
  const AffineElt w = G.omega_generator();
  const AffineElt s = G.generators()[0].elt, s0 = G.generators()[1].elt;
  CHECK(G.mul(w, s) == G.mul(s0, w));
  CHECK(G.mul(w, s0) == G.mul(s, w));
  const AffineElt w2 = G.mul(w, w);
  for (const auto& x : G.elements_up_to(4, 2)) CHECK(G.mul(w2, x) == G.mul(x, w2));
}
