#include "affhecke/hecke.hpp"

#include <algorithm>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

const LaurentPoly& q_minus() {  // v^-1 - v
  static const LaurentPoly p = LaurentPoly::v_inv() - LaurentPoly::v();
  return p;
}

const LaurentPoly& q_plus() {  // v - v^-1
  static const LaurentPoly p = LaurentPoly::v() - LaurentPoly::v_inv();
  return p;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

// ---------------------------------------------------------------- HeckeElt

HeckeElt HeckeElt::delta(const AffineElt& x, const LaurentPoly& c) {
  HeckeElt h;
  h.add_term(x, c);
  return h;
}

LaurentPoly HeckeElt::coeff(const AffineElt& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add_term(const AffineElt& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  for (const auto& [x, c] : other.terms_) add_term(x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  for (const auto& [x, c] : other.terms_) add_term(x, -c);
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r;
  for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
  return r;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  HeckeElt r;
  for (const auto& [x, d] : terms_) r.add_term(x, d * c);
  return r;
}

// ------------------------------------------------------------ BernsteinElt

LaurentPoly BernsteinElt::coeff(FiniteWeylElt w, const Weight& mu) const {
  auto it = terms_.find({w, mu});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void BernsteinElt::add_term(FiniteWeylElt w, const Weight& mu, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({w, mu}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BernsteinElt& BernsteinElt::operator+=(const BernsteinElt& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

BernsteinElt BernsteinElt::scaled(const LaurentPoly& c) const {
  BernsteinElt r;
  for (const auto& [k, d] : terms_) r.add_term(k.first, k.second, d * c);
  return r;
}

// ------------------------------------------------------------ HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const RootDatum> datum) : group_(std::move(datum)) {
  const auto& d = group_.datum();
  const std::size_t r = static_cast<std::size_t>(d.rank());
  const std::size_t n = static_cast<std::size_t>(d.semisimple_rank());

  // For each simple root find a dominant coweight zeta_i with
  // <zeta_i, alpha_j> = d_i delta_ij: first by a small box search, which
  // finds fundamental coweights when they are integral, else inside the
  // coroot span.
  for (std::size_t i = 0; i < n; ++i) {
    Weight best;
    std::int64_t best_d = 0;
    auto consider = [&](const Weight& z) {
      std::int64_t di = pairing(z, d.simple_roots()[i]);
      if (di <= 0) return;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && pairing(z, d.simple_roots()[j]) != 0) return;
      auto key = [](std::int64_t dd, const Weight& w) {
        std::int64_t l1 = 0;
        for (auto x : w) l1 += std::abs(x);
        return std::make_tuple(dd, l1, w);
      };
      if (best.empty() || key(di, z) < key(best_d, best)) best = z, best_d = di;
    };
    if (r <= 6) {
      Weight v(r, -2);
      while (true) {
        consider(v);
        std::size_t k = 0;
        while (k < r && v[k] == 2) v[k++] = -2;
        if (k == r) break;
        ++v[k];
      }
    }
    if (best.empty()) {
      Weight target(n, 0);
      target[i] = 1;
      // Solve sum_j c_j <alpha_j^vee, alpha_k> = delta_ik over Q, then clear denominators.
      std::vector<Weight> cols;
      for (std::size_t j = 0; j < n; ++j) {
        Weight col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = d.cartan()[j][k];
        cols.push_back(col);
      }
      auto c = solve_in_span(cols, target);
      if (!c) throw InvariantError("Cartan matrix is singular");
      BigInt l = 1;
      for (const auto& q : *c) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
      Weight z(r, 0);
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt cj = boost::multiprecision::numerator((*c)[j] * Rational(l));
        z = z + static_cast<std::int64_t>(cj) * d.simple_coroots()[j];
      }
      consider(z);
    }
    if (best.empty()) throw InvariantError("could not find a fundamental coweight multiple");
    zeta_.push_back(best);
    zeta_scale_.push_back(best_d);
  }
}

HeckeElt HeckeAlgebra::delta_gen(int g) const {
  return HeckeElt::delta(group_.generators().at(static_cast<std::size_t>(g)).elt);
}

HeckeElt HeckeAlgebra::mul_gen_right(const HeckeElt& a, int g) const {
  const AffineElt& s = group_.generators().at(static_cast<std::size_t>(g)).elt;
  HeckeElt out;
  for (const auto& [x, c] : a.terms()) {
    AffineElt y = group_.mul(x, s);
    const bool up = group_.length(y) > group_.length(x);
    out.add_term(y, c);
    if (!up) out.add_term(x, c * q_minus());
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_gen_inv_right(const HeckeElt& a, int g) const {
  HeckeElt out = mul_gen_right(a, g);
  out += a.scaled(q_plus());
  return out;
}

HeckeElt HeckeAlgebra::mul_delta_right(const HeckeElt& a, const AffineElt& y) const {
  auto rw = group_.reduced_word(y);
  HeckeElt out;
  for (const auto& [x, c] : a.terms()) out.add_term(group_.mul(x, rw.omega), c);
  for (int g : rw.word) out = mul_gen_right(out, g);
  return out;
}

HeckeElt HeckeAlgebra::mul_delta_left(const AffineElt& x, const HeckeElt& b) const {
  auto rw = group_.reduced_word(x);
  HeckeElt cur = b;
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
    const AffineElt& s = group_.generators()[static_cast<std::size_t>(*it)].elt;
    HeckeElt next;
    for (const auto& [y, c] : cur.terms()) {
      AffineElt sy = group_.mul(s, y);
      const bool up = group_.length(sy) > group_.length(y);
      next.add_term(sy, c);
      if (!up) next.add_term(y, c * q_minus());
    }
    cur = std::move(next);
  }
  HeckeElt out;
  for (const auto& [y, c] : cur.terms()) out.add_term(group_.mul(rw.omega, y), c);
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out;
  if (a.size() < b.size()) {
    for (const auto& [x, c] : a.terms()) out += mul_delta_left(x, b).scaled(c);
  } else {
    for (const auto& [y, c] : b.terms()) out += mul_delta_right(a, y).scaled(c);
  }
  return out;
}

HeckeElt HeckeAlgebra::inv_std(const AffineElt& x) const {
  auto rw = group_.reduced_word(x);
  HeckeElt out = one();
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) out = mul_gen_inv_right(out, *it);
  const AffineElt wi = group_.inv(rw.omega);
  HeckeElt shifted;
  for (const auto& [y, c] : out.terms()) shifted.add_term(group_.mul(y, wi), c);
  return shifted;
}

std::pair<Weight, Weight> HeckeAlgebra::dominant_decomposition(const Weight& lambda) const {
  const auto& d = datum();
  if (lambda.size() != static_cast<std::size_t>(d.rank()))
    throw InputError("coweight " + to_string(lambda) + " has the wrong rank");
  Weight minus(lambda.size(), 0);
  for (std::size_t i = 0; i < zeta_.size(); ++i) {
    const std::int64_t m = std::max<std::int64_t>(0, -pairing(lambda, d.simple_roots()[i]));
    minus = minus + ceil_div(m, zeta_scale_[i]) * zeta_[i];
  }
  return {lambda + minus, minus};
}

HeckeElt HeckeAlgebra::theta(const Weight& lambda) const {
  auto [plus, minus] = dominant_decomposition(lambda);
  return theta_from(plus, minus);
}

HeckeElt HeckeAlgebra::theta_from(const Weight& gamma, const Weight& gamma_prime) const {
  const auto& d = datum();
  if (!is_dominant(d, gamma, Lattice::Coweight) || !is_dominant(d, gamma_prime, Lattice::Coweight))
    throw InputError("theta_from: both coweights must be dominant");
  return mul_delta_left(group_.translation(gamma), inv_std(group_.translation(gamma_prime)));
}

GroupAlgebraElt HeckeAlgebra::relation_fraction(int i, const Weight& lambda) const {
  const auto& d = datum();
  const auto ii = static_cast<std::size_t>(i);
  return geometric_quotient(lambda, d.simple_coroots()[ii], pairing(lambda, d.simple_roots()[ii]));
}

// theta_mu delta_s = delta_s theta_{s mu} - (v - v^-1) (theta_mu - theta_{s mu}) / (1 - theta_{-alpha^vee}).
BernsteinElt HeckeAlgebra::bernstein_mul_finite_simple(const BernsteinElt& a, int i) const {
  const auto& W = group_.finite();
  const FiniteWeylElt s = W.simple(i);
  BernsteinElt out;
  for (const auto& [key, c] : a.terms()) {
    const auto& [w, mu] = key;
    const FiniteWeylElt ws = W.mul(w, s);
    const Weight smu = reflect(datum(), i, mu);
    out.add_term(ws, smu, c);
    if (W.length(ws) < W.length(w)) out.add_term(w, smu, c * q_minus());
    const GroupAlgebraElt frac = relation_fraction(i, mu);
    for (const auto& [nu, dnu] : frac.terms()) out.add_term(w, nu, -(c * dnu * q_plus()));
  }
  return out;
}

BernsteinElt HeckeAlgebra::bernstein_mul(const BernsteinElt& a, const BernsteinElt& b) const {
  const auto& W = group_.finite();
  BernsteinElt out;
  for (const auto& [key, c] : b.terms()) {
    const auto& [u, nu] = key;
    BernsteinElt t = a;
    for (int i : W.word(u)) t = bernstein_mul_finite_simple(t, i);
    for (const auto& [k2, c2] : t.terms()) out.add_term(k2.first, k2.second + nu, c2 * c);
  }
  return out;
}

// delta_x for x = t_lambda w with lambda dominant and l(t_lambda) = l(x) + l(w):
// then delta_{t_lambda} = delta_x delta_{w^-1}, so delta_x = theta_lambda delta_{w^-1}^-1.
BernsteinElt HeckeAlgebra::bernstein_of_generator(const AffineElt& x) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = bernstein_memo_.find(x);
    if (it != bernstein_memo_.end()) return it->second;
  }
  const auto& W = group_.finite();
  if (!is_dominant(datum(), x.translation, Lattice::Coweight) ||
      group_.length(group_.translation(x.translation)) != group_.length(x) + W.length(x.finite))
    throw InvariantError("bernstein_of_generator: element " + group_.to_string(x) + " is not of the expected shape");
  BernsteinElt b;
  b.add_term(W.identity(), x.translation, 1);
  const auto& word = W.word(W.inverse(x.finite));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    BernsteinElt next = bernstein_mul_finite_simple(b, *it);
    next += b.scaled(q_plus());
    b = std::move(next);
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  bernstein_memo_.emplace(x, b);
  return b;
}

BernsteinElt HeckeAlgebra::to_bernstein(const HeckeElt& a) const {
  const auto& W = group_.finite();
  const auto& gens = group_.generators();
  BernsteinElt out;
  for (const auto& [x, c] : a.terms()) {
    auto rw = group_.reduced_word(x);
    BernsteinElt b;
    if (rw.omega == group_.identity())
      b.add_term(W.identity(), rw.omega.translation, 1);
    else
      b = bernstein_of_generator(rw.omega);
    for (int g : rw.word) {
      const auto& gen = gens[static_cast<std::size_t>(g)];
      if (gen.kind == SimpleAffineReflection::Kind::Finite)
        b = bernstein_mul_finite_simple(b, gen.index);
      else
        b = bernstein_mul(b, bernstein_of_generator(gen.elt));
    }
    out += b.scaled(c);
  }
  return out;
}

HeckeElt HeckeAlgebra::from_bernstein(const BernsteinElt& b) const {
  HeckeElt out;
  for (const auto& [key, c] : b.terms())
    out += mul_delta_left(group_.from_finite(key.first), theta(key.second)).scaled(c);
  return out;
}

HeckeElt HeckeAlgebra::z_center(const Weight& lambda) const {
  const auto& d = datum();
  if (lambda.size() != static_cast<std::size_t>(d.rank())) throw InputError("z_center: coweight has the wrong rank");
  if (!is_dominant(d, lambda, Lattice::Coweight))
    throw InputError("z_center: " + to_string(lambda) + " is not dominant");
  HeckeElt out;
  for (const auto& mu : group_.finite().coweight_orbit(lambda)) out += theta(mu);
  return out;
}

bool HeckeAlgebra::is_central(const HeckeElt& a, int bound) const {
  std::vector<HeckeElt> tests;
  for (std::size_t g = 0; g < group_.generators().size(); ++g) tests.push_back(delta_gen(static_cast<int>(g)));
  for (const auto& w : group_.length_zero_elements(bound))
    if (!(w == group_.identity())) tests.push_back(delta(w));
  const std::size_t r = static_cast<std::size_t>(datum().rank());
  for (std::size_t k = 0; k < r; ++k) {
    Weight e(r, 0);
    e[k] = 1;
    tests.push_back(theta(e));
  }
  for (const auto& t : tests)
    if (!(mul(a, t) == mul(t, a))) return false;
  return true;
}

GroupAlgebraElt HeckeAlgebra::center_to_lattice(const HeckeElt& a) const {
  GroupAlgebraElt out;
  const BernsteinElt b = to_bernstein(a);
  for (const auto& [key, c] : b.terms()) {
    if (!(key.first == group_.finite().identity()))
      throw InputError("center_to_lattice: element has a non-trivial finite part in Bernstein form");
    out.add_term(key.second, c);
  }
  return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
  HeckeElt out;
  for (const auto& [x, c] : a.terms()) out += inv_std(group_.inv(x)).scaled(lp_bar(c));
  return out;
}

HeckeElt HeckeAlgebra::kl_gen(int g) const {
  HeckeElt b = delta_gen(g);
  b.add_term(group_.identity(), LaurentPoly::v());
  return b;
}

HeckeElt HeckeAlgebra::kl_b(const AffineElt& x) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = kl_memo_.find(x);
    if (it != kl_memo_.end()) return it->second;
  }
  const int lx = group_.length(x);
  if (lx > kMaxKlLength) throw InputError("kl_b: length " + std::to_string(lx) + " exceeds the cap");
  auto rw = group_.reduced_word(x);
  HeckeElt result;
  if (rw.word.empty()) {
    result = delta(x);
  } else if (!(rw.omega == group_.identity())) {
    result = mul_delta_left(rw.omega, kl_b(group_.mul(group_.inv(rw.omega), x)));
  } else {
    const int g = rw.word.back();
    const AffineElt y = group_.mul(x, group_.generators()[static_cast<std::size_t>(g)].elt);
    const HeckeElt by = kl_b(y);
    result = mul_gen_right(by, g) + by.scaled(LaurentPoly::v());
    // b_y b_s = b_x + sum mu(z) b_z; peel off the b_z from the top down.
    while (true) {
      const AffineElt* top = nullptr;
      for (const auto& [z, c] : result.terms()) {
        if (z == x || c.min_degree() > 0) continue;
        if (c.min_degree() < 0) throw InvariantError("kl_b: negative v-power below the leading term");
        if (!top || group_.output_less(*top, z)) top = &z;
      }
      if (!top) break;
      const AffineElt z = *top;
      const LaurentPoly mu(result.coeff(z).coeff(0));
      result -= kl_b(z).scaled(mu);
    }
    if (!(result.coeff(x) == LaurentPoly(1))) throw InvariantError("kl_b: leading coefficient is not 1");
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  kl_memo_.emplace(x, result);
  return result;
}

}  // namespace affhecke
