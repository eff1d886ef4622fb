#include "affhecke/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "affhecke/errors.hpp"

namespace affhecke {

// ---------------------------------------------------------------- Weight

Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

Weight operator*(std::int64_t k, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= k;
  return r;
}

std::int64_t pairing(const Weight& a, const Weight& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t max_norm(const Weight& a) {
  std::int64_t m = 0;
  for (auto x : a) m = std::max<std::int64_t>(m, std::llabs(x));
  return m;
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

// ----------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  std::map<int, BigInt> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  LaurentPoly p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_degree() const { return terms_.front().first; }
int LaurentPoly::max_degree() const { return terms_.back().first; }

namespace {

template <class Op>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, Op op) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(BigInt(0), b[j].second));
      ++j;
    } else {
      BigInt c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x - y); });
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.min_degree() + b.min_degree();
  const int hi = a.max_degree() + b.max_degree();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  LaurentPoly p;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) p.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p(*this);
  for (auto& t : p.terms_) t.first += k;
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Lowest exponent first: "v^-1 - v".
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_bar(const LaurentPoly& a) {
  std::vector<std::pair<int, BigInt>> t;
  t.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) t.emplace_back(-e, c);
  return LaurentPoly::from_terms(t);
}

Rational lp_eval(const LaurentPoly& a, const Rational& value) {
  if (value == 0) throw InputError("lp_eval: cannot substitute v = 0 into a Laurent polynomial");
  Rational sum = 0;
  for (const auto& [e, c] : a.terms()) {
    Rational p = 1;
    const Rational base = e >= 0 ? value : Rational(1) / value;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    sum += Rational(c) * p;
  }
  return sum;
}

LaurentPoly lp_exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InputError("lp_exact_divide: division by zero");
  if (num.is_zero()) return {};
  // Quotient exponents are confined to [min(num)-min(den), max(num)-max(den)].
  const int q_lo = num.min_degree() - den.min_degree();
  const int q_hi = num.max_degree() - den.max_degree();
  const auto& [d_top, d_lead] = den.terms().back();
  LaurentPoly rem = num;
  std::vector<std::pair<int, BigInt>> quot;
  while (!rem.is_zero()) {
    const auto& [r_top, r_lead] = rem.terms().back();
    const int e = r_top - d_top;
    if (e < q_lo || e > q_hi || r_lead % d_lead != 0)
      throw InexactDivision("lp_exact_divide: " + den.to_string() + " does not divide " + num.to_string());
    LaurentPoly step = LaurentPoly::monomial(r_lead / d_lead, e);
    quot.emplace_back(e, r_lead / d_lead);
    rem -= step * den;
  }
  return LaurentPoly::from_terms(quot);
}

// ------------------------------------------------------- GroupAlgebraElt

GroupAlgebraElt GroupAlgebraElt::monomial(const Weight& lambda, const LaurentPoly& coeff) {
  GroupAlgebraElt g;
  g.add_term(lambda, coeff);
  return g;
}

LaurentPoly GroupAlgebraElt::coeff(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void GroupAlgebraElt::add_term(const Weight& lambda, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElt& GroupAlgebraElt::operator+=(const GroupAlgebraElt& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElt& GroupAlgebraElt::operator-=(const GroupAlgebraElt& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

GroupAlgebraElt GroupAlgebraElt::operator-() const {
  GroupAlgebraElt g(*this);
  for (auto& [w, c] : g.terms_) c = -c;
  return g;
}

GroupAlgebraElt GroupAlgebraElt::scaled(const LaurentPoly& c) const {
  GroupAlgebraElt g;
  if (c.is_zero()) return g;
  for (const auto& [w, x] : terms_) g.terms_.emplace_hint(g.terms_.end(), w, x * c);
  return g;
}

GroupAlgebraElt GroupAlgebraElt::translated(const Weight& mu) const {
  GroupAlgebraElt g;
  for (const auto& [w, x] : terms_) g.terms_.emplace_hint(g.terms_.end(), w + mu, x);
  return g;
}

GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  GroupAlgebraElt g;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) g.add_term(wa + wb, ca * cb);
  return g;
}

LaurentPoly GroupAlgebraElt::augmentation() const {
  LaurentPoly s;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

std::string GroupAlgebraElt::to_string(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    s += "(" + it->second.to_string() + ")" + symbol + "^" + affhecke::to_string(it->first);
  }
  return s;
}

GroupAlgebraElt ga_exact_divide(const GroupAlgebraElt& num, const GroupAlgebraElt& den) {
  if (den.is_zero()) throw InputError("ga_exact_divide: division by zero");
  if (num.is_zero()) return {};
  const std::size_t r = den.terms().begin()->first.size();

  // Every coordinate functional is additive on supports of products, so an
  // exact quotient lives in this box. Leaving it means the division is inexact.
  Weight lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::int64_t nmin = INT64_MAX, nmax = INT64_MIN, dmin = INT64_MAX, dmax = INT64_MIN;
    for (const auto& [w, c] : num.terms()) nmin = std::min(nmin, w[i]), nmax = std::max(nmax, w[i]);
    for (const auto& [w, c] : den.terms()) dmin = std::min(dmin, w[i]), dmax = std::max(dmax, w[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
  }
  auto in_box = [&](const Weight& w) {
    for (std::size_t i = 0; i < r; ++i)
      if (w[i] < lo[i] || w[i] > hi[i]) return false;
    return true;
  };

  const auto& [d_top, d_lead] = *den.terms().rbegin();
  GroupAlgebraElt rem = num;
  GroupAlgebraElt quot;
  while (!rem.is_zero()) {
    const auto& [r_top, r_lead] = *rem.terms().rbegin();
    Weight e = r_top - d_top;
    if (!in_box(e))
      throw InexactDivision("ga_exact_divide: divisor does not divide numerator (quotient exponent " +
                            to_string(e) + " out of range)");
    LaurentPoly c = lp_exact_divide(r_lead, d_lead);
    GroupAlgebraElt step = GroupAlgebraElt::monomial(e, c);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

GroupAlgebraElt geometric_quotient(const Weight& lambda, const Weight& a, std::int64_t k) {
  GroupAlgebraElt out;
  if (k > 0) {
    for (std::int64_t i = 0; i < k; ++i) out.add_term(lambda - i * a, 1);
  } else {
    for (std::int64_t i = 1; i <= -k; ++i) out.add_term(lambda + i * a, -1);
  }
  return out;
}

}  // namespace affhecke
