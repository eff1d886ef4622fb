#pragma once

// Exact arithmetic in Z[v, v^-1] and in group algebras Z[v, v^-1][L] of a
// free abelian lattice L.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affhecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A lattice vector in coordinates of a fixed Z-basis.
using Weight = std::vector<std::int64_t>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(std::int64_t k, const Weight& a);
std::int64_t pairing(const Weight& a, const Weight& b);
std::int64_t max_norm(const Weight& a);
std::string to_string(const Weight& w);

/// Finitely supported map Z -> Z, read as a Laurent polynomial in v.
/// Terms are kept sorted by exponent and zero coefficients are never stored,
/// so structural equality is equality of polynomials.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit integer promotion is intended
  LaurentPoly(const BigInt& constant);  // NOLINT

  static LaurentPoly monomial(const BigInt& coeff, int exponent);
  /// The formal variable v.
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly v_inv() { return monomial(1, -1); }
  /// Builds from (exponent, coefficient) pairs in any order; repeated
  /// exponents are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;  // requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  /// Human-readable form in increasing degree, e.g. "v^-1 - v" or "1 + 3v^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// The ring involution v -> v^-1.
LaurentPoly lp_bar(const LaurentPoly& a);

/// Substitutes v = value. Throws InputError for value == 0.
Rational lp_eval(const LaurentPoly& a, const Rational& value);

/// Exact quotient in Z[v, v^-1]; throws InexactDivision when den does not
/// divide num.
LaurentPoly lp_exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// Finitely supported map L -> Z[v, v^-1]. Monomials are written e^lambda.
/// Ordered lexicographically on lattice vectors.
class GroupAlgebraElt {
 public:
  using Map = std::map<Weight, LaurentPoly>;

  GroupAlgebraElt() = default;
  static GroupAlgebraElt monomial(const Weight& lambda, const LaurentPoly& coeff = LaurentPoly(1));
  /// The unit e^0 in rank r.
  static GroupAlgebraElt one(std::size_t rank) { return monomial(Weight(rank, 0)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const Weight& lambda) const;

  void add_term(const Weight& lambda, const LaurentPoly& coeff);

  GroupAlgebraElt& operator+=(const GroupAlgebraElt& other);
  GroupAlgebraElt& operator-=(const GroupAlgebraElt& other);
  GroupAlgebraElt operator-() const;
  GroupAlgebraElt scaled(const LaurentPoly& c) const;
  GroupAlgebraElt translated(const Weight& mu) const;

  friend GroupAlgebraElt operator+(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a += b; }
  friend GroupAlgebraElt operator-(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a -= b; }
  friend GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
  friend bool operator==(const GroupAlgebraElt& a, const GroupAlgebraElt& b) { return a.terms_ == b.terms_; }

  /// Sends every e^lambda to 1, keeping the Laurent coefficients.
  LaurentPoly augmentation() const;

  std::string to_string(const std::string& symbol = "e") const;

 private:
  Map terms_;
};

/// The closed form of (e^lambda - e^{lambda - k a}) / (1 - e^{-a}): a geometric
/// sum of |k| terms along the a-string through lambda (zero for k = 0).
GroupAlgebraElt geometric_quotient(const Weight& lambda, const Weight& a, std::int64_t k);

/// Exact quotient by lexicographic monomial long division. Throws
/// InexactDivision if den does not divide num, InputError if den is zero.
GroupAlgebraElt ga_exact_divide(const GroupAlgebraElt& num, const GroupAlgebraElt& den);

}  // namespace affhecke
