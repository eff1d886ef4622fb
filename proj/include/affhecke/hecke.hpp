#pragma once

// The Iwahori-Matsumoto Hecke algebra of an extended affine Weyl group over
// Z[v, v^-1], in the standard basis delta_x, with Bernstein elements theta_lambda.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "affhecke/affine.hpp"

namespace affhecke {

/// Finitely supported map AffineElt -> LaurentPoly: sum of c_x delta_x.
class HeckeElt {
 public:
  using Map = std::map<AffineElt, LaurentPoly>;

  HeckeElt() = default;
  static HeckeElt delta(const AffineElt& x, const LaurentPoly& c = LaurentPoly(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const AffineElt& x) const;
  void add_term(const AffineElt& x, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt operator-() const;
  HeckeElt scaled(const LaurentPoly& c) const;
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Sum of c_{w,mu} delta_w theta_mu with w in W_f (finite part on the left).
class BernsteinElt {
 public:
  using Key = std::pair<FiniteWeylElt, Weight>;
  using Map = std::map<Key, LaurentPoly>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(FiniteWeylElt w, const Weight& mu) const;
  void add_term(FiniteWeylElt w, const Weight& mu, const LaurentPoly& c);

  BernsteinElt& operator+=(const BernsteinElt& other);
  BernsteinElt scaled(const LaurentPoly& c) const;
  friend bool operator==(const BernsteinElt& a, const BernsteinElt& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const RootDatum> datum);
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const AffineWeylGroup& group() const { return group_; }
  const RootDatum& datum() const { return group_.datum(); }

  HeckeElt one() const { return HeckeElt::delta(group_.identity()); }
  HeckeElt delta(const AffineElt& x) const { return HeckeElt::delta(x); }
  /// delta of the Coxeter generator with the given index in group().generators().
  HeckeElt delta_gen(int g) const;

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  /// a * delta_y.
  HeckeElt mul_delta_right(const HeckeElt& a, const AffineElt& y) const;
  /// delta_x * b.
  HeckeElt mul_delta_left(const AffineElt& x, const HeckeElt& b) const;
  /// a * delta_s and a * delta_s^-1 for a generator index.
  HeckeElt mul_gen_right(const HeckeElt& a, int g) const;
  HeckeElt mul_gen_inv_right(const HeckeElt& a, int g) const;

  /// delta_x^{-1}.
  HeckeElt inv_std(const AffineElt& x) const;

  /// Dominant lambda_plus, lambda_minus with lambda = lambda_plus - lambda_minus,
  /// chosen deterministically.
  std::pair<Weight, Weight> dominant_decomposition(const Weight& lambda) const;
  /// Positive multiples zeta_i of "fundamental" coweights used by the decomposition.
  const std::vector<Weight>& fundamental_multiples() const { return zeta_; }
  /// theta_lambda via the canonical decomposition.
  HeckeElt theta(const Weight& lambda) const;
  /// delta_{t_gamma} delta_{t_gamma'}^{-1}; both must be dominant.
  HeckeElt theta_from(const Weight& gamma, const Weight& gamma_prime) const;

  BernsteinElt to_bernstein(const HeckeElt& a) const;
  HeckeElt from_bernstein(const BernsteinElt& b) const;
  BernsteinElt bernstein_mul(const BernsteinElt& a, const BernsteinElt& b) const;
  /// The divided sum (theta_lambda - theta_{s lambda}) / (1 - theta_{-alpha_i^vee}).
  GroupAlgebraElt relation_fraction(int i, const Weight& lambda) const;

  /// Sum of theta_mu over the W_f-orbit of a dominant lambda.
  HeckeElt z_center(const Weight& lambda) const;
  /// Commutation with every delta_s, with delta_omega for length-zero omega
  /// of translation norm <= bound, and with theta of each basis vector.
  bool is_central(const HeckeElt& a, int bound) const;
  /// For an element whose Bernstein form has trivial finite part, the
  /// corresponding element of Z[v^+-1][X^vee]; throws InputError otherwise.
  GroupAlgebraElt center_to_lattice(const HeckeElt& a) const;

  HeckeElt bar(const HeckeElt& a) const;

  /// b_s = delta_s + v delta_id for a generator index.
  HeckeElt kl_gen(int g) const;
  /// Kazhdan-Lusztig basis element b_x; b_{omega y} = delta_omega b_y.
  HeckeElt kl_b(const AffineElt& x) const;

  /// Length cap for kl_b.
  static constexpr int kMaxKlLength = 40;

 private:
  BernsteinElt bernstein_of_generator(const AffineElt& x) const;
  BernsteinElt bernstein_mul_finite_simple(const BernsteinElt& a, int i) const;

  AffineWeylGroup group_;
  std::vector<Weight> zeta_;
  std::vector<std::int64_t> zeta_scale_;

  mutable std::mutex memo_mutex_;
  mutable std::map<AffineElt, HeckeElt> kl_memo_;
  mutable std::map<AffineElt, BernsteinElt> bernstein_memo_;
};

}  // namespace affhecke
