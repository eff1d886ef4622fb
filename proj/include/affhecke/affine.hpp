#pragma once

// The extended affine Weyl group W_ext = X^vee x| W_f.

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/rootdata.hpp"

namespace affhecke {

/// t_translation * finite, acting on X^vee (x) R by lambda -> translation + finite(lambda).
struct AffineElt {
  Weight translation;
  FiniteWeylElt finite;
  friend auto operator<=>(const AffineElt&, const AffineElt&) = default;
};

/// A Coxeter generator: a finite simple reflection s_i, or the affine
/// reflection s_0 = t_{theta^vee} s_theta of one Dynkin component.
struct SimpleAffineReflection {
  enum class Kind { Finite, Affine };
  Kind kind = Kind::Finite;
  int index = 0;            // simple index (Finite) or component index (Affine)
  std::size_t root = 0;     // root index of alpha_i or theta
  AffineElt elt;
  std::string name;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return finite_.datum(); }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return finite_.datum_ptr(); }
  const WeylGroup& finite() const { return finite_; }

  AffineElt identity() const;
  AffineElt translation(const Weight& lambda) const;
  AffineElt from_finite(FiniteWeylElt w) const;

  AffineElt mul(const AffineElt& a, const AffineElt& b) const;
  AffineElt inv(const AffineElt& a) const;
  /// Affine action on X^vee.
  Weight act(const AffineElt& a, const Weight& lambda) const;

  /// Iwahori-Matsumoto closed formula.
  int length(const AffineElt& a) const;
  /// Number of affine root hyperplanes separating a rational interior point
  /// p of A_0 from a(p). Independent of length(); used as a cross-check.
  int length_by_hyperplanes(const AffineElt& a) const;

  /// Finite generators first (in simple-root order), then one affine
  /// generator per Dynkin component.
  const std::vector<SimpleAffineReflection>& generators() const { return gens_; }

  bool is_length_zero(const AffineElt& a) const { return length(a) == 0; }
  /// True iff the translation lies in the coroot lattice.
  bool in_coxeter_part(const AffineElt& a) const;
  /// a = omega * y with omega of length zero and y in the Coxeter part.
  std::pair<AffineElt, AffineElt> omega_decompose(const AffineElt& a) const;

  struct ReducedWord {
    AffineElt omega;
    std::vector<int> word;  // indices into generators()
  };
  /// a = omega * s_{word[0]} ... s_{word[k-1]}, built by repeatedly stripping
  /// the lowest-indexed right descent.
  ReducedWord reduced_word(const AffineElt& a) const;
  AffineElt from_word(const AffineElt& omega, const std::vector<int>& word) const;

  /// Bruhat order; elements in different Omega-components are incomparable.
  bool bruhat_leq(const AffineElt& x, const AffineElt& y) const;

  /// x is minimal in W_f x, i.e. l(s_i x) > l(x) for every finite simple i.
  bool is_minimal_coset_rep(const AffineElt& x) const;

  /// Length-zero elements whose translation has max-norm at most bound.
  std::vector<AffineElt> length_zero_elements(int bound) const;
  /// The non-identity length-zero element with smallest translation
  /// (l1-norm, then lexicographically largest); throws InputError if Omega is trivial.
  AffineElt omega_generator() const;

  /// Elements of length <= max_length whose translation has max-norm <= norm_bound.
  std::vector<AffineElt> elements_up_to(int max_length, int norm_bound) const;
  /// Elements of the Coxeter part of length <= max_length, in output order.
  std::vector<AffineElt> coxeter_ball(int max_length) const;

  /// Total order used for output: length, then translation, then finite word.
  bool output_less(const AffineElt& a, const AffineElt& b) const;

  std::string to_string(const AffineElt& a) const;

 private:
  WeylGroup finite_;
  std::vector<SimpleAffineReflection> gens_;
  std::vector<Rational> interior_point_;
};

}  // namespace affhecke
