#pragma once

// Root data, finite Weyl groups, dominance order and Weyl characters.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "affhecke/laurent.hpp"

namespace affhecke {

/// Which lattice a weight lives in: X (characters) or X^vee (cocharacters).
enum class Lattice { Weight, Coweight };

/// A based root datum (X > R, X^vee > R^vee) with X = X^vee = Z^rank and the
/// standard dot product as pairing. Only finite type is accepted.
///
/// Conventions: `simple_roots` live in X, `simple_coroots` in X^vee, and the
/// affine Weyl group and Hecke algebra built from a datum act on X^vee. The
/// `convention` string records which group's character lattice X is, since the
/// dual datum (roots and coroots swapped) describes the Langlands dual group.
class RootDatum {
 public:
  /// Validates and completes a datum; throws InputError on anything that is
  /// not a finite-type root datum.
  static std::shared_ptr<const RootDatum> create(std::string name, int rank, std::vector<Weight> simple_roots,
                                                 std::vector<Weight> simple_coroots,
                                                 std::optional<Weight> rho_weight = std::nullopt,
                                                 std::string convention = {});

  const std::string& name() const { return name_; }
  const std::string& convention() const { return convention_; }
  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::optional<Weight>& rho_weight() const { return rho_weight_; }

  /// cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }

  /// All roots; roots()[k] pairs with coroots()[k].
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& coroots() const { return coroots_; }
  /// Coordinates of roots()[k] in the simple roots.
  const std::vector<Weight>& root_coordinates() const { return root_coords_; }
  bool is_positive(std::size_t root) const { return positive_[root]; }
  const std::vector<std::size_t>& positive_roots() const { return positive_list_; }
  int height(std::size_t root) const;
  /// Index of the root with the given vector, or -1.
  int root_index(const Weight& alpha) const;

  /// Connected components of the Dynkin diagram, as lists of simple indices.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Root index of the highest root of each component.
  const std::vector<std::size_t>& highest_roots() const { return highest_roots_; }

  /// Roots and coroots swapped; the rho weight is dropped.
  std::shared_ptr<const RootDatum> dual() const;

  /// Sum of positive coroots, an element of X^vee pairing to 2 with each simple root.
  Weight two_rho_vee() const;

 private:
  RootDatum() = default;

  std::string name_, convention_;
  int rank_ = 0;
  std::vector<Weight> simple_roots_, simple_coroots_;
  std::optional<Weight> rho_weight_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<Weight> roots_, coroots_, root_coords_;
  std::vector<bool> positive_;
  std::vector<std::size_t> positive_list_;
  std::vector<std::vector<int>> components_;
  std::vector<std::size_t> highest_roots_;
};

/// s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee on X^vee.
Weight reflect(const RootDatum& datum, int i, const Weight& lambda);
/// s_i(mu) = mu - <alpha_i^vee, mu> alpha_i on X.
Weight reflect_weight(const RootDatum& datum, int i, const Weight& mu);

/// Element of a finite Weyl group, referring to its index in the owning
/// WeylGroup's enumeration. Indices are unique per matrix, so equality of
/// ids is equality of matrices.
struct FiniteWeylElt {
  std::uint32_t id = 0;
  friend auto operator<=>(const FiniteWeylElt&, const FiniteWeylElt&) = default;
};

using Matrix = std::vector<std::vector<std::int64_t>>;

/// The finite Weyl group W_f of a root datum, fully enumerated.
class WeylGroup {
 public:
  /// Element cap guarding against invalid data; exceeding it throws InputError.
  static constexpr std::size_t kMaxOrder = 200000;

  explicit WeylGroup(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }
  std::size_t order() const { return matrices_.size(); }
  std::vector<FiniteWeylElt> elements() const;

  FiniteWeylElt identity() const { return {0}; }
  FiniteWeylElt simple(int i) const { return {simple_ids_.at(static_cast<std::size_t>(i))}; }
  FiniteWeylElt longest() const { return {longest_}; }

  /// Matrix of the action on X^vee (acting on column vectors).
  const Matrix& matrix(FiniteWeylElt w) const { return matrices_[w.id]; }
  /// Shortest word in simple reflections (0-based indices), the BFS-first one.
  const std::vector<int>& word(FiniteWeylElt w) const { return words_[w.id]; }
  int length(FiniteWeylElt w) const { return static_cast<int>(words_[w.id].size()); }

  FiniteWeylElt mul(FiniteWeylElt a, FiniteWeylElt b) const;
  FiniteWeylElt inverse(FiniteWeylElt w) const { return {inverse_[w.id]}; }
  FiniteWeylElt from_word(const std::vector<int>& word) const;
  /// Throws InputError if the matrix is not in W_f.
  FiniteWeylElt from_matrix(const Matrix& m) const;

  Weight act_coweight(FiniteWeylElt w, const Weight& lambda) const;
  Weight act_weight(FiniteWeylElt w, const Weight& mu) const;
  /// Index of w(root) for a root index.
  std::size_t act_root(FiniteWeylElt w, std::size_t root) const { return root_perm_[w.id][root]; }
  /// The reflection s_alpha for the root with the given index.
  FiniteWeylElt reflection(std::size_t root) const;

  /// Number of positive roots sent negative.
  int inversions(FiniteWeylElt w) const;

  /// W_f-orbit of a coweight (sorted, duplicate free).
  std::vector<Weight> coweight_orbit(const Weight& lambda) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<Matrix> matrices_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> simple_ids_;
  std::vector<std::vector<std::uint32_t>> mul_table_;  // filled when order is small
  std::vector<std::vector<std::size_t>> root_perm_;
  std::uint32_t longest_ = 0;
  struct Index;
  std::shared_ptr<Index> index_;
};

std::vector<FiniteWeylElt> enumerate_weyl(const WeylGroup& group);

bool is_dominant(const RootDatum& datum, const Weight& lambda, Lattice lattice);

/// Character of the irreducible representation of highest weight lambda (in X),
/// computed as a ratio of alternants. Requires lambda dominant.
GroupAlgebraElt weyl_character(const WeylGroup& group, const Weight& lambda);

/// True iff lambda - mu is a non-negative integer combination of simple
/// coroots (Coweight) or simple roots (Weight).
bool dominance_leq(const RootDatum& datum, const Weight& mu, const Weight& lambda, Lattice lattice);

/// Rational coordinates of d in the given linearly independent vectors, or
/// nullopt if d is not in their span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Weight>& basis, const Weight& d);

}  // namespace affhecke
