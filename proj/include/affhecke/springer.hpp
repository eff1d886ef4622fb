#pragma once

// Nilpotent orbits of gl_n: partitions, orbit and Springer fiber dimensions,
// dominance order, standard tableaux and Robinson-Schensted.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace affhecke {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  Partition transpose() const;
  std::string to_string() const;  // e.g. "(2,1,1)"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, largest first in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Rows of a filling; shape given by row lengths.
struct Tableau {
  std::vector<std::vector<int>> rows;
  Partition shape() const;
  bool is_standard() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

std::int64_t orbit_dim(const Partition& lambda);
/// dim N = n^2 - n.
std::int64_t nilcone_dim(int n);
std::int64_t orbit_codim(const Partition& lambda);
/// Half the codimension; throws InvariantError if it is not an integer.
std::int64_t fiber_dim(const Partition& lambda);

/// mu <= lambda in dominance order (prefix sums). Throws InputError if sizes differ.
bool dominance(const Partition& mu, const Partition& lambda);

/// Row insertion; w is a permutation of 1..n in one-line notation.
std::pair<Tableau, Tableau> rs(const std::vector<int>& w);

/// Number of standard tableaux of the shape, by exhaustive enumeration.
std::int64_t syt_count(const Partition& lambda);
/// All standard tableaux of the shape.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

struct SpringerRow {
  Partition partition;
  std::int64_t dim_orbit, codim, fiber_dim, n_components;
};
std::vector<SpringerRow> springer_table(int n);

/// Whether every nonzero codimension divides dim T*B = n^2 - n. Reported only.
bool codim_divides_nilcone(int n);

}  // namespace affhecke
