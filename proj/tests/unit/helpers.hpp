#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "affhecke/affine.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/io.hpp"

namespace doctest {
template <>
struct StringMaker<affhecke::LaurentPoly> {
  static String convert(const affhecke::LaurentPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<affhecke::GroupAlgebraElt> {
  static String convert(const affhecke::GroupAlgebraElt& g) { return g.to_string().c_str(); }
};
template <>
struct StringMaker<affhecke::Weight> {
  static String convert(const affhecke::Weight& w) { return affhecke::to_string(w).c_str(); }
};
}  // namespace doctest

namespace testing {

using namespace affhecke;

inline Weight vec(std::initializer_list<std::int64_t> xs) { return Weight(xs); }

inline LaurentPoly v() { return LaurentPoly::v(); }
inline LaurentPoly vi() { return LaurentPoly::v_inv(); }

// Small random Laurent polynomials: up to `terms` terms, exponents in [-4, 4].
inline LaurentPoly random_lp(std::mt19937_64& rng, int terms = 4, int coeff = 5) {
  std::uniform_int_distribution<int> e(-4, 4), c(-coeff, coeff), n(0, terms);
  std::vector<std::pair<int, BigInt>> t;
  for (int k = n(rng); k > 0; --k) t.emplace_back(e(rng), BigInt(c(rng)));
  return LaurentPoly::from_terms(t);
}

inline Weight random_weight(std::mt19937_64& rng, int rank, int bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  Weight w(static_cast<std::size_t>(rank));
  for (auto& x : w) x = d(rng);
  return w;
}

inline GroupAlgebraElt random_ga(std::mt19937_64& rng, int rank, int terms = 3) {
  GroupAlgebraElt g;
  std::uniform_int_distribution<int> n(0, terms);
  for (int k = n(rng); k > 0; --k) g.add_term(random_weight(rng, rank, 2), random_lp(rng, 2, 3));
  return g;
}

inline std::string hecke_str(const AffineWeylGroup& G, const HeckeElt& h) { return hecke_to_json(G, h).dump(); }

}  // namespace testing
