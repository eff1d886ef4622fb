#pragma once

// Spherical and antispherical right modules, the Demazure-Lusztig action,
// the decategorified K-theory action and the intertwiner check between them.
//
// Module elements are GroupAlgebraElt over a lattice L; on the Hecke side
// L = X^vee and e^lambda stands for 1 (x) theta_lambda, on the K-theory side L = X.

#include <string>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

enum class Side { Hecke, KTheory };

/// Per simple reflection s, the pair (a_s, a_s*) with s(lambda) = lambda - <lambda, a_s*> a_s.
struct ReflectionDatum {
  Side side = Side::Hecke;
  int rank = 0;
  std::vector<Weight> a, a_star;

  /// L = X^vee, a_s = alpha_s^vee, a_s* = alpha_s.
  static ReflectionDatum hecke_side(const RootDatum& datum);
  /// L = X, a_s = sign * alpha_s, a_s* = sign * alpha_s^vee.
  static ReflectionDatum ktheory_side(const RootDatum& datum, int alpha_sign = 1);

  int size() const { return static_cast<int>(a.size()); }
  Weight reflect(int s, const Weight& lambda) const;
};

enum class Shift { None, MinusA };

/// (e^lambda - e^{s lambda}) / (1 - e^{-a_s}) for Shift::None and
/// (e^lambda - e^{s lambda - a_s}) / (1 - e^{-a_s}) for Shift::MinusA, in closed form.
GroupAlgebraElt divided_sum(const ReflectionDatum& rd, const Weight& lambda, int s, Shift shift);

/// b_s acting on the antispherical module:
/// theta_lambda -> (v^-1 - v theta_{-a_s}) (theta_lambda - theta_{s lambda}) / (1 - theta_{-a_s}).
GroupAlgebraElt dl_action_bs(const ReflectionDatum& rd, int s, const GroupAlgebraElt& m);

enum class SignChar { Sgn, Triv };

/// m . h in sgn (x)_{H_f} H or triv (x)_{H_f} H, computed by bringing
/// theta_lambda h into Bernstein form and letting delta_w act by (-v)^l(w)
/// (sgn) or v^-l(w) (triv).
GroupAlgebraElt induced_action(const HeckeAlgebra& hecke, const HeckeElt& h, const GroupAlgebraElt& m,
                               SignChar sign);

enum class QsScale { Raw, MinusV };

/// e^lambda -> (e^{-a_s} - v^-2) divided_sum(lambda, s, MinusA), times -v for MinusV.
GroupAlgebraElt ktheory_action_qs(const ReflectionDatum& rd, int s, const GroupAlgebraElt& m, QsScale scale);

struct Convention {
  int rho_sign = 1;
  int alpha_sign = 1;
  friend bool operator==(const Convention&, const Convention&) = default;
};

std::string to_string(const Convention& c);

struct ConventionResult {
  Convention convention;
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

struct IntertwinerReport {
  std::string datum;
  std::vector<ConventionResult> results;  // all four conventions
  std::vector<Convention> passing() const;
};

/// theta_lambda -> e^{lambda + rho_sign * rho}.
GroupAlgebraElt intertwiner_map(const GroupAlgebraElt& m, const Weight& rho, int rho_sign);

/// For each convention (rho_sign, alpha_sign), tests
/// Phi(b_s . theta_lambda) = (-v Q_s) Phi(theta_lambda) for every lambda and
/// simple s. The Hecke side is that of the dual datum, so its lattice is the
/// X of the given datum. Requires a rho weight.
IntertwinerReport intertwiner_check(const RootDatum& datum, const std::vector<Weight>& lambdas);

/// All lattice vectors of the given rank with max-norm <= bound, lexicographic.
std::vector<Weight> lattice_box(int rank, int bound);

}  // namespace affhecke
