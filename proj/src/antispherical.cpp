#include "affhecke/antispherical.hpp"

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

void require_side(const ReflectionDatum& rd, Side side, const char* op) {
  if (rd.side != side)
    throw InputError(std::string(op) + ": module element is on the " +
                     (rd.side == Side::Hecke ? "hecke" : "ktheory") + " side");
}

void require_index(const ReflectionDatum& rd, int s) {
  if (s < 0 || s >= rd.size()) throw InputError("simple reflection index out of range");
}

}  // namespace

ReflectionDatum ReflectionDatum::hecke_side(const RootDatum& datum) {
  return {Side::Hecke, datum.rank(), datum.simple_coroots(), datum.simple_roots()};
}

ReflectionDatum ReflectionDatum::ktheory_side(const RootDatum& datum, int alpha_sign) {
  if (alpha_sign != 1 && alpha_sign != -1) throw InputError("alpha sign must be +1 or -1");
  ReflectionDatum rd{Side::KTheory, datum.rank(), {}, {}};
  for (int i = 0; i < datum.semisimple_rank(); ++i) {
    rd.a.push_back(alpha_sign * datum.simple_roots()[static_cast<std::size_t>(i)]);
    rd.a_star.push_back(alpha_sign * datum.simple_coroots()[static_cast<std::size_t>(i)]);
  }
  return rd;
}

Weight ReflectionDatum::reflect(int s, const Weight& lambda) const {
  const auto k = static_cast<std::size_t>(s);
  return lambda - pairing(lambda, a_star[k]) * a[k];
}

GroupAlgebraElt divided_sum(const ReflectionDatum& rd, const Weight& lambda, int s, Shift shift) {
  require_index(rd, s);
  if (lambda.size() != static_cast<std::size_t>(rd.rank)) throw InputError("divided_sum: lattice vector has the wrong rank");
  const auto k = static_cast<std::size_t>(s);
  std::int64_t steps = pairing(lambda, rd.a_star[k]);
  if (shift == Shift::MinusA) steps += 1;
  return geometric_quotient(lambda, rd.a[k], steps);
}

GroupAlgebraElt dl_action_bs(const ReflectionDatum& rd, int s, const GroupAlgebraElt& m) {
  require_side(rd, Side::Hecke, "dl_action_bs");
  require_index(rd, s);
  const Weight minus_a = -rd.a[static_cast<std::size_t>(s)];
  GroupAlgebraElt factor = GroupAlgebraElt::monomial(Weight(minus_a.size(), 0), LaurentPoly::v_inv());
  factor.add_term(minus_a, -LaurentPoly::v());
  GroupAlgebraElt out;
  for (const auto& [lambda, c] : m.terms()) out += (factor * divided_sum(rd, lambda, s, Shift::None)).scaled(c);
  return out;
}

GroupAlgebraElt induced_action(const HeckeAlgebra& hecke, const HeckeElt& h, const GroupAlgebraElt& m,
                               SignChar sign) {
  const auto& W = hecke.group().finite();
  const BernsteinElt bh = hecke.to_bernstein(h);
  GroupAlgebraElt out;
  for (const auto& [lambda, c] : m.terms()) {
    if (lambda.size() != static_cast<std::size_t>(hecke.datum().rank()))
      throw InputError("induced_action: lattice vector has the wrong rank");
    BernsteinElt left;
    left.add_term(W.identity(), lambda, c);
    const BernsteinElt prod = hecke.bernstein_mul(left, bh);
    for (const auto& [key, d] : prod.terms()) {
      const int l = W.length(key.first);
      const LaurentPoly chi = sign == SignChar::Sgn ? LaurentPoly::monomial(l % 2 ? -1 : 1, l)
                                                    : LaurentPoly::monomial(1, -l);
      out.add_term(key.second, d * chi);
    }
  }
  return out;
}

GroupAlgebraElt ktheory_action_qs(const ReflectionDatum& rd, int s, const GroupAlgebraElt& m, QsScale scale) {
  require_side(rd, Side::KTheory, "ktheory_action_qs");
  require_index(rd, s);
  const Weight minus_a = -rd.a[static_cast<std::size_t>(s)];
  GroupAlgebraElt factor = GroupAlgebraElt::monomial(minus_a);
  factor.add_term(Weight(minus_a.size(), 0), -LaurentPoly::monomial(1, -2));
  if (scale == QsScale::MinusV) factor = factor.scaled(-LaurentPoly::v());
  GroupAlgebraElt out;
  for (const auto& [lambda, c] : m.terms()) out += (factor * divided_sum(rd, lambda, s, Shift::MinusA)).scaled(c);
  return out;
}

std::string to_string(const Convention& c) {
  return std::string("rho") + (c.rho_sign > 0 ? "+" : "-") + ",alpha" + (c.alpha_sign > 0 ? "+" : "-");
}

std::vector<Convention> IntertwinerReport::passing() const {
  std::vector<Convention> out;
  for (const auto& r : results)
    if (r.passed()) out.push_back(r.convention);
  return out;
}

GroupAlgebraElt intertwiner_map(const GroupAlgebraElt& m, const Weight& rho, int rho_sign) {
  return m.translated(rho_sign * rho);
}

IntertwinerReport intertwiner_check(const RootDatum& datum, const std::vector<Weight>& lambdas) {
  if (!datum.rho_weight()) throw InputError("intertwiner_check: datum '" + datum.name() + "' has no rho_weight");
  const Weight& rho = *datum.rho_weight();
  const ReflectionDatum hecke = ReflectionDatum::hecke_side(*datum.dual());
  IntertwinerReport report{datum.name(), {}};
  for (int rho_sign : {1, -1})
    for (int alpha_sign : {1, -1}) {
      const ReflectionDatum kside = ReflectionDatum::ktheory_side(datum, alpha_sign);
      ConventionResult res{{rho_sign, alpha_sign}, 0, 0};
      for (const auto& lambda : lambdas)
        for (int s = 0; s < hecke.size(); ++s) {
          const GroupAlgebraElt theta = GroupAlgebraElt::monomial(lambda);
          const GroupAlgebraElt lhs = intertwiner_map(dl_action_bs(hecke, s, theta), rho, rho_sign);
          const GroupAlgebraElt rhs =
              ktheory_action_qs(kside, s, intertwiner_map(theta, rho, rho_sign), QsScale::MinusV);
          ++res.checks;
          if (!(lhs == rhs)) ++res.failures;
        }
      report.results.push_back(res);
    }
  return report;
}

std::vector<Weight> lattice_box(int rank, int bound) {
  std::vector<Weight> out;
  if (rank <= 0 || bound < 0) return out;
  Weight v(static_cast<std::size_t>(rank), -bound);
  while (true) {
    out.push_back(v);
    int k = rank - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == bound) v[static_cast<std::size_t>(k--)] = -bound;
    if (k < 0) break;
    ++v[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace affhecke
