#include "helpers.hpp"

#include <functional>

#include "affhecke/acceptance.hpp"
#include "affhecke/errors.hpp"

using namespace testing;

namespace {

GroupAlgebraElt mono(const Weight& w) { return GroupAlgebraElt::monomial(w); }

GroupAlgebraElt act_each(const GroupAlgebraElt& m, const std::function<GroupAlgebraElt(const Weight&)>& f) {
  GroupAlgebraElt out;
  for (const auto& [mu, c] : m.terms()) out += f(mu).scaled(c);
  return out;
}

}  // namespace

TEST_CASE("antispherical: reflection data") {
  const auto c2 = load_datum("c2");
  const auto rd = ReflectionDatum::hecke_side(*c2);
  CHECK(rd.size() == 2);
  for (int s = 0; s < 2; ++s)
    for (const auto& lambda : lattice_box(2, 2)) CHECK(rd.reflect(s, lambda) == reflect(*c2, s, lambda));
  const auto kd = ReflectionDatum::ktheory_side(*c2, -1);
  for (int s = 0; s < 2; ++s)
    for (const auto& mu : lattice_box(2, 2)) CHECK(kd.reflect(s, mu) == reflect_weight(*c2, s, mu));
  CHECK_THROWS_AS(ReflectionDatum::ktheory_side(*c2, 2), InputError);
  CHECK_THROWS_AS(divided_sum(rd, vec({1}), 0, Shift::None), InputError);
  CHECK_THROWS_AS(divided_sum(rd, vec({1, 0}), 5, Shift::None), InputError);
}

TEST_CASE("antispherical: divided sums equal exact division") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const auto d = load_datum(name);
    for (const auto& rd : {ReflectionDatum::hecke_side(*d), ReflectionDatum::ktheory_side(*d, 1),
                           ReflectionDatum::ktheory_side(*d, -1)})
      for (int s = 0; s < rd.size(); ++s) {
        const auto den = GroupAlgebraElt::one(static_cast<std::size_t>(rd.rank)) - mono(-rd.a[static_cast<std::size_t>(s)]);
        for (const auto& lambda : lattice_box(rd.rank, 3)) {
          const Weight sl = rd.reflect(s, lambda);
          CHECK(divided_sum(rd, lambda, s, Shift::None) == ga_exact_divide(mono(lambda) - mono(sl), den));
          CHECK(divided_sum(rd, lambda, s, Shift::MinusA) ==
                ga_exact_divide(mono(lambda) - mono(sl - rd.a[static_cast<std::size_t>(s)]), den));
        }
      }
  }
}

TEST_CASE("antispherical: Demazure-Lusztig formula equals the induced action") {
  std::mt19937_64 rng(41);
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    const auto rd = ReflectionDatum::hecke_side(d);
    for (int s = 0; s < d.semisimple_rank(); ++s) {
      const HeckeElt bs = H.kl_gen(s);
      for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_ga(rng, d.rank());
        const auto once = dl_action_bs(rd, s, m);
        CHECK(once == induced_action(H, bs, m, SignChar::Sgn));
        // b_s^2 = (v + v^-1) b_s.
        CHECK(dl_action_bs(rd, s, once) == once.scaled(v() + vi()));
      }
    }
  }
}

TEST_CASE("antispherical: the induced action is a right module action") {
  std::mt19937_64 rng(42);
  for (const char* name : {"sl2", "gl2", "sl3"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto elts = H.group().elements_up_to(2, 1);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    for (auto sign : {SignChar::Sgn, SignChar::Triv})
      for (int trial = 0; trial < 10; ++trial) {
        const auto h1 = H.delta(elts[pick(rng)]);
        const auto h2 = H.delta(elts[pick(rng)]);
        const auto m = random_ga(rng, H.datum().rank(), 2);
        CHECK(induced_action(H, H.mul(h1, h2), m, sign) ==
              induced_action(H, h2, induced_action(H, h1, m, sign), sign));
      }
    const auto unit = GroupAlgebraElt::one(static_cast<std::size_t>(H.datum().rank()));
    CHECK(induced_action(H, H.kl_gen(0), unit, SignChar::Sgn).is_zero());
    CHECK(induced_action(H, H.kl_gen(0), unit, SignChar::Triv) == unit.scaled(v() + vi()));
  }
}

TEST_CASE("antispherical: K-theory operator") {
  const auto sl2 = load_datum("sl2");
  const auto kd = ReflectionDatum::ktheory_side(*sl2);
  // chi(O(m)) = m + 1.
  for (int m = -5; m <= 5; ++m) CHECK(divided_sum(kd, vec({m}), 0, Shift::MinusA).augmentation() == LaurentPoly(m + 1));
  std::mt19937_64 rng(43);
  for (const char* name : {"sl2", "sl3", "c2"}) {
    const auto d = load_datum(name);
    const auto rd = ReflectionDatum::ktheory_side(*d, 1);
    for (int s = 0; s < rd.size(); ++s)
      for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_ga(rng, rd.rank);
        const auto raw = ktheory_action_qs(rd, s, m, QsScale::Raw);
        CHECK(ktheory_action_qs(rd, s, m, QsScale::MinusV) == raw.scaled(-v()));
        const auto once = ktheory_action_qs(rd, s, m, QsScale::MinusV);
        CHECK(ktheory_action_qs(rd, s, once, QsScale::MinusV) == once.scaled(v() + vi()));
      }
  }
}

TEST_CASE("antispherical: intertwiner conventions") {
  CHECK(to_string(kGoldenConvention) == "rho-,alpha+");
  const auto sl2 = load_datum("sl2");
  std::vector<Weight> ms;
  for (int m = -6; m <= 6; ++m) ms.push_back(vec({m}));
  const auto rep = intertwiner_check(*sl2, ms);
  CHECK(rep.results.size() == 4);
  REQUIRE(rep.passing().size() == 1);
  CHECK(rep.passing().front() == kGoldenConvention);
  // theta_m -> x^{m - 1}, written out.
  CHECK(intertwiner_map(mono(vec({3})), vec({1}), -1) == mono(vec({2})));
  for (const char* name : {"gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const auto d = load_datum(name);
    const auto sweep = intertwiner_check(*d, lattice_box(d->rank(), 2));
    REQUIRE(sweep.passing().size() == 1);
    CHECK(sweep.passing().front() == kGoldenConvention);
  }
  CHECK_THROWS_AS(intertwiner_check(*load_datum("pgl2"), {vec({0})}), InputError);
}

TEST_CASE("antispherical: module elements act linearly") {
  const HeckeAlgebra H(load_datum("sl3"));
  const auto rd = ReflectionDatum::hecke_side(H.datum());
  const auto m = mono(vec({1, 0})).scaled(v()) + mono(vec({-1, 2})).scaled(LaurentPoly(3));
  CHECK(dl_action_bs(rd, 1, m) == act_each(m, [&](const Weight& w) { return dl_action_bs(rd, 1, mono(w)); }));
}

TEST_CASE("antispherical: antisymmetry, faithfulness and a rank one example") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const auto d = load_datum(name);
    const auto rd = ReflectionDatum::hecke_side(*d);
    for (int s = 0; s < rd.size(); ++s) {
      bool nonzero = false;
      for (const auto& lambda : lattice_box(rd.rank, 3)) {
        CHECK(divided_sum(rd, lambda, s, Shift::None) == -divided_sum(rd, rd.reflect(s, lambda), s, Shift::None));
        if (!dl_action_bs(rd, s, mono(lambda)).is_zero()) nonzero = true;
      }
      CHECK(nonzero);
    }
  }
  // b_s . theta_1: with X^vee = Z varpi only two terms survive; with X^vee = Z alpha^vee theta_0 appears.
  const HeckeAlgebra pgl2(load_datum("pgl2"));
  const auto two_terms = mono(vec({1})).scaled(vi()) - mono(vec({-1})).scaled(v());
  CHECK(induced_action(pgl2, pgl2.kl_gen(0), mono(vec({1})), SignChar::Sgn) == two_terms);
  const HeckeAlgebra sl2(load_datum("sl2"));
  CHECK(induced_action(sl2, sl2.kl_gen(0), mono(vec({1})), SignChar::Sgn) == two_terms + mono(vec({0})).scaled(vi() - v()));
}
