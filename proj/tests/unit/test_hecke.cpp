#include "helpers.hpp"

#include "affhecke/errors.hpp"

using namespace testing;

namespace {

HeckeElt random_hecke(const std::vector<AffineElt>& elts, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
  HeckeElt h;
  for (int k = 0; k < 3; ++k) h.add_term(elts[pick(rng)], random_lp(rng, 2, 2));
  return h;
}

HeckeElt theta_sum(const HeckeAlgebra& H, const GroupAlgebraElt& g) {
  HeckeElt out;
  for (const auto& [mu, c] : g.terms()) out += H.theta(mu).scaled(c);
  return out;
}

const LaurentPoly q = LaurentPoly::v() - LaurentPoly::v_inv();

}  // namespace

TEST_CASE("hecke: quadratic relation and inverses") {
  const HeckeAlgebra H(load_datum("sl2"));
  const auto& G = H.group();
  const AffineElt s = G.generators()[0].elt;
  HeckeElt expect = H.one();
  expect.add_term(s, vi() - v());
  CHECK(H.mul(H.delta(s), H.delta(s)) == expect);
  CHECK(H.mul(H.delta(s), H.inv_std(s)) == H.one());
  // delta_s^-1 = delta_s + (v - v^-1).
  CHECK(H.inv_std(s) == H.delta(s) + H.one().scaled(q));

  for (const char* name : {"pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra K(load_datum(name));
    for (const auto& x : K.group().elements_up_to(3, 2)) {
      CHECK(K.mul(K.delta(x), K.inv_std(x)) == K.one());
      CHECK(K.mul(K.inv_std(x), K.delta(x)) == K.one());
    }
    for (std::size_t g = 0; g < K.group().generators().size(); ++g) {
      const int gi = static_cast<int>(g);
      const HeckeElt d = K.delta_gen(gi);
      CHECK(K.mul(d, d) == K.one() + d.scaled(vi() - v()));
      CHECK(K.mul_gen_right(K.one(), gi) == d);
      CHECK(K.mul_gen_inv_right(d, gi) == K.one());
    }
  }
}

TEST_CASE("hecke: length-additive products and associativity") {
  for (const char* name : {"sl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& G = H.group();
    const auto elts = G.elements_up_to(3, 2);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& x = elts[pick(rng)];
      const auto& y = elts[pick(rng)];
      if (G.length(G.mul(x, y)) == G.length(x) + G.length(y)) CHECK(H.mul(H.delta(x), H.delta(y)) == H.delta(G.mul(x, y)));
      const auto a = random_hecke(elts, rng), b = random_hecke(elts, rng), c = random_hecke(elts, rng);
      CHECK(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)));
      CHECK(H.mul_delta_right(a, y) == H.mul(a, H.delta(y)));
      CHECK(H.mul_delta_left(x, a) == H.mul(H.delta(x), a));
    }
  }
}

TEST_CASE("hecke: theta elements") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    CHECK(H.theta(Weight(static_cast<std::size_t>(d.rank()), 0)) == H.one());
    const auto box = lattice_box(d.rank(), 2);
    for (const auto& lambda : box) {
      const auto [plus, minus] = H.dominant_decomposition(lambda);
      CHECK(plus - minus == lambda);
      CHECK(is_dominant(d, plus, Lattice::Coweight));
      CHECK(is_dominant(d, minus, Lattice::Coweight));
      if (is_dominant(d, lambda, Lattice::Coweight)) CHECK(H.theta(lambda) == H.delta(H.group().translation(lambda)));
    }
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
      const auto& a = box[pick(rng)];
      const auto& b = box[pick(rng)];
      CHECK(H.mul(H.theta(a), H.theta(b)) == H.theta(a + b));
      CHECK(H.mul(H.theta(a), H.theta(b)) == H.mul(H.theta(b), H.theta(a)));
    }
  }
}

TEST_CASE("hecke: theta does not depend on the dominant decomposition") {
  const HeckeAlgebra H(load_datum("sl3"));
  for (const auto& lambda : lattice_box(2, 2)) {
    const auto [plus, minus] = H.dominant_decomposition(lambda);
    for (const auto& mu : {vec({1, 1}), vec({2, 1}), vec({1, 2}), vec({3, 3})})
      CHECK(H.theta_from(plus + mu, minus + mu) == H.theta(lambda));
  }
  CHECK_THROWS_AS(H.theta_from(vec({-1, 0}), vec({0, 0})), InputError);
}

TEST_CASE("hecke: Bernstein relation") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& d = H.datum();
    for (int i = 0; i < d.semisimple_rank(); ++i)
      for (const auto& lambda : lattice_box(d.rank(), 2)) {
        const HeckeElt ds = H.delta_gen(i);
        const HeckeElt lhs = H.mul(ds, H.theta(reflect(d, i, lambda))) - H.mul(H.theta(lambda), ds);
        CHECK(lhs == theta_sum(H, H.relation_fraction(i, lambda)).scaled(q));
      }
  }
  // PGL2 at lambda = varpi.
  const HeckeAlgebra H(load_datum("pgl2"));
  const HeckeElt ds = H.delta_gen(0);
  const HeckeElt tv = H.theta(vec({1}));
  CHECK(H.mul(ds, H.theta(vec({-1}))) == H.mul(tv, ds) + tv.scaled(q));
  CHECK(tv == H.mul(H.delta(H.group().omega_generator()), ds));
}

TEST_CASE("hecke: Bernstein form round trip and multiplication") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto elts = H.group().elements_up_to(3, 2);
    std::mt19937_64 rng(33);
    for (const auto& x : elts) CHECK(H.from_bernstein(H.to_bernstein(H.delta(x))) == H.delta(x));
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_hecke(elts, rng), b = random_hecke(elts, rng);
      CHECK(H.from_bernstein(H.bernstein_mul(H.to_bernstein(a), H.to_bernstein(b))) == H.mul(a, b));
    }
    const auto& W = H.group().finite();
    for (const auto& lambda : lattice_box(H.datum().rank(), 2)) {
      BernsteinElt b;
      b.add_term(W.identity(), lambda, LaurentPoly(1));
      CHECK(H.to_bernstein(H.theta(lambda)) == b);
    }
  }
}

TEST_CASE("hecke: bar involution") {
  for (const char* name : {"sl2", "gl2", "sl3"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto elts = H.group().elements_up_to(3, 2);
    std::mt19937_64 rng(34);
    for (std::size_t g = 0; g < H.group().generators().size(); ++g)
      CHECK(H.bar(H.delta_gen(static_cast<int>(g))) == H.inv_std(H.group().generators()[g].elt));
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_hecke(elts, rng), b = random_hecke(elts, rng);
      CHECK(H.bar(H.bar(a)) == a);
      CHECK(H.bar(H.mul(a, b)) == H.mul(H.bar(a), H.bar(b)));
    }
  }
}

TEST_CASE("hecke: Kazhdan-Lusztig basis of the infinite dihedral group") {
  // All Kazhdan-Lusztig polynomials are 1 there: b_x = sum_{y <= x} v^{l(x) - l(y)} delta_y.
  for (const char* name : {"sl2", "pgl2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& G = H.group();
    const auto ball = G.coxeter_ball(8);
    for (const auto& x : ball) {
      HeckeElt expect;
      for (const auto& y : ball)
        if (G.length(y) <= G.length(x) && G.bruhat_leq(y, x))
          expect.add_term(y, LaurentPoly::monomial(1, G.length(x) - G.length(y)));
      CHECK(H.kl_b(x) == expect);
    }
  }
  const HeckeAlgebra H(load_datum("pgl2"));
  const auto& G = H.group();
  const AffineElt w = G.omega_generator();
  for (const auto& y : G.coxeter_ball(4)) CHECK(H.kl_b(G.mul(w, y)) == H.mul(H.delta(w), H.kl_b(y)));
}

TEST_CASE("hecke: Kazhdan-Lusztig basis is characterised by bar invariance and degrees") {
  for (auto [name, len] : {std::pair{"sl3", 5}, std::pair{"c2", 4}, std::pair{"gl2", 5}}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& G = H.group();
    for (const auto& x : G.coxeter_ball(len)) {
      const HeckeElt b = H.kl_b(x);
      CHECK(H.bar(b) == b);
      CHECK(b.coeff(x) == LaurentPoly(1));
      for (const auto& [y, h] : b.terms())
        if (y != x) {
          CHECK(h.min_degree() >= 1);
          CHECK(G.length(y) < G.length(x));
          CHECK(G.bruhat_leq(y, x));
        }
    }
  }
  for (const char* name : {"sl3", "c2"}) {
    const HeckeAlgebra H(load_datum(name));
    const auto& W = H.group().finite();
    const int top = W.length(W.longest());
    HeckeElt expect;
    for (auto w : W.elements()) expect.add_term(H.group().from_finite(w), LaurentPoly::monomial(1, top - W.length(w)));
    CHECK(H.kl_b(H.group().from_finite(W.longest())) == expect);
  }
}

TEST_CASE("hecke: center") {
  for (const char* name : {"sl2", "pgl2", "gl2", "sl3", "c2"}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    for (const auto& lambda : lattice_box(H.datum().rank(), 2))
      if (is_dominant(H.datum(), lambda, Lattice::Coweight)) CHECK(H.is_central(H.z_center(lambda), 2));
  }
  const HeckeAlgebra H(load_datum("sl2"));
  CHECK_FALSE(H.is_central(H.theta(vec({1})), 2));
  CHECK_FALSE(H.is_central(H.delta_gen(0), 2));
  CHECK(H.center_to_lattice(H.z_center(vec({1}))) ==
        GroupAlgebraElt::monomial(vec({1})) + GroupAlgebraElt::monomial(vec({-1})));
  CHECK_THROWS_AS(H.center_to_lattice(H.delta_gen(0)), InputError);

  const HeckeAlgebra gl2(load_datum("gl2"));
  const auto& G = gl2.group();
  const HeckeElt z_nat = gl2.theta(vec({1, 0})) + gl2.theta(vec({0, 1}));
  const AffineElt w = G.omega_generator();
  CHECK(z_nat == gl2.mul(gl2.delta(w), gl2.delta_gen(0) + gl2.inv_std(G.generators()[1].elt)));
  CHECK(z_nat == gl2.mul(gl2.delta(w), gl2.inv_std(G.generators()[0].elt) + gl2.delta_gen(1)));
  CHECK(gl2.mul(z_nat, gl2.kl_gen(0)) == gl2.mul(gl2.delta(w), gl2.kl_b(G.mul(G.generators()[1].elt, G.generators()[0].elt))));
}

TEST_CASE("hecke: right multiplication by b_s on a descent") {
  for (auto [name, len] : {std::pair{"sl2", 6}, std::pair{"pgl2", 6}, std::pair{"c2", 6}, std::pair{"sl3", 5}}) {
    CAPTURE(name);
    const HeckeAlgebra H(load_datum(name));
    const auto& G = H.group();
    for (const auto& x : G.coxeter_ball(len)) {
      const HeckeElt b = H.kl_b(x);
      for (const auto& [y, h] : b.terms())
        for (const auto& [k, c] : h.terms()) CHECK(c >= 0);
      for (int s = 0; s < static_cast<int>(G.generators().size()); ++s)
        if (G.length(G.mul(x, G.generators()[static_cast<std::size_t>(s)].elt)) < G.length(x))
          CHECK(H.mul(b, H.kl_gen(s)) == b.scaled(LaurentPoly::v() + LaurentPoly::v_inv()));
    }
  }
}
