#include "affhecke/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

std::int64_t floor_rational(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num % den != 0 && num < 0) f -= 1;
  return static_cast<std::int64_t>(f);
}

std::int64_t l1_norm(const Weight& w) {
  std::int64_t s = 0;
  for (auto x : w) s += std::abs(x);
  return s;
}

// Calls f on every vector of the given length with entries in [-bound, bound].
template <class F>
void for_each_in_box(std::size_t rank, int bound, F&& f) {
  Weight v(rank, -bound);
  while (true) {
    f(v);
    std::size_t k = 0;
    while (k < rank && v[k] == bound) v[k++] = -bound;
    if (k == rank) return;
    ++v[k];
  }
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootDatum> datum) : finite_(std::move(datum)) {
  const auto& d = finite_.datum();
  const int n = d.semisimple_rank();
  for (int i = 0; i < n; ++i) {
    SimpleAffineReflection g;
    g.kind = SimpleAffineReflection::Kind::Finite;
    g.index = i;
    g.root = static_cast<std::size_t>(d.root_index(d.simple_roots()[static_cast<std::size_t>(i)]));
    g.elt = from_finite(finite_.simple(i));
    g.name = n == 1 ? "s" : "s" + std::to_string(i + 1);
    gens_.push_back(std::move(g));
  }
  const auto& comps = d.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    SimpleAffineReflection g;
    g.kind = SimpleAffineReflection::Kind::Affine;
    g.index = static_cast<int>(c);
    g.root = d.highest_roots()[c];
    g.elt = AffineElt{d.coroots()[g.root], finite_.reflection(g.root)};
    g.name = comps.size() == 1 ? "s0" : "s0_" + std::to_string(c + 1);
    gens_.push_back(std::move(g));
  }

  // Interior point of A_0: the point of the coroot span with <p, alpha_i> = 1/(H+1).
  int max_height = 1;
  for (std::size_t k : d.positive_roots()) max_height = std::max(max_height, d.height(k));
  const Rational eps(1, max_height + 1);
  interior_point_.assign(static_cast<std::size_t>(d.rank()), Rational(0));
  if (n > 0) {
    // Solve C^T c = eps * (1,...,1) for coefficients c of the simple coroots.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = d.cartan()[j][i];
      a[i][n] = eps;
    }
    for (int col = 0; col < n; ++col) {
      int p = col;
      while (a[p][col] == 0) ++p;
      std::swap(a[p], a[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    for (int j = 0; j < n; ++j) {
      const Rational cj = a[j][n] / a[j][j];
      for (std::size_t r = 0; r < interior_point_.size(); ++r)
        interior_point_[r] += cj * d.simple_coroots()[static_cast<std::size_t>(j)][r];
    }
  }
}

AffineElt AffineWeylGroup::identity() const {
  return {Weight(static_cast<std::size_t>(datum().rank()), 0), finite_.identity()};
}

AffineElt AffineWeylGroup::translation(const Weight& lambda) const {
  if (lambda.size() != static_cast<std::size_t>(datum().rank()))
    throw InputError("translation " + affhecke::to_string(lambda) + " has the wrong rank");
  return {lambda, finite_.identity()};
}

AffineElt AffineWeylGroup::from_finite(FiniteWeylElt w) const {
  return {Weight(static_cast<std::size_t>(datum().rank()), 0), w};
}

AffineElt AffineWeylGroup::mul(const AffineElt& a, const AffineElt& b) const {
  return {a.translation + finite_.act_coweight(a.finite, b.translation), finite_.mul(a.finite, b.finite)};
}

AffineElt AffineWeylGroup::inv(const AffineElt& a) const {
  const FiniteWeylElt ui = finite_.inverse(a.finite);
  return {-finite_.act_coweight(ui, a.translation), ui};
}

Weight AffineWeylGroup::act(const AffineElt& a, const Weight& lambda) const {
  return a.translation + finite_.act_coweight(a.finite, lambda);
}

int AffineWeylGroup::length(const AffineElt& a) const {
  const auto& d = datum();
  const FiniteWeylElt wi = finite_.inverse(a.finite);
  std::int64_t total = 0;
  for (std::size_t k : d.positive_roots()) {
    const std::int64_t p = pairing(a.translation, d.roots()[k]);
    if (d.is_positive(finite_.act_root(wi, k)))
      total += std::abs(p);
    else
      total += std::abs(p - 1);
  }
  return static_cast<int>(total);
}

int AffineWeylGroup::length_by_hyperplanes(const AffineElt& a) const {
  const auto& d = datum();
  const std::size_t r = static_cast<std::size_t>(d.rank());
  // x(p) = translation + M p with M the matrix of the finite part.
  std::vector<Rational> xp(r);
  const Matrix& m = finite_.matrix(a.finite);
  for (std::size_t i = 0; i < r; ++i) {
    Rational s = a.translation[i];
    for (std::size_t j = 0; j < r; ++j) s += m[i][j] * interior_point_[j];
    xp[i] = s;
  }
  std::int64_t count = 0;
  for (std::size_t k : d.positive_roots()) {
    Rational before = 0, after = 0;
    for (std::size_t i = 0; i < r; ++i) {
      before += interior_point_[i] * d.roots()[k][i];
      after += xp[i] * d.roots()[k][i];
    }
    // Both values avoid the integers, so the separating walls are counted
    // by the difference of floors.
    count += std::abs(floor_rational(after) - floor_rational(before));
  }
  return static_cast<int>(count);
}

bool AffineWeylGroup::in_coxeter_part(const AffineElt& a) const {
  const auto& d = datum();
  if (std::all_of(a.translation.begin(), a.translation.end(), [](auto x) { return x == 0; })) return true;
  auto c = solve_in_span(d.simple_coroots(), a.translation);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

AffineWeylGroup::ReducedWord AffineWeylGroup::reduced_word(const AffineElt& a) const {
  AffineElt x = a;
  int len = length(x);
  std::vector<int> rev;
  while (len > 0) {
    bool found = false;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      AffineElt y = mul(x, gens_[g].elt);
      const int ly = length(y);
      if (ly < len) {
        rev.push_back(static_cast<int>(g));
        x = std::move(y);
        len = ly;
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("reduced_word: element of positive length has no right descent");
  }
  return {x, std::vector<int>(rev.rbegin(), rev.rend())};
}

AffineElt AffineWeylGroup::from_word(const AffineElt& omega, const std::vector<int>& word) const {
  AffineElt x = omega;
  for (int g : word) {
    if (g < 0 || static_cast<std::size_t>(g) >= gens_.size()) throw InputError("generator index out of range");
    x = mul(x, gens_[static_cast<std::size_t>(g)].elt);
  }
  return x;
}

std::pair<AffineElt, AffineElt> AffineWeylGroup::omega_decompose(const AffineElt& a) const {
  auto rw = reduced_word(a);
  AffineElt y = mul(inv(rw.omega), a);
  if (!in_coxeter_part(y)) throw InvariantError("omega_decompose: remainder is not in the Coxeter part");
  return {rw.omega, y};
}

bool AffineWeylGroup::bruhat_leq(const AffineElt& x, const AffineElt& y) const {
  AffineElt cx = x, cy = y;
  int lx = length(cx), ly = length(cy);
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return cx == cy;
    // Lowest-index right descent s of y.
    std::size_t s = gens_.size();
    AffineElt ys;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      ys = mul(cy, gens_[g].elt);
      if (length(ys) < ly) {
        s = g;
        break;
      }
    }
    if (s == gens_.size()) throw InvariantError("bruhat_leq: no right descent");
    AffineElt xs = mul(cx, gens_[s].elt);
    const int lxs = length(xs);
    if (lxs < lx) {
      cx = std::move(xs);
      lx = lxs;
    }
    cy = std::move(ys);
    --ly;
  }
}

bool AffineWeylGroup::is_minimal_coset_rep(const AffineElt& x) const {
  const int lx = length(x);
  for (const auto& g : gens_)
    if (g.kind == SimpleAffineReflection::Kind::Finite && length(mul(g.elt, x)) < lx) return false;
  return true;
}

std::vector<AffineElt> AffineWeylGroup::length_zero_elements(int bound) const {
  std::vector<AffineElt> out;
  for_each_in_box(static_cast<std::size_t>(datum().rank()), bound, [&](const Weight& mu) {
    for (auto w : finite_.elements()) {
      AffineElt x{mu, w};
      if (length(x) == 0) out.push_back(std::move(x));
    }
  });
  std::sort(out.begin(), out.end(), [&](const AffineElt& a, const AffineElt& b) { return output_less(a, b); });
  return out;
}

AffineElt AffineWeylGroup::omega_generator() const {
  const AffineElt id = identity();
  for (int bound = 1; bound <= 4; ++bound) {
    std::vector<AffineElt> cands;
    for (auto& x : length_zero_elements(bound))
      if (!(x == id)) cands.push_back(x);
    if (cands.empty()) continue;
    return *std::min_element(cands.begin(), cands.end(), [](const AffineElt& a, const AffineElt& b) {
      const auto na = l1_norm(a.translation), nb = l1_norm(b.translation);
      if (na != nb) return na < nb;
      if (a.translation != b.translation) return a.translation > b.translation;
      return a.finite < b.finite;
    });
  }
  throw InputError("datum '" + datum().name() + "' has no non-trivial length-zero element of small translation");
}

std::vector<AffineElt> AffineWeylGroup::elements_up_to(int max_length, int norm_bound) const {
  std::vector<AffineElt> out;
  for_each_in_box(static_cast<std::size_t>(datum().rank()), norm_bound, [&](const Weight& mu) {
    for (auto w : finite_.elements()) {
      AffineElt x{mu, w};
      if (length(x) <= max_length) out.push_back(std::move(x));
    }
  });
  std::sort(out.begin(), out.end(), [&](const AffineElt& a, const AffineElt& b) { return output_less(a, b); });
  return out;
}

std::vector<AffineElt> AffineWeylGroup::coxeter_ball(int max_length) const {
  std::set<AffineElt> seen{identity()};
  std::vector<AffineElt> layer{identity()};
  for (int l = 0; l < max_length; ++l) {
    std::vector<AffineElt> next;
    for (const auto& x : layer)
      for (const auto& g : gens_) {
        AffineElt y = mul(x, g.elt);
        if (length(y) == l + 1 && seen.insert(y).second) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  std::vector<AffineElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const AffineElt& a, const AffineElt& b) { return output_less(a, b); });
  return out;
}

bool AffineWeylGroup::output_less(const AffineElt& a, const AffineElt& b) const {
  const int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  if (a.translation != b.translation) return a.translation < b.translation;
  return finite_.word(a.finite) < finite_.word(b.finite);
}

std::string AffineWeylGroup::to_string(const AffineElt& a) const {
  std::ostringstream os;
  os << "t" << affhecke::to_string(a.translation);
  const auto& w = finite_.word(a.finite);
  if (!w.empty()) {
    os << "*";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "." : "") << gens_[static_cast<std::size_t>(w[k])].name;
  }
  return os.str();
}

}  // namespace affhecke
