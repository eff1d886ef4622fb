#include "affhecke/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

constexpr std::size_t kMaxRoots = 20000;

// Row-reduces the augmented system [basis | d] over Q.
std::optional<std::vector<Rational>> solve_rational(const std::vector<Weight>& basis, const Weight& d) {
  const std::size_t n = basis.size();
  const std::size_t r = d.size();
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(n + 1));
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t col = 0; col < n; ++col) a[row][col] = basis[col][row];
    a[row][n] = d[row];
  }
  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) return std::nullopt;  // dependent columns
    std::swap(a[p], a[row]);
    for (std::size_t k = 0; k < r; ++k) {
      if (k == row || a[k][col] == 0) continue;
      Rational f = a[k][col] / a[row][col];
      for (std::size_t c = col; c <= n; ++c) a[k][c] -= f * a[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  if (pivot_col_of_row.size() != n) return std::nullopt;
  for (std::size_t k = n; k < r; ++k)
    if (a[k][n] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k][n] / a[k][k];
  return x;
}

bool independent(const std::vector<Weight>& vecs, std::size_t rank) {
  if (vecs.empty()) return true;
  // Independent iff solving for the first vector finds a unique solution.
  return solve_rational(vecs, Weight(rank, 0)).has_value();
}

}  // namespace

std::optional<std::vector<Rational>> solve_in_span(const std::vector<Weight>& basis, const Weight& d) {
  return solve_rational(basis, d);
}

// -------------------------------------------------------------- RootDatum

std::shared_ptr<const RootDatum> RootDatum::create(std::string name, int rank, std::vector<Weight> simple_roots,
                                                   std::vector<Weight> simple_coroots,
                                                   std::optional<Weight> rho_weight, std::string convention) {
  if (rank < 1) throw InputError("root datum: rank must be positive");
  if (simple_roots.size() != simple_coroots.size())
    throw InputError("root datum: number of simple roots and simple coroots differ");
  if (simple_roots.size() > static_cast<std::size_t>(rank))
    throw InputError("root datum: more simple roots than the lattice rank");
  for (const auto* list : {&simple_roots, &simple_coroots})
    for (const auto& v : *list)
      if (v.size() != static_cast<std::size_t>(rank))
        throw InputError("root datum: vector " + to_string(v) + " does not have length " + std::to_string(rank));
  if (rho_weight && rho_weight->size() != static_cast<std::size_t>(rank))
    throw InputError("root datum: rho_weight has the wrong length");
  const std::size_t rk = static_cast<std::size_t>(rank);
  if (!independent(simple_roots, rk)) throw InputError("root datum: simple roots are linearly dependent");
  if (!independent(simple_coroots, rk)) throw InputError("root datum: simple coroots are linearly dependent");

  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->name_ = std::move(name);
  d->convention_ = std::move(convention);
  d->rank_ = rank;
  d->simple_roots_ = std::move(simple_roots);
  d->simple_coroots_ = std::move(simple_coroots);
  d->rho_weight_ = std::move(rho_weight);

  const std::size_t n = d->simple_roots_.size();
  d->cartan_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d->cartan_[i][j] = pairing(d->simple_coroots_[i], d->simple_roots_[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (d->cartan_[i][i] != 2) throw InputError("root datum: <alpha_i^vee, alpha_i> != 2 for i = " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d->cartan_[i][j] > 0) throw InputError("root datum: positive off-diagonal Cartan entry");
      if ((d->cartan_[i][j] == 0) != (d->cartan_[j][i] == 0))
        throw InputError("root datum: Cartan matrix zero pattern is not symmetric");
    }
  }

  // Close the simple roots under simple reflections, tracking coordinates of
  // each root in the simple roots and of its coroot in the simple coroots.
  std::map<Weight, std::size_t> seen;
  std::vector<Weight> rcoords, ccoords;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Weight e(n, 0);
    e[i] = 1;
    seen.emplace(e, rcoords.size());
    queue.push_back(rcoords.size());
    rcoords.push_back(e);
    ccoords.push_back(e);
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t pr = 0, pc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        pr += rcoords[k][i] * d->cartan_[j][i];
        pc += ccoords[k][i] * d->cartan_[i][j];
      }
      Weight nr = rcoords[k], nc = ccoords[k];
      nr[j] -= pr;
      nc[j] -= pc;
      if (seen.count(nr)) continue;
      if (rcoords.size() >= kMaxRoots) throw InputError("root datum: root system is not of finite type");
      seen.emplace(nr, rcoords.size());
      queue.push_back(rcoords.size());
      rcoords.push_back(std::move(nr));
      ccoords.push_back(std::move(nc));
    }
  }

  for (std::size_t k = 0; k < rcoords.size(); ++k) {
    Weight root(rk, 0), coroot(rk, 0);
    for (std::size_t i = 0; i < n; ++i) {
      root = root + rcoords[k][i] * d->simple_roots_[i];
      coroot = coroot + ccoords[k][i] * d->simple_coroots_[i];
    }
    const bool pos = std::all_of(rcoords[k].begin(), rcoords[k].end(), [](auto c) { return c >= 0; });
    const bool neg = std::all_of(rcoords[k].begin(), rcoords[k].end(), [](auto c) { return c <= 0; });
    if (!pos && !neg) throw InputError("root datum: a root is neither positive nor negative");
    if (pairing(coroot, root) != 2) throw InvariantError("root datum: root/coroot pairing is not 2");
    d->roots_.push_back(std::move(root));
    d->coroots_.push_back(std::move(coroot));
    d->root_coords_.push_back(rcoords[k]);
    d->positive_.push_back(pos);
    if (pos) d->positive_list_.push_back(k);
  }

  if (d->rho_weight_) {
    for (std::size_t i = 0; i < n; ++i)
      if (pairing(d->simple_coroots_[i], *d->rho_weight_) != 1)
        throw InputError("root datum: <alpha_i^vee, rho_weight> != 1 for i = " + std::to_string(i));
  }

  // Dynkin components.
  std::vector<int> comp(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    const int c = static_cast<int>(d->components_.size());
    d->components_.emplace_back();
    std::vector<std::size_t> stack{i};
    comp[i] = c;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      d->components_[c].push_back(static_cast<int>(a));
      for (std::size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && d->cartan_[a][b] != 0) comp[b] = c, stack.push_back(b);
    }
    std::sort(d->components_[c].begin(), d->components_[c].end());
  }
  for (const auto& members : d->components_) {
    std::size_t best = 0;
    int best_h = -1;
    for (std::size_t k : d->positive_list_) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (d->root_coords_[k][i] != 0 && comp[i] != comp[static_cast<std::size_t>(members.front())]) inside = false;
      if (inside && d->height(k) > best_h) best = k, best_h = d->height(k);
    }
    d->highest_roots_.push_back(best);
  }
  return d;
}

int RootDatum::height(std::size_t root) const {
  return static_cast<int>(std::accumulate(root_coords_[root].begin(), root_coords_[root].end(), std::int64_t{0}));
}

int RootDatum::root_index(const Weight& alpha) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == alpha) return static_cast<int>(k);
  return -1;
}

std::shared_ptr<const RootDatum> RootDatum::dual() const {
  return create(name_ + "^vee", rank_, simple_coroots_, simple_roots_, std::nullopt,
                "dual of " + name_ + ": X and X^vee exchanged");
}

Weight RootDatum::two_rho_vee() const {
  Weight s(static_cast<std::size_t>(rank_), 0);
  for (std::size_t k : positive_list_) s = s + coroots_[k];
  return s;
}

Weight reflect(const RootDatum& datum, int i, const Weight& lambda) {
  if (i < 0 || i >= datum.semisimple_rank()) throw InputError("reflect: simple index out of range");
  const auto& a = datum.simple_roots()[static_cast<std::size_t>(i)];
  const auto& av = datum.simple_coroots()[static_cast<std::size_t>(i)];
  return lambda - pairing(lambda, a) * av;
}

Weight reflect_weight(const RootDatum& datum, int i, const Weight& mu) {
  if (i < 0 || i >= datum.semisimple_rank()) throw InputError("reflect_weight: simple index out of range");
  const auto& a = datum.simple_roots()[static_cast<std::size_t>(i)];
  const auto& av = datum.simple_coroots()[static_cast<std::size_t>(i)];
  return mu - pairing(av, mu) * a;
}

// -------------------------------------------------------------- WeylGroup

struct WeylGroup::Index {
  std::map<Matrix, std::uint32_t> by_matrix;
};

namespace {

Matrix identity_matrix(std::size_t r) {
  Matrix m(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t r = a.size();
  Matrix c(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix reflection_matrix(const Weight& root, const Weight& coroot) {
  const std::size_t r = root.size();
  Matrix m = identity_matrix(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] -= coroot[i] * root[j];
  return m;
}

}  // namespace

WeylGroup::WeylGroup(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)), index_(std::make_shared<Index>()) {
  const auto& d = *datum_;
  const std::size_t r = static_cast<std::size_t>(d.rank());
  const std::size_t n = static_cast<std::size_t>(d.semisimple_rank());
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(reflection_matrix(d.simple_roots()[i], d.simple_coroots()[i]));

  matrices_.push_back(identity_matrix(r));
  words_.emplace_back();
  index_->by_matrix.emplace(matrices_[0], 0);
  for (std::size_t k = 0; k < matrices_.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m = matmul(matrices_[k], gens[i]);
      if (index_->by_matrix.count(m)) continue;
      if (matrices_.size() >= kMaxOrder) throw InputError("Weyl group enumeration exceeded the element cap");
      index_->by_matrix.emplace(m, static_cast<std::uint32_t>(matrices_.size()));
      std::vector<int> w = words_[k];
      w.push_back(static_cast<int>(i));
      matrices_.push_back(std::move(m));
      words_.push_back(std::move(w));
    }
  }
  for (std::size_t i = 0; i < n; ++i) simple_ids_.push_back(index_->by_matrix.at(gens[i]));

  const std::size_t order = matrices_.size();
  if (order <= 1500) {
    mul_table_.assign(order, std::vector<std::uint32_t>(order));
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        mul_table_[a][b] = index_->by_matrix.at(matmul(matrices_[a], matrices_[b]));
  }
  inverse_.resize(order);
  for (std::size_t k = 0; k < order; ++k) {
    std::vector<int> rev(words_[k].rbegin(), words_[k].rend());
    inverse_[k] = from_word(rev).id;
  }
  root_perm_.assign(order, std::vector<std::size_t>(d.roots().size()));
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t a = 0; a < d.roots().size(); ++a) {
      const int idx = d.root_index(act_weight({static_cast<std::uint32_t>(k)}, d.roots()[a]));
      if (idx < 0) throw InvariantError("Weyl group element does not permute the roots");
      root_perm_[k][a] = static_cast<std::size_t>(idx);
    }
  for (std::size_t k = 0; k < order; ++k)
    if (words_[k].size() > words_[longest_].size()) longest_ = static_cast<std::uint32_t>(k);
}

std::vector<FiniteWeylElt> WeylGroup::elements() const {
  std::vector<FiniteWeylElt> out;
  for (std::uint32_t k = 0; k < matrices_.size(); ++k) out.push_back({k});
  return out;
}

FiniteWeylElt WeylGroup::mul(FiniteWeylElt a, FiniteWeylElt b) const {
  if (!mul_table_.empty()) return {mul_table_[a.id][b.id]};
  return {index_->by_matrix.at(matmul(matrices_[a.id], matrices_[b.id]))};
}

FiniteWeylElt WeylGroup::from_word(const std::vector<int>& word) const {
  Matrix m = identity_matrix(static_cast<std::size_t>(datum_->rank()));
  for (int i : word) {
    if (i < 0 || i >= datum_->semisimple_rank()) throw InputError("finite Weyl word: simple index out of range");
    m = matmul(m, matrices_[simple_ids_[static_cast<std::size_t>(i)]]);
  }
  return {index_->by_matrix.at(m)};
}

FiniteWeylElt WeylGroup::from_matrix(const Matrix& m) const {
  auto it = index_->by_matrix.find(m);
  if (it == index_->by_matrix.end()) throw InputError("matrix is not an element of the finite Weyl group");
  return {it->second};
}

Weight WeylGroup::act_coweight(FiniteWeylElt w, const Weight& lambda) const {
  const Matrix& m = matrices_[w.id];
  Weight out(lambda.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * lambda[j];
  return out;
}

Weight WeylGroup::act_weight(FiniteWeylElt w, const Weight& mu) const {
  // The contragredient action: transpose of the inverse matrix.
  const Matrix& m = matrices_[inverse_[w.id]];
  Weight out(mu.size(), 0);
  for (std::size_t c = 0; c < m.size(); ++c)
    for (std::size_t r = 0; r < m.size(); ++r) out[c] += m[r][c] * mu[r];
  return out;
}

FiniteWeylElt WeylGroup::reflection(std::size_t root) const {
  return from_matrix(reflection_matrix(datum_->roots()[root], datum_->coroots()[root]));
}

int WeylGroup::inversions(FiniteWeylElt w) const {
  int count = 0;
  for (std::size_t k : datum_->positive_roots())
    if (!datum_->is_positive(root_perm_[w.id][k])) ++count;
  return count;
}

std::vector<Weight> WeylGroup::coweight_orbit(const Weight& lambda) const {
  std::set<Weight> orbit;
  for (std::uint32_t k = 0; k < matrices_.size(); ++k) orbit.insert(act_coweight({k}, lambda));
  return {orbit.begin(), orbit.end()};
}

std::vector<FiniteWeylElt> enumerate_weyl(const WeylGroup& group) { return group.elements(); }

bool is_dominant(const RootDatum& datum, const Weight& lambda, Lattice lattice) {
  const auto& dual = lattice == Lattice::Coweight ? datum.simple_roots() : datum.simple_coroots();
  return std::all_of(dual.begin(), dual.end(), [&](const Weight& a) { return pairing(a, lambda) >= 0; });
}

GroupAlgebraElt weyl_character(const WeylGroup& group, const Weight& lambda) {
  const auto& d = group.datum();
  if (lambda.size() != static_cast<std::size_t>(d.rank())) throw InputError("weyl_character: weight has the wrong rank");
  if (!is_dominant(d, lambda, Lattice::Weight))
    throw InputError("weyl_character: highest weight " + to_string(lambda) + " is not dominant");

  // With an integral rho the alternants live in Z[X]. Otherwise work with
  // doubled exponents, where 2 rho = sum of positive roots is integral.
  std::int64_t scale = 1;
  Weight rho;
  if (d.rho_weight()) {
    rho = *d.rho_weight();
  } else {
    scale = 2;
    rho.assign(lambda.size(), 0);
    for (std::size_t k : d.positive_roots()) rho = rho + d.roots()[k];
  }
  const Weight shifted = scale * lambda + rho;
  GroupAlgebraElt num, den;
  for (auto w : group.elements()) {
    const LaurentPoly sign = group.length(w) % 2 == 0 ? 1 : -1;
    num.add_term(group.act_weight(w, shifted), sign);
    den.add_term(group.act_weight(w, rho), sign);
  }
  GroupAlgebraElt q;
  try {
    q = ga_exact_divide(num, den);
  } catch (const InexactDivision& e) {
    throw InexactDivision(std::string("weyl_character: alternant ratio is not exact (bad rho_weight?): ") + e.what());
  }
  if (scale == 1) return q;
  GroupAlgebraElt out;
  for (const auto& [w, c] : q.terms()) {
    Weight half(w);
    for (auto& x : half) {
      if (x % 2 != 0) throw InvariantError("weyl_character: odd exponent in doubled coordinates");
      x /= 2;
    }
    out.add_term(half, c);
  }
  return out;
}

bool dominance_leq(const RootDatum& datum, const Weight& mu, const Weight& lambda, Lattice lattice) {
  const auto& basis = lattice == Lattice::Coweight ? datum.simple_coroots() : datum.simple_roots();
  const Weight diff = lambda - mu;
  if (std::all_of(diff.begin(), diff.end(), [](auto x) { return x == 0; })) return true;
  auto coeffs = solve_in_span(basis, diff);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(),
                     [](const Rational& c) { return c >= 0 && boost::multiprecision::denominator(c) == 1; });
}

}  // namespace affhecke
