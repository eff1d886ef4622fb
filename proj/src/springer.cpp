#include "affhecke/springer.hpp"

#include <algorithm>
#include <functional>

#include "affhecke/errors.hpp"

namespace affhecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    for (int j = 0; j < parts_.front(); ++j) {
      int c = 0;
      for (int p : parts_)
        if (p > j) ++c;
      t.push_back(c);
    }
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InputError("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

bool Tableau::is_standard() const {
  std::vector<int> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
      seen.push_back(rows[i][j]);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::int64_t orbit_dim(const Partition& lambda) {
  const std::int64_t n = lambda.size();
  std::int64_t s = 0;
  const Partition t = lambda.transpose();
  for (int c : t.parts()) s += static_cast<std::int64_t>(c) * c;
  return n * n - s;
}

std::int64_t nilcone_dim(int n) { return static_cast<std::int64_t>(n) * n - n; }

std::int64_t orbit_codim(const Partition& lambda) { return nilcone_dim(lambda.size()) - orbit_dim(lambda); }

std::int64_t fiber_dim(const Partition& lambda) {
  const std::int64_t c = orbit_codim(lambda);
  if (c < 0 || c % 2 != 0) throw InvariantError("fiber_dim: codimension " + std::to_string(c) + " is not even");
  return c / 2;
}

bool dominance(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw InputError("dominance: partitions of different sizes");
  std::int64_t sm = 0, sl = 0;
  const std::size_t len = std::max(mu.parts().size(), lambda.parts().size());
  for (std::size_t k = 0; k < len; ++k) {
    if (k < mu.parts().size()) sm += mu.parts()[k];
    if (k < lambda.parts().size()) sl += lambda.parts()[k];
    if (sm > sl) return false;
  }
  return true;
}

std::pair<Tableau, Tableau> rs(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : w) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw InputError("rs: input is not a permutation of 1..n");
    seen[static_cast<std::size_t>(x)] = true;
  }
  Tableau p, q;
  for (int k = 0; k < n; ++k) {
    int x = w[static_cast<std::size_t>(k)];
    std::size_t r = 0;
    while (true) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({k + 1});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q.rows[r].push_back(k + 1);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {p, q};
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const auto& shape = lambda.parts();
  const int n = lambda.size();
  std::vector<Tableau> out;
  Tableau t;
  t.rows.assign(shape.size(), {});
  // Entries 1..n go in order to the end of a row that stays within the
  // shape and strictly shorter than the row above.
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const std::size_t len = t.rows[r].size();
      if (len >= static_cast<std::size_t>(shape[r])) continue;
      if (r > 0 && t.rows[r - 1].size() <= len) continue;
      t.rows[r].push_back(next);
      rec(next + 1);
      t.rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

std::int64_t syt_count(const Partition& lambda) {
  const auto& shape = lambda.parts();
  const int n = lambda.size();
  std::vector<int> filled(shape.size(), 0);
  std::int64_t count = 0;
  std::function<void(int)> rec = [&](int placed) {
    if (placed == n) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] >= shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      ++filled[r];
      rec(placed + 1);
      --filled[r];
    }
  };
  rec(0);
  return count;
}

std::vector<SpringerRow> springer_table(int n) {
  if (n < 1) throw InputError("springer table: n must be positive");
  std::vector<SpringerRow> rows;
  for (const auto& p : partitions_of(n))
    rows.push_back({p, orbit_dim(p), orbit_codim(p), fiber_dim(p), syt_count(p)});
  return rows;
}

bool codim_divides_nilcone(int n) {
  const std::int64_t total = nilcone_dim(n);
  for (const auto& p : partitions_of(n)) {
    const std::int64_t c = orbit_codim(p);
    if (c != 0 && total % c != 0) return false;
  }
  return true;
}

}  // namespace affhecke
