#include "osculum/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "osculum/errors.hpp"
#include "osculum/random.hpp"

namespace osculum {

namespace {

// Row-major integer copy of a scalar matrix, each row cleared of denominators.
struct IntegerMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> a;
  Rational scale = 1;  // det(original) = det(a) / scale
};

IntegerMatrix to_integer_rows(const ExactMatrix& m) {
  IntegerMatrix out{m.rows(), m.cols(), {}, 1};
  auto s = m.scalars();
  out.a.reserve(s.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s[i * m.cols() + j].get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = s[i * m.cols() + j];
      out.a.push_back(x.get_num() * (lcm / x.get_den()));
    }
    out.scale *= lcm;
  }
  return out;
}

struct BareissResult {
  RankProfile profile;
  int sign = 1;
  Integer last_pivot = 1;
};

// Fraction-free elimination with row pivoting; zero columns are skipped, so
// after each step the trailing entries are minors of the input and every
// division is exact.
BareissResult bareiss(IntegerMatrix& m) {
  BareissResult r;
  std::vector<std::size_t> perm(m.rows);
  std::iota(perm.begin(), perm.end(), 0);
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m.a[i * m.cols + j]; };
  Integer prev = 1, t;
  std::size_t k = 0;
  for (std::size_t col = 0; col < m.cols && k < m.rows; ++col) {
    std::size_t best = m.rows;
    for (std::size_t i = k; i < m.rows; ++i) {
      if (at(i, col) == 0) continue;
      if (best == m.rows || mpz_sizeinbase(at(i, col).get_mpz_t(), 2) <
                                mpz_sizeinbase(at(best, col).get_mpz_t(), 2))
        best = i;
    }
    if (best == m.rows) continue;
    if (best != k) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(at(best, j), at(k, j));
      std::swap(perm[best], perm[k]);
      r.sign = -r.sign;
    }
    const Integer& pivot = at(k, col);
    for (std::size_t i = k + 1; i < m.rows; ++i) {
      const Integer factor = at(i, col);
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        t = pivot * at(i, j);
        t -= factor * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = pivot;
    r.profile.rows.push_back(perm[k]);
    r.profile.cols.push_back(col);
    ++k;
  }
  r.profile.rank = k;
  r.last_pivot = prev;
  return r;
}

void require_scalar(const ExactMatrix& m, const char* what) {
  if (!m.is_scalar()) throw DegenerateInput(std::string(what) + " requires a scalar matrix");
}

}  // namespace

RankProfile rank_profile(const ExactMatrix& m) {
  require_scalar(m, "rank_profile");
  auto im = to_integer_rows(m);
  auto r = bareiss(im);
  auto& p = r.profile;
  // Report the witness minor with rows in increasing order.
  std::vector<std::size_t> order(p.rank);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return p.rows[x] < p.rows[y]; });
  RankProfile sorted{p.rank, {}, p.cols};
  for (auto o : order) sorted.rows.push_back(p.rows[o]);
  return sorted;
}

std::size_t rank_exact(const ExactMatrix& m) {
  require_scalar(m, "rank_exact");
  auto im = to_integer_rows(m);
  return bareiss(im).profile.rank;
}

Rational scalar_determinant(const ExactMatrix& m) {
  require_scalar(m, "scalar_determinant");
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto im = to_integer_rows(m);
  auto r = bareiss(im);
  if (r.profile.rank < m.rows()) return 0;
  Rational det(r.last_pivot * r.sign);
  return det / im.scale;
}

MPoly determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.is_scalar()) return MPoly::constant(0, scalar_determinant(m));
  const std::size_t n = m.rows();
  const std::size_t vars = m.variable_count();
  std::vector<MPoly> a(m.polys().begin(), m.polys().end());
  auto at = [&](std::size_t i, std::size_t j) -> MPoly& { return a[i * n + j]; };
  MPoly prev = MPoly::constant(vars, 1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      if (best == n || at(i, k).term_count() < at(best, k).term_count()) best = i;
    }
    if (best == n) return MPoly(vars);
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(best, j), at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        at(i, j) = divide_exact(num, prev);
      }
    }
    prev = at(k, k);
  }
  return sign < 0 ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

RowEchelon reduced_row_echelon(const ExactMatrix& m) {
  require_scalar(m, "reduced_row_echelon");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) a[i] = m.row(i);
  RowEchelon out;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[k]);
    const Rational inv = 1 / a[k][col];
    for (std::size_t j = col; j < cols; ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
    }
    out.pivots.push_back(col);
    ++k;
  }
  a.resize(k);
  out.rows = std::move(a);
  return out;
}

KernelBasis kernel_basis(const ExactMatrix& m) {
  require_scalar(m, "kernel_basis");
  const std::size_t cols = m.cols();
  KernelBasis kb;
  kb.dimension = cols;
  const auto e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return kb;
  auto normal = reduced_row_echelon(ExactMatrix::from_rows(raw));
  kb.vectors = std::move(normal.rows);
  kb.pivots = std::move(normal.pivots);
  return kb;
}

KernelBasis left_kernel_basis(const ExactMatrix& m) { return kernel_basis(m.transpose()); }

std::optional<std::vector<Rational>> in_span(std::span<const std::vector<Rational>> vectors,
                                             std::span<const Rational> target) {
  const std::size_t length = target.size();
  for (const auto& v : vectors)
    if (v.size() != length) throw DimensionMismatch("span vectors and target differ in length");
  std::vector<std::vector<Rational>> columns(vectors.begin(), vectors.end());
  columns.emplace_back(target.begin(), target.end());
  const auto e = reduced_row_echelon(ExactMatrix::from_columns(columns, length));
  const std::size_t last = vectors.size();
  std::vector<Rational> coeffs(vectors.size(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == last) return std::nullopt;
    coeffs[e.pivots[i]] = e.rows[i][last];
  }
  return coeffs;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
  if (a.is_scalar() && b.is_scalar()) {
    std::vector<Rational> v(r * c);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l)
            v[(i * b.rows() + k) * c + j * b.cols() + l] = a.at(i, j) * b.at(k, l);
    return ExactMatrix(r, c, std::move(v));
  }
  if (!a.is_scalar() && !b.is_scalar() && a.variable_count() != b.variable_count())
    throw DimensionMismatch("kron of matrices over different rings");
  const std::size_t n = std::max(a.variable_count(), b.variable_count());
  std::vector<MPoly> v(r * c, MPoly(n));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const MPoly x = a.entry(i, j, n);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          v[(i * b.rows() + k) * c + j * b.cols() + l] = x * b.entry(k, l, n);
    }
  return ExactMatrix(r, c, std::move(v));
}

std::string to_string(RankLevel level) {
  return level == RankLevel::Certified ? "certified" : "sampled-only";
}

namespace {

// Degree of entry (i, j) in each variable; -1 marks a zero entry.
struct DegreeTable {
  std::size_t rows, cols, vars;
  std::vector<int> d;  // [v][i][j]
  int operator()(std::size_t v, std::size_t i, std::size_t j) const {
    return d[(v * rows + i) * cols + j];
  }
};

DegreeTable degree_table(const ExactMatrix& m) {
  DegreeTable t{m.rows(), m.cols(), m.variable_count(), {}};
  t.d.assign(t.vars * t.rows * t.cols, -1);
  auto p = m.polys();
  for (std::size_t i = 0; i < t.rows; ++i)
    for (std::size_t j = 0; j < t.cols; ++j)
      for (const auto& term : p[i * t.cols + j].terms())
        for (std::size_t v = 0; v < t.vars; ++v) {
          int& slot = t.d[(v * t.rows + i) * t.cols + j];
          slot = std::max<int>(slot, term.monomial[v]);
        }
  return t;
}

int group_degree(const MPoly::Term& t, std::span<const std::size_t> group) {
  int d = 0;
  for (auto v : group) d += t.monomial[v];
  return d;
}

// Every minor is homogeneous in `group` when each column (or each row) has
// entries homogeneous in the group with one common degree.
bool minors_homogeneous_in(const ExactMatrix& m, std::span<const std::size_t> group) {
  auto p = m.polys();
  auto lines_ok = [&](bool by_column) {
    const std::size_t outer = by_column ? m.cols() : m.rows();
    const std::size_t inner = by_column ? m.rows() : m.cols();
    for (std::size_t a = 0; a < outer; ++a) {
      int common = -1;
      for (std::size_t b = 0; b < inner; ++b) {
        const MPoly& e = by_column ? p[b * m.cols() + a] : p[a * m.cols() + b];
        for (const auto& t : e.terms()) {
          const int d = group_degree(t, group);
          if (common < 0) common = d;
          if (d != common) return false;
        }
      }
    }
    return true;
  };
  return lines_ok(true) || lines_ok(false);
}

std::vector<Rational> random_point(Rng& rng, std::size_t n, long bound) {
  std::vector<Rational> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(rng.uniform(-bound, bound));
  return p;
}

// 0, 1, -1, 2, -2, ...
Rational grid_value(std::size_t k) {
  if (k == 0) return 0;
  const long h = static_cast<long>((k + 1) / 2);
  return k % 2 ? Rational(h) : Rational(-h);
}

}  // namespace

GenericRank generic_rank(const ExactMatrix& m, const GenericRankOptions& options) {
  GenericRank result;
  if (m.is_scalar()) {
    auto prof = rank_profile(m);
    result.rank = prof.rank;
    result.level = RankLevel::Certified;
    result.witness_rows = prof.rows;
    result.witness_cols = prof.cols;
    result.note = "constant matrix";
    return result;
  }
  if (options.trials == 0) throw DegenerateInput("generic_rank needs at least one trial");
  const std::size_t vars = m.variable_count();
  Rng rng(options.seed);
  RankProfile best;
  bool have = false;
  for (unsigned t = 0; t < options.trials; ++t) {
    auto point = random_point(rng, vars, options.sample_bound);
    auto prof = rank_profile(m.evaluate(point));
    if (!have || prof.rank > best.rank) {
      best = prof;
      result.witness_point = std::move(point);
      have = true;
    }
  }
  auto accept = [&](RankLevel level, std::string note) {
    result.rank = best.rank;
    result.level = level;
    result.witness_rows = best.rows;
    result.witness_cols = best.cols;
    result.note = std::move(note);
    return result;
  };
  if (!options.certify) return accept(RankLevel::SampledOnly, "max over random substitutions");

  // Dehomogenize along verified groups: one variable of each is pinned to 1.
  std::vector<bool> pinned(vars, false);
  for (const auto& g : options.homogeneous_groups) {
    if (g.empty()) continue;
    for (auto v : g)
      if (v >= vars) throw DimensionMismatch("homogeneous group variable out of range");
    if (minors_homogeneous_in(m, g)) pinned[g.front()] = true;
  }
  const auto deg = degree_table(m);

  for (;;) {
    const std::size_t r = best.rank;
    if (r == std::min(m.rows(), m.cols()))
      return accept(RankLevel::Certified, "witness minor is maximal");
    std::vector<std::size_t> other_rows, other_cols;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (std::find(best.rows.begin(), best.rows.end(), i) == best.rows.end()) other_rows.push_back(i);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (std::find(best.cols.begin(), best.cols.end(), j) == best.cols.end()) other_cols.push_back(j);

    // Per-variable degree bound valid for every bordered minor.
    std::vector<int> bound(vars, 0);
    for (std::size_t v = 0; v < vars; ++v) {
      if (pinned[v]) continue;
      std::vector<int> row_max_j(m.rows(), 0), col_max_i(m.cols(), 0);
      for (auto i : best.rows) {
        for (auto j : best.cols) row_max_j[i] = std::max(row_max_j[i], deg(v, i, j));
      }
      for (auto i : other_rows)
        for (auto j : best.cols) row_max_j[i] = std::max(row_max_j[i], deg(v, i, j));
      for (auto j : best.cols)
        for (auto i : best.rows) col_max_i[j] = std::max(col_max_i[j], deg(v, i, j));
      for (auto j : other_cols)
        for (auto i : best.rows) col_max_i[j] = std::max(col_max_i[j], deg(v, i, j));
      int base_rows = 0, base_cols = 0;
      for (auto i : best.rows) base_rows += row_max_j[i];
      for (auto j : best.cols) base_cols += col_max_i[j];
      for (auto i : other_rows)
        for (auto j : other_cols) {
          int rows_sum = base_rows + std::max({row_max_j[i], deg(v, i, j), 0});
          for (auto ii : best.rows) rows_sum += std::max(0, deg(v, ii, j) - row_max_j[ii]);
          int cols_sum = base_cols + std::max({col_max_i[j], deg(v, i, j), 0});
          for (auto jj : best.cols) cols_sum += std::max(0, deg(v, i, jj) - col_max_i[jj]);
          bound[v] = std::max(bound[v], std::min(rows_sum, cols_sum));
        }
    }
    double grid = 1;
    for (std::size_t v = 0; v < vars; ++v)
      if (!pinned[v]) grid *= bound[v] + 1;
    if (grid > static_cast<double>(options.grid_budget))
      return accept(RankLevel::SampledOnly,
                    "certification grid of " + std::to_string(static_cast<long double>(grid)) +
                        " points exceeds budget");

    std::vector<std::size_t> counter(vars, 0);
    std::vector<Rational> point(vars);
    bool upgraded = false;
    std::size_t visited = 0;
    for (bool done = false; !done && !upgraded;) {
      for (std::size_t v = 0; v < vars; ++v) point[v] = pinned[v] ? Rational(1) : grid_value(counter[v]);
      ++visited;
      const auto s = m.evaluate(point);
      const bool witness_alive = scalar_determinant(s.submatrix(best.rows, best.cols)) != 0;
      bool higher = false;
      if (witness_alive) {
        higher = rank_exact(s) > r;
      } else {
        std::vector<std::size_t> rr(best.rows), cc(best.cols);
        rr.push_back(0);
        cc.push_back(0);
        for (std::size_t a = 0; a < other_rows.size() && !higher; ++a)
          for (std::size_t b = 0; b < other_cols.size() && !higher; ++b) {
            rr.back() = other_rows[a];
            cc.back() = other_cols[b];
            higher = scalar_determinant(s.submatrix(rr, cc)) != 0;
          }
      }
      if (higher) {
        best = rank_profile(s);
        result.witness_point = point;
        upgraded = true;
        break;
      }
      std::size_t v = 0;
      for (; v < vars; ++v) {
        if (pinned[v]) continue;
        if (++counter[v] <= static_cast<std::size_t>(bound[v])) break;
        counter[v] = 0;
      }
      done = v == vars;
    }
    result.grid_points += visited;
    if (!upgraded)
      return accept(RankLevel::Certified, "all bordered minors vanish on a degree-bounded grid");
  }
}

}  // namespace osculum
