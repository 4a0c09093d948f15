#include "osculum/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "osculum/errors.hpp"

namespace osculum {

namespace {

void check_size(std::size_t rows, std::size_t cols, std::size_t n) {
  if (rows * cols != n) throw DimensionMismatch("matrix entry count does not match its shape");
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(std::vector<Rational>(rows * cols)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols) {
  check_size(rows, cols, entries.size());
  entries_ = std::move(entries);
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<MPoly> entries)
    : rows_(rows), cols_(cols) {
  check_size(rows, cols, entries.size());
  if (!entries.empty()) {
    variable_count_ = entries[0].variable_count();
    for (const auto& e : entries)
      if (e.variable_count() != variable_count_)
        throw DimensionMismatch("matrix entries live in different rings");
  }
  if (std::all_of(entries.begin(), entries.end(), [](const MPoly& p) { return p.is_constant(); })) {
    std::vector<Rational> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(e.constant_value());
    variable_count_ = 0;
    entries_ = std::move(values);
  } else {
    entries_ = std::move(entries);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  auto& v = std::get<std::vector<Rational>>(m.entries_);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Rational> values;
  values.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged rows");
    values.insert(values.end(), row.begin(), row.end());
  }
  return ExactMatrix(r, c, std::move(values));
}

ExactMatrix ExactMatrix::from_integers(std::size_t rows, std::size_t cols, std::span<const long> values) {
  check_size(rows, cols, values.size());
  return ExactMatrix(rows, cols, std::vector<Rational>(values.begin(), values.end()));
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<Rational>>& columns,
                                      std::size_t length) {
  ExactMatrix m(length, columns.size());
  auto& v = std::get<std::vector<Rational>>(m.entries_);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != length) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < length; ++i) v[i * columns.size() + j] = columns[j][i];
  }
  return m;
}

const Rational& ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (!is_scalar()) throw DegenerateInput("scalar access to a polynomial matrix");
  return std::get<std::vector<Rational>>(entries_).at(i * cols_ + j);
}

const MPoly& ExactMatrix::poly_at(std::size_t i, std::size_t j) const {
  if (is_scalar()) throw DegenerateInput("polynomial access to a scalar matrix");
  return std::get<std::vector<MPoly>>(entries_).at(i * cols_ + j);
}

MPoly ExactMatrix::entry(std::size_t i, std::size_t j, std::size_t variable_count) const {
  if (is_scalar()) return MPoly::constant(variable_count, at(i, j));
  const MPoly& p = poly_at(i, j);
  if (p.variable_count() != variable_count) throw DimensionMismatch("entry ring mismatch");
  return p;
}

std::span<const Rational> ExactMatrix::scalars() const {
  if (!is_scalar()) throw DegenerateInput("matrix has polynomial entries");
  return std::get<std::vector<Rational>>(entries_);
}

std::span<const MPoly> ExactMatrix::polys() const {
  if (is_scalar()) throw DegenerateInput("matrix has scalar entries");
  return std::get<std::vector<MPoly>>(entries_);
}

std::vector<Rational> ExactMatrix::row(std::size_t i) const {
  auto s = scalars();
  return {s.begin() + i * cols_, s.begin() + (i + 1) * cols_};
}

std::vector<Rational> ExactMatrix::column(std::size_t j) const {
  auto s = scalars();
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(s[i * cols_ + j]);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  if (is_scalar()) {
    auto s = scalars();
    std::vector<Rational> v(s.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) v[j * rows_ + i] = s[i * cols_ + j];
    return ExactMatrix(cols_, rows_, std::move(v));
  }
  auto p = polys();
  std::vector<MPoly> v(p.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) v[j * rows_ + i] = p[i * cols_ + j];
  return ExactMatrix(cols_, rows_, std::move(v));
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  for (auto i : rows)
    if (i >= rows_) throw DimensionMismatch("row index out of range");
  for (auto j : cols)
    if (j >= cols_) throw DimensionMismatch("column index out of range");
  if (is_scalar()) {
    auto s = scalars();
    std::vector<Rational> v;
    v.reserve(rows.size() * cols.size());
    for (auto i : rows)
      for (auto j : cols) v.push_back(s[i * cols_ + j]);
    return ExactMatrix(rows.size(), cols.size(), std::move(v));
  }
  auto p = polys();
  std::vector<MPoly> v;
  v.reserve(rows.size() * cols.size());
  for (auto i : rows)
    for (auto j : cols) v.push_back(p[i * cols_ + j]);
  if (v.empty()) return ExactMatrix(rows.size(), cols.size());
  return ExactMatrix(rows.size(), cols.size(), std::move(v));
}

namespace {

std::size_t common_ring(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_scalar() && !b.is_scalar() && a.variable_count() != b.variable_count())
    throw DimensionMismatch("matrices live in different polynomial rings");
  return std::max(a.variable_count(), b.variable_count());
}

}  // namespace

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hconcat row mismatch");
  const std::size_t c = cols_ + right.cols_;
  if (is_scalar() && right.is_scalar()) {
    std::vector<Rational> v;
    v.reserve(rows_ * c);
    for (std::size_t i = 0; i < rows_; ++i) {
      auto a = row(i), b = right.row(i);
      v.insert(v.end(), a.begin(), a.end());
      v.insert(v.end(), b.begin(), b.end());
    }
    return ExactMatrix(rows_, c, std::move(v));
  }
  const std::size_t n = common_ring(*this, right);
  std::vector<MPoly> v;
  v.reserve(rows_ * c);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(entry(i, j, n));
    for (std::size_t j = 0; j < right.cols_; ++j) v.push_back(right.entry(i, j, n));
  }
  return ExactMatrix(rows_, c, std::move(v));
}

ExactMatrix ExactMatrix::vconcat(const ExactMatrix& below) const {
  return transpose().hconcat(below.transpose()).transpose();
}

ExactMatrix ExactMatrix::evaluate(std::span<const Rational> point) const {
  if (is_scalar()) return *this;
  if (point.size() != variable_count_) throw DimensionMismatch("evaluation point length mismatch");
  auto p = polys();
  std::vector<int> max_deg(variable_count_, 0);
  for (const auto& e : p)
    for (const auto& t : e.terms())
      for (std::size_t v = 0; v < variable_count_; ++v) max_deg[v] = std::max<int>(max_deg[v], t.monomial[v]);
  std::vector<std::vector<Rational>> powers(variable_count_);
  for (std::size_t v = 0; v < variable_count_; ++v) {
    powers[v].emplace_back(1);
    for (int e = 1; e <= max_deg[v]; ++e) powers[v].push_back(powers[v].back() * point[v]);
  }
  std::vector<Rational> values(p.size());
  Rational term;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (const auto& t : p[k].terms()) {
      term = t.coefficient;
      for (std::size_t v = 0; v < variable_count_; ++v)
        if (t.monomial[v]) term *= powers[v][t.monomial[v]];
      values[k] += term;
    }
  }
  return ExactMatrix(rows_, cols_, std::move(values));
}

ExactMatrix ExactMatrix::scaled(const Rational& s) const {
  if (is_scalar()) {
    std::vector<Rational> v(scalars().begin(), scalars().end());
    for (auto& x : v) x *= s;
    return ExactMatrix(rows_, cols_, std::move(v));
  }
  std::vector<MPoly> v(polys().begin(), polys().end());
  for (auto& x : v) x *= s;
  return ExactMatrix(rows_, cols_, std::move(v));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (a.is_scalar() && b.is_scalar()) {
    auto x = a.scalars(), y = b.scalars();
    std::vector<Rational> v(a.rows_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = x[i * a.cols_ + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) v[i * b.cols_ + j] += aik * y[k * b.cols_ + j];
      }
    return ExactMatrix(a.rows_, b.cols_, std::move(v));
  }
  const std::size_t n = common_ring(a, b);
  std::vector<MPoly> v;
  v.reserve(a.rows_ * b.cols_);
  std::vector<MPoly> row(a.cols_), col(a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        row[k] = a.entry(i, k, n);
        col[k] = b.entry(k, j, n);
      }
      v.push_back(a.cols_ ? dot(row, col) : MPoly(n));
    }
  return ExactMatrix(a.rows_, b.cols_, std::move(v));
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  if (a.is_scalar() && b.is_scalar()) {
    std::vector<Rational> v(a.scalars().begin(), a.scalars().end());
    auto y = b.scalars();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += y[k];
    return ExactMatrix(a.rows_, a.cols_, std::move(v));
  }
  const std::size_t n = common_ring(a, b);
  std::vector<MPoly> v;
  v.reserve(a.rows_ * a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) v.push_back(a.entry(i, j, n) + b.entry(i, j, n));
  return ExactMatrix(a.rows_, a.cols_, std::move(v));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.is_scalar() != b.is_scalar()) return false;
  if (a.is_scalar()) return std::equal(a.scalars().begin(), a.scalars().end(), b.scalars().begin());
  if (a.variable_count_ != b.variable_count_) return false;
  return std::equal(a.polys().begin(), a.polys().end(), b.polys().begin());
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (is_scalar() ? at(i, j).get_str() : poly_at(i, j).to_string());
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace osculum
