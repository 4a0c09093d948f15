#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "osculum/mpoly.hpp"
#include "osculum/rational.hpp"

namespace osculum {

// Dense row-major matrix whose entries are either all rationals (the scalar
// case) or polynomials over a common ring. A polynomial matrix whose entries
// are all constants is stored as a scalar one.
class ExactMatrix {
 public:
  ExactMatrix() : entries_(std::vector<Rational>{}) {}
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<MPoly> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static ExactMatrix from_integers(std::size_t rows, std::size_t cols, std::span<const long> values);
  // Matrix whose columns are the given vectors.
  static ExactMatrix from_columns(const std::vector<std::vector<Rational>>& columns,
                                  std::size_t length);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_scalar() const noexcept { return std::holds_alternative<std::vector<Rational>>(entries_); }
  // Ring size of the entries; 0 for scalar matrices.
  std::size_t variable_count() const noexcept { return variable_count_; }

  const Rational& at(std::size_t i, std::size_t j) const;
  const MPoly& poly_at(std::size_t i, std::size_t j) const;
  // Entry as a polynomial in `variable_count` variables (works for both kinds).
  MPoly entry(std::size_t i, std::size_t j, std::size_t variable_count) const;

  std::span<const Rational> scalars() const;
  std::span<const MPoly> polys() const;
  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;

  ExactMatrix transpose() const;
  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  ExactMatrix hconcat(const ExactMatrix& right) const;
  ExactMatrix vconcat(const ExactMatrix& below) const;
  // Substitutes a rational point for all variables.
  ExactMatrix evaluate(std::span<const Rational> point) const;
  ExactMatrix scaled(const Rational& s) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  // One row per line, entries separated by ", " inside brackets.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t variable_count_ = 0;
  std::variant<std::vector<Rational>, std::vector<MPoly>> entries_;
};

}  // namespace osculum
