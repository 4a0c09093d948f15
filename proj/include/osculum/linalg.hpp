#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "osculum/matrix.hpp"

namespace osculum {

// Basis of a null space in reduced echelon normal form: the first nonzero
// entry of each vector is 1, pivot positions strictly increase, and every
// pivot position is zero in the other vectors.
struct KernelBasis {
  std::size_t dimension = 0;  // length of each vector
  std::vector<std::vector<Rational>> vectors;
  std::vector<std::size_t> pivots;

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }
};

struct RowEchelon {
  std::vector<std::vector<Rational>> rows;  // nonzero rows of the RREF
  std::vector<std::size_t> pivots;
};

// Row and column indices of a nonzero maximal minor.
struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::size_t rank_exact(const ExactMatrix& m);
RankProfile rank_profile(const ExactMatrix& m);
RowEchelon reduced_row_echelon(const ExactMatrix& m);
KernelBasis kernel_basis(const ExactMatrix& m);
// Kernel of the transpose: functionals annihilating every column.
KernelBasis left_kernel_basis(const ExactMatrix& m);

// Exact determinant; polynomial entries go through fraction-free elimination.
MPoly determinant(const ExactMatrix& m);
Rational scalar_determinant(const ExactMatrix& m);

std::optional<std::vector<Rational>> in_span(std::span<const std::vector<Rational>> vectors,
                                             std::span<const Rational> target);

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

enum class RankLevel { SampledOnly, Certified };

struct GenericRankOptions {
  unsigned trials = 3;
  bool certify = false;
  std::uint64_t seed = 20060403;
  long sample_bound = 999;
  // Variable groups the caller expects every minor to be homogeneous in.
  // Each group is checked against the matrix before it is used to
  // dehomogenize the certification grid.
  std::vector<std::vector<std::size_t>> homogeneous_groups;
  std::size_t grid_budget = 250000;
};

struct GenericRank {
  std::size_t rank = 0;
  RankLevel level = RankLevel::SampledOnly;
  std::vector<Rational> witness_point;
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
  std::size_t grid_points = 0;
  std::string note;
};

// Rank over the field of rational functions in the entries' variables.
// Sampling gives a lower bound with a nonzero-minor witness. With certify
// set, every minor bordering the witness is proven identically zero by
// evaluation on a product grid whose side exceeds the minor's degree in
// each variable; that forces the rank to equal the witness size.
GenericRank generic_rank(const ExactMatrix& m, const GenericRankOptions& options = {});

std::string to_string(RankLevel level);

}  // namespace osculum
