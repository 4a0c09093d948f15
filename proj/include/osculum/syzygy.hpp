#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "osculum/linear_form.hpp"
#include "osculum/polarity.hpp"

namespace osculum {

// Degrees a1 >= a2 >= a3 of the kernel of O^4 -> O(3) restricted to a line.
struct SplittingType {
  std::array<int, 3> degrees{};

  std::string to_string() const;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

struct LineSplitting {
  SplittingType type;
  std::array<long, 3> h{};  // kernel dimensions in degrees 0, 1, 2
  std::vector<Rational> line;
};

LineSplitting splitting_type(const CubicSystem& system, const LinearForm& line);

struct GenericSplitting {
  SplittingType type;  // lexicographically smallest observation
  std::vector<LineSplitting> observations;
  bool agree = true;
  bool confirmed = false;  // more than one observation
  std::size_t skipped_lines = 0;
};

GenericSplitting generic_splitting(const CubicSystem& system, std::size_t seeds, std::uint64_t seed);

}  // namespace osculum
