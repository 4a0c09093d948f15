#include "osculum/syzygy.hpp"

#include <algorithm>

#include "osculum/errors.hpp"
#include "osculum/linalg.hpp"
#include "osculum/random.hpp"

namespace osculum {

std::string SplittingType::to_string() const {
  return "(" + std::to_string(degrees[0]) + ", " + std::to_string(degrees[1]) + ", " +
         std::to_string(degrees[2]) + ")";
}

namespace {

// Rank of (S^k)^4 -> S^{k+3}, (v_i) -> sum v_i f_i, on binary forms.
std::size_t multiplication_rank(const std::vector<MPoly>& restricted, unsigned k) {
  const auto target = monomials_of_degree(2, k + 3);
  std::vector<std::vector<Rational>> columns;
  for (const auto& f : restricted)
    for (const auto& u : monomials_of_degree(2, k))
      columns.push_back(coefficient_vector(MPoly::term(u) * f, target));
  return rank_exact(ExactMatrix::from_columns(columns, target.size()));
}

}  // namespace

LineSplitting splitting_type(const CubicSystem& system, const LinearForm& line) {
  if (line.variable_count() != 3) throw DimensionMismatch("splitting type expects a line in the plane");
  std::vector<MPoly> restricted;
  for (const auto& g : system.generators()) restricted.push_back(restrict_mod_line(g, line));
  if (std::all_of(restricted.begin(), restricted.end(), [](const MPoly& f) { return f.is_zero(); }))
    throw DegenerateInput("every generator vanishes on the line");
  LineSplitting out;
  out.line = line.coefficients();
  for (unsigned k = 0; k < 3; ++k)
    out.h[k] = 4 * static_cast<long>(k + 1) - static_cast<long>(multiplication_rank(restricted, k));
  // Without a common root on the line the map is onto in degree 5.
  if (4 * 3 - out.h[2] != 6)
    throw DegenerateInput("restricted system has a common root on the line");
  // h(k) = sum_i max(0, a_i + k + 1) with a_i in [-3, 0].
  const long c0 = out.h[0];
  const long c1 = out.h[1] - 2 * c0;
  const long c2 = out.h[2] - 3 * c0 - 2 * c1;
  const long c3 = 3 - c0 - c1 - c2;
  if (c1 < 0 || c2 < 0 || c3 < 0 || c1 + 2 * c2 + 3 * c3 != 3)
    throw InternalError("inconsistent kernel dimensions on a line");
  std::size_t at = 0;
  for (long j = 0; j < c0; ++j) out.type.degrees[at++] = 0;
  for (long j = 0; j < c1; ++j) out.type.degrees[at++] = -1;
  for (long j = 0; j < c2; ++j) out.type.degrees[at++] = -2;
  for (long j = 0; j < c3; ++j) out.type.degrees[at++] = -3;
  return out;
}

GenericSplitting generic_splitting(const CubicSystem& system, std::size_t seeds, std::uint64_t seed) {
  if (seeds < 1) throw DegenerateInput("generic splitting needs at least one line");
  Rng rng(seed);
  GenericSplitting out;
  while (out.observations.size() < seeds) {
    std::vector<long> c(3);
    for (auto& x : c) x = rng.uniform(-99, 99);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    const auto prim = primitive_integer_vector(to_rationals(c));
    std::vector<Rational> coeffs(prim.begin(), prim.end());
    try {
      out.observations.push_back(splitting_type(system, LinearForm(coeffs)));
    } catch (const DegenerateInput&) {
      if (++out.skipped_lines > 10 * seeds) throw DegenerateSampling("no line avoids the base locus");
    }
  }
  out.type = out.observations.front().type;
  for (const auto& o : out.observations) {
    out.agree = out.agree && o.type == out.observations.front().type;
    out.type = std::min(out.type, o.type);
  }
  out.confirmed = out.observations.size() > 1;
  return out;
}

}  // namespace osculum
