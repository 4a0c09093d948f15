#include <doctest.h>

#include "oracles.hpp"
#include "osculum/errors.hpp"
#include "osculum/linalg.hpp"

using namespace osculum;

namespace {

ExactMatrix ints(std::size_t r, std::size_t c, std::vector<long> v) {
  return ExactMatrix::from_integers(r, c, v);
}

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

TEST_CASE("rank against the minors oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cap = static_cast<std::size_t>(rng.uniform(0, 4));
    const auto m = oracle::random_matrix(rng, rows, cols, cap);
    CHECK(rank_exact(m) == oracle::rank_by_minors(m));
    const auto prof = rank_profile(m);
    CHECK(prof.rank == rank_exact(m));
    if (prof.rank > 0) CHECK(scalar_determinant(m.submatrix(prof.rows, prof.cols)) != 0);
  }
  CHECK(rank_exact(ints(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
  CHECK(rank_exact(ExactMatrix(2, 3)) == 0);
}

TEST_CASE("determinant") {
  CHECK(scalar_determinant(ints(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})) == 6);
  CHECK(scalar_determinant(ints(2, 2, {1, 2, 2, 4})) == 0);
  const auto h = ExactMatrix::from_rows({{1, Rational(1, 2), Rational(1, 3)},
                                         {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
                                         {Rational(1, 3), Rational(1, 4), Rational(1, 5)}});
  CHECK(scalar_determinant(h) == Rational(1, 2160));
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto m = oracle::random_matrix(rng, n, n, n);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
    CHECK(scalar_determinant(m) == oracle::det(rows));
  }
  CHECK_THROWS_AS(scalar_determinant(ExactMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("polynomial determinant") {
  // Vandermonde in three variables.
  const auto x = [](std::size_t i) { return MPoly::variable(3, i); };
  std::vector<MPoly> e;
  for (std::size_t i = 0; i < 3; ++i) {
    e.push_back(MPoly::constant(3, 1));
    e.push_back(x(i));
    e.push_back(x(i) * x(i));
  }
  const ExactMatrix v(3, 3, e);
  const MPoly expected = (x(1) - x(0)) * (x(2) - x(0)) * (x(2) - x(1));
  CHECK(determinant(v) == expected);
  // Oracle: evaluate entrywise and expand.
  Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const auto ev = v.evaluate(p);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(ev.row(i));
    CHECK(evaluate(determinant(v), p) == oracle::det(rows));
  }
}

TEST_CASE("kernel bases") {
  const auto m = ints(2, 4, {1, 2, 0, 1, 0, 0, 1, 1});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k.vectors) {
    const auto prod = m * ExactMatrix::from_columns({v}, 4);
    CHECK(is_zero_vector(prod.column(0)));
  }
  // Normal form: leading entries 1, pivots increase, pivot columns clean.
  for (std::size_t i = 0; i < k.size(); ++i) {
    CHECK(k.vectors[i][k.pivots[i]] == 1);
    for (std::size_t j = 0; j < k.pivots[i]; ++j) CHECK(k.vectors[i][j] == 0);
    for (std::size_t o = 0; o < k.size(); ++o)
      if (o != i) CHECK(k.vectors[o][k.pivots[i]] == 0);
  }
  CHECK(k.pivots[0] < k.pivots[1]);
  const auto left = left_kernel_basis(ints(3, 2, {1, 0, 0, 1, 1, 1}));
  REQUIRE(left.size() == 1);
  CHECK(left.vectors[0] == std::vector<Rational>{1, 1, -1});
  CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
}

TEST_CASE("in_span") {
  // Binary cubics in the basis x^3, x^2y, xy^2, y^3: x^3, y^3, (x+y)^3 and
  // the target xy(x+y).
  const std::vector<std::vector<Rational>> vs{{1, 0, 0, 0}, {0, 0, 0, 1}, {1, 3, 3, 1}};
  const std::vector<Rational> t{0, 1, 1, 0};
  const auto c = in_span(vs, t);
  REQUIRE(c);
  CHECK(*c == std::vector<Rational>{Rational(-1, 3), Rational(-1, 3), Rational(1, 3)});
  const std::vector<std::vector<Rational>> line{{1, 1, 0}};
  const std::vector<Rational> off{1, 0, 0};
  CHECK(in_span(line, std::vector<Rational>{2, 2, 0}) == std::vector<Rational>{2});
  CHECK_FALSE(in_span(line, off));
}

TEST_CASE("kron") {
  const auto a = ints(2, 2, {1, 2, 3, 4});
  const auto b = ints(2, 2, {0, 1, 1, 0});
  const auto k = kron(a, b);
  CHECK(k == ints(4, 4, {0, 1, 0, 2, 1, 0, 2, 0, 0, 3, 0, 4, 3, 0, 4, 0}));
  CHECK(scalar_determinant(k) == scalar_determinant(a) * scalar_determinant(a));
}

TEST_CASE("generic_rank") {
  const auto s = MPoly::variable(2, 0), t = MPoly::variable(2, 1);
  const ExactMatrix m(2, 2, std::vector<MPoly>{s, t, s * Rational(2), t * Rational(2)});
  GenericRankOptions opt;
  opt.certify = true;
  const auto r = generic_rank(m, opt);
  CHECK(r.rank == 1);
  CHECK(r.level == RankLevel::Certified);
  const ExactMatrix full(2, 2, std::vector<MPoly>{s, t, t, s});
  const auto f = generic_rank(full, opt);
  CHECK(f.rank == 2);
  CHECK(f.level == RankLevel::Certified);
  // s^2 - t^2 vanishes on the diagonal; the sampled rank still finds 2.
  CHECK(generic_rank(full).rank == 2);
  CHECK(to_string(RankLevel::Certified) == "certified");
  CHECK(to_string(RankLevel::SampledOnly) == "sampled-only");
  opt.grid_budget = 1;
  // Third row is the sum of the first two, so certification needs a grid.
  const ExactMatrix big(3, 3, std::vector<MPoly>{s, t, s * t, s * s, t * t, s, s + s * s, t + t * t,
                                                  s * t + s});
  CHECK(generic_rank(big).rank == 2);
  CHECK(generic_rank(big, opt).level == RankLevel::SampledOnly);
}

TEST_CASE("tall integer matrix") {
  const std::vector<long> e{6, 0, 0, 0, 0, 0,
                            4, 2, 0, 0, 0, 0,
                            6, 0, 2, 0, 0, 0,
                            0, 2, 3, 1, 1, 0,
                            0, 3, 2, 0, 1, 0,
                            0, 0, 0, 6, 0, 0,
                            0, 0, 0, 0, 0, 6};
  const auto m = ExactMatrix::from_integers(7, 6, e);
  CHECK(rank_exact(m) == oracle::rank_by_minors(m));
  CHECK(left_kernel_basis(m).size() == 7 - rank_exact(m));
}
