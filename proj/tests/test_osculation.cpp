#include <doctest.h>

#include "oracles.hpp"
#include "osculum/errors.hpp"
#include "osculum/osculation.hpp"

using namespace osculum;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

std::vector<ProjPoint> cube_points(std::size_t count) {
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < std::min<std::size_t>(count, 3); ++i)
    out.push_back(power_point(LinearForm(MPoly::variable(3, i)), 3));
  if (count == 4) out.push_back(ProjPoint::unit(10, 4));  // X0*X1*X2
  return out;
}

ParamVariety togliatti() { return linear_projection(veronese(2, 3), cube_points(3)); }

GenericRankOptions certified() {
  GenericRankOptions o;
  o.certify = true;
  return o;
}

}  // namespace

TEST_CASE("tangent line of the twisted cubic") {
  const auto p = partials_matrix(rnc(3), 1, rationals({1, 0}));
  const auto col_space = reduced_row_echelon(p.matrix.transpose());
  REQUIRE(col_space.rows.size() == 2);
  CHECK(col_space.rows[0] == rationals({1, 0, 0, 0}));
  CHECK(col_space.rows[1] == rationals({0, 1, 0, 0}));
  CHECK(osc_dim(rnc(3), 1, rationals({1, 0})) == 1);
}

TEST_CASE("generic osculating dimensions") {
  const auto v = generic_osc_dim(veronese(2, 3), 2, certified());
  CHECK(v.dim == 5);
  CHECK(v.level == RankLevel::Certified);
  const auto t = generic_osc_dim(togliatti(), 2, certified());
  CHECK(t.dim == 5);
  CHECK(t.level == RankLevel::Certified);
  const auto s = generic_osc_dim(segre(3), 2, certified());
  CHECK(s.dim == 6);
  CHECK(s.level == RankLevel::Certified);
}

TEST_CASE("expected dimensions") {
  for (unsigned d = 1; d <= 7; ++d) CHECK(expected_osc_dim(rnc(d), d) == d);
  CHECK(expected_osc_dim(veronese(2, 3), 2) == 5);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto forms = static_cast<long>((2 * n + 1) * (2 * n + 2) / 2);
    CHECK(expected_osc_dim(veronese(2, 2 * n + 1), 2 * n) == std::min(forms - 1, forms - 1));
  }
  CHECK(expected_osc_dim(togliatti(), 2) == 5);
  CHECK(expected_osc_dim(segre(3), 2) == 6);
}

TEST_CASE("laplace_defect") {
  CHECK(laplace_defect(veronese(2, 3), 2, certified()) == 0);
  CHECK(laplace_defect(togliatti(), 2, certified()) == 0);
  const auto four = linear_projection(veronese(2, 3), cube_points(4));
  CHECK(four.ambient_dim() == 5);
  CHECK(laplace_defect(four, 2, certified()) == 1);
}

TEST_CASE("osculating hyperplane of the Togliatti surface") {
  const auto t = togliatti();
  const auto h = osculating_hyperplane(t, 2, rationals({1, 1, 1}));
  // Oracle: the product of the three lines joining (1,1,1) to the
  // coordinate vertices, read off on the seven surviving monomials.
  const auto X = [](std::size_t i) { return MPoly::variable(3, i); };
  const MPoly p = (X(1) - X(2)) * (X(0) - X(2)) * (X(0) - X(1));
  std::vector<Rational> expected;
  for (std::size_t i : {1, 2, 3, 4, 5, 7, 8}) expected.push_back(coefficient_vector(p, monomials_of_degree(3, 3))[i]);
  CHECK(h == ProjPoint(expected));
  CHECK(h.coords()[3] == 0);
}

TEST_CASE("osculating hyperplanes at special points") {
  const auto s = osculating_hyperplane(segre(3), 2, rationals({1, 0, 1, 0, 1, 0}));
  CHECK(s == ProjPoint::unit(8, 7));
  CHECK(osculating_hyperplane(rnc(3), 2, rationals({1, 0})) == ProjPoint::unit(4, 3));
  CHECK_THROWS_AS(osculating_hyperplane(veronese(2, 3), 1, rationals({1, 2, 3})), DegenerateInput);
}

TEST_CASE("common point search") {
  const auto t = togliatti();
  const auto f = find_common_point(t, 2);
  CHECK(f.status == CommonPointStatus::Found);
  REQUIRE(f.point);
  CHECK(*f.point == ProjPoint::unit(7, 3));
  CHECK(f.generic_dim == 5);
  const auto none = find_common_point(veronese(2, 3), 2);
  CHECK(none.status == CommonPointStatus::Absent);
  CHECK_FALSE(none.point);
  CHECK(to_string(CommonPointStatus::Found) == "found");
}

TEST_CASE("certificates") {
  const auto t = togliatti();
  const auto c = certify_common_point(t, 2, ProjPoint::unit(7, 3));
  CHECK(c.verdict == Verdict::CommonPointVerified);
  CHECK(c.mode == CertificationMode::Certified);
  CHECK(c.defect == 0);
  const auto off = certify_common_point(t, 2, ProjPoint::unit(7, 0));
  CHECK(off.verdict == Verdict::NoCommonPoint);
  const auto v = certify_common_point(veronese(2, 3), 2, ProjPoint::unit(10, 0));
  CHECK(v.verdict == Verdict::NoCommonPoint);
  CHECK(v.mode == CertificationMode::Certified);
  const auto full = certify_common_point(rnc(3), 3, ProjPoint::from_integers(std::vector<long>{3, -1, 4, 1}));
  CHECK(full.verdict == Verdict::CommonPointVerified);
  const auto four = linear_projection(veronese(2, 3), cube_points(4));
  CHECK(certify_common_point(four, 2, std::nullopt).verdict == Verdict::LaplaceDegenerate);

  const auto j = to_json(c);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> prefix{"variety", "k", "generic_dim", "expected_dim",
                                        "defect", "candidate", "mode", "verdict"};
  REQUIRE(keys.size() >= prefix.size());
  CHECK(std::equal(prefix.begin(), prefix.end(), keys.begin()));
  CHECK(j["verdict"] == "common-point-verified");
  CHECK(j["mode"] == "certified");
}

TEST_CASE("annihilator route") {
  // The osculating plane of the twisted cubic at (s, t) is the pullback of
  // (t X0 - s X1)^3; no point lies on all of them.
  const auto s = MPoly::variable(2, 0), t = MPoly::variable(2, 1);
  CertifyOptions o;
  o.annihilator = std::vector<MPoly>{pow(t, 3), s * t * t * Rational(-3), s * s * t * Rational(3), -pow(s, 3)};
  const auto c = certify_common_point(rnc(3), 2, ProjPoint::unit(4, 0), o);
  CHECK(c.method == "annihilator");
  CHECK(c.verdict == Verdict::NoCommonPoint);
  CHECK(c.generic_dim == 2);
  // A hint that misses one partial is ignored.
  o.annihilator = std::vector<MPoly>{-pow(t, 3), s * t * t, -(s * s * t), pow(s, 3)};
  const auto r = certify_common_point(rnc(3), 2, ProjPoint::unit(4, 0), o);
  CHECK(r.method == "rank");
  CHECK(r.verdict == Verdict::NoCommonPoint);
}

TEST_CASE("containment chain and Euler consistency") {
  Rng rng(23);
  const auto t = togliatti();
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = rationals({rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(1, 9)});
    long prev = -1;
    for (unsigned k = 0; k <= 3; ++k) {
      const long d = osc_dim(t, k, p);
      CHECK(d >= prev);
      prev = d;
      const auto all = partials_matrix(t, k, p, Layers::All).matrix;
      const auto top = partials_matrix(t, k, p, Layers::TopOrder).matrix;
      CHECK(rank_exact(all) == rank_exact(top));
      if (k > 0) {
        const auto lower = partials_matrix(t, k - 1, p).matrix;
        const auto kb = left_kernel_basis(all);
        // Every functional killing T^k kills T^(k-1).
        CHECK(rank_exact(ExactMatrix::from_rows(kb.vectors.empty() ? std::vector<std::vector<Rational>>{std::vector<Rational>(7, 0)} : kb.vectors) * lower) == 0);
      }
    }
    // Scale invariance in the parameter point.
    auto q = p;
    for (auto& x : q) x *= Rational(-5, 2);
    CHECK(osculating_hyperplane(t, 2, p) == osculating_hyperplane(t, 2, q));
  }
}
