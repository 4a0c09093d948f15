#pragma once

// Randomized engine invariants, shared by the unit test and the acceptance
// runner. Each case is independent and counted; failures carry a label.

#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "osculum/cli.hpp"
#include "osculum/errors.hpp"
#include "osculum/linalg.hpp"
#include "osculum/linear_form.hpp"
#include "osculum/osculation.hpp"
#include "osculum/varieties.hpp"

namespace props {

using namespace osculum;

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& label) {
    ++cases;
    if (!ok) failures.push_back(label);
  }
};

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> p(n);
  for (auto& x : p) x = Rational(rng.uniform(-20, 20), static_cast<unsigned long>(rng.uniform(1, 5)));
  for (auto& x : p) x.canonicalize();
  return p;
}

inline void ring_axioms(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto a = oracle::random_poly(rng, n, 3, 4), b = oracle::random_poly(rng, n, 3, 4),
               c = oracle::random_poly(rng, n, 2, 3);
    t.check((a * b) * c == a * (b * c), "mul associative");
    t.check(a * b == b * a, "mul commutative");
    t.check((a + b) + c == a + (b + c), "add associative");
    t.check(a * (b + c) == a * b + a * c, "distributive");
    t.check(oracle::from(a * b) == oracle::mul(oracle::from(a), oracle::from(b)), "mul matches oracle");
  }
}

inline void homogeneity_and_euler(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const unsigned d1 = static_cast<unsigned>(rng.uniform(1, 4)), d2 = static_cast<unsigned>(rng.uniform(1, 3));
    const auto f = oracle::random_poly(rng, n, d1, 5, true), g = oracle::random_poly(rng, n, d2, 3, true);
    if (f.is_zero() || g.is_zero()) continue;
    t.check((f * g).is_homogeneous(d1 + d2), "product homogeneous");
    const auto df = partial_derivative(f, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)));
    t.check(df.is_zero() || df.is_homogeneous(d1 - 1), "derivative homogeneous");
    MPoly e(n);
    for (std::size_t v = 0; v < n; ++v) e += MPoly::variable(n, v) * partial_derivative(f, v);
    t.check(e == f * Rational(d1), "Euler relation");
  }
}

inline void evaluation(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto a = oracle::random_poly(rng, n, 3, 4), b = oracle::random_poly(rng, n, 3, 4);
    const auto p = random_point(rng, n);
    t.check(evaluate(a * b, p) == evaluate(a, p) * evaluate(b, p), "evaluate mul");
    t.check(evaluate(a + b, p) == evaluate(a, p) + evaluate(b, p), "evaluate add");
    t.check(evaluate(a, p) == oracle::eval(oracle::from(a), p), "evaluate matches oracle");
  }
}

inline void restriction(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const auto f = oracle::random_poly(rng, 3, 2, 4, true), g = oracle::random_poly(rng, 3, 3, 4, true);
    std::vector<Rational> l{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(1, 5)};
    if (rng.uniform(0, 2) == 0) l[0] = 0;
    const LinearForm line(l);
    t.check(restrict_mod_line(f * g, line) == restrict_mod_line(f, line) * restrict_mod_line(g, line),
            "restriction multiplicative");
    t.check(restrict_mod_line(line.poly() * g, line).is_zero(), "restriction kills the line");
  }
}

inline void rank_kernel(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 6)), c = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto m = oracle::random_matrix(rng, r, c, static_cast<std::size_t>(rng.uniform(0, 5)));
    const auto rank = rank_exact(m);
    t.check(rank == rank_exact(m.transpose()), "rank of transpose");
    const auto k = kernel_basis(m);
    t.check(c == rank + k.size(), "rank plus nullity");
    bool zero = true;
    for (const auto& v : k.vectors) {
      const auto mv = (m * ExactMatrix::from_columns({v}, c)).column(0);
      for (const auto& x : mv) zero = zero && x == 0;
    }
    t.check(zero, "kernel vectors");
    if (r <= 5 && c <= 5) t.check(rank == oracle::rank_by_minors(m), "rank matches minors");
  }
}

inline void determinants(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto a = oracle::random_matrix(rng, n, n, n), b = oracle::random_matrix(rng, n, n, n);
    t.check(scalar_determinant(a * b) == scalar_determinant(a) * scalar_determinant(b), "det multiplicative");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t j = 0; j < n; ++j) rows.push_back(a.row(j));
    t.check(scalar_determinant(a) == oracle::det(rows), "det matches Leibniz");
  }
}

inline void kron_identities(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const auto a = oracle::random_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 3)),
                                         static_cast<std::size_t>(rng.uniform(1, 3)), 2);
    const auto b = oracle::random_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 3)),
                                         static_cast<std::size_t>(rng.uniform(1, 3)), 2);
    t.check(kron(a, b).transpose() == kron(a.transpose(), b.transpose()), "kron transpose");
  }
}

inline void generic_ranks(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(2, 3)), c = static_cast<std::size_t>(rng.uniform(2, 3));
    // Low-rank polynomial matrix as a product of polynomial factors.
    const std::size_t inner = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<MPoly> a, b;
    for (std::size_t j = 0; j < r * inner; ++j) a.push_back(oracle::random_poly(rng, 2, 1, 2));
    for (std::size_t j = 0; j < inner * c; ++j) b.push_back(oracle::random_poly(rng, 2, 1, 2));
    const auto m = ExactMatrix(r, inner, a) * ExactMatrix(inner, c, b);
    GenericRankOptions o;
    o.certify = true;
    o.seed = rng.next();
    const auto g = generic_rank(m, o);
    t.check(g.rank <= std::min(r, c) && g.rank <= inner, "generic rank bounded");
    std::vector<std::size_t> rp(r), cp(c);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::reverse(rp.begin(), rp.end());
    std::rotate(cp.begin(), cp.begin() + 1, cp.end());
    const auto g2 = generic_rank(m.submatrix(rp, cp), o);
    t.check(g.level != RankLevel::Certified || g2.level != RankLevel::Certified || g.rank == g2.rank,
            "certified rank permutation invariant");
    // A random point never exceeds the generic rank.
    t.check(rank_exact(m.evaluate(random_point(rng, 2))) <= g.rank || g.level != RankLevel::Certified,
            "specialization bounded by generic rank");
  }
}

inline void varieties(Rng& rng, Tally& t, int rounds) {
  const auto tog = linear_projection(
      veronese(2, 3), std::vector<ProjPoint>{ProjPoint::unit(10, 0), ProjPoint::unit(10, 6), ProjPoint::unit(10, 9)});
  for (int i = 0; i < rounds; ++i) {
    std::vector<Rational> c{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(1, 9)};
    const unsigned d = static_cast<unsigned>(rng.uniform(1, 5));
    t.check(ProjPoint(apolar_veronese(2, d).evaluate(c)) == power_point(LinearForm(c), d), "power point on Veronese");
    std::vector<Rational> a(8);
    for (auto& x : a) x = rng.uniform(-9, 9);
    try {
      const auto s = hyperplane_section_param(3, a);
      MPoly lhs(4);
      for (std::size_t j = 0; j < 8; ++j) lhs += s.ambient_coordinates[j] * a[j];
      t.check(lhs.is_zero(), "section satisfies the hyperplane");
    } catch (const DegenerateInput&) {
      t.check(true, "inadmissible hyperplane rejected");
    }
    // Scale invariance of the osculating hyperplane.
    auto q = c;
    const Rational s(rng.uniform(1, 9), static_cast<unsigned long>(rng.uniform(1, 9)));
    for (auto& x : q) x *= s;
    t.check(osc_dim(tog, 2, c) == osc_dim(tog, 2, q), "osc dim scale invariant");
  }
}

inline void determinism(Rng& rng, Tally& t, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    cli::Scenario s;
    s.command = i % 2 ? "splitting" : "polarity-rnc";
    s.system = "random";
    s.seeds = 3;
    s.trials = 5;
    s.degree = 3;
    s.seed = rng.next() % 1000000;
    auto a = cli::run_scenario(s).json, b = cli::run_scenario(s).json;
    a.erase("timing");
    b.erase("timing");
    t.check(a.dump() == b.dump(), "report deterministic by seed");
  }
}

inline Tally run(std::uint64_t seed) {
  Tally t;
  Rng rng(seed);
  ring_axioms(rng, t, 40);
  homogeneity_and_euler(rng, t, 40);
  evaluation(rng, t, 30);
  restriction(rng, t, 30);
  rank_kernel(rng, t, 40);
  determinants(rng, t, 30);
  kron_identities(rng, t, 20);
  generic_ranks(rng, t, 20);
  varieties(rng, t, 20);
  determinism(rng, t, 10);
  return t;
}

}  // namespace props
