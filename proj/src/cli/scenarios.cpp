#include "osculum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "osculum/errors.hpp"
#include "osculum/osculation.hpp"
#include "osculum/polarity.hpp"
#include "osculum/random.hpp"
#include "osculum/syzygy.hpp"

namespace osculum::cli {

using nlohmann::ordered_json;

namespace {

struct Outcome {
  ordered_json results = ordered_json::object();
  bool passed = false;
  int exit_code = kNegative;
  std::vector<std::string> summary;
};

ordered_json rationals_json(std::span<const Rational> v) {
  auto a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json point_json(const std::optional<ProjPoint>& p) {
  return p ? rationals_json(p->coords()) : ordered_json(nullptr);
}

ordered_json polys_json(std::span<const MPoly> v) {
  auto a = ordered_json::array();
  for (const auto& f : v) a.push_back(f.to_string());
  return a;
}

void finish(Outcome& o, bool passed) {
  o.passed = passed;
  o.exit_code = passed ? kPassed : kNegative;
  o.results["passed"] = passed;
}

LinearForm random_form(Rng& rng, std::size_t vars, long bound) {
  for (;;) {
    std::vector<long> c(vars);
    for (auto& x : c) x = rng.uniform(-bound, bound);
    if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; })) return LinearForm::from_integers(c);
  }
}

LinearForm form_from(const std::vector<long>& c, std::size_t vars) {
  if (c.size() != vars) throw DegenerateInput("linear form needs " + std::to_string(vars) + " coefficients");
  return LinearForm::from_integers(c);
}

std::vector<Rational> random_hyperplane(Rng& rng, std::size_t N) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<long> a(std::size_t{1} << N);
    for (auto& x : a) x = rng.uniform(-9, 9);
    auto q = to_rationals(a);
    try {
      hyperplane_section_param(N, q);
      return q;
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateSampling("no admissible hyperplane in ten draws");
}

bool within_caps(const Scenario& s) {
  if (s.command == "veronese") return s.n <= 2;
  if (s.command == "segre-section") return s.N <= 5;
  return true;
}

// ---- togliatti -----------------------------------------------------------

void check_triple_line(const ParamVariety& v, Outcome& o, bool& ok) {
  const auto X = [](std::size_t i) { return MPoly::variable(6, i); };
  const auto x = [](std::size_t i) { return MPoly::variable(6, 3 + i); };
  const MPoly prod = (x(2) * X(1) - x(1) * X(2)) * (x(2) * X(0) - x(0) * X(2)) * (x(1) * X(0) - x(0) * X(1));
  const auto cubics = monomials_of_degree(3, 3);
  const auto coeffs = coefficients_over(prod, 3, cubics);
  const std::size_t mixed = std::find(cubics.begin(), cubics.end(), Monomial{1, 1, 1}) - cubics.begin();
  const bool mixed_zero = coeffs[mixed].is_zero();

  const std::vector<Rational> one{1, 1, 1};
  std::vector<Rational> expansion;
  for (const auto& c : v.coordinates()) {
    const auto& mono = c.leading_term().monomial;
    const std::size_t at = std::find(cubics.begin(), cubics.end(), mono) - cubics.begin();
    expansion.push_back(evaluate(coeffs[at], one));
  }
  bool outside_zero = true;
  for (std::size_t i = 0; i < cubics.size(); ++i) {
    const bool used = std::any_of(v.coordinates().begin(), v.coordinates().end(),
                                  [&](const MPoly& c) { return c.leading_term().monomial == cubics[i]; });
    if (!used) outside_zero = outside_zero && evaluate(coeffs[i], one) == 0;
  }
  const auto hyper = osculating_hyperplane(v, 2, one);
  const bool match = outside_zero && hyper == ProjPoint(expansion);
  ordered_json j;
  j["parameter_point"] = rationals_json(one);
  j["osculating_hyperplane"] = rationals_json(hyper.coords());
  j["triple_line_expansion"] = rationals_json(ProjPoint(expansion).coords());
  j["match"] = match;
  j["symbolic_x0x1x2_coefficient"] = coeffs[mixed].to_string();
  j["x0x1x2_coefficient_vanishes"] = mixed_zero;
  o.results["triple_line_check"] = j;
  o.summary.push_back(std::string("osculating hyperplane at (1,1,1) matches triple-line product: ") +
                      (match ? "yes" : "no"));
  ok = ok && match && mixed_zero;
}

Outcome togliatti(const Scenario& s) {
  Outcome o;
  CommonPointOptions search_opts{s.samples, s.seed, 999, 0};
  CertifyOptions cert_opts;
  cert_opts.seed = derive_seed(s.seed, 7);

  if (s.model == "segre-section") {
    Rng rng(derive_seed(s.seed, 3));
    const auto a = s.hyperplane ? to_rationals(*s.hyperplane) : random_hyperplane(rng, 3);
    const auto sec = hyperplane_section_param(3, a);
    const auto scp = segre_section_common_point(3, a);
    const ProjPoint expected(sec.restrict_point(scp.candidate.coords()));
    const auto search = find_common_point(sec.variety, 2, search_opts);
    const auto cert = certify_common_point(sec.variety, 2, search.point, cert_opts);
    o.results["model"] = "segre-section";
    o.results["hyperplane"] = rationals_json(a);
    o.results["search"] = {{"status", to_string(search.status)},
                           {"samples_used", search.samples_used},
                           {"point", point_json(search.point)}};
    o.results["expected_point"] = rationals_json(expected.coords());
    o.results["certificate"] = to_json(cert);
    const bool ok = search.point && *search.point == expected &&
                    cert.verdict == Verdict::CommonPointVerified && cert.mode == CertificationMode::Certified;
    o.summary.push_back("section of Seg(1,3): " + to_string(cert.verdict) + " (" + to_string(cert.mode) + ")");
    finish(o, ok);
    return o;
  }

  const bool full = s.variety == "veronese-full";
  const auto v3 = veronese(2, 3);
  ParamVariety v = v3;
  std::optional<ProjPoint> expected;
  if (!full) {
    std::vector<ProjPoint> center;
    for (std::size_t i = 0; i < 3; ++i) center.push_back(power_point(LinearForm(MPoly::variable(3, i)), 3));
    v = linear_projection(v3, center);
    const auto& coords = v.coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == MPoly::term(Monomial{1, 1, 1})) expected = ProjPoint::unit(coords.size(), i);
  }
  o.results["model"] = "veronese-projection";
  o.results["variety"] = full ? "veronese-full" : "togliatti";
  o.results["coordinates"] = polys_json(v.coordinates());
  const auto search = find_common_point(v, 2, search_opts);
  o.results["search"] = {{"status", to_string(search.status)},
                         {"samples_used", search.samples_used},
                         {"common_space_dim", search.common_space.size()},
                         {"point", point_json(search.point)}};
  const auto cert = certify_common_point(v, 2, search.point, cert_opts);
  o.results["certificate"] = to_json(cert);
  o.summary.push_back(v.name() + ": " + to_string(cert.verdict) + " (" + to_string(cert.mode) + ")");
  bool ok = cert.verdict == Verdict::CommonPointVerified && cert.mode == CertificationMode::Certified;
  if (!full) {
    o.results["expected_point"] = point_json(expected);
    ok = ok && search.point && expected && *search.point == *expected;
    check_triple_line(v, o, ok);
  }
  finish(o, ok);
  return o;
}

// ---- veronese ------------------------------------------------------------

Outcome veronese_run(const Scenario& s) {
  Outcome o;
  const auto n = static_cast<unsigned>(s.n);
  const unsigned d = 2 * n + 1, k = 2 * n;
  const std::size_t count = d;
  const std::size_t used = s.points ? static_cast<std::size_t>(*s.points) : count;

  std::vector<LinearForm> forms;
  std::vector<ProjPoint> powers;
  Rng rng(derive_seed(s.seed, 3));
  for (int attempt = 0;; ++attempt) {
    if (attempt == 10) throw DegenerateSampling("no general position forms in ten draws");
    forms.clear();
    powers.clear();
    for (std::size_t i = 0; i < count; ++i) {
      forms.push_back(s.forms ? form_from((*s.forms)[i], 3) : random_form(rng, 3, 9));
      powers.push_back(power_point(forms.back(), d));
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : powers) rows.push_back(p.coords());
    if (rank_exact(ExactMatrix::from_rows(rows)) == count) break;
    if (s.forms) throw DegenerateInput("given forms are not in general position");
  }
  const std::vector<ProjPoint> center(powers.begin(), powers.begin() + used);
  const auto v = linear_projection(apolar_veronese(2, d), center);

  // Image of the product of all forms under the projection.
  MPoly prod = MPoly::constant(3, 1);
  for (const auto& l : forms) prod *= l.poly();
  const auto prod_coeffs = coefficient_vector(prod, monomials_of_degree(3, d));
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : center) rows.push_back(p.coords());
  std::vector<Rational> image;
  for (const auto& phi : kernel_basis(ExactMatrix::from_rows(rows)).vectors) {
    Rational t = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) t += phi[i] * prod_coeffs[i];
    image.push_back(t);
  }
  std::optional<ProjPoint> expected;
  if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; }))
    expected = ProjPoint(image);

  const auto search = find_common_point(v, k, {s.samples, s.seed, 999, 0});
  CertifyOptions cert_opts;
  cert_opts.seed = derive_seed(s.seed, 7);
  cert_opts.certify = within_caps(s) || s.certify;
  const auto cert = certify_common_point(v, k, expected, cert_opts);

  bool consistent = false;
  if (expected) {
    if (search.status == CommonPointStatus::Found) consistent = *search.point == *expected;
    if (search.status == CommonPointStatus::Underdetermined)
      consistent = in_span(search.common_space, expected->coords()).has_value();
  }
  std::vector<MPoly> bridge_forms;
  for (const auto& l : forms) bridge_forms.push_back(pow(l.poly(), d));
  bridge_forms.push_back(prod);
  const auto bridge = line_dependency_test(bridge_forms);

  auto forms_json = ordered_json::array();
  for (const auto& l : forms) forms_json.push_back(l.poly().to_string());
  o.results["forms"] = forms_json;
  o.results["projection_points"] = used;
  o.results["ambient_dim"] = v.ambient_dim();
  o.results["k"] = k;
  o.results["search"] = {{"status", to_string(search.status)},
                         {"samples_used", search.samples_used},
                         {"resamples", search.resamples},
                         {"common_space_dim", search.common_space.size()},
                         {"point", point_json(search.point)}};
  o.results["unique_common_point"] = search.status == CommonPointStatus::Found;
  o.results["product_point"] = point_json(expected);
  o.results["product_point_in_common_space"] = consistent;
  o.results["certificate"] = to_json(cert);
  o.results["polarity_bridge"] = {{"holds", bridge.holds},
                                  {"chart_determinants", polys_json(bridge.chart_determinants)}};
  const bool need_certified = within_caps(s) || s.certify;
  const bool ok = cert.verdict == Verdict::CommonPointVerified &&
                  (!need_certified || cert.mode == CertificationMode::Certified) && consistent && bridge.holds;
  o.summary.push_back(v.name() + " k=" + std::to_string(k) + ": " + to_string(cert.verdict) + " (" +
                      to_string(cert.mode) + "), common space dim " +
                      std::to_string(search.common_space.size()) + ", bridge " +
                      (bridge.holds ? "holds" : "fails"));
  finish(o, ok);
  return o;
}

// ---- segre-section -------------------------------------------------------

Outcome segre_section(const Scenario& s) {
  Outcome o;
  const auto N = static_cast<std::size_t>(s.N);
  Rng rng(derive_seed(s.seed, 3));
  const auto a = s.hyperplane ? to_rationals(*s.hyperplane) : random_hyperplane(rng, N);
  const auto scp = segre_section_common_point(N, a);
  o.results["N"] = N;
  o.results["hyperplane"] = rationals_json(a);
  o.results["candidate"] = rationals_json(scp.candidate.coords());
  o.results["on_hyperplane"] = scp.on_hyperplane;
  o.results["in_osculating_hyperplanes"] = scp.in_osculating_hyperplanes;
  bool ok = scp.on_hyperplane && scp.in_osculating_hyperplanes;
  o.summary.push_back("N=" + std::to_string(N) + ": <a,c> = 0 " + (scp.on_hyperplane ? "yes" : "no") +
                      ", pairing with osculating form vanishes identically " +
                      (scp.in_osculating_hyperplanes ? "yes" : "no"));
  if (within_caps(s)) {
    const auto& sv = scp.section.variety;
    const ProjPoint expected(scp.section.restrict_point(scp.candidate.coords()));
    const auto search = find_common_point(sv, static_cast<unsigned>(N - 1), {s.samples, s.seed, 999, 0});
    CertifyOptions cert_opts;
    cert_opts.seed = derive_seed(s.seed, 7);
    cert_opts.annihilator = scp.section.restrict_functional(scp.generic_osculating_form);
    const auto cert = certify_common_point(sv, static_cast<unsigned>(N - 1), expected, cert_opts);
    o.results["section_candidate"] = rationals_json(expected.coords());
    o.results["search"] = {{"status", to_string(search.status)},
                           {"samples_used", search.samples_used},
                           {"common_space_dim", search.common_space.size()},
                           {"point", point_json(search.point)}};
    o.results["certificate"] = to_json(cert);
    ok = ok && search.point && *search.point == expected && cert.verdict == Verdict::CommonPointVerified &&
         cert.mode == CertificationMode::Certified;
    o.summary.push_back(sv.name() + ": " + to_string(cert.verdict) + " (" + to_string(cert.mode) + ")");
  } else {
    o.results["section_candidate"] = nullptr;
    o.results["search"] = "skipped beyond desk scale";
    o.results["certificate"] = nullptr;
  }
  finish(o, ok);
  return o;
}

// ---- polarity-rnc --------------------------------------------------------

Outcome polarity_rnc(const Scenario& s) {
  Outcome o;
  const auto d = static_cast<std::size_t>(s.degree);
  const bool odd = d % 2 == 1;
  Rng rng(derive_seed(s.seed, 3));
  const long trials = s.forms ? 1 : s.trials;
  long present = 0, reexpanded = 0;
  ordered_json first = nullptr;
  for (long t = 0; t < trials; ++t) {
    std::vector<LinearForm> forms;
    if (s.forms) {
      for (const auto& c : *s.forms) forms.push_back(form_from(c, 2));
    } else {
      while (forms.size() < d) {
        auto f = random_form(rng, 2, 99);
        const bool clash = std::any_of(forms.begin(), forms.end(), [&](const LinearForm& g) {
          const auto& x = f.coefficients();
          const auto& y = g.coefficients();
          return x[0] * y[1] == x[1] * y[0];
        });
        if (!clash) forms.push_back(std::move(f));
      }
    }
    const auto w = rnc_polarity_check(forms);
    if (!w) continue;
    ++present;
    MPoly lhs(2), prod = MPoly::constant(2, 1);
    for (std::size_t i = 0; i < d; ++i) {
      lhs += pow(forms[i].poly(), static_cast<unsigned>(d)) * (*w)[i];
      prod *= forms[i].poly();
    }
    if (lhs == prod) ++reexpanded;
    if (first.is_null()) {
      auto fj = ordered_json::array();
      for (const auto& f : forms) fj.push_back(f.poly().to_string());
      first = {{"forms", fj}, {"coefficients", rationals_json(*w)}};
    }
  }
  o.results["degree"] = d;
  o.results["parity"] = odd ? "odd" : "even";
  o.results["tuples"] = trials;
  o.results["witnesses"] = present;
  o.results["witnesses_reexpanded"] = reexpanded;
  o.results["first_witness"] = first;
  const bool ok = odd ? present == trials && reexpanded == trials : present == 0;
  o.summary.push_back("d=" + std::to_string(d) + ": " + std::to_string(present) + "/" + std::to_string(trials) +
                      " tuples have the product in the span of the powers");
  finish(o, ok);
  return o;
}

// ---- search-cubics -------------------------------------------------------

Outcome search_cubics(const Scenario&) {
  Outcome o;
  const auto cubics = monomials_of_degree(3, 3);
  std::size_t subsets = 0, bpf = 0, holds_total = 0;
  auto satisfying = ordered_json::array();
  auto excluded_examples = ordered_json::array();
  bool canonical_found = false;
  std::size_t satisfying_bpf = 0;
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = a + 1; b < 10; ++b)
      for (std::size_t c = b + 1; c < 10; ++c)
        for (std::size_t e = c + 1; e < 10; ++e) {
          ++subsets;
          const std::array<Monomial, 4> chosen{cubics[a], cubics[b], cubics[c], cubics[e]};
          // A monomial vanishes at a point iff it involves a variable the
          // point's support misses, so the seven support patterns decide.
          std::optional<std::array<int, 3>> base_point;
          for (int mask = 1; mask < 8 && !base_point; ++mask) {
            const bool all_vanish = std::all_of(chosen.begin(), chosen.end(), [&](const Monomial& m) {
              for (int v = 0; v < 3; ++v)
                if (!(mask >> v & 1) && m[v] > 0) return true;
              return false;
            });
            if (all_vanish) base_point = std::array<int, 3>{mask & 1, mask >> 1 & 1, mask >> 2 & 1};
          }
          std::vector<MPoly> gens;
          for (const auto& m : chosen) gens.push_back(MPoly::term(m));
          const auto test = laplace_line_test(CubicSystem(gens));
          holds_total += test.holds;
          auto names = ordered_json::array();
          for (const auto& g : gens) names.push_back(g.to_string());
          if (base_point) {
            if (excluded_examples.size() < 3)
              excluded_examples.push_back({{"system", names},
                                           {"base_point", {(*base_point)[0], (*base_point)[1], (*base_point)[2]}}});
            continue;
          }
          ++bpf;
          if (test.holds) {
            ++satisfying_bpf;
            satisfying.push_back(names);
            canonical_found = chosen == std::array<Monomial, 4>{Monomial{3, 0, 0}, Monomial{1, 1, 1},
                                                                Monomial{0, 3, 0}, Monomial{0, 0, 3}};
          }
        }
  o.results["subsets"] = subsets;
  o.results["base_point_free"] = bpf;
  o.results["satisfying_base_point_free"] = satisfying;
  o.results["satisfying_any"] = holds_total;
  o.results["excluded_examples"] = excluded_examples;
  const bool ok = subsets == 210 && bpf == 7 && satisfying_bpf == 1 && canonical_found;
  o.summary.push_back(std::to_string(bpf) + " base-point-free monomial systems, " + std::to_string(satisfying_bpf) +
                      " satisfy the line test");
  finish(o, ok);
  return o;
}

// ---- splitting -----------------------------------------------------------

CubicSystem build_system(const Scenario& s, Rng& rng) {
  if (s.system == "togliatti") {
    if (s.forms) {
      return togliatti_system(form_from((*s.forms)[0], 3), form_from((*s.forms)[1], 3), form_from((*s.forms)[2], 3));
    }
    for (int attempt = 0; attempt < 10; ++attempt) {
      try {
        return togliatti_system(random_form(rng, 3, 9), random_form(rng, 3, 9), random_form(rng, 3, 9));
      } catch (const DegenerateInput&) {
      }
    }
    throw DegenerateSampling("no independent linear forms in ten draws");
  }
  const auto basis = monomials_of_degree(3, 3);
  auto from_coeffs = [&](const std::vector<long>& c) {
    if (c.size() != basis.size()) throw DegenerateInput("a cubic needs 10 coefficients");
    std::vector<MPoly::Term> terms;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) terms.push_back({basis[i], Rational(c[i])});
    return MPoly::from_terms(3, std::move(terms));
  };
  if (s.system == "nonexample")
    return CubicSystem({MPoly::term(Monomial{3, 0, 0}), MPoly::term(Monomial{0, 3, 0}),
                        MPoly::term(Monomial{0, 0, 3}), MPoly::term(Monomial{2, 1, 0})});
  if (s.system == "custom") {
    std::vector<MPoly> g;
    for (const auto& c : *s.forms) g.push_back(from_coeffs(c));
    return CubicSystem(g);
  }
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<MPoly> g;
    for (int i = 0; i < 4; ++i) {
      std::vector<long> c(basis.size());
      for (auto& x : c) x = rng.uniform(-9, 9);
      g.push_back(from_coeffs(c));
    }
    try {
      return CubicSystem(g);
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateSampling("no independent random cubics in ten draws");
}

ordered_json splitting_json(const LineSplitting& l) {
  return {{"line", rationals_json(l.line)},
          {"type", l.type.to_string()},
          {"h", {l.h[0], l.h[1], l.h[2]}}};
}

Outcome splitting(const Scenario& s) {
  Outcome o;
  Rng rng(derive_seed(s.seed, 3));
  const auto system = build_system(s, rng);
  const auto gs = generic_splitting(system, static_cast<std::size_t>(s.seeds), derive_seed(s.seed, 5));
  const auto test = laplace_line_test(system);
  o.results["system"] = polys_json(system.generators());
  o.results["kind"] = s.system;
  o.results["generic_type"] = gs.type.to_string();
  o.results["agree"] = gs.agree;
  o.results["confirmed"] = gs.confirmed;
  o.results["skipped_lines"] = gs.skipped_lines;
  o.results["line_test_holds"] = test.holds;
  auto obs = ordered_json::array();
  for (const auto& l : gs.observations) obs.push_back(splitting_json(l));
  o.results["observations"] = obs;
  if (s.line) o.results["requested_line"] = splitting_json(splitting_type(system, form_from(*s.line, 3)));
  o.summary.push_back("generic splitting type " + gs.type.to_string() + (gs.agree ? "" : " (lines disagree)") +
                      (gs.confirmed ? "" : " (single observation, unconfirmed)"));
  finish(o, gs.agree);
  return o;
}

// ---- segre-parity --------------------------------------------------------

Outcome segre_parity(const Scenario& s) {
  Outcome o;
  bool ok = true;
  auto rows = ordered_json::array();
  for (long n = 1; n <= s.n_max; ++n) {
    const auto m = build_m_tensor(static_cast<std::size_t>(n));
    const std::size_t size = std::size_t{1} << n;
    const Rational sign = n % 2 ? -1 : 1;
    const bool transpose_ok = m.matrix.transpose() == m.matrix.scaled(sign);
    const bool involution_ok = m.matrix * m.matrix == ExactMatrix::identity(size).scaled(sign);
    const bool full_rank = rank_exact(m.matrix) == size;
    std::vector<MPoly> x;
    for (std::size_t i = 0; i < size; ++i) x.push_back(MPoly::variable(size, i));
    const auto pairing = segre_pairing(static_cast<std::size_t>(n), x);
    const auto seg = segre(static_cast<std::size_t>(n));
    const bool on_segre = segre_pairing(static_cast<std::size_t>(n), seg.coordinates()).is_zero();
    const bool pairing_ok = n % 2 ? pairing.is_zero() : !pairing.is_zero() && full_rank && on_segre;
    ok = ok && transpose_ok && involution_ok && full_rank && pairing_ok;
    rows.push_back({{"n", n},
                    {"symmetry", n % 2 ? "antisymmetric" : "symmetric"},
                    {"transpose_identity", transpose_ok},
                    {"involution_identity", involution_ok},
                    {"rank", rank_exact(m.matrix)},
                    {"pairing_zero", pairing.is_zero()},
                    {"vanishes_on_segre", on_segre},
                    {"pairing", n <= 2 ? pairing.to_string() : std::string()}});
    o.summary.push_back("n=" + std::to_string(n) + ": " + (n % 2 ? "pairing identically zero " : "nondegenerate quadric ") +
                        (transpose_ok && involution_ok && pairing_ok ? "ok" : "FAILED"));
  }
  o.results["tensors"] = rows;
  finish(o, ok);
  return o;
}

void validate(const Scenario& s) {
  const auto& c = commands();
  if (std::find(c.begin(), c.end(), s.command) == c.end())
    throw DegenerateInput("unknown command '" + s.command + "'");
  if (s.samples < 2) throw DegenerateInput("samples must be at least 2");
  if (s.command == "togliatti") {
    if (s.model != "veronese-projection" && s.model != "segre-section")
      throw DegenerateInput("model must be veronese-projection or segre-section");
    if (s.variety != "togliatti" && s.variety != "veronese-full")
      throw DegenerateInput("variety must be togliatti or veronese-full");
    if (s.hyperplane && s.hyperplane->size() != 8) throw DegenerateInput("hyperplane needs 8 coefficients");
  } else if (s.command == "veronese") {
    if (s.n < 1) throw DegenerateInput("n must be at least 1");
    if (s.n > 2 && !s.force) throw DegenerateInput("n > 2 is beyond desk scale; pass --force");
    if (s.n > 4) throw DegenerateInput("n > 4 is not supported");
    if (s.points && (*s.points < 1 || *s.points > 2 * s.n + 1))
      throw DegenerateInput("points must lie in [1, 2n+1]");
    if (s.forms && s.forms->size() != static_cast<std::size_t>(2 * s.n + 1))
      throw DegenerateInput("veronese needs 2n+1 linear forms");
  } else if (s.command == "segre-section") {
    if (s.N < 3) throw DegenerateInput("N must be at least 3");
    if (s.N % 2 == 0)
      throw DegenerateInput("N = " + std::to_string(s.N) +
                            " is even: m^(x)N is symmetric, the pairing <x, m^(x)N x> is a nondegenerate "
                            "hyperquadric and the tangent hyperplanes along a general section have no common point");
    if (s.N > 5 && !s.force) throw DegenerateInput("N > 5 is beyond desk scale; pass --force");
    if (s.N > 9) throw DegenerateInput("N > 9 is not supported");
    if (s.hyperplane && s.hyperplane->size() != (std::size_t{1} << s.N))
      throw DegenerateInput("hyperplane needs 2^N coefficients");
  } else if (s.command == "polarity-rnc") {
    if (s.degree < 1 || s.degree > 15) throw DegenerateInput("degree must lie in [1, 15]");
    if (s.trials < 1) throw DegenerateInput("trials must be positive");
    if (s.forms && s.forms->size() != static_cast<std::size_t>(s.degree))
      throw DegenerateInput("polarity check needs exactly degree forms");
  } else if (s.command == "splitting") {
    if (s.seeds < 1) throw DegenerateInput("seeds must be positive");
    if (s.system != "togliatti" && s.system != "random" && s.system != "nonexample" && s.system != "custom")
      throw DegenerateInput("system must be togliatti, random, nonexample or custom");
    if (s.system == "custom" && (!s.forms || s.forms->size() != 4))
      throw DegenerateInput("custom system needs four coefficient lists");
    if (s.system == "togliatti" && s.forms && s.forms->size() != 3)
      throw DegenerateInput("togliatti system needs three linear forms");
  } else if (s.command == "segre-parity") {
    if (s.n_max < 1 || s.n_max > 6) throw DegenerateInput("n_max must lie in [1, 6]");
  }
}

Report envelope(const Scenario& s, const Outcome& o, double seconds) {
  Report r;
  r.json["schema_version"] = kSchemaVersion;
  r.json["tool"] = kToolName;
  r.json["version"] = kToolVersion;
  r.json["command"] = s.command;
  r.json["parameters"] = parameters_json(s);
  r.json["seed"] = s.seed;
  r.json["results"] = o.results;
  r.json["passed"] = o.passed;
  r.json["exit_code"] = o.exit_code;
  r.json["timing"] = {{"seconds", seconds}};
  r.exit_code = o.exit_code;
  r.summary = o.summary;
  return r;
}

Report run_with(const Scenario& s, Outcome (*body)(const Scenario&)) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    validate(s);
    o = body(s);
  } catch (const DegenerateInput& e) {
    o = Outcome{};
    o.results["error"] = e.what();
    o.exit_code = kDegenerate;
    o.summary.push_back(std::string("rejected: ") + e.what());
  } catch (const DegenerateSampling& e) {
    o = Outcome{};
    o.results["error"] = e.what();
    o.exit_code = kDegenerate;
    o.summary.push_back(std::string("sampling failed: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return envelope(s, o, secs);
}

std::vector<std::vector<long>> long_matrix(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<long>> out;
  for (const auto& row : j) out.push_back(row.get<std::vector<long>>());
  return out;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"togliatti",    "veronese",  "segre-section", "polarity-rnc",
                                          "search-cubics", "splitting", "segre-parity"};
  return c;
}

Scenario parse_scenario(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("scenario must be a JSON object");
  Scenario s;
  static const std::set<std::string> known{"command", "seed",   "samples", "certify", "force",  "model",
                                           "variety", "n",      "points",  "N",       "degree", "trials",
                                           "n_max",   "seeds",  "system",  "forms",   "hyperplane", "line"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw std::invalid_argument("unknown scenario field '" + it.key() + "'");
  if (!j.contains("command")) throw std::invalid_argument("scenario needs a command");
  s.command = j.at("command").get<std::string>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("samples")) s.samples = j.at("samples").get<std::size_t>();
  if (j.contains("certify")) s.certify = j.at("certify").get<bool>();
  if (j.contains("force")) s.force = j.at("force").get<bool>();
  if (j.contains("model")) s.model = j.at("model").get<std::string>();
  if (j.contains("variety")) s.variety = j.at("variety").get<std::string>();
  if (j.contains("n")) s.n = j.at("n").get<long>();
  if (j.contains("points")) s.points = j.at("points").get<long>();
  if (j.contains("N")) s.N = j.at("N").get<long>();
  if (j.contains("degree")) s.degree = j.at("degree").get<long>();
  if (j.contains("trials")) s.trials = j.at("trials").get<long>();
  if (j.contains("n_max")) s.n_max = j.at("n_max").get<long>();
  if (j.contains("seeds")) s.seeds = j.at("seeds").get<long>();
  if (j.contains("system")) s.system = j.at("system").get<std::string>();
  if (j.contains("forms")) s.forms = long_matrix(j.at("forms"), "forms");
  if (j.contains("hyperplane")) s.hyperplane = j.at("hyperplane").get<std::vector<long>>();
  if (j.contains("line")) s.line = j.at("line").get<std::vector<long>>();
  return s;
}

nlohmann::ordered_json parameters_json(const Scenario& s) {
  ordered_json p;
  p["samples"] = s.samples;
  p["certify"] = s.certify;
  p["force"] = s.force;
  if (s.command == "togliatti") {
    p["model"] = s.model;
    p["variety"] = s.variety;
  } else if (s.command == "veronese") {
    p["n"] = s.n;
    p["points"] = s.points ? ordered_json(*s.points) : ordered_json(nullptr);
  } else if (s.command == "segre-section") {
    p["N"] = s.N;
  } else if (s.command == "polarity-rnc") {
    p["degree"] = s.degree;
    p["trials"] = s.trials;
  } else if (s.command == "splitting") {
    p["system"] = s.system;
    p["seeds"] = s.seeds;
  } else if (s.command == "segre-parity") {
    p["n_max"] = s.n_max;
  }
  if (s.forms) p["forms"] = *s.forms;
  if (s.hyperplane) p["hyperplane"] = *s.hyperplane;
  if (s.line) p["line"] = *s.line;
  return p;
}

Report run_togliatti(const Scenario& s) { return run_with(s, togliatti); }
Report run_veronese(const Scenario& s) { return run_with(s, veronese_run); }
Report run_segre_section(const Scenario& s) { return run_with(s, segre_section); }
Report run_polarity_rnc(const Scenario& s) { return run_with(s, polarity_rnc); }
Report run_search_cubics(const Scenario& s) { return run_with(s, search_cubics); }
Report run_splitting(const Scenario& s) { return run_with(s, splitting); }
Report run_segre_parity(const Scenario& s) { return run_with(s, segre_parity); }

Report run_scenario(const Scenario& s) {
  if (s.command == "togliatti") return run_togliatti(s);
  if (s.command == "veronese") return run_veronese(s);
  if (s.command == "segre-section") return run_segre_section(s);
  if (s.command == "polarity-rnc") return run_polarity_rnc(s);
  if (s.command == "search-cubics") return run_search_cubics(s);
  if (s.command == "splitting") return run_splitting(s);
  if (s.command == "segre-parity") return run_segre_parity(s);
  return run_with(s, togliatti);  // validate() rejects the unknown command
}

}  // namespace osculum::cli
