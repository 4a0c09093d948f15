#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "osculum/cli.hpp"

namespace oc = osculum::cli;

namespace {

struct Common {
  std::uint64_t seed = 20060403;
  std::size_t samples = 3;
  bool certify = false;
  bool force = false;
  std::string json_path;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Random seed");
  app->add_option("--samples", c.samples, "Consecutive samples without new functionals before stopping");
  app->add_flag("--certify", c.certify, "Demand certified results even beyond desk scale");
  app->add_flag("--force", c.force, "Allow parameters beyond desk scale");
  app->add_option("--json", c.json_path, "Write the JSON report to this path");
}

int emit(const oc::Report& r, const std::string& json_path) {
  for (const auto& line : r.summary) std::cout << line << '\n';
  std::cout << (r.exit_code == oc::kPassed ? "PASSED" : r.exit_code == oc::kNegative ? "NEGATIVE" : "DEGENERATE")
            << '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << '\n';
      return oc::kDegenerate;
    }
    out << r.json.dump(2) << '\n';
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of osculating-space incidences"};
  app.set_version_flag("--version", oc::kToolVersion);
  app.require_subcommand(1);

  Common common;
  oc::Scenario s;
  std::vector<long> hyperplane, line;
  long points = 0;

  auto* tog = app.add_subcommand("togliatti", "Common point of the Togliatti osculating hyperplanes");
  add_common(tog, common);
  tog->add_option("--model", s.model, "veronese-projection or segre-section")
      ->check(CLI::IsMember({"veronese-projection", "segre-section"}));
  tog->add_option("--variety", s.variety, "togliatti or veronese-full")
      ->check(CLI::IsMember({"togliatti", "veronese-full"}));
  tog->add_option("--hyperplane", hyperplane, "Hyperplane of P^7 for the section model (8 integers)")
      ->delimiter(',');

  auto* ver = app.add_subcommand("veronese", "Projected v_{2n+1}(P^2) and its 2n-tangent hyperplanes");
  add_common(ver, common);
  ver->add_option("--n", s.n, "n >= 1");
  ver->add_option("--points", points, "Number of projection points (default 2n+1)");

  auto* seg = app.add_subcommand("segre-section", "Hyperplane section of Seg(1,...,1) with N factors");
  add_common(seg, common);
  seg->add_option("--N", s.N, "Odd number of factors >= 3");
  seg->add_option("--hyperplane", hyperplane, "2^N integers in binary-counter order")->delimiter(',');

  auto* pol = app.add_subcommand("polarity-rnc", "Product of binary forms in the span of their powers");
  add_common(pol, common);
  pol->add_option("--degree", s.degree, "Number of forms = degree");
  pol->add_option("--trials", s.trials, "Random tuples to test");

  auto* search = app.add_subcommand("search-cubics", "Exhaustive search over monomial cubic systems");
  add_common(search, common);

  auto* split = app.add_subcommand("splitting", "Splitting type of the syzygy bundle on lines");
  add_common(split, common);
  split->add_option("--system", s.system, "togliatti, random, nonexample or custom")
      ->check(CLI::IsMember({"togliatti", "random", "nonexample", "custom"}));
  split->add_option("--seeds", s.seeds, "Number of random lines");
  split->add_option("--line", line, "Extra line a,b,c to evaluate")->delimiter(',');

  auto* par = app.add_subcommand("segre-parity", "Symmetry of the Kronecker powers of the symplectic matrix");
  add_common(par, common);
  par->add_option("--n-max", s.n_max, "Largest n (<= 6)");

  std::string scenario_path, run_json;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  run->add_option("--json", run_json, "Write the JSON report to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::ifstream in(scenario_path);
      const auto scenario = oc::parse_scenario(nlohmann::json::parse(in));
      return emit(oc::run_scenario(scenario), run_json);
    }
    for (auto* sub : app.get_subcommands()) s.command = sub->get_name();
    s.seed = common.seed;
    s.samples = common.samples;
    s.certify = common.certify;
    s.force = common.force;
    if (!hyperplane.empty()) s.hyperplane = hyperplane;
    if (!line.empty()) s.line = line;
    if (ver->parsed() && ver->count("--points")) s.points = points;
    return emit(oc::run_scenario(s), common.json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return oc::kDegenerate;
  }
}
