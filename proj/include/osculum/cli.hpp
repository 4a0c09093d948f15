#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace osculum::cli {

inline constexpr const char* kToolName = "oscverify";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode { kPassed = 0, kNegative = 1, kDegenerate = 2 };

struct Scenario {
  std::string command;
  std::uint64_t seed = 20060403;
  std::size_t samples = 3;
  bool certify = false;  // demand certified certificates even past the desk caps
  bool force = false;    // lift the desk-scale caps

  std::string model = "veronese-projection";  // togliatti: or segre-section
  std::string variety = "togliatti";          // togliatti: or veronese-full
  long n = 1;                                 // veronese
  std::optional<long> points;                 // veronese: projection points (default 2n+1)
  long N = 3;                                 // segre-section
  long degree = 5;                            // polarity-rnc
  long trials = 100;                          // polarity-rnc tuples
  long n_max = 6;                             // segre-parity
  long seeds = 10;                            // splitting lines
  std::string system = "togliatti";           // splitting: togliatti, random, nonexample, custom
  std::optional<std::vector<std::vector<long>>> forms;
  std::optional<std::vector<long>> hyperplane;
  std::optional<std::vector<long>> line;
};

struct Report {
  nlohmann::ordered_json json;
  int exit_code = kPassed;
  std::vector<std::string> summary;  // human-oriented lines
};

const std::vector<std::string>& commands();

// Throws std::invalid_argument on unknown fields or values.
Scenario parse_scenario(const nlohmann::json& j);
nlohmann::ordered_json parameters_json(const Scenario& s);

// Validates and runs; degenerate input becomes an exit-code-2 report.
Report run_scenario(const Scenario& s);

Report run_togliatti(const Scenario& s);
Report run_veronese(const Scenario& s);
Report run_segre_section(const Scenario& s);
Report run_polarity_rnc(const Scenario& s);
Report run_search_cubics(const Scenario& s);
Report run_splitting(const Scenario& s);
Report run_segre_parity(const Scenario& s);

}  // namespace osculum::cli
