#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "osculum/linalg.hpp"
#include "osculum/varieties.hpp"

namespace osculum {

enum class Layers {
  All,       // every multi-index of order 0..k
  TopOrder,  // order exactly k; spans the same space when degree >= k (Euler)
};

struct PartialsMatrix {
  ExactMatrix matrix;  // one row per coordinate, one column per multi-index
  std::vector<Monomial> multi_indices;
};

// Symbolic when `point` is empty, otherwise evaluated at the parameter point.
PartialsMatrix partials_matrix(const ParamVariety& v, unsigned k,
                               std::span<const Rational> point = {}, Layers layers = Layers::All);

// Projective dimension of T^k at a rational parameter point.
long osc_dim(const ParamVariety& v, unsigned k, std::span<const Rational> point);

struct GenericOscDim {
  long dim = 0;
  RankLevel level = RankLevel::SampledOnly;
  std::string note;
};
GenericOscDim generic_osc_dim(const ParamVariety& v, unsigned k, const GenericRankOptions& options = {});

long expected_osc_dim(const ParamVariety& v, unsigned k);
long laplace_defect(const ParamVariety& v, unsigned k, const GenericRankOptions& options = {});

ProjPoint osculating_hyperplane(const ParamVariety& v, unsigned k, std::span<const Rational> point);

struct CommonPointOptions {
  std::size_t samples = 3;  // consecutive samples that must add no new functional
  std::uint64_t seed = 20060403;
  long sample_bound = 999;
  std::size_t max_samples = 0;  // 0: a default proportional to the ambient dimension
};

enum class CommonPointStatus { Found, Absent, Underdetermined };

struct CommonPointSearch {
  CommonPointStatus status = CommonPointStatus::Absent;
  std::optional<ProjPoint> point;
  std::vector<std::vector<Rational>> common_space;  // basis when not unique
  std::size_t samples_used = 0;
  std::size_t resamples = 0;
  long generic_dim = 0;
};

CommonPointSearch find_common_point(const ParamVariety& v, unsigned k,
                                    const CommonPointOptions& options = {});

enum class CertificationMode { Sampled, Certified };
enum class Verdict { CommonPointVerified, NoCommonPoint, LaplaceDegenerate };

struct OscCertificate {
  std::string variety;
  unsigned k = 0;
  long generic_dim = 0;
  long expected_dim = 0;
  long defect = 0;
  std::optional<ProjPoint> candidate;
  CertificationMode mode = CertificationMode::Sampled;
  Verdict verdict = Verdict::NoCommonPoint;
  std::string method;
  std::string note;
};

struct CertifyOptions {
  bool certify = true;
  std::uint64_t seed = 20060403;
  std::size_t grid_budget = 250000;
  // Candidate osculating hyperplane at the generic point, as polynomials in
  // the source variables. When present the rank route is replaced by
  // checking that it annihilates every partial and the candidate.
  std::optional<std::vector<MPoly>> annihilator;
};

OscCertificate certify_common_point(const ParamVariety& v, unsigned k,
                                    const std::optional<ProjPoint>& candidate,
                                    const CertifyOptions& options = {});

std::string to_string(CertificationMode mode);
std::string to_string(Verdict verdict);
std::string to_string(CommonPointStatus status);

nlohmann::ordered_json to_json(const OscCertificate& certificate);

}  // namespace osculum
