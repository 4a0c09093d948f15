#include "osculum/osculation.hpp"

#include <algorithm>

#include "osculum/errors.hpp"
#include "osculum/random.hpp"

namespace osculum {

namespace {

bool top_order_suffices(const ParamVariety& v, unsigned k) { return k > 0 && v.degree() >= k; }

Layers default_layers(const ParamVariety& v, unsigned k) {
  return top_order_suffices(v, k) ? Layers::TopOrder : Layers::All;
}

std::vector<std::vector<std::size_t>> groups_of(const ParamVariety& v) { return v.shape().groups; }

// Symbolic partials with identically zero columns removed; they never
// change a rank.
ExactMatrix pruned_symbolic(const ParamVariety& v, unsigned k) {
  auto pm = partials_matrix(v, k, {}, default_layers(v, k));
  if (pm.matrix.is_scalar()) return pm.matrix;
  std::vector<std::size_t> keep, rows(pm.matrix.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < pm.matrix.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < pm.matrix.rows() && zero; ++i) zero = pm.matrix.poly_at(i, j).is_zero();
    if (!zero) keep.push_back(j);
  }
  return pm.matrix.submatrix(rows, keep);
}

std::vector<Rational> random_parameters(const ParamVariety& v, Rng& rng, long bound) {
  for (;;) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < v.variable_count(); ++i) p.emplace_back(rng.uniform(-bound, bound));
    bool ok = true;
    for (const auto& g : v.shape().groups)
      ok = ok && std::any_of(g.begin(), g.end(), [&](std::size_t i) { return p[i] != 0; });
    if (ok) return p;
  }
}

Integer binomial(unsigned n, unsigned r) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

}  // namespace

PartialsMatrix partials_matrix(const ParamVariety& v, unsigned k, std::span<const Rational> point,
                               Layers layers) {
  const bool symbolic = point.empty();
  if (!symbolic) v.check_point(point);
  PartialsMatrix out;
  out.multi_indices = layers == Layers::All ? monomials_up_to_degree(v.variable_count(), k)
                                            : monomials_of_degree(v.variable_count(), k);
  const auto& coords = v.coordinates();
  const std::size_t rows = coords.size(), cols = out.multi_indices.size();
  if (symbolic) {
    std::vector<MPoly> e(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        e[i * cols + j] = partial_derivative(coords[i], out.multi_indices[j]);
    out.matrix = ExactMatrix(rows, cols, std::move(e));
  } else {
    std::vector<Rational> e(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        e[i * cols + j] = evaluate(partial_derivative(coords[i], out.multi_indices[j]), point);
    out.matrix = ExactMatrix(rows, cols, std::move(e));
  }
  return out;
}

long osc_dim(const ParamVariety& v, unsigned k, std::span<const Rational> point) {
  if (point.empty()) throw DimensionMismatch("osc_dim needs a parameter point");
  return static_cast<long>(rank_exact(partials_matrix(v, k, point).matrix)) - 1;
}

GenericOscDim generic_osc_dim(const ParamVariety& v, unsigned k, const GenericRankOptions& options) {
  auto opts = options;
  if (opts.homogeneous_groups.empty()) opts.homogeneous_groups = groups_of(v);
  const auto r = generic_rank(pruned_symbolic(v, k), opts);
  return {static_cast<long>(r.rank) - 1, r.level, r.note};
}

long expected_osc_dim(const ParamVariety& v, unsigned k) {
  // count[j] = multi-indices of order j in the affine parameters that can
  // act nontrivially on coordinates of the given degrees.
  std::vector<Integer> count(k + 1, 0);
  count[0] = 1;
  const auto& shape = v.shape();
  for (std::size_t g = 0; g < shape.groups.size(); ++g) {
    const std::size_t params = shape.groups[g].size() - 1;
    std::vector<Integer> next(k + 1, 0);
    for (unsigned a = 0; a <= k; ++a) {
      if (count[a] == 0) continue;
      for (unsigned b = 0; a + b <= k && b <= shape.degrees[g]; ++b) {
        const Integer ways = params == 0 ? Integer(b == 0 ? 1 : 0)
                                         : binomial(b + params - 1, static_cast<unsigned>(params - 1));
        next[a + b] += count[a] * ways;
      }
    }
    count = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : count) total += c;
  const long ambient = static_cast<long>(v.ambient_dim());
  if (total - 1 >= ambient) return ambient;
  return total.get_si() - 1;
}

long laplace_defect(const ParamVariety& v, unsigned k, const GenericRankOptions& options) {
  return expected_osc_dim(v, k) - generic_osc_dim(v, k, options).dim;
}

ProjPoint osculating_hyperplane(const ParamVariety& v, unsigned k, std::span<const Rational> point) {
  const auto pm = partials_matrix(v, k, point);
  const auto lk = left_kernel_basis(pm.matrix);
  if (lk.size() != 1)
    throw DegenerateInput("T^" + std::to_string(k) + " has codimension " + std::to_string(lk.size()) +
                          " at this point, not 1");
  return ProjPoint(lk.vectors[0]);
}

CommonPointSearch find_common_point(const ParamVariety& v, unsigned k, const CommonPointOptions& options) {
  if (options.samples < 2) throw DegenerateInput("find_common_point needs samples >= 2");
  const std::size_t n = v.coordinates().size();
  const std::size_t cap = options.max_samples ? options.max_samples : 4 * n + 10;
  const auto d = partials_matrix(v, k, {}, default_layers(v, k)).matrix;

  GenericRankOptions probe;
  probe.seed = derive_seed(options.seed, 0);
  probe.sample_bound = options.sample_bound;
  const std::size_t target = generic_rank(d, probe).rank;

  CommonPointSearch out;
  out.generic_dim = static_cast<long>(target) - 1;
  Rng rng(derive_seed(options.seed, 1));
  std::vector<std::vector<Rational>> functionals;  // reduced echelon rows
  std::size_t quiet = 0;
  while (quiet < options.samples && out.samples_used < cap && functionals.size() < n) {
    ExactMatrix s;
    std::size_t attempts = 0;
    for (;;) {
      const auto p = random_parameters(v, rng, options.sample_bound);
      s = d.evaluate(p);
      if (rank_exact(s) == target) break;
      ++out.resamples;
      if (++attempts >= 10)
        throw DegenerateSampling("ten consecutive samples were osculating-singular");
    }
    ++out.samples_used;
    const auto lk = left_kernel_basis(s);
    auto stacked = functionals;
    stacked.insert(stacked.end(), lk.vectors.begin(), lk.vectors.end());
    const std::size_t before = functionals.size();
    if (!stacked.empty()) functionals = reduced_row_echelon(ExactMatrix::from_rows(stacked)).rows;
    quiet = functionals.size() > before ? 0 : quiet + 1;
  }
  if (functionals.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n, 0);
      e[i] = 1;
      out.common_space.push_back(std::move(e));
    }
  } else {
    out.common_space = kernel_basis(ExactMatrix::from_rows(functionals)).vectors;
  }
  switch (out.common_space.size()) {
    case 0:
      out.status = CommonPointStatus::Absent;
      break;
    case 1:
      out.status = CommonPointStatus::Found;
      out.point = ProjPoint(out.common_space[0]);
      break;
    default:
      out.status = CommonPointStatus::Underdetermined;
  }
  return out;
}

namespace {

Verdict negative_verdict(long defect) {
  return defect > 0 ? Verdict::LaplaceDegenerate : Verdict::NoCommonPoint;
}

// Checks a proposed generic osculating hyperplane. Returns false when the
// hint does not annihilate T^k or the sampled rank is too small, in which
// case the caller falls back to the rank route.
bool certify_with_annihilator(const ParamVariety& v, unsigned k, const std::vector<MPoly>& h,
                              const CertifyOptions& options, OscCertificate& cert) {
  const std::size_t n = v.coordinates().size();
  if (h.size() != n) throw DimensionMismatch("annihilator hint has the wrong length");
  for (const auto& p : h)
    if (p.variable_count() != v.variable_count())
      throw DimensionMismatch("annihilator hint lives in another ring");
  if (std::all_of(h.begin(), h.end(), [](const MPoly& p) { return p.is_zero(); })) return false;

  const auto d = partials_matrix(v, k, {}, default_layers(v, k)).matrix;
  std::vector<MPoly> column(n);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = d.entry(i, j, v.variable_count());
    if (!dot(h, column).is_zero()) return false;
  }
  Rng rng(derive_seed(options.seed, 2));
  bool full = false;
  for (int attempt = 0; attempt < 10 && !full; ++attempt)
    full = rank_exact(d.evaluate(random_parameters(v, rng, 999))) + 1 == n;
  if (!full) return false;

  cert.generic_dim = static_cast<long>(n) - 2;
  cert.defect = cert.expected_dim - cert.generic_dim;
  cert.mode = CertificationMode::Certified;
  cert.method = "annihilator";
  if (!cert.candidate) {
    cert.verdict = negative_verdict(cert.defect);
    return true;
  }
  const auto& c = cert.candidate->coords();
  std::vector<MPoly> cpoly;
  for (const auto& x : c) cpoly.push_back(MPoly::constant(v.variable_count(), x));
  cert.verdict = dot(h, cpoly).is_zero() ? Verdict::CommonPointVerified : negative_verdict(cert.defect);
  cert.note = "generic osculating hyperplane annihilates every partial identically";
  return true;
}

}  // namespace

OscCertificate certify_common_point(const ParamVariety& v, unsigned k,
                                    const std::optional<ProjPoint>& candidate,
                                    const CertifyOptions& options) {
  OscCertificate cert;
  cert.variety = v.name();
  cert.k = k;
  cert.expected_dim = expected_osc_dim(v, k);
  cert.candidate = candidate;
  if (candidate && candidate->size() != v.coordinates().size())
    throw DimensionMismatch("candidate point lives in another ambient space");

  if (options.annihilator && certify_with_annihilator(v, k, *options.annihilator, options, cert))
    return cert;

  GenericRankOptions opts;
  opts.certify = options.certify;
  opts.seed = options.seed;
  opts.grid_budget = options.grid_budget;
  opts.homogeneous_groups = groups_of(v);
  const auto d = pruned_symbolic(v, k);
  const auto r = generic_rank(d, opts);
  cert.generic_dim = static_cast<long>(r.rank) - 1;
  cert.defect = cert.expected_dim - cert.generic_dim;
  cert.method = "rank";
  cert.note = r.note;
  if (!candidate) {
    cert.mode = r.level == RankLevel::Certified ? CertificationMode::Certified : CertificationMode::Sampled;
    cert.verdict = negative_verdict(cert.defect);
    return cert;
  }
  const auto column = ExactMatrix::from_columns({candidate->coords()}, candidate->size());
  const auto ra = generic_rank(d.hconcat(column), opts);
  const bool both = r.level == RankLevel::Certified && ra.level == RankLevel::Certified;
  cert.mode = both ? CertificationMode::Certified : CertificationMode::Sampled;
  if (!both) cert.note = r.level == RankLevel::Certified ? ra.note : r.note;
  cert.verdict = ra.rank == r.rank ? Verdict::CommonPointVerified : negative_verdict(cert.defect);
  return cert;
}

std::string to_string(CertificationMode mode) {
  return mode == CertificationMode::Certified ? "certified" : "sampled";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::CommonPointVerified:
      return "common-point-verified";
    case Verdict::NoCommonPoint:
      return "no-common-point";
    case Verdict::LaplaceDegenerate:
      return "laplace-degenerate";
  }
  throw InternalError("unknown verdict");
}

std::string to_string(CommonPointStatus status) {
  switch (status) {
    case CommonPointStatus::Found:
      return "found";
    case CommonPointStatus::Absent:
      return "absent";
    case CommonPointStatus::Underdetermined:
      return "underdetermined";
  }
  throw InternalError("unknown status");
}

nlohmann::ordered_json to_json(const OscCertificate& c) {
  nlohmann::ordered_json j;
  j["variety"] = c.variety;
  j["k"] = c.k;
  j["generic_dim"] = c.generic_dim;
  j["expected_dim"] = c.expected_dim;
  j["defect"] = c.defect;
  if (c.candidate) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : c.candidate->coords()) arr.push_back(to_string(x));
    j["candidate"] = std::move(arr);
  } else {
    j["candidate"] = nullptr;
  }
  j["mode"] = to_string(c.mode);
  j["verdict"] = to_string(c.verdict);
  j["method"] = c.method;
  return j;
}

}  // namespace osculum
