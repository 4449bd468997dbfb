#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitc/classifier.hpp"
#include "orbitc/common.hpp"

namespace orbitc {

enum class OracleMode { numeric, exact };

std::string to_string(OracleMode m);

struct SpanTrial {
  std::uint64_t seed;  // trial-level seed; element seeds derive from it
  int achieved_rank;
};

struct SpanCertificate {
  std::vector<std::uint64_t> seeds;  // group-element seeds of the witness trial
  bool exact;
};

struct SpanReport {
  int target_dim = 0;            // n + |Phi|
  int tangent_total = 0;         // sum |N_{X_i}|, the per-trial rank ceiling
  OracleMode mode = OracleMode::numeric;
  double tolerance = 0.0;        // numeric mode only
  std::vector<SpanTrial> trials;
  std::optional<SpanCertificate> certificate;

  int max_rank() const {
    int m = 0;
    for (const auto& t : trials) m = std::max(m, t.achieved_rank);
    return m;
  }
  bool full_rank_found() const { return max_rank() == target_dim; }
};

inline constexpr int kDefaultTrials = 8;
inline constexpr double kDefaultTolerance = 1e-8;

/// Samples (Id, g_2, ..., g_L), stacks the tangent bases of the Ad(g_i)X_i
/// and ranks the stack against dim g. A full-rank exact trial is a proof of
/// absolute continuity (the span condition holds on an open dense set of full
/// measure once it holds anywhere); all-deficient is evidence of singularity
/// only.
SpanReport verify_span(std::span<const TorusElement> tuple, int trials, std::uint64_t seed,
                       OracleMode mode, double tolerance = kDefaultTolerance);

struct EigenvalueWitnessReport {
  int trials = 0;
  int matched = 0;
  double expected = 0.0;       // the forced eigenvalue (imaginary part)
  bool multiplicity_two = false;  // family B with every element dominant B
  double max_deviation = 0.0;

  bool all_matched() const { return matched == trials; }
};

/// Necessity witness for non-eligible tuples: every sampled sum of adjoint
/// translates carries the forced eigenvalue (with multiplicity two when the
/// family is B and all elements are dominant B type). Throws std::domain_error
/// on eligible input.
EigenvalueWitnessReport eigenvalue_witness(std::span<const TorusElement> tuple, int trials,
                                           std::uint64_t seed, double tolerance = kDefaultTolerance);

struct DimensionShortfall {
  int tangent_total;  // sum |N_{X_i}|
  int algebra_dim;    // n + |Phi|
};

/// Deterministic singularity proof when the tangent dimensions cannot reach
/// dim g even before sampling; nullopt otherwise.
std::optional<DimensionShortfall> dimension_shortcut(std::span<const TorusElement> tuple);

}  // namespace orbitc
