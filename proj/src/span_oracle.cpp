#include "orbitc/span_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbitc/matrix.hpp"
#include "orbitc/matrix_model.hpp"

namespace orbitc {

std::string to_string(OracleMode m) { return m == OracleMode::exact ? "exact" : "numeric"; }

namespace {

constexpr int kMaxOracleDim = 1000;

struct TupleDims {
  int target_dim;
  int tangent_total;
};

TupleDims tuple_dims(std::span<const TorusElement> tuple) {
  const RootSystem sys = build_root_system(tuple[0].family, tuple[0].rank);
  const int phi = static_cast<int>(sys.roots.size());
  int total = 0;
  for (const auto& x : tuple) total += phi - annihilator(sys, x).size();
  return {tuple[0].rank + phi, total};
}

void check_tuple(std::span<const TorusElement> tuple) {
  if (tuple.size() < 2) throw std::domain_error("a tuple needs at least two elements");
  for (const auto& x : tuple) {
    if (x.family != tuple[0].family || x.rank != tuple[0].rank)
      throw std::domain_error("tuple elements must share one family and rank");
    if (is_zero_element(x)) throw std::domain_error("tuple elements must be nonzero");
  }
}

template <class S, class Real>
int trial_rank(std::span<const TorusElement> tuple, std::uint64_t trial_seed, int widen,
               OracleMode mode, double tolerance, std::vector<std::uint64_t>* element_seeds) {
  std::vector<std::vector<Real>> rows;
  for (size_t i = 0; i < tuple.size(); ++i) {
    const std::uint64_t gseed = derive_seed(trial_seed, i);
    if (element_seeds) element_seeds->push_back(gseed);
    std::vector<AlgebraMatrix<S>> tb;
    if (i == 0) {  // g_1 = Id
      tb = tangent_basis<S>(tuple[i], nullptr);
    } else {
      GroupMatrix<S> g = [&] {
        if constexpr (std::is_same_v<S, CRat>)
          return random_group_exact(tuple[i].family, tuple[i].rank, gseed, widen);
        else
          return random_group_numeric(tuple[i].family, tuple[i].rank, gseed);
      }();
      tb = tangent_basis<S>(tuple[i], &g);
    }
    for (const auto& a : tb) rows.push_back(flatten(a));
  }
  if (mode == OracleMode::exact) {
    if constexpr (std::is_same_v<Real, Rat>) return rank_rows_exact(rows);
  } else {
    if constexpr (std::is_same_v<Real, double>) return rank_rows_numeric(rows, tolerance);
  }
  throw std::logic_error("trial_rank: scalar/mode mismatch");
}

}  // namespace

SpanReport verify_span(std::span<const TorusElement> tuple, int trials, std::uint64_t seed,
                       OracleMode mode, double tolerance) {
  check_tuple(tuple);
  if (trials < 1) throw std::domain_error("verify_span needs at least one trial");

  const TupleDims dims = tuple_dims(tuple);
  if (dims.target_dim > kMaxOracleDim)
    throw CapacityError("oracle dimension " + std::to_string(dims.target_dim) +
                        " above the memory budget cap " + std::to_string(kMaxOracleDim));

  SpanReport report;
  report.target_dim = dims.target_dim;
  report.tangent_total = dims.tangent_total;
  report.mode = mode;
  report.tolerance = mode == OracleMode::numeric ? tolerance : 0.0;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    const int widen = t / 8;  // widen Cayley coefficients after repeated deficiency
    std::vector<std::uint64_t> element_seeds;
    int rank;
    if (mode == OracleMode::exact)
      rank = trial_rank<CRat, Rat>(tuple, trial_seed, widen, mode, tolerance, &element_seeds);
    else
      rank = trial_rank<std::complex<double>, double>(tuple, trial_seed, widen, mode, tolerance,
                                                      &element_seeds);
    if (rank > std::min(report.target_dim, report.tangent_total))
      throw std::logic_error("achieved rank exceeds the tangent-dimension ceiling");
    report.trials.push_back(SpanTrial{trial_seed, rank});
    if (mode == OracleMode::exact && rank == report.target_dim && !report.certificate)
      report.certificate = SpanCertificate{std::move(element_seeds), true};
  }
  return report;
}

EigenvalueWitnessReport eigenvalue_witness(std::span<const TorusElement> tuple, int trials,
                                           std::uint64_t seed, double tolerance) {
  check_tuple(tuple);
  if (is_eligible(tuple))
    throw std::domain_error("eigenvalue_witness applies only to non-eligible tuples");

  const Family fam = tuple[0].family;
  bool all_dominant_b = fam == Family::B;
  Rat expected(0);
  for (const auto& x : tuple) {
    const ElementType t = element_type(x);
    if (fam == Family::A) {
      // value of the first largest block in canonical order
      expected += canonical_values(x).front();
    } else if (!t.dominant_block()) {
      expected += canonical_values(x)[t.zero_block];  // largest-block magnitude
      if (fam == Family::B) all_dominant_b = false;
    }
  }

  EigenvalueWitnessReport report;
  report.trials = trials;
  report.expected = expected.get_d();
  report.multiplicity_two = all_dominant_b;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    AlgebraMatrix<std::complex<double>> sum{fam, tuple[0].rank,
                                            Mat<std::complex<double>>(model_size(fam, tuple[0].rank),
                                                                      model_size(fam, tuple[0].rank))};
    for (size_t i = 0; i < tuple.size(); ++i) {
      const GroupMatrix<std::complex<double>> g =
          random_group_numeric(fam, tuple[0].rank, derive_seed(trial_seed, i));
      sum.m = sum.m + adjoint(g, embed_torus<std::complex<double>>(tuple[i])).m;
    }
    const std::vector<double> eigs = skew_eigenvalues(sum);
    double scale = 1.0;
    for (double e : eigs) scale = std::max(scale, std::abs(e));

    double dev;
    if (all_dominant_b) {
      // 0 must appear with multiplicity at least two
      std::vector<double> mags;
      for (double e : eigs) mags.push_back(std::abs(e));
      std::sort(mags.begin(), mags.end());
      dev = mags.size() >= 2 ? mags[1] : std::numeric_limits<double>::infinity();
    } else {
      dev = std::numeric_limits<double>::infinity();
      for (double e : eigs) dev = std::min(dev, std::abs(e - report.expected));
    }
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev <= tolerance * scale) ++report.matched;
  }
  return report;
}

std::optional<DimensionShortfall> dimension_shortcut(std::span<const TorusElement> tuple) {
  check_tuple(tuple);
  const TupleDims dims = tuple_dims(tuple);
  if (dims.tangent_total < dims.target_dim)
    return DimensionShortfall{dims.tangent_total, dims.target_dim};
  return std::nullopt;
}

}  // namespace orbitc
