#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbitc/classifier.hpp"
#include "orbitc/common.hpp"
#include "orbitc/root_system.hpp"

namespace orbitc {

/// Exact minimum of |phi_x intersect w(psi)| over the whole Weyl group,
/// with a minimizing witness if requested.
int min_intersection(const RootSystem& sys, const RootSubsystem& phi_x, const RootSubsystem& psi,
                     std::uint64_t weyl_cap = kDefaultWeylCap, WeylElement* witness = nullptr);

/// One row of the criterion, for a Weyl-conjugacy class of corank-1 closed
/// subsystems Psi.
struct WrightRow {
  RootSubsystem psi;                // class representative
  std::string psi_type;
  int psi_size = 0;
  int class_size = 0;               // number of subsystems in the class
  long lhs = 0;                     // (L-1)(|Phi| - |Psi|) - 1
  std::vector<int> min_intersections;  // min_w |Phi_{X_i} ^ w(Psi)| per element
  long rhs = 0;                     // sum_i (|Phi_{X_i}| - min_i)
  bool satisfied = false;
};

struct WrightReport {
  int phi_size = 0;
  std::vector<int> phi_x_sizes;
  std::vector<WrightRow> rows;      // deterministic order (by representative)
  bool overall = false;             // all rows satisfied => absolutely continuous

  /// Aligned text table of the per-row quantities.
  std::string table() const;
};

/// The sufficient criterion: checks
///   (L-1)(|Phi|-|Psi|) - 1 >= sum_i (|Phi_{X_i}| - min_w |Phi_{X_i} ^ w Psi|)
/// over every corank-1 closed subsystem class Psi. overall = true proves
/// absolute continuity; false proves nothing.
WrightReport wright_check(std::span<const TorusElement> tuple,
                          std::uint64_t weyl_cap = kDefaultWeylCap);

}  // namespace orbitc
