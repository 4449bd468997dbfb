#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbitc/common.hpp"

namespace orbitc {

/// A root as an integer coordinate vector (length n, or n+1 for family A).
struct Root {
  std::vector<std::int8_t> coords;

  auto operator<=>(const Root&) const = default;

  Root negated() const {
    Root r = *this;
    for (auto& c : r.coords) c = static_cast<std::int8_t>(-c);
    return r;
  }
  int length_sq() const {
    int s = 0;
    for (auto c : coords) s += int(c) * int(c);
    return s;
  }
  int dot(const Root& o) const {
    int s = 0;
    for (size_t k = 0; k < coords.size(); ++k) s += int(coords[k]) * int(o.coords[k]);
    return s;
  }
  bool positive() const {
    for (auto c : coords)
      if (c != 0) return c > 0;
    return false;
  }
};

Root make_root(std::vector<int> coords);

struct RootSystem {
  Family family;
  int rank;
  std::vector<Root> roots;           // sorted lexicographically
  std::vector<Root> positive_roots;  // first nonzero coordinate positive

  int dim() const { return coord_dim(family, rank); }
  bool contains(const Root& r) const {
    return std::binary_search(roots.begin(), roots.end(), r);
  }
};

/// Full root set of A_n / B_n / C_n / D_n. Throws std::domain_error below the
/// family's minimum rank (A: 1, B/C/D: 2 -- C2, D2, D3 are allowed for
/// base-case use).
RootSystem build_root_system(Family family, int rank);

/// |W|: (n+1)! for A_n, 2^n n! for B_n/C_n, 2^(n-1) n! for D_n.
std::uint64_t weyl_order(Family family, int rank);

/// Signed permutation. perm[j] = image of coordinate j; signs indexed by the
/// target coordinate (all +1 for A; even number of -1 for D).
struct WeylElement {
  std::vector<int> perm;
  std::vector<std::int8_t> signs;

  bool operator==(const WeylElement&) const = default;
};

WeylElement weyl_identity(Family family, int rank);

/// result[perm[j]] = signs[perm[j]] * r[j].
Root apply_weyl(const WeylElement& w, const Root& r);

inline constexpr std::uint64_t kDefaultWeylCap = 2'000'000;

/// Enumerates W in a fixed deterministic order (permutations lexicographic,
/// sign masks increasing). Throws CapacityError if |W| > cap.
void for_each_weyl(Family family, int rank, std::uint64_t cap,
                   const std::function<void(const WeylElement&)>& fn);

std::vector<WeylElement> weyl_elements(Family family, int rank,
                                       std::uint64_t cap = kDefaultWeylCap);

/// A subsystem closed under negation, stored sorted. Carries its ambient
/// family/rank so it is self-contained.
struct RootSubsystem {
  Family family;
  int rank;
  std::vector<Root> roots;

  bool operator==(const RootSubsystem&) const = default;
  bool contains(const Root& r) const {
    return std::binary_search(roots.begin(), roots.end(), r);
  }
  int size() const { return static_cast<int>(roots.size()); }
};

/// Validates membership in the ambient system and closure under negation.
RootSubsystem make_subsystem(const RootSystem& sys, std::vector<Root> roots);

RootSubsystem apply_weyl(const WeylElement& w, const RootSubsystem& s);

/// One irreducible factor of a subsystem's Lie type.
struct TypeFactor {
  enum class Kind { SU, B, C, D } kind;
  int order;  // SU(order), or the subscript of B/C/D

  auto operator<=>(const TypeFactor&) const = default;
  std::string to_string() const;
};

std::string factors_to_string(const std::vector<TypeFactor>& factors);

/// Irreducible factors of the subsystem, identified against the classical
/// tables. B1 = {+-e}, C1 = {+-2e} and SU(2) = {+-(e_i - e_j)} are
/// distinguished by root length; D_J by support size = rank; orthogonal
/// same-support pairs {+-(e_i - e_j)}, {+-(e_i + e_j)} merge to D2. Factors
/// are returned sorted: B/C/D parts first (descending), then SU parts.
std::vector<TypeFactor> subsystem_type(const RootSubsystem& s);

/// Witness w with w(s1) = s2 setwise, if one exists. Brute force over W.
std::optional<WeylElement> conjugacy_witness(const RootSystem& sys, const RootSubsystem& s1,
                                             const RootSubsystem& s2,
                                             std::uint64_t cap = kDefaultWeylCap);

bool is_weyl_conjugate(const RootSystem& sys, const RootSubsystem& s1, const RootSubsystem& s2,
                       std::uint64_t cap = kDefaultWeylCap);

/// True iff some w in W maps s1 into a subset of s2.
bool is_conjugate_to_subset(const RootSystem& sys, const RootSubsystem& s1,
                            const RootSubsystem& s2, std::uint64_t cap = kDefaultWeylCap);

/// All subsystems Psi of rank n-1 with span(Psi) intersect Phi = Psi,
/// deduplicated, in canonical (sorted) order. Enumerates (n-1)-subsets of the
/// positive roots; throws CapacityError when the subset count exceeds cap.
std::vector<RootSubsystem> closed_corank1_subsystems(const RootSystem& sys,
                                                     std::uint64_t cap = kDefaultWeylCap);

}  // namespace orbitc
