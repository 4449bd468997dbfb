#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitc/common.hpp"
#include "orbitc/root_system.hpp"

namespace orbitc {

/// A torus element: exact rational block parameters (length rank, or rank+1
/// with zero sum for family A). Sign-sensitive for D_n.
struct TorusElement {
  Family family;
  int rank;
  std::vector<Rat> values;

  bool operator==(const TorusElement&) const = default;
};

/// Validates rank, value count and the zero-sum constraint for A.
TorusElement make_torus_element(Family family, int rank, std::vector<Rat> values);

bool is_zero_element(const TorusElement& x);

/// The Lie type of Phi_X: zero-block size J, multiset of SU block sizes, and
/// the sign class separating the two Weyl classes when family = D and J = 0.
struct ElementType {
  enum class DSign { plus, minus, na };

  Family family = Family::A;
  int rank = 0;
  int zero_block = 0;          // J; always 0 for family A
  std::vector<int> parts;      // descending block sizes
  DSign d_sign = DSign::na;

  bool operator==(const ElementType&) const = default;

  int max_part() const { return parts.empty() ? 0 : parts.front(); }
  /// 2J >= max s_j (families B/C/D only; false for A).
  bool dominant_block() const {
    return family != Family::A && 2 * zero_block >= max_part() && zero_block > 0;
  }
  int s_value() const { return dominant_block() ? 2 * zero_block : max_part(); }

  bool is_su_full() const {  // type SU(n) in D_n
    return family == Family::D && zero_block == 0 && parts.size() == 1 && parts[0] == rank;
  }
  bool is_su_corank1() const {  // type SU(n-1)xD1 or SU(n-1)xSU(1) in D_n
    if (family != Family::D) return false;
    if (zero_block == 1 && parts.size() == 1 && parts[0] == rank - 1) return true;
    return zero_block == 0 && parts.size() == 2 && parts[0] == rank - 1 && parts[1] == 1;
  }

  /// Canonical type-syntax string, e.g. "B2xSU(3)", "SU(4)-", "D1xSU(3)".
  std::string to_string() const;
};

/// All annihilating roots {alpha : alpha(X) = 0}, exact-rational evaluation.
RootSubsystem annihilator(const RootSystem& sys, const TorusElement& x);
RootSubsystem annihilator(const TorusElement& x);

/// |Phi_X| from the type alone: 2J^2 (B/C) or 2J(J-1) (D) for the zero block
/// plus sum s_j (s_j - 1) over the SU blocks.
int annihilator_count(const ElementType& t);

/// Canonicalizes by the Weyl action and classifies. Throws on the zero
/// element (its orbit is a singleton).
ElementType element_type(const TorusElement& x);

/// Weyl-canonical value vector: zeros first, blocks by descending size (ties
/// by increasing magnitude), all entries non-negative except a single minus
/// on the last coordinate for the D sign class "minus".
std::vector<Rat> canonical_values(const TorusElement& x);

/// A canonical witness element of the given type (block values 1, 2, 3, ...).
TorusElement witness_element(const ElementType& t);

/// Every nonzero element type at the given rank: zero-block sizes crossed
/// with partitions of the remaining coordinates, and both sign classes for
/// family D with no zero block. Deterministic order.
std::vector<ElementType> enumerate_element_types(Family family, int rank);

/// S_X: max s_j for A; 2J when dominant, else max s_j, for B/C/D.
int s_value(const TorusElement& x);

/// The rank-lowering reduction: drop a zero coordinate when 2J >= max s_j,
/// else shrink the first largest block (family A re-centers to zero sum).
TorusElement reduce(const TorusElement& x);

/// Sum S_{X_i} <= (L-1)(n+1) for A, <= (L-1)2n for B/C/D.
bool is_eligible(std::span<const TorusElement> tuple);

struct ExceptionalCase {
  char label;  // 'a'..'d', matching the four cases of the definition
  std::string description;
  bool open_candidate;  // the (SU(n), SU(n-1)) pair in D_n
};

/// Matches the four exceptional configurations; nullopt otherwise.
std::optional<ExceptionalCase> exceptional_case(std::span<const TorusElement> tuple,
                                                std::uint64_t weyl_cap = kDefaultWeylCap);

bool is_exceptional(std::span<const TorusElement> tuple,
                    std::uint64_t weyl_cap = kDefaultWeylCap);

enum class Status { AbsolutelyContinuous, Singular, Unknown };
enum class Reason {
  eligible_nonexceptional,
  not_eligible,
  exceptional,
  open_case,
  group_type_mismatch,  // group_decide only
};

struct Verdict {
  Status status;
  Reason reason;

  bool operator==(const Verdict&) const = default;
};

std::string to_string(Status s);
std::string to_string(Reason r);

/// The complete characterization: Singular when not eligible or exceptional,
/// AbsolutelyContinuous otherwise -- except the undecided pair
/// (SU(n), SU(n-1)) in D_n with n >= 6, which returns Unknown.
Verdict decide(std::span<const TorusElement> tuple, std::uint64_t weyl_cap = kDefaultWeylCap);

/// Smallest L >= 2 with decide(X,...,X) absolutely continuous. The scan is
/// capped at L = rank + 2; the open case cannot arise for identical elements.
int min_power(const TorusElement& x, std::uint64_t weyl_cap = kDefaultWeylCap);

/// Conjugacy-class verdict on the group side (angles are exact rationals in
/// units of pi). If every element's group annihilator equals its algebra
/// preimage's, the algebra verdict transfers; a Singular algebra verdict
/// transfers even on mismatch; otherwise Unknown/group_type_mismatch.
Verdict group_decide(std::span<const TorusElement> angles,
                     std::uint64_t weyl_cap = kDefaultWeylCap);

}  // namespace orbitc
