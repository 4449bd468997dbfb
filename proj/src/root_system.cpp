#include "orbitc/root_system.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace orbitc {

namespace {

void check_rank(Family family, int rank) {
  if (rank < min_rank(family))
    throw std::domain_error("rank " + std::to_string(rank) + " below minimum for family " +
                            family_letter(family));
}

Root unit_pair(int dim, int i, int vi, int j, int vj) {
  Root r;
  r.coords.assign(dim, 0);
  r.coords[i] = static_cast<std::int8_t>(vi);
  if (j >= 0) r.coords[j] = static_cast<std::int8_t>(vj);
  return r;
}

// Reduced row echelon form over Rat; rows are modified in place. Returns the
// pivot column of each surviving row.
struct Rref {
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;

  void add_row(std::vector<Rat> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat c = v[pivots[r]];  // copy: v[pivots[r]] is mutated below
      if (c != 0) {
        for (size_t k = 0; k < v.size(); ++k) v[k] -= c * rows[r][k];
      }
    }
    int p = -1;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) { p = static_cast<int>(k); break; }
    if (p < 0) return;
    Rat inv = v[p];
    for (auto& x : v) x /= inv;
    // back-eliminate so membership tests reduce to zero cleanly
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat c = rows[r][p];
      if (c != 0)
        for (size_t k = 0; k < v.size(); ++k) rows[r][k] -= c * v[k];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }

  int rank() const { return static_cast<int>(rows.size()); }

  bool in_span(const Root& root) const {
    std::vector<Rat> v(root.coords.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = int(root.coords[k]);
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat c = v[pivots[r]];
      if (c != 0)
        for (size_t k = 0; k < v.size(); ++k) v[k] -= c * rows[r][k];
    }
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
};

std::vector<Rat> root_to_rats(const Root& r) {
  std::vector<Rat> v(r.coords.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = int(r.coords[k]);
  return v;
}

int root_span_rank(const std::vector<Root>& roots) {
  Rref rref;
  for (const auto& r : roots) rref.add_row(root_to_rats(r));
  return rref.rank();
}

}  // namespace

Root make_root(std::vector<int> coords) {
  Root r;
  r.coords.reserve(coords.size());
  for (int c : coords) r.coords.push_back(static_cast<std::int8_t>(c));
  return r;
}

RootSystem build_root_system(Family family, int rank) {
  check_rank(family, rank);
  const int dim = coord_dim(family, rank);
  RootSystem sys{family, rank, {}, {}};

  switch (family) {
    case Family::A:
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) sys.roots.push_back(unit_pair(dim, i, 1, j, -1));
      break;
    case Family::B:
    case Family::C: {
      const int lone = family == Family::B ? 1 : 2;
      for (int i = 0; i < dim; ++i) {
        sys.roots.push_back(unit_pair(dim, i, lone, -1, 0));
        sys.roots.push_back(unit_pair(dim, i, -lone, -1, 0));
      }
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) sys.roots.push_back(unit_pair(dim, i, si, j, sj));
      break;
    }
    case Family::D:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) sys.roots.push_back(unit_pair(dim, i, si, j, sj));
      break;
  }

  std::sort(sys.roots.begin(), sys.roots.end());
  for (const auto& r : sys.roots)
    if (r.positive()) sys.positive_roots.push_back(r);
  return sys;
}

std::uint64_t weyl_order(Family family, int rank) {
  check_rank(family, rank);
  std::uint64_t f = 1;
  const int n = family == Family::A ? rank + 1 : rank;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  if (family == Family::B || family == Family::C) f <<= rank;
  if (family == Family::D) f <<= (rank - 1);
  return f;
}

WeylElement weyl_identity(Family family, int rank) {
  const int dim = coord_dim(family, rank);
  WeylElement w;
  w.perm.resize(dim);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(dim, 1);
  return w;
}

Root apply_weyl(const WeylElement& w, const Root& r) {
  Root out;
  out.coords.assign(r.coords.size(), 0);
  for (size_t j = 0; j < r.coords.size(); ++j) {
    const int t = w.perm[j];
    out.coords[t] = static_cast<std::int8_t>(int(w.signs[t]) * int(r.coords[j]));
  }
  return out;
}

void for_each_weyl(Family family, int rank, std::uint64_t cap,
                   const std::function<void(const WeylElement&)>& fn) {
  check_rank(family, rank);
  const std::uint64_t order = weyl_order(family, rank);
  if (order > cap)
    throw CapacityError("Weyl group of " + std::string(1, family_letter(family)) +
                        std::to_string(rank) + " has " + std::to_string(order) +
                        " elements, above the cap of " + std::to_string(cap));

  const int dim = coord_dim(family, rank);
  WeylElement w;
  w.perm.resize(dim);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(dim, 1);

  do {
    if (family == Family::A) {
      fn(w);
      continue;
    }
    const std::uint32_t masks = 1u << dim;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      if (family == Family::D && (__builtin_popcount(mask) & 1)) continue;
      for (int k = 0; k < dim; ++k) w.signs[k] = (mask >> k) & 1 ? -1 : 1;
      fn(w);
    }
    std::fill(w.signs.begin(), w.signs.end(), 1);
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

std::vector<WeylElement> weyl_elements(Family family, int rank, std::uint64_t cap) {
  std::vector<WeylElement> out;
  out.reserve(weyl_order(family, rank) > cap ? 0 : weyl_order(family, rank));
  for_each_weyl(family, rank, cap, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

RootSubsystem make_subsystem(const RootSystem& sys, std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& r : roots) {
    if (!sys.contains(r)) throw std::domain_error("subsystem root not in ambient system");
    if (!std::binary_search(roots.begin(), roots.end(), r.negated()))
      throw std::domain_error("subsystem not closed under negation");
  }
  return RootSubsystem{sys.family, sys.rank, std::move(roots)};
}

RootSubsystem apply_weyl(const WeylElement& w, const RootSubsystem& s) {
  RootSubsystem out{s.family, s.rank, {}};
  out.roots.reserve(s.roots.size());
  for (const auto& r : s.roots) out.roots.push_back(apply_weyl(w, r));
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::string TypeFactor::to_string() const {
  switch (kind) {
    case Kind::SU: return "SU(" + std::to_string(order) + ")";
    case Kind::B: return "B" + std::to_string(order);
    case Kind::C: return "C" + std::to_string(order);
    case Kind::D: return "D" + std::to_string(order);
  }
  return {};
}

std::string factors_to_string(const std::vector<TypeFactor>& factors) {
  if (factors.empty()) return "regular";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "x";
    s += f.to_string();
  }
  return s;
}

std::vector<TypeFactor> subsystem_type(const RootSubsystem& s) {
  const int m = s.size();
  // connected components under non-orthogonality
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v)
        if (comp[v] < 0 && s.roots[u].dot(s.roots[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  struct Component {
    std::vector<Root> roots;
    std::set<int> support;
    bool has_short = false, has_long = false;
  };
  std::vector<Component> comps(ncomp);
  for (int i = 0; i < m; ++i) {
    auto& c = comps[comp[i]];
    c.roots.push_back(s.roots[i]);
    for (size_t k = 0; k < s.roots[i].coords.size(); ++k)
      if (s.roots[i].coords[k] != 0) c.support.insert(static_cast<int>(k));
    const int l2 = s.roots[i].length_sq();
    if (l2 == 1) c.has_short = true;
    if (l2 == 4) c.has_long = true;
  }

  std::vector<TypeFactor> factors;
  std::vector<std::pair<std::set<int>, size_t>> a1_supports;  // for the D2 merge
  for (auto& c : comps) {
    const int r = root_span_rank(c.roots);
    const int card = static_cast<int>(c.roots.size());
    TypeFactor f{};
    if (c.has_short) {
      f = {TypeFactor::Kind::B, r};
      if (card != 2 * r * r) throw std::logic_error("component fails B cardinality check");
    } else if (c.has_long) {
      f = {TypeFactor::Kind::C, r};
      if (card != 2 * r * r) throw std::logic_error("component fails C cardinality check");
    } else {
      const int support = static_cast<int>(c.support.size());
      if (support == r) {
        f = {TypeFactor::Kind::D, r};
        if (card != 2 * r * (r - 1)) throw std::logic_error("component fails D cardinality check");
      } else if (support == r + 1) {
        f = {TypeFactor::Kind::SU, r + 1};
        if (card != (r + 1) * r) throw std::logic_error("component fails SU cardinality check");
      } else {
        throw std::logic_error("component matches no classical type");
      }
    }
    if (f.kind == TypeFactor::Kind::SU && f.order == 2) a1_supports.emplace_back(c.support, factors.size());
    factors.push_back(f);
  }

  // +-(e_i - e_j) together with +-(e_i + e_j) is the (reducible) system D2
  std::set<size_t> merged;
  for (size_t x = 0; x < a1_supports.size(); ++x)
    for (size_t y = x + 1; y < a1_supports.size(); ++y) {
      if (merged.count(a1_supports[x].second) || merged.count(a1_supports[y].second)) continue;
      if (a1_supports[x].first == a1_supports[y].first && a1_supports[x].first.size() == 2) {
        factors[a1_supports[x].second] = {TypeFactor::Kind::D, 2};
        merged.insert(a1_supports[y].second);
      }
    }
  std::vector<TypeFactor> out;
  for (size_t k = 0; k < factors.size(); ++k)
    if (!merged.count(k)) out.push_back(factors[k]);

  std::sort(out.begin(), out.end(), [](const TypeFactor& a, const TypeFactor& b) {
    const bool asu = a.kind == TypeFactor::Kind::SU, bsu = b.kind == TypeFactor::Kind::SU;
    if (asu != bsu) return !asu;  // B/C/D factors first
    if (a.order != b.order) return a.order > b.order;
    return a.kind < b.kind;
  });
  return out;
}

std::optional<WeylElement> conjugacy_witness(const RootSystem& sys, const RootSubsystem& s1,
                                             const RootSubsystem& s2, std::uint64_t cap) {
  if (s1.family != s2.family || s1.rank != s2.rank)
    throw std::domain_error("conjugacy requires a common ambient system");
  if (s1.roots.size() != s2.roots.size()) return std::nullopt;
  std::optional<WeylElement> witness;
  for_each_weyl(sys.family, sys.rank, cap, [&](const WeylElement& w) {
    if (witness) return;
    for (const auto& r : s1.roots)
      if (!s2.contains(apply_weyl(w, r))) return;
    witness = w;
  });
  return witness;
}

bool is_weyl_conjugate(const RootSystem& sys, const RootSubsystem& s1, const RootSubsystem& s2,
                       std::uint64_t cap) {
  return conjugacy_witness(sys, s1, s2, cap).has_value();
}

bool is_conjugate_to_subset(const RootSystem& sys, const RootSubsystem& s1,
                            const RootSubsystem& s2, std::uint64_t cap) {
  if (s1.family != s2.family || s1.rank != s2.rank)
    throw std::domain_error("conjugacy requires a common ambient system");
  if (s1.roots.empty()) return true;
  if (s1.roots.size() > s2.roots.size()) return false;
  bool found = false;
  for_each_weyl(sys.family, sys.rank, cap, [&](const WeylElement& w) {
    if (found) return;
    for (const auto& r : s1.roots)
      if (!s2.contains(apply_weyl(w, r))) return;
    found = true;
  });
  return found;
}

std::vector<RootSubsystem> closed_corank1_subsystems(const RootSystem& sys, std::uint64_t cap) {
  const int k = sys.rank - 1;
  const int m = static_cast<int>(sys.positive_roots.size());

  // subset-count capacity guard
  long double combos = 1;
  for (int t = 0; t < k; ++t) combos = combos * (m - t) / (t + 1);
  if (combos > static_cast<long double>(cap))
    throw CapacityError("corank-1 enumeration needs ~" + std::to_string((double)combos) +
                        " subsets, above the cap of " + std::to_string(cap));

  std::set<std::vector<Root>> seen;
  std::vector<RootSubsystem> out;

  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto advance = [&]() -> bool {
    int t = k - 1;
    while (t >= 0 && idx[t] == m - k + t) --t;
    if (t < 0) return false;
    ++idx[t];
    for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    return true;
  };

  if (k == 0) {
    out.push_back(RootSubsystem{sys.family, sys.rank, {}});
    return out;
  }
  if (m < k) return out;

  while (true) {
    Rref rref;
    for (int t = 0; t < k; ++t) rref.add_row(root_to_rats(sys.positive_roots[idx[t]]));
    if (rref.rank() == k) {
      std::vector<Root> psi;
      for (const auto& r : sys.roots)
        if (rref.in_span(r)) psi.push_back(r);
      if (seen.insert(psi).second)
        out.push_back(RootSubsystem{sys.family, sys.rank, std::move(psi)});
    }
    if (!advance()) break;
  }

  std::sort(out.begin(), out.end(),
            [](const RootSubsystem& a, const RootSubsystem& b) { return a.roots < b.roots; });
  return out;
}

}  // namespace orbitc
