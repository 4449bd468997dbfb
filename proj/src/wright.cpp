#include "orbitc/wright.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orbitc {

int min_intersection(const RootSystem& sys, const RootSubsystem& phi_x, const RootSubsystem& psi,
                     std::uint64_t weyl_cap, WeylElement* witness) {
  if (phi_x.family != psi.family || phi_x.rank != psi.rank)
    throw std::domain_error("min_intersection: ambient systems differ");
  int best = std::min(phi_x.size(), psi.size()) + 1;
  for_each_weyl(sys.family, sys.rank, weyl_cap, [&](const WeylElement& w) {
    int count = 0;
    for (const auto& r : psi.roots) {
      if (phi_x.contains(apply_weyl(w, r))) ++count;
      if (count >= best) return;  // cannot improve
    }
    if (count < best) {
      best = count;
      if (witness) *witness = w;
    }
  });
  return best;
}

WrightReport wright_check(std::span<const TorusElement> tuple, std::uint64_t weyl_cap) {
  if (tuple.size() < 2) throw std::domain_error("a tuple needs at least two elements");
  for (const auto& x : tuple)
    if (x.family != tuple[0].family || x.rank != tuple[0].rank)
      throw std::domain_error("tuple elements must share one family and rank");

  const RootSystem sys = build_root_system(tuple[0].family, tuple[0].rank);
  const long l = static_cast<long>(tuple.size());

  WrightReport report;
  report.phi_size = static_cast<int>(sys.roots.size());

  std::vector<RootSubsystem> phi_x;
  for (const auto& x : tuple) {
    phi_x.push_back(annihilator(sys, x));
    report.phi_x_sizes.push_back(phi_x.back().size());
  }

  const std::vector<RootSubsystem> psis = closed_corank1_subsystems(sys, weyl_cap);

  // group the Psi into Weyl classes; a cheap signature narrows the brute-force
  // conjugacy checks to same-signature candidates
  struct ClassInfo {
    RootSubsystem rep;
    int count = 0;
  };
  std::map<std::string, std::vector<ClassInfo>> buckets;
  for (const auto& psi : psis) {
    const std::string sig =
        factors_to_string(subsystem_type(psi)) + "#" + std::to_string(psi.size());
    auto& classes = buckets[sig];
    bool placed = false;
    for (auto& cl : classes)
      if (is_weyl_conjugate(sys, psi, cl.rep, weyl_cap)) {
        ++cl.count;
        placed = true;
        break;
      }
    if (!placed) classes.push_back(ClassInfo{psi, 1});
  }

  std::vector<ClassInfo> classes;
  for (auto& [sig, cls] : buckets)
    for (auto& cl : cls) classes.push_back(std::move(cl));
  std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
    if (a.rep.size() != b.rep.size()) return a.rep.size() > b.rep.size();
    return a.rep.roots < b.rep.roots;
  });

  report.overall = true;
  for (const auto& cl : classes) {
    WrightRow row;
    row.psi = cl.rep;
    row.psi_type = factors_to_string(subsystem_type(cl.rep));
    row.psi_size = cl.rep.size();
    row.class_size = cl.count;
    row.lhs = (l - 1) * (report.phi_size - row.psi_size) - 1;
    row.rhs = 0;
    for (size_t i = 0; i < phi_x.size(); ++i) {
      const int mi = min_intersection(sys, phi_x[i], cl.rep, weyl_cap);
      row.min_intersections.push_back(mi);
      row.rhs += report.phi_x_sizes[i] - mi;
    }
    row.satisfied = row.lhs >= row.rhs;
    report.overall = report.overall && row.satisfied;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string WrightReport::table() const {
  std::ostringstream os;
  os << "psi_type        |Psi|  classes  lhs   rhs   min_intersections  satisfied\n";
  for (const auto& row : rows) {
    std::string mins;
    for (size_t i = 0; i < row.min_intersections.size(); ++i) {
      if (i) mins += ",";
      mins += std::to_string(row.min_intersections[i]);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-15s %-6d %-8d %-5ld %-5ld %-18s %s\n", row.psi_type.c_str(),
                  row.psi_size, row.class_size, row.lhs, row.rhs, mins.c_str(),
                  row.satisfied ? "yes" : "NO");
    os << buf;
  }
  os << "overall: " << (overall ? "satisfied (absolutely continuous)" : "not satisfied") << "\n";
  return os.str();
}

}  // namespace orbitc
