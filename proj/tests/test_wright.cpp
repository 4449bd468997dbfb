#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitc/io.hpp"
#include "orbitc/wright.hpp"

using namespace orbitc;

namespace {

TorusElement elem(const std::string& spec) { return parse_element(spec); }

std::vector<TorusElement> tuple(std::initializer_list<std::string> specs) {
  std::vector<TorusElement> t;
  for (const auto& s : specs) t.push_back(elem(s));
  return t;
}

const WrightRow* find_row(const WrightReport& r, const std::string& type, bool conjugate_to_first,
                          const RootSystem& sys, const RootSubsystem& phi_x1) {
  for (const auto& row : r.rows)
    if (row.psi_type == type) {
      if (type != "SU(4)" && type != "SU(5)") return &row;
      if (is_weyl_conjugate(sys, row.psi, phi_x1) == conjugate_to_first) return &row;
    }
  return nullptr;
}

}  // namespace

TEST_CASE("min_intersection reproduces the D4 counts") {
  const RootSystem d4 = build_root_system(Family::D, 4);
  const RootSubsystem su4_plus = annihilator(d4, elem("D4:[1,1,1,1]"));
  const RootSubsystem su4_minus = annihilator(d4, elem("D4:[1,1,1,-1]"));

  // min over sigma of |Phi_X ^ sigma(Psi)| with Phi_X and Psi both the
  // difference SU(4): 4, attained by a two-sign switch
  WeylElement w;
  CHECK(min_intersection(d4, su4_plus, su4_plus, kDefaultWeylCap, &w) == 4);
  CHECK(apply_weyl(w, su4_plus).roots != su4_plus.roots);

  // against the other SU(4) class the minimum rises to 6
  CHECK(min_intersection(d4, su4_plus, su4_minus) == 6);

  // Phi_X of type SU(4) against Psi of type D3: 6
  std::vector<Root> d3roots;
  for (const auto& r : d4.roots)
    if (r.coords[3] == 0) d3roots.push_back(r);
  const RootSubsystem d3 = make_subsystem(d4, d3roots);
  CHECK(min_intersection(d4, su4_plus, d3) == 6);

  // empty Phi_X: 0
  const RootSubsystem empty{Family::D, 4, {}};
  CHECK(min_intersection(d4, empty, d3) == 0);
}

TEST_CASE("Wright rows for the D4 pair (SU(4), non-conjugate SU(2)xSU(2))") {
  auto t = tuple({"D4:[1,1,1,1]", "D4:[2,2,3,-3]"});
  const WrightReport r = wright_check(t);
  CHECK(r.phi_size == 24);
  CHECK(r.phi_x_sizes == std::vector<int>{12, 4});

  const RootSystem d4 = build_root_system(Family::D, 4);
  const RootSubsystem phi_x1 = annihilator(d4, t[0]);

  const WrightRow* d3 = find_row(r, "D3", false, d4, phi_x1);
  REQUIRE(d3);
  CHECK(d3->lhs == 11);
  CHECK(d3->rhs <= 8);

  const WrightRow* su4_conj = find_row(r, "SU(4)", true, d4, phi_x1);
  REQUIRE(su4_conj);
  CHECK(su4_conj->lhs == 11);
  CHECK(su4_conj->rhs <= 10);
  CHECK(su4_conj->min_intersections[0] == 4);  // attained by a two-sign switch
  CHECK(su4_conj->min_intersections[1] >= 2);

  const WrightRow* su4_other = find_row(r, "SU(4)", false, d4, phi_x1);
  REQUIRE(su4_other);
  CHECK(su4_other->satisfied);

  const WrightRow* d2su2 = find_row(r, "D2xSU(2)", false, d4, phi_x1);
  REQUIRE(d2su2);
  CHECK(d2su2->lhs == 17);
  CHECK(d2su2->satisfied);

  CHECK(r.overall);  // the pair is absolutely continuous
}

TEST_CASE("Wright clears the D5 pair (SU(5), SU(3)xD2)") {
  auto t = tuple({"D5:[1,1,1,1,1]", "D5:[0,0,2,2,2]"});
  const WrightReport r = wright_check(t);
  CHECK(r.phi_size == 40);
  CHECK(r.phi_x_sizes == std::vector<int>{20, 10});
  CHECK(r.rows.size() == 4);  // classes D4, SU(5), D3xSU(2), D2xSU(3)
  CHECK(r.overall);

  // the SU(5) row attains the known minima: 8 for Phi_X1, >= 4 for Phi_X2;
  // a D4 subsystem always meets Phi_X1 in half its roots and Phi_X2 in 6
  for (const auto& row : r.rows) {
    if (row.psi_type == "SU(5)") {
      CHECK(row.min_intersections[0] == 8);
      CHECK(row.min_intersections[1] >= 4);
    }
    if (row.psi_type == "D4") {
      CHECK(row.min_intersections[0] == 12);
      CHECK(row.min_intersections[1] == 6);
    }
  }
}

TEST_CASE("Wright rows for the non-conjugate SU(4) triple in D4") {
  auto t = tuple({"D4:[1,1,1,1]", "D4:[2,2,2,2]", "D4:[3,3,3,-3]"});
  const WrightReport r = wright_check(t);

  const RootSystem d4 = build_root_system(Family::D, 4);
  const RootSubsystem phi_x1 = annihilator(d4, t[0]);
  const WrightRow* su4_conj = find_row(r, "SU(4)", true, d4, phi_x1);
  REQUIRE(su4_conj);
  CHECK(su4_conj->lhs == 23);
  CHECK(su4_conj->rhs <= 22);
  CHECK(su4_conj->min_intersections == std::vector<int>{4, 4, 6});
  CHECK(r.overall);
}

TEST_CASE("min_intersection is invariant under conjugating Phi_X") {
  const RootSystem d4 = build_root_system(Family::D, 4);
  const RootSubsystem phi = annihilator(d4, elem("D4:[1,1,2,2]"));
  const RootSubsystem psi = annihilator(d4, elem("D4:[0,0,1,2]"));
  const auto ws = weyl_elements(Family::D, 4);
  const int base = min_intersection(d4, phi, psi);
  for (size_t k = 0; k < ws.size(); k += 37)
    CHECK(min_intersection(d4, apply_weyl(ws[k], phi), psi) == base);
}

TEST_CASE("rows recompute consistently and overall matches the conjunction") {
  auto t = tuple({"B3:[1,1,2]", "B3:[0,1,2]"});
  const WrightReport r = wright_check(t);
  bool all = true;
  for (const auto& row : r.rows) {
    long rhs = 0;
    for (size_t i = 0; i < row.min_intersections.size(); ++i)
      rhs += r.phi_x_sizes[i] - row.min_intersections[i];
    CHECK(rhs == row.rhs);
    CHECK(row.lhs == long(t.size() - 1) * (r.phi_size - row.psi_size) - 1);
    CHECK(row.satisfied == (row.lhs >= row.rhs));
    all = all && row.satisfied;
  }
  CHECK(all == r.overall);
}

TEST_CASE("soundness: wright_check true implies decide AbsolutelyContinuous") {
  // a mix of pairs across families and ranks <= 4
  const std::vector<std::vector<TorusElement>> tuples = {
      tuple({"B2:[1,2]", "B2:[0,1]"}),
      tuple({"B2:[1,1]", "B2:[0,1]"}),
      tuple({"B3:[0,0,1]", "B3:[1,2,3]"}),
      tuple({"B3:[0,0,1]", "B3:[0,0,2]"}),
      tuple({"C3:[1,1,1]", "C3:[0,0,1]"}),
      tuple({"C3:[0,0,1]", "C3:[0,0,2]"}),
      tuple({"A2:[1,1,-2]", "A2:[2,2,-4]"}),
      tuple({"A3:[1,1,-1,-1]", "A3:[2,2,-2,-2]"}),
      tuple({"A3:[3,-1,-1,-1]", "A3:[1,2,3,-6]"}),
      tuple({"D4:[1,1,1,1]", "D4:[2,2,2,2]"}),
      tuple({"D4:[1,1,1,1]", "D4:[2,2,3,3]"}),
      tuple({"D4:[1,1,1,1]", "D4:[2,2,3,-3]"}),
      tuple({"D4:[0,0,0,1]", "D4:[0,0,0,2]"}),
      tuple({"D4:[1,2,3,4]", "D4:[0,0,0,1]"}),
  };
  for (const auto& t : tuples) {
    const WrightReport r = wright_check(t);
    if (r.overall) CHECK(decide(t).status == Status::AbsolutelyContinuous);
  }
}
