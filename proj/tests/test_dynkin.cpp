#include "doctest.h"

#include <set>

#include "homkt/dynkin.hpp"

using namespace homkt;

namespace {

bool is_group(const std::vector<std::vector<int>>& perms) {
  std::set<std::vector<int>> s(perms.begin(), perms.end());
  for (const auto& p : perms)
    for (const auto& q : perms) {
      std::vector<int> pq(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) pq[i] = p[q[i]];
      if (!s.count(pq)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("edge multiplicities reproduce cartan products") {
  for (const auto& name : {"A3", "B3", "C4", "D4", "G2", "F4", "E7"}) {
    RootSystem rs{AlgebraType::parse(name)};
    DynkinDiagram d = dynkin_diagram(rs);
    auto a = rs.cartan_matrix();
    for (const auto& e : d.edges)
      CHECK(Rat(e.multiplicity()) == a[e.a][e.b] * a[e.b][e.a]);
  }
}

TEST_CASE("extended node attachments") {
  // A_r (r >= 2): the extra node closes the chain into a cycle.
  RootSystem a4{AlgebraType::parse("A4")};
  DynkinDiagram ea4 = extended_diagram(a4);
  REQUIRE(ea4.extended_node.has_value());
  auto nbs = ea4.neighbours(*ea4.extended_node);
  CHECK(nbs == std::vector<int>{0, 3});

  // E8: single attachment at the end of the long arm.
  RootSystem e8{AlgebraType::parse("E8")};
  DynkinDiagram ee8 = extended_diagram(e8);
  CHECK(ee8.neighbours(*ee8.extended_node).size() == 1);

  // A1: the affine bond has pairing 2 on both ends (multiplicity 4).
  RootSystem a1{AlgebraType::parse("A1")};
  DynkinDiagram ea1 = extended_diagram(a1);
  const DynkinEdge* e = ea1.edge_between(0, 1);
  REQUIRE(e != nullptr);
  CHECK(e->pair_ab == 2);
  CHECK(e->pair_ba == 2);
  CHECK(e->multiplicity() == 4);
  CHECK(e->arrow_to() == -1);

  // Deleting the extended node gives back the plain diagram.
  DynkinDiagram plain = dynkin_diagram(a4);
  int kept = 0;
  for (const auto& ed : ea4.edges)
    if (ed.b != *ea4.extended_node && ed.a != *ea4.extended_node) ++kept;
  CHECK((std::size_t)kept == plain.edges.size());
}

TEST_CASE("diagram automorphisms") {
  RootSystem a3{AlgebraType::parse("A3")};
  auto plain = diagram_automorphisms(dynkin_diagram(a3));
  CHECK(plain.size() == 2);
  CHECK(is_group(plain));

  RootSystem a2{AlgebraType::parse("A2")};
  auto tri = diagram_automorphisms(extended_diagram(a2));
  CHECK(tri.size() == 6);  // extended A2 is a triangle
  CHECK(is_group(tri));

  RootSystem e8{AlgebraType::parse("E8")};
  CHECK(diagram_automorphisms(dynkin_diagram(e8)).size() == 1);

  RootSystem d4{AlgebraType::parse("D4")};
  CHECK(diagram_automorphisms(dynkin_diagram(d4)).size() == 6);
  CHECK(diagram_automorphisms(extended_diagram(d4)).size() == 24);

  RootSystem a1{AlgebraType::parse("A1")};
  CHECK(diagram_automorphisms(extended_diagram(a1)).size() == 2);

  // Arrows matter: extended C2 is a chain with two double bonds whose
  // arrows both point inward, so the flip survives, but plain B3 = C3
  // chains admit only the identity.
  RootSystem b3{AlgebraType::parse("B3")};
  CHECK(diagram_automorphisms(dynkin_diagram(b3)).size() == 1);
  RootSystem c2{AlgebraType::parse("C2")};
  CHECK(diagram_automorphisms(extended_diagram(c2)).size() == 2);
}

TEST_CASE("subdiagram classification") {
  RootSystem e8{AlgebraType::parse("E8")};
  DynkinDiagram d = dynkin_diagram(e8);
  // Bourbaki numbering: nodes 2,3,4,5 star around 4 (=D4), node 8 isolated.
  auto comps = classify_subdiagram(d, {1, 2, 3, 4, 7});
  CHECK(component_list_str(comps) == "D4+A1");

  auto empty = classify_subdiagram(d, {});
  CHECK(component_list_str(empty) == "0");

  RootSystem f4{AlgebraType::parse("F4")};
  DynkinDiagram df = dynkin_diagram(f4);
  CHECK(component_list_str(classify_subdiagram(df, {0, 1, 2, 3})) == "F4");
  CHECK(component_list_str(classify_subdiagram(df, {1, 2, 3})) == "C3");
  CHECK(component_list_str(classify_subdiagram(df, {0, 1, 2})) == "B3");
  CHECK(component_list_str(classify_subdiagram(df, {1, 2})) == "B2");

  CHECK_THROWS_AS(classify_subdiagram(df, {9}), Error);
}
