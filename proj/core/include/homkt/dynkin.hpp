#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homkt/root_system.hpp"

namespace homkt {

struct DynkinEdge {
  int a = 0, b = 0;       // node ids, a < b
  int pair_ab = 1;        // -<alpha_b, alpha_a^vee> = -A_ab
  int pair_ba = 1;        // -<alpha_a, alpha_b^vee> = -A_ba
  int multiplicity() const { return pair_ab * pair_ba; }
  // Node the arrow points to (the shorter root), or -1 for a symmetric
  // bond. pair_ab = -2(a.b)/(a.a) grows as root a shortens.
  int arrow_to() const {
    if (pair_ab == pair_ba) return -1;
    return pair_ab > pair_ba ? a : b;
  }
};

// Plain or extended Dynkin diagram. Nodes 0..rank-1 are the simple
// roots; the optional extended node (id = rank) stands for the negative
// of the highest root.
struct DynkinDiagram {
  AlgebraType algebra;
  int n_nodes = 0;
  std::vector<DynkinEdge> edges;
  std::optional<int> extended_node;

  std::vector<int> neighbours(int node) const;
  const DynkinEdge* edge_between(int a, int b) const;
};

DynkinDiagram dynkin_diagram(const RootSystem& rs);
DynkinDiagram extended_diagram(const RootSystem& rs);

// All node permutations preserving bonds and arrow directions; the
// result is closed under composition and contains the identity.
std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& d);

struct Colouring {
  std::set<int> coloured;  // simple-root indices generating k
};

// A connected component of a simply-embedded subdiagram, identified as
// a simple type together with its nodes in diagram order.
struct SubdiagramComponent {
  AlgebraType type;
  std::vector<int> nodes;
};

// Classify the full subdiagram on `nodes` into simple components.
// Rank-1 components are reported as A1 and D2/D3 style aliases are
// normalized (D2 never appears; D3 is reported as A3).
std::vector<SubdiagramComponent> classify_subdiagram(const DynkinDiagram& d,
                                                     const std::set<int>& nodes);

std::string component_list_str(const std::vector<SubdiagramComponent>& comps);

}  // namespace homkt
