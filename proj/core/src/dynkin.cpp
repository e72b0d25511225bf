#include "homkt/dynkin.hpp"

#include <algorithm>
#include <map>

#include "homkt/error.hpp"

namespace homkt {

std::vector<int> DynkinDiagram::neighbours(int node) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.a == node) out.push_back(e.b);
    if (e.b == node) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const DynkinEdge* DynkinDiagram::edge_between(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges)
    if (e.a == a && e.b == b) return &e;
  return nullptr;
}

namespace {

int pairing_int(const Rat& x) {
  require(denominator(x) == 1, ErrorKind::Internal, "non-integer Cartan pairing");
  return (int)numerator(x);
}

}  // namespace

DynkinDiagram dynkin_diagram(const RootSystem& rs) {
  DynkinDiagram d;
  d.algebra = rs.type();
  d.n_nodes = rs.rank();
  const auto& g = rs.simple_gram();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = i + 1; j < rs.rank(); ++j) {
      if (g[i][j] == 0) continue;
      DynkinEdge e;
      e.a = i;
      e.b = j;
      e.pair_ab = pairing_int(-2 * g[i][j] / g[i][i]);
      e.pair_ba = pairing_int(-2 * g[i][j] / g[j][j]);
      d.edges.push_back(e);
    }
  return d;
}

DynkinDiagram extended_diagram(const RootSystem& rs) {
  DynkinDiagram d = dynkin_diagram(rs);
  int ext = rs.rank();
  d.extended_node = ext;
  d.n_nodes = ext + 1;
  const Root& psi = rs.highest_root();
  Rat npsi = rs.inner(psi, psi);
  for (int i = 0; i < rs.rank(); ++i) {
    // Inner products of -psi with the simple roots.
    Rat ip = 0;
    const auto& g = rs.simple_gram();
    for (int j = 0; j < rs.rank(); ++j)
      if (psi.coeffs[j] != 0) ip += g[i][j] * psi.coeffs[j];
    if (ip == 0) continue;
    DynkinEdge e;
    e.a = i;
    e.b = ext;
    e.pair_ab = pairing_int(2 * ip / g[i][i]);
    e.pair_ba = pairing_int(2 * ip / npsi);
    d.edges.push_back(e);
  }
  return d;
}

std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& d) {
  int n = d.n_nodes;
  // Pair data for fast lookup: key (i<<8|j) -> pair_ij.
  std::map<int, int> pair;
  for (const auto& e : d.edges) {
    pair[(e.a << 8) | e.b] = e.pair_ab;
    pair[(e.b << 8) | e.a] = e.pair_ba;
  }
  auto pairing = [&](int i, int j) {
    auto it = pair.find((i << 8) | j);
    return it == pair.end() ? 0 : it->second;
  };

  std::vector<std::vector<int>> result;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int i, int img) {
    for (int j = 0; j < i; ++j) {
      if (pairing(i, j) != pairing(img, perm[j])) return false;
      if (pairing(j, i) != pairing(perm[j], img)) return false;
    }
    return true;
  };
  // Backtracking over node images; diagrams have at most 9 nodes here.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      result.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img] || !consistent(i, img)) continue;
      perm[i] = img;
      used[img] = true;
      self(self, i + 1);
      used[img] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  return result;
}

namespace {

AlgebraType classify_component(const DynkinDiagram& d, const std::vector<int>& nodes) {
  int n = (int)nodes.size();
  if (n == 1) return {Family::A, 1};

  std::map<int, std::vector<int>> adj;
  int max_mult = 1;
  const DynkinEdge* marked = nullptr;  // a double or triple bond, if any
  for (int a : nodes)
    for (int b : nodes) {
      if (a >= b) continue;
      const DynkinEdge* e = d.edge_between(a, b);
      if (!e) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
      if (e->multiplicity() > max_mult) {
        max_mult = e->multiplicity();
        marked = e;
      }
    }

  std::vector<int> branch, leaves;
  for (int a : nodes) {
    std::size_t deg = adj[a].size();
    if (deg >= 3) branch.push_back(a);
    if (deg <= 1) leaves.push_back(a);
  }

  if (max_mult == 3) {
    require(n == 2, ErrorKind::Internal, "triple bond in a diagram of size != 2");
    return {Family::G, 2};
  }
  if (max_mult == 2) {
    require(branch.empty(), ErrorKind::Internal, "double bond with a branch node");
    if (n == 2) return {Family::B, 2};  // B2 = C2; normalized to B2
    // Count the chain length on each side of the marked bond.
    auto side_size = [&](int start, int avoid) {
      int count = 0, prev = avoid, cur = start;
      for (;;) {
        ++count;
        int next = -1;
        for (int x : adj[cur])
          if (x != prev) next = x;
        if (next < 0) break;
        prev = cur;
        cur = next;
      }
      return count;
    };
    int short_node = marked->arrow_to();
    int long_node = short_node == marked->a ? marked->b : marked->a;
    int on_short = side_size(short_node, long_node);
    int on_long = side_size(long_node, short_node);
    if (on_short == 1) return {Family::B, n};  // short root at the end
    if (on_long == 1) return {Family::C, n};
    require(on_short == 2 && on_long == 2 && n == 4, ErrorKind::Internal,
            "unrecognized double-bond diagram");
    return {Family::F, 4};
  }
  // Simply laced.
  if (branch.empty()) return {Family::A, n};
  require(branch.size() == 1, ErrorKind::Internal, "more than one branch node");
  std::vector<int> arm_lengths;
  for (int x : adj[branch[0]]) {
    int len = 1, prev = branch[0], cur = x;
    for (;;) {
      int next = -1;
      for (int y : adj[cur])
        if (y != prev) next = y;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arm_lengths.push_back(len);
  }
  std::sort(arm_lengths.begin(), arm_lengths.end());
  require(arm_lengths.size() == 3, ErrorKind::Internal, "branch node of degree > 3");
  if (arm_lengths[0] == 1 && arm_lengths[1] == 1) {
    if (n == 3) return {Family::A, 3};  // D3 = A3
    return {Family::D, n};
  }
  require(arm_lengths[0] == 1 && arm_lengths[1] == 2 && n >= 6 && n <= 8, ErrorKind::Internal,
          "unrecognized simply-laced diagram");
  return {Family::E, n};
}

}  // namespace

std::vector<SubdiagramComponent> classify_subdiagram(const DynkinDiagram& d,
                                                     const std::set<int>& nodes) {
  for (int x : nodes)
    require(x >= 0 && x < d.n_nodes, ErrorKind::InvalidColouring,
            "node index " + std::to_string(x) + " out of range");
  std::vector<SubdiagramComponent> comps;
  std::set<int> left = nodes;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (int nb : d.neighbours(comp[q]))
        if (left.count(nb)) {
          left.erase(nb);
          comp.push_back(nb);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back({classify_component(d, comp), comp});
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    if (!(x.type == y.type)) return y.type < x.type;
    return x.nodes < y.nodes;
  });
  return comps;
}

std::string component_list_str(const std::vector<SubdiagramComponent>& comps) {
  if (comps.empty()) return "0";
  std::string s;
  for (const auto& c : comps) {
    if (!s.empty()) s += "+";
    s += c.type.str();
  }
  return s;
}

}  // namespace homkt
