#include "doctest.h"

#include <map>
#include <set>

#include "homkt/root_system.hpp"

using namespace homkt;

namespace {

const std::vector<std::string> kAllTypesRank6 = {
    "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6",
    "C2", "C3", "C4", "C5", "C6", "D3", "D4", "D5", "D6", "E6", "F4", "G2"};

}  // namespace

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(AlgebraType::parse("C1"), Error);
  CHECK_THROWS_AS(AlgebraType::parse("B1"), Error);
  CHECK_THROWS_AS(AlgebraType::parse("D2"), Error);
  CHECK_THROWS_AS(AlgebraType::parse("E9"), Error);
  CHECK_THROWS_AS(AlgebraType::parse("F3"), Error);
  CHECK_THROWS_AS(AlgebraType::parse("G3"), Error);
  CHECK(AlgebraType::parse("A1").dimension() == 3);
  CHECK(AlgebraType::parse("E8").dimension() == 248);
}

TEST_CASE("root counts and negation closure") {
  std::map<std::string, long> counts = {{"A4", 20}, {"B3", 18}, {"C3", 18}, {"D4", 24},
                                        {"G2", 12}, {"F4", 48}, {"E6", 72}, {"E7", 126},
                                        {"E8", 240}};
  for (const auto& [name, count] : counts) {
    RootSystem rs{AlgebraType::parse(name)};
    CHECK((long)rs.roots().size() == count);
    for (const auto& r : rs.roots()) {
      // -alpha is a root, alpha/2 is not stored (coefficients are integers).
      CHECK(rs.find(rs.root(rs.negative_of(r.id)).coeffs).has_value());
    }
  }
}

TEST_CASE("A2 roots and highest root") {
  RootSystem rs{AlgebraType::parse("A2")};
  CHECK(rs.roots().size() == 6);
  CHECK(rs.highest_root().coeffs == std::vector<int>{1, 1});
}

TEST_CASE("A4 highest root has unit coefficients") {
  RootSystem rs{AlgebraType::parse("A4")};
  CHECK(rs.roots().size() == 20);
  CHECK(rs.highest_root().coeffs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("A1 has two roots") {
  RootSystem rs{AlgebraType::parse("A1")};
  CHECK(rs.roots().size() == 2);
  CHECK(rs.highest_root().coeffs == std::vector<int>{1});
}

TEST_CASE("highest root dominates every positive root") {
  for (const auto& name : kAllTypesRank6) {
    RootSystem rs{AlgebraType::parse(name)};
    const Root& psi = rs.highest_root();
    int max_height = 0;
    for (const auto& r : rs.roots()) {
      if (!r.positive()) continue;
      max_height = std::max(max_height, r.height);
      for (int i = 0; i < rs.rank(); ++i) CHECK(psi.coeffs[i] >= r.coeffs[i]);
    }
    CHECK(psi.height == max_height);
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.pairing_with_simple(i, psi) >= 0);
  }
}

TEST_CASE("cartan matrices") {
  RootSystem a2{AlgebraType::parse("A2")};
  auto m = a2.cartan_matrix();
  CHECK(m[0][0] == 2);
  CHECK(m[0][1] == -1);
  CHECK(m[1][0] == -1);

  RootSystem a1{AlgebraType::parse("A1")};
  CHECK(a1.cartan_matrix()[0][0] == 2);

  RootSystem g2{AlgebraType::parse("G2")};
  auto g = g2.cartan_matrix();
  std::multiset<Rat> off = {g[0][1], g[1][0]};
  CHECK(off == std::multiset<Rat>{Rat(-1), Rat(-3)});

  for (const auto& name : kAllTypesRank6) {
    RootSystem rs{AlgebraType::parse(name)};
    auto a = rs.cartan_matrix();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        if (i == j) {
          CHECK(a[i][j] == 2);
        } else {
          CHECK(a[i][j] <= 0);
          CHECK(a[i][j] >= -3);
        }
      }
  }
}

TEST_CASE("root strings") {
  RootSystem a2{AlgebraType::parse("A2")};
  int a1 = a2.require_root({1, 0});
  int al2 = a2.require_root({0, 1});
  auto [p, q] = a2.root_string(a1, al2);
  CHECK(p == 0);
  CHECK(q == 1);

  RootSystem g2{AlgebraType::parse("G2")};
  // alpha_1 is short, alpha_2 long in this realization.
  CHECK(g2.norm2(g2.require_root({1, 0})) < g2.norm2(g2.require_root({0, 1})));
  auto [pg, qg] = g2.root_string(g2.require_root({1, 0}), g2.require_root({0, 1}));
  CHECK(pg == 0);
  CHECK(qg == 3);

  // Distant pair in A2: alpha_1 and -alpha_2 only chain once.
  auto [p2, q2] = a2.root_string(a1, a2.negative_of(al2));
  CHECK(p2 == 1);
  CHECK(q2 == 0);

  CHECK_THROWS_AS(a2.root_string(a1, a1), Error);
}

TEST_CASE("roots closed under simple reflections") {
  for (const auto& name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs{AlgebraType::parse(name)};
    for (const auto& r : rs.roots())
      for (int i = 0; i < rs.rank(); ++i) {
        Rat pair = rs.pairing_with_simple(i, r);
        std::vector<int> c = r.coeffs;
        c[i] -= (int)numerator(pair);
        CHECK(rs.find(c).has_value());
      }
  }
}

TEST_CASE("ambient coordinates agree with the coefficient gram") {
  for (const auto& name : {"A4", "E8", "F4", "G2"}) {
    RootSystem rs{AlgebraType::parse(name)};
    for (int id : {0, 1, (int)rs.n_positive() - 1}) {
      const Root& r = rs.root(id);
      CHECK(dot(rs.ambient(r), rs.ambient(r)) == rs.norm2(id));
    }
  }
}
