#include "doctest.h"

#include <array>
#include <complex>
#include <map>

#include "homkt/compact.hpp"

using namespace homkt;

namespace {

std::shared_ptr<CompactAlgebra> compact_of(const char* name) {
  return std::make_shared<CompactAlgebra>(ReductiveAlgebra::simple(AlgebraType::parse(name)));
}

// Exact complex-rational 3x3 matrices, the independent su(3) oracle.
struct CMat {
  std::array<std::array<std::pair<Rat, Rat>, 3>, 3> a{};
  static CMat zero() { return {}; }
  CMat operator*(const CMat& o) const {
    CMat r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          auto [xr, xi] = a[i][k];
          auto [yr, yi] = o.a[k][j];
          r.a[i][j].first += xr * yr - xi * yi;
          r.a[i][j].second += xr * yi + xi * yr;
        }
    return r;
  }
  CMat operator-(const CMat& o) const {
    CMat r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.a[i][j] = {a[i][j].first - o.a[i][j].first, a[i][j].second - o.a[i][j].second};
    return r;
  }
  CMat operator+(const CMat& o) const {
    CMat r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.a[i][j] = {a[i][j].first + o.a[i][j].first, a[i][j].second + o.a[i][j].second};
    return r;
  }
  CMat scaled(const Rat& c) const {
    CMat r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.a[i][j] = {a[i][j].first * c, a[i][j].second * c};
    return r;
  }
  bool zero_mat() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a[i][j].first != 0 || a[i][j].second != 0) return false;
    return true;
  }
};

CMat comm(const CMat& x, const CMat& y) { return x * y - y * x; }

}  // namespace

TEST_CASE("cartan action on step operators") {
  auto g = compact_of("A2");
  const RootSystem& rs = *g->reductive().ideals[0];
  // [H_alpha_i, E+_beta] = 2 (alpha_i . beta)/(alpha_i . alpha_i) E-_beta
  for (int i = 0; i < 2; ++i)
    for (int p = 0; p < (int)rs.n_positive(); ++p) {
      auto br = g->bracket(g->cartan(0, i), g->e_plus(0, p));
      Rat expect = rs.pairing_with_simple(i, rs.root(p));
      if (expect == 0) {
        CHECK(br.empty());
      } else {
        REQUIRE(br.size() == 1);
        CHECK(br[0].first == g->e_minus(0, p));
        CHECK(br[0].second == expect);
      }
      auto br2 = g->bracket(g->cartan(0, i), g->e_minus(0, p));
      if (expect != 0) {
        REQUIRE(br2.size() == 1);
        CHECK(br2[0].first == g->e_plus(0, p));
        CHECK(br2[0].second == -expect);
      }
    }
}

TEST_CASE("u(1) generators are central") {
  CompactAlgebra g({{std::make_shared<RootSystem>(AlgebraType::parse("A1"))}, 2});
  for (int i = 0; i < g.dim(); ++i) {
    CHECK(g.bracket(g.u(0), i).empty());
    CHECK(g.bracket(g.u(1), i).empty());
  }
}

TEST_CASE("su(3) matrix oracle reproduces every compact bracket") {
  auto g = compact_of("A2");
  const RootSystem& rs = *g->reductive().ideals[0];
  const StructureConstantTable& t = g->constants(0);

  // Chevalley step operators as elementary matrices; the composite root
  // operator is fixed by e_{a1+a2} = [e_a1, e_a2] / N(a1, a2).
  auto unit_mat = [&](int r, int c, Rat re, Rat im) {
    CMat m;
    m.a[r][c] = {re, im};
    return m;
  };
  int a1 = rs.require_root({1, 0});
  int a2 = rs.require_root({0, 1});
  int psi = rs.require_root({1, 1});
  std::map<int, CMat> e;
  e[a1] = unit_mat(0, 1, 1, 0);
  e[a2] = unit_mat(1, 2, 1, 0);
  e[rs.negative_of(a1)] = unit_mat(1, 0, 1, 0);
  e[rs.negative_of(a2)] = unit_mat(2, 1, 1, 0);
  Rat n12(t.n(a1, a2));
  e[psi] = comm(e[a1], e[a2]).scaled(1 / n12);
  e[rs.negative_of(psi)] = comm(e[rs.negative_of(a2)], e[rs.negative_of(a1)]).scaled(1 / n12);

  std::map<int, CMat> h;
  h[0] = unit_mat(0, 0, 1, 0) - unit_mat(1, 1, 1, 0);
  h[1] = unit_mat(1, 1, 1, 0) - unit_mat(2, 2, 1, 0);

  // Compact basis as matrices.
  std::map<int, CMat> basis;
  for (int p = 0; p < 3; ++p) {
    CMat ep = e[p];
    CMat em = e[rs.negative_of(p)];
    CMat plus;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto [xr, xi] = (ep + em).a[i][j];
        plus.a[i][j] = {-xi, xr};  // multiply by i
      }
    basis[g->e_plus(0, p)] = plus;
    basis[g->e_minus(0, p)] = ep - em;
  }
  for (int i = 0; i < 2; ++i) {
    CMat m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        auto [xr, xi] = h[i].a[r][c];
        m.a[r][c] = {xi, -xr};  // multiply by -i
      }
    basis[g->cartan(0, i)] = m;
  }

  for (int x = 0; x < g->dim(); ++x)
    for (int y = 0; y < g->dim(); ++y) {
      CMat expect = comm(basis[x], basis[y]);
      CMat got = CMat::zero();
      for (const auto& [w, c] : g->bracket(x, y)) got = got + basis[w].scaled(c);
      CHECK((expect - got).zero_mat());
    }
}

TEST_CASE("unit metric values and zeros") {
  auto g = compact_of("A4");
  auto B = InvariantMetric::unit(g);
  const RootSystem& rs = *g->reductive().ideals[0];
  for (int p = 0; p < (int)rs.n_positive(); ++p) {
    CHECK(B.b(g->e_plus(0, p), g->e_plus(0, p)) == 4 / rs.norm2(p));
    CHECK(B.b(g->e_plus(0, p), g->e_plus(0, p)) == Rat(2));  // all A4 roots have length^2 = 2
    CHECK(B.b(g->e_plus(0, p), g->e_minus(0, p)) == 0);
    for (int q = 0; q < (int)rs.n_positive(); ++q)
      if (q != p) {
        CHECK(B.b(g->e_plus(0, p), g->e_plus(0, q)) == 0);
        CHECK(B.b(g->e_plus(0, p), g->e_minus(0, q)) == 0);
      }
  }
}

TEST_CASE("killing scale recovers the adjoint normalization") {
  // For su(r+1) the Killing form is 2(r+1) times the unit metric, which
  // turns B(E,E) = 2 into 4(r+1); for su(5) every step norm becomes 20.
  auto g = compact_of("A4");
  CHECK(g->killing_scale(0) == Rat(10));
  InvariantMetric B(g, {g->killing_scale(0)}, {});
  CHECK(B.b(g->e_plus(0, 0), g->e_plus(0, 0)) == Rat(20));
  CHECK(compact_of("A2")->killing_scale(0) == Rat(6));
  // G2 in the 3-dimensional realization (long roots of length^2 6).
  CHECK(compact_of("G2")->killing_scale(0) == Rat(24));
}

TEST_CASE("abelian-only metric is diagonal") {
  auto g = std::make_shared<CompactAlgebra>(ReductiveAlgebra{{}, 3});
  auto B = InvariantMetric::unit(g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(B.b(i, j) == (i == j ? Rat(1) : Rat(0)));
}

TEST_CASE("metric ad-invariance on small algebras") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto g = compact_of(name);
    InvariantMetric B(g, {Rat(3, 2)}, {});
    std::vector<std::array<int, 3>> fails;
    CHECK(B.check_invariance(4, &fails));
    CHECK(fails.empty());
  }
}

TEST_CASE("metric rejects non-positive scales") {
  auto g = compact_of("A1");
  CHECK_THROWS_AS(InvariantMetric(g, {Rat(0)}, {}), Error);
  CHECK_THROWS_AS(InvariantMetric(g, {Rat(-1)}, {}), Error);
}

TEST_CASE("cross ideal brackets vanish") {
  ReductiveAlgebra two{{std::make_shared<RootSystem>(AlgebraType::parse("A1")),
                        std::make_shared<RootSystem>(AlgebraType::parse("A2"))},
                       1};
  CompactAlgebra g(two);
  for (int x = 0; x < 3; ++x)
    for (int y = 3; y < g.dim(); ++y)
      if (g.element(y).ideal != 0) CHECK(g.bracket(x, y).empty());
}
