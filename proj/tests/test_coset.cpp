#include "doctest.h"

#include "homkt/coset.hpp"

using namespace homkt;

namespace {

CosetDecomposition group_manifold(const char* name, int extra_u1 = 0) {
  auto g = ReductiveAlgebra::simple(AlgebraType::parse(name));
  return CosetDecomposition::from_colouring(g, {Colouring{}}, {}, extra_u1);
}

}  // namespace

TEST_CASE("trivial colourings") {
  // No coloured vertices: m is all of g.
  auto d = group_manifold("A2");
  CHECK(d.delta_k().empty());
  CHECK(d.m_dim() == 8);
  CHECK(d.k_dim() == 0);
  CHECK(!d.structural_violation());

  // All vertices coloured: k is the full semisimple part.
  auto g = ReductiveAlgebra::simple(AlgebraType::parse("A2"));
  auto full = CosetDecomposition::from_colouring(g, {Colouring{{0, 1}}});
  CHECK(full.delta_m().empty());
  CHECK(full.m_dim() == 0);
  CHECK(full.k_str() == "A2");
}

TEST_CASE("positivity from a regular element") {
  auto d = group_manifold("A2");
  RatVec lambda = default_regular_lambda(d);
  auto eps = positivity_from_regular(d, lambda);
  CHECK(eps.eps.size() == 3);
  auto rep = verify_positivity(d, eps);
  CHECK(rep.pass);

  // Opposite element flips every sign.
  auto eps2 = positivity_from_regular(d, scale(Rat(-1), lambda));
  for (const auto& [r, s] : eps.eps) CHECK(eps2.eps.at(r) == -s);

  // A wall is rejected with a witness: alpha_1(H_1 + 2 H_2) = 0.
  RatVec wall = zero_vec(d.algebra().toral_dim());
  wall[0] = 1;
  wall[1] = 2;
  CHECK_THROWS_AS(positivity_from_regular(d, wall), Error);
}

TEST_CASE("cartan pairing is hermitian by construction") {
  auto d = group_manifold("A2");
  auto pairing = solve_cartan_pairing(d);
  REQUIRE(pairing.first.size() == 1);
  auto eps = positivity_from_regular(d, default_regular_lambda(d));
  Endomorphism I = complex_structure(d, eps, pairing);
  CHECK(I.compose(I).is_minus_identity());
  auto gram = [&](int i, int j) { return d.gram_m(i, j); };
  CHECK(hermitian(gram, I).pass);
}

TEST_CASE("A2 group manifold carries a KT structure") {
  auto d = group_manifold("A2");
  auto eps = positivity_from_regular(d, default_regular_lambda(d));
  Endomorphism I = complex_structure(d, eps, solve_cartan_pairing(d));
  KTReport rep = verify_kt(d, I);
  CHECK(rep.square.pass);
  CHECK(rep.invariance.pass);
  CHECK(rep.integrability.pass);
  CHECK(rep.hermiticity.pass);
  CHECK(rep.torsion_type.pass);
  CHECK(rep.all_pass());

  // The torsion itself is nonzero (weak KT only on the coset level;
  // nonabelian group manifolds have H != 0).
  AltForm h = torsion_form(d.tangent_brackets());
  CHECK(!h.is_zero());
}

TEST_CASE("flipping one epsilon breaks integrability with a witness") {
  auto d = group_manifold("A2");
  auto eps = positivity_from_regular(d, default_regular_lambda(d));
  // Flip the sign on the highest root: alpha_1 + alpha_2 keeps
  // eps(alpha_1) = eps(alpha_2) != eps(alpha_1 + alpha_2).
  const RootSystem& rs = *d.algebra().reductive().ideals[0];
  IdealRoot psi{0, rs.highest_root().id};
  PositivityAssignment mutated = eps;
  mutated.eps[psi] = -mutated.eps[psi];
  CHECK(!verify_positivity(d, mutated).pass);

  Endomorphism I = complex_structure(d, mutated, solve_cartan_pairing(d));
  KTReport rep = verify_kt(d, I);
  CHECK(rep.square.pass);
  CHECK(!rep.integrability.pass);
  CHECK(!rep.integrability.witness.empty());
}

TEST_CASE("symmetric space: CP^3 from A3 with an abelian extension of k") {
  // Colour nodes 2,3 (0-based 1,2); the leftover toral direction joins
  // k, so m is the 6-dimensional symmetric complement.
  auto g = ReductiveAlgebra::simple(AlgebraType::parse("A3"));
  Colouring col{{1, 2}};
  // The annihilator of the coloured subdiagram inside the Cartan.
  auto probe = CosetDecomposition::from_colouring(g, {col});
  REQUIRE(probe.h_m().size() == 1);
  RatMat sel = {probe.h_m()[0]};
  auto d = CosetDecomposition::from_colouring(g, {col}, sel);
  CHECK(d.m_dim() == 6);
  CHECK(d.h_m().empty());
  CHECK(d.k_str() == "A2");
  CHECK(!d.structural_violation());

  auto eps = positivity_from_regular(d, default_regular_lambda(d));
  Endomorphism I = complex_structure(d, eps, solve_cartan_pairing(d));
  KTReport rep = verify_kt(d, I);
  CHECK(rep.all_pass());
  // Symmetric: [m, m] in k, so the torsion vanishes identically.
  CHECK(torsion_form(d.tangent_brackets()).is_zero());
}

TEST_CASE("odd toral dimension is rejected at the complex-structure stage") {
  auto d = group_manifold("A1");  // dim 3, toral part 1-dimensional
  CHECK(d.m_dim() == 3);
  CHECK_THROWS_AS(solve_cartan_pairing(d), Error);
  // Appending one u(1) fixes it (the Hopf surface S^1 x S^3).
  auto d4 = group_manifold("A1", 1);
  CHECK(d4.m_dim() == 4);
  auto eps = positivity_from_regular(d4, default_regular_lambda(d4));
  Endomorphism I = complex_structure(d4, eps, solve_cartan_pairing(d4));
  CHECK(verify_kt(d4, I).all_pass());
}
