#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homkt/compact.hpp"
#include "homkt/dynkin.hpp"
#include "homkt/tensor.hpp"

namespace homkt {

// A positive root of one ideal of the ambient algebra.
struct IdealRoot {
  int ideal = 0;
  int root = 0;  // positive root id within the ideal
  auto operator<=>(const IdealRoot&) const = default;
};

// Reductive split g = m + k induced by Dynkin colourings: k is spanned
// by the step operators of the coloured sub-diagrams, the coloured
// coroots and any selected abelian directions; m is its orthogonal
// complement. The m basis is ordered as E+/E- pairs over Delta_m^+
// followed by the toral complement vectors.
class CosetDecomposition {
public:
  static CosetDecomposition from_colouring(const ReductiveAlgebra& g,
                                           std::vector<Colouring> colourings,
                                           RatMat k_u1_selection = {}, int extra_u1 = 0,
                                           RatVec scales = {}, RatVec u_constants = {});

  const CompactAlgebra& algebra() const { return *g_; }
  std::shared_ptr<const CompactAlgebra> algebra_ptr() const { return g_; }
  const InvariantMetric& metric() const { return *metric_; }
  int extra_u1() const { return extra_u1_; }
  const std::vector<Colouring>& colourings() const { return colourings_; }

  const std::vector<IdealRoot>& delta_k() const { return delta_k_; }
  const std::vector<IdealRoot>& delta_m() const { return delta_m_; }
  const RatMat& h_k() const { return h_k_; }  // toral-coordinate vectors
  const RatMat& h_m() const { return h_m_; }
  // Toral part of h1 = h_m plus the selected abelian directions of k.
  RatMat h_one() const;

  // Semisimple type of k from the coloured sub-diagrams.
  std::vector<SubdiagramComponent> k_components() const;
  std::string k_str() const;

  int m_dim() const { return 2 * (int)delta_m_.size() + (int)h_m_.size(); }
  int k_dim() const { return 2 * (int)delta_k_.size() + (int)h_k_.size(); }
  int m_toral_offset() const { return 2 * (int)delta_m_.size(); }

  // m basis vectors in ambient coordinates; index layout: E+/E- pairs
  // over delta_m then the h_m rows.
  SpRat m_vector(int i) const;
  SpRat k_vector(int j) const;
  const IdealRoot& m_step_root(int i) const { return delta_m_[i / 2]; }
  bool m_step_is_plus(int i) const { return i % 2 == 0; }
  int m_index_of_step(const IdealRoot& r, bool plus) const;

  // Split an ambient vector into m coordinates and the ambient k part.
  std::pair<SurdSp, SpRat> split(const SpRat& ambient) const;

  // Exact Gram matrix of the m basis.
  Surd gram_m(int i, int j) const;
  const RatMat& toral_gram_m() const { return gm_toral_; }

  ProjectedBrackets tangent_brackets() const;

  // alpha evaluated on a toral-coordinate vector.
  Rat root_on(const IdealRoot& alpha, const RatVec& toral_coords) const;

  // Structural invariants: Delta_k is exactly the annihilator of h1 and
  // [k, m] stays in m. Returns a failure description or nothing.
  std::optional<std::string> structural_violation() const;

  static Rat root_on_toral_raw(const CompactAlgebra& ca, const IdealRoot& r,
                               const RatVec& coords);

private:
  std::shared_ptr<const CompactAlgebra> g_;
  std::shared_ptr<const InvariantMetric> metric_;
  std::vector<Colouring> colourings_;
  int extra_u1_ = 0;
  std::vector<IdealRoot> delta_k_, delta_m_;
  RatMat h_k_, h_m_;
  RatMat k_u1_selection_;
  RatMat toral_basis_inv_;  // inverse of [h_m rows | h_k rows] as columns
  RatMat gm_toral_;         // Gram of the h_m rows
  std::map<std::pair<int, int>, int> step_index_;  // (ideal, signed root id) -> m index

  mutable std::map<long long, std::pair<SurdSp, SpRat>> bracket_cache_;
  const std::pair<SurdSp, SpRat>& projected_bracket(int i, int j) const;
};

struct PositivityAssignment {
  RatVec lambda;                      // toral coordinates of the regular element
  std::map<IdealRoot, int> eps;      // sign on Delta_m^+; eps(-a) = -eps(a)

  int sign(const IdealRoot& r) const { return eps.at(r); }
};

// eps(alpha) = sign of alpha(lambda). lambda must annihilate Delta_k
// and be regular on Delta_m; throws NotRegular with the wall root.
PositivityAssignment positivity_from_regular(const CosetDecomposition& d, const RatVec& lambda);

// Deterministic search for a regular element of h1 (powers of a small
// parameter over the h1 basis).
RatVec default_regular_lambda(const CosetDecomposition& d);

struct PositivityReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// The sign-system conditions: eps(-a) = -eps(a), invariance under
// Delta_k shifts, closure under addition, and the induced positive set
// closure properties; scanned exhaustively.
PositivityReport verify_positivity(const CosetDecomposition& d, const PositivityAssignment& eps);

// Paired toral basis with norm-ratio coefficients: I v_i = r_i w_i,
// I w_i = -(1/r_i) v_i with r_i^2 = B(v_i,v_i)/B(w_i,w_i).
struct CartanPairing {
  RatMat first, second;  // toral-coordinate vectors, same length l
  std::vector<Rat> ratio2;
};

// Greedy rational Gram-Schmidt on the h_m rows followed by consecutive
// pairing; throws OddDimension when dim h_m is odd.
CartanPairing solve_cartan_pairing(const CosetDecomposition& d);

// The invariant almost complex structure: I E+_a = -eps(a) E-_a,
// I E-_a = eps(a) E+_a on step pairs and the pairing action on the
// toral block. Throws OddDimension / PairingIncomplete.
Endomorphism complex_structure(const CosetDecomposition& d, const PositivityAssignment& eps,
                               const CartanPairing& pairing);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct KTReport {
  CheckResult square, invariance, integrability, hermiticity, torsion_type;
  bool all_pass() const {
    return square.pass && invariance.pass && integrability.pass && hermiticity.pass &&
           torsion_type.pass;
  }
};

// ad(k)-invariance of I alone (Eq. inva-style check).
CheckResult check_invariance(const CosetDecomposition& d, const Endomorphism& I);

KTReport verify_kt(const CosetDecomposition& d, const Endomorphism& I);

}  // namespace homkt
