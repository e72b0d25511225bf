#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "homkt/compact.hpp"
#include "homkt/surd.hpp"

namespace homkt {

using SurdSp = std::vector<std::pair<int, Surd>>;
using CSp = std::vector<std::pair<int, CSurd>>;

SurdSp surd_sp(const SpRat& v);
void surd_axpy(std::map<int, Surd>& acc, const Surd& c, const SurdSp& v);
SurdSp surd_normalize(std::map<int, Surd>&& acc);
bool surd_sp_zero(const SurdSp& v);

// Exact endomorphism of an n-dimensional space, stored as sparse
// columns (images of the basis vectors).
class Endomorphism {
public:
  Endomorphism() = default;
  explicit Endomorphism(int n) : n_(n), col_(n) {}
  static Endomorphism identity(int n);

  int dim() const { return n_; }
  void set(int row, int column, Surd value);
  const SurdSp& column(int j) const { return col_[j]; }
  Surd entry(int row, int column) const;

  SurdSp apply(const SurdSp& v) const;
  CSp apply(const CSp& v) const;
  Endomorphism compose(const Endomorphism& o) const;  // this after o
  Endomorphism operator+(const Endomorphism& o) const;
  Endomorphism operator-(const Endomorphism& o) const;
  Endomorphism scaled(const Surd& c) const;
  Endomorphism commutator(const Endomorphism& o) const;

  bool operator==(const Endomorphism& o) const;
  bool is_zero() const;
  bool is_minus_identity() const;
  // Componentwise this == c * o for a single scalar c (o nonzero);
  // returns the ratio when it exists.
  std::optional<Surd> proportionality(const Endomorphism& o) const;

private:
  int n_ = 0;
  std::vector<SurdSp> col_;
};

// Alternating form of fixed degree with components stored on strictly
// increasing index tuples; evaluation on arbitrary tuples applies the
// permutation sign.
template <class V>
class AltFormT {
public:
  AltFormT(int degree, int dim) : degree_(degree), dim_(dim) {}

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<std::vector<int>, V>& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }

  void add(std::vector<int> idx, V value);
  V value(const std::vector<int>& idx) const;

private:
  int degree_, dim_;
  std::map<std::vector<int>, V> comp_;
};

using AltForm = AltFormT<Surd>;
using CAltForm = AltFormT<CSurd>;

// sign of the permutation sorting idx, or 0 on repeated indices.
int sort_sign(std::vector<int>& idx);

// Multilinear evaluation of a real form on sparse complex vectors.
CSurd eval_on(const AltForm& w, const std::vector<CSp>& args);

// The projected-bracket table of a reductive split: bracket of two
// subspace basis vectors decomposed into subspace coordinates and an
// ambient complement remainder.
struct ProjectedBrackets {
  int dim = 0;
  // [e_i, e_j] projected to the subspace, in subspace coordinates.
  std::function<SurdSp(int, int)> tangent;
  // Full-space pairing B(P_k [e_i, e_j], P_k [e_l, e_m]) of the
  // complement parts (used by the dH four-form).
  std::function<Surd(int, int, int, int)> isotropy_pairing;
  // Gram matrix of the subspace basis (may be nondiagonal on the toral
  // block). Entries are exact.
  std::function<Surd(int, int)> gram;
  // Indices z with gram(w, z) possibly nonzero; empty function means
  // every index must be scanned.
  std::function<std::vector<int>(int)> gram_support;
};

// The homogeneous-space Nijenhuis obstruction
//   N(X,Y) = [IX,IY]_m - [X,Y]_m - I([IX,Y]_m) - I([X,IY]_m).
class Nijenhuis {
public:
  Nijenhuis(Endomorphism I, ProjectedBrackets b);

  SurdSp at(int i, int j) const;
  bool vanishes(std::pair<int, int>* witness = nullptr) const;

private:
  Endomorphism i_;
  ProjectedBrackets b_;
};

// H_{lmn} = -f_{lmn} with indices lowered by the subspace Gram; checks
// total antisymmetry of the lowered constants and throws
// NotAntisymmetric on failure.
AltForm torsion_form(const ProjectedBrackets& b);

// (dH)_{lmno} = -2 [ T(lm;no) - T(ln;mo) + T(lo;mn) ] with
// T(ij;kl) = B(P_k[e_i,e_j], P_k[e_k,e_l]), i.e. the component form of
// dH = -tr(F ^ F) in the 1/p! convention.
AltFormT<Surd> dh_form(const ProjectedBrackets& b);

// Diagonalizing projectors (1 -/+ i I)/2 of an almost complex structure.
class TypeProjector {
public:
  explicit TypeProjector(const Endomorphism& I);  // throws NotAlmostComplex

  const CSp& plus(int j) const { return plus_[j]; }
  const CSp& minus(int j) const { return minus_[j]; }
  CSp apply_plus(const CSp& v) const;
  CSp apply_minus(const CSp& v) const;

  // Component of the (p, degree-p) part on a basis tuple.
  CSurd typed_component(const AltForm& w, const std::vector<int>& idx, int p) const;
  // Entire (p, q) part, computed support-driven from w.
  CAltForm part(const AltForm& w, int p) const;
  bool part_vanishes(const AltForm& w, int p, std::vector<int>* witness = nullptr) const;

private:
  std::vector<CSp> plus_, minus_;
  std::vector<std::vector<int>> partners_;  // indices coupled through I
};

struct TypeSplit {
  std::map<std::pair<int, int>, CAltForm> parts;
};

// All (p, q) parts; the reconstruction identity sum = w is asserted.
TypeSplit type_split(const AltForm& w, const Endomorphism& I);

struct HermiticityReport {
  bool pass = true;
  std::vector<std::pair<int, int>> violations;  // capped
};

// B(Ix, Iy) = B(x, y) over all basis pairs of the subspace.
HermiticityReport hermitian(const std::function<Surd(int, int)>& gram, const Endomorphism& I,
                            std::size_t max_violations = 8);

// f_{[lm}^P f_{no]P} = 0 over the full algebra, a contraction of the
// Jacobi identity that cross-checks the dH computation.
bool jacobi_contraction_vanishes(const CompactAlgebra& g, const InvariantMetric& B,
                                 std::array<int, 4>* witness = nullptr);

}  // namespace homkt
