#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homkt/chevalley.hpp"
#include "homkt/root_system.hpp"

namespace homkt {

// Direct sum of simple ideals and an abelian ideal spanned by U_a.
struct ReductiveAlgebra {
  std::vector<std::shared_ptr<const RootSystem>> ideals;
  int abelian_dim = 0;

  static ReductiveAlgebra simple(AlgebraType t) {
    return {{std::make_shared<RootSystem>(t)}, 0};
  }
  long dimension() const {
    long d = abelian_dim;
    for (const auto& i : ideals) d += i->type().dimension();
    return d;
  }
  int total_rank() const {
    int r = 0;
    for (const auto& i : ideals) r += i->rank();
    return r;
  }
  std::string str() const;
};

struct CompactBasisElement {
  enum class Kind { EPlus, EMinus, Cartan, U } kind;
  int ideal = -1;  // -1 for U
  int index = -1;  // positive root id, simple-root index, or u(1) index
  std::string str(const ReductiveAlgebra& g) const;
};

// The compact real form basis {E+_a, E-_a, H_i} per ideal followed by
// the u(1) generators, with exact integer brackets. Step operators of a
// positive root occupy adjacent indices (E+ then E-).
class CompactAlgebra {
public:
  explicit CompactAlgebra(ReductiveAlgebra g);

  const ReductiveAlgebra& reductive() const { return g_; }
  int dim() const { return dim_; }
  const CompactBasisElement& element(int i) const { return elements_[i]; }

  int e_plus(int ideal, int pos_root) const { return step_offset_[ideal] + 2 * pos_root; }
  int e_minus(int ideal, int pos_root) const { return step_offset_[ideal] + 2 * pos_root + 1; }
  int cartan(int ideal, int i) const { return cartan_offset_[ideal] + i; }
  int u(int a) const { return u_offset_ + a; }

  const StructureConstantTable& constants(int ideal) const { return *tables_[ideal]; }
  std::shared_ptr<const StructureConstantTable> constants_ptr(int ideal) const {
    return tables_[ideal];
  }

  const SpRat& bracket(int x, int y) const;
  SpRat bracket(const SpRat& v, const SpRat& w) const;

  // Toral coordinate space: Cartan generators of every ideal followed by
  // the U_a, as a plain rational coordinate system.
  int toral_dim() const { return (int)toral_to_basis_.size(); }
  int toral_to_basis(int t) const { return toral_to_basis_[t]; }
  int basis_to_toral(int i) const { return basis_to_toral_[i]; }
  SpRat toral_vector(const RatVec& coords) const;

  // Pairing alpha(h) for a root alpha of `ideal` against a toral vector:
  // alpha evaluated on sum c_t h_t (u(1) coordinates contribute zero).
  Rat root_on_toral(int ideal, const Root& alpha, const RatVec& coords) const;

  // Killing form divided by the unit invariant metric on an ideal.
  Rat killing_scale(int ideal) const;

private:
  ReductiveAlgebra g_;
  std::vector<std::shared_ptr<const StructureConstantTable>> tables_;
  int dim_ = 0;
  int u_offset_ = 0;
  std::vector<int> step_offset_, cartan_offset_;
  std::vector<CompactBasisElement> elements_;
  std::vector<int> toral_to_basis_, basis_to_toral_;
  mutable std::vector<SpRat> cache_;
  mutable std::vector<bool> cached_;
  SpRat compute_bracket(int x, int y) const;
};

// Block-diagonal invariant metric: one positive scale per simple ideal
// and one positive constant per u(1) generator.
class InvariantMetric {
public:
  InvariantMetric(std::shared_ptr<const CompactAlgebra> g, RatVec scales, RatVec c);
  static InvariantMetric unit(std::shared_ptr<const CompactAlgebra> g);

  const CompactAlgebra& algebra() const { return *g_; }
  std::shared_ptr<const CompactAlgebra> algebra_ptr() const { return g_; }
  const RatVec& scales() const { return scales_; }
  const RatVec& u_constants() const { return c_; }

  Rat b(int i, int j) const;
  Rat pair(const SpRat& v, const SpRat& w) const;
  // Gram matrix of the toral coordinate space.
  RatMat toral_gram() const;

  // B([x,y],z) + B(y,[x,z]) = 0 over all basis triples.
  bool check_invariance(std::size_t max_failures, std::vector<std::array<int, 3>>* failures) const;

private:
  std::shared_ptr<const CompactAlgebra> g_;
  RatVec scales_, c_;
};

}  // namespace homkt
