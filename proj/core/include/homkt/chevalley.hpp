#pragma once

#include <array>
#include <map>
#include <optional>
#include <memory>
#include <vector>

#include "homkt/root_system.hpp"

namespace homkt {

// Sparse exact vector over an indexed basis.
using SpRat = std::vector<std::pair<int, Rat>>;

SpRat sp_normalize(std::map<int, Rat>&& acc);
void sp_axpy(std::map<int, Rat>& acc, const Rat& c, const SpRat& v);
bool sp_is_zero(const SpRat& v);

// Integer structure constants N_{alpha,beta} of one simple algebra in
// the Chevalley basis, |N| = p + 1 with the sign convention fixed by
// setting N = +(p+1) on extraspecial pairs (minimal first member in the
// height-major lexicographic order) and propagating everything else
// through the standard four-root and triangle identities.
class StructureConstantTable {
public:
  explicit StructureConstantTable(std::shared_ptr<const RootSystem> rs);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }

  // N for arbitrary root ids; 0 when root(a) + root(b) is not a root.
  long long n(int a, int b) const;

  long long max_abs_n() const;

  // All (a, b, N) with root(a) + root(b) a root, in id order.
  std::vector<std::array<long long, 3>> entries() const;

private:
  std::shared_ptr<const RootSystem> rs_;
  // Keyed by a * n_roots + b for positive ids a < b.
  std::map<long long, long long> pos_;
  long long resolve(int a, int b) const;
};

// Complex Chevalley-basis algebra {e_alpha : alpha in Delta} + {h_i}.
// Basis index: root id for step operators, n_roots + i for h_i.
class ChevalleyAlgebra {
public:
  // `flip_sign` negates N on one ordered pair (and its transpose) while
  // leaving the identity-forced partner entries stale; used by the
  // mutation-sensitivity tests.
  explicit ChevalleyAlgebra(std::shared_ptr<const StructureConstantTable> t,
                            std::optional<std::pair<int, int>> flip_sign = std::nullopt);

  int dim() const { return (int)rs_->roots().size() + rs_->rank(); }
  int e_index(int root_id) const { return root_id; }
  int h_index(int i) const { return (int)rs_->roots().size() + i; }

  const SpRat& bracket(int x, int y) const;  // cached, antisymmetric

private:
  std::shared_ptr<const StructureConstantTable> tab_;
  std::shared_ptr<const RootSystem> rs_;
  std::vector<SpRat> table_;  // dense pair table, x * dim + y
};

struct JacobiReport {
  long long triples_checked = 0;
  std::vector<std::array<int, 3>> failures;  // capped basis triples
  bool pass() const { return failures.empty(); }
};

// Exhaustive [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over unordered basis
// triples of the full complex algebra.
JacobiReport verify_jacobi(const ChevalleyAlgebra& a, std::size_t max_failures = 8);
JacobiReport verify_jacobi(const StructureConstantTable& t, std::size_t max_failures = 8);

}  // namespace homkt
