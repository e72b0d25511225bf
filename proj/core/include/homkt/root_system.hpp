#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homkt/rational.hpp"

namespace homkt {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct AlgebraType {
  Family family = Family::A;
  int rank = 1;

  static AlgebraType parse(const std::string& s);  // "A4", "E8", ...
  std::string str() const;

  // Throws InvalidRank when the (family, rank) pair is not a simple type.
  void validate() const;

  long root_count() const;
  long dimension() const { return rank + root_count(); }

  bool operator==(const AlgebraType& o) const { return family == o.family && rank == o.rank; }
  bool operator<(const AlgebraType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

struct Root {
  std::vector<int> coeffs;  // over the simple roots
  int height = 0;           // sum of coeffs
  int id = -1;

  bool positive() const { return height > 0; }
};

// One simple root system in its standard rational Euclidean realization.
// Roots are keyed by their simple-root coefficient vectors; positive
// roots come first in height-major lexicographic order and the negative
// of positive root i sits at index i + n_positive.
class RootSystem {
public:
  explicit RootSystem(AlgebraType type);

  const AlgebraType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<RatVec>& simple_root_vectors() const { return simple_; }
  const RatMat& simple_gram() const { return gram_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t n_positive() const { return n_pos_; }
  const Root& root(int id) const { return roots_[id]; }
  int negative_of(int id) const {
    return id < (int)n_pos_ ? id + (int)n_pos_ : id - (int)n_pos_;
  }
  const Root& highest_root() const { return roots_[highest_]; }

  std::optional<int> find(const std::vector<int>& coeffs) const;
  int require_root(const std::vector<int>& coeffs) const;
  std::optional<int> sum(int a, int b) const;  // id of root(a)+root(b), if a root

  Rat inner(int a, int b) const;                 // alpha . beta
  Rat inner(const Root& a, const Root& b) const;
  Rat norm2(int a) const { return inner(a, a); }
  // 2 (alpha_i . beta) / (alpha_i . alpha_i) for simple root i; always an integer.
  Rat pairing_with_simple(int i, const Root& beta) const;

  std::vector<std::vector<Rat>> cartan_matrix() const;  // A_ij = 2 a_i.a_j / a_i.a_i

  // Maximal p, q >= 0 with beta - p alpha ... beta + q alpha all roots.
  std::pair<int, int> root_string(int alpha, int beta) const;

  // Ambient Euclidean coordinates of a root (for serialization and tests).
  RatVec ambient(const Root& r) const;

  // Integer coefficients of the coroot alpha^vee over the simple coroots.
  RatVec coroot_coeffs(const Root& r) const;

private:
  void build();

  AlgebraType type_;
  std::vector<RatVec> simple_;
  RatMat gram_;  // exact inner products of simple roots
  std::vector<Root> roots_;
  std::size_t n_pos_ = 0;
  int highest_ = -1;
  std::vector<std::pair<std::vector<int>, int>> index_;  // sorted coeffs -> id
};

}  // namespace homkt
