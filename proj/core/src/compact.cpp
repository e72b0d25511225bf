#include "homkt/compact.hpp"

#include <algorithm>
#include <map>

#include "homkt/error.hpp"

namespace homkt {

std::string ReductiveAlgebra::str() const {
  std::string s;
  for (const auto& i : ideals) {
    if (!s.empty()) s += "+";
    s += i->type().str();
  }
  if (abelian_dim > 0) {
    if (!s.empty()) s += "+";
    s += std::to_string(abelian_dim) + "u1";
  }
  return s.empty() ? "0" : s;
}

std::string CompactBasisElement::str(const ReductiveAlgebra& g) const {
  auto root_name = [&](int ideal, int pos) {
    const auto& c = g.ideals[ideal]->root(pos).coeffs;
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return "(" + s + ")";
  };
  switch (kind) {
    case Kind::EPlus: return "E+" + root_name(ideal, index);
    case Kind::EMinus: return "E-" + root_name(ideal, index);
    case Kind::Cartan: return "H" + std::to_string(index + 1) + "@" + std::to_string(ideal);
    case Kind::U: return "U" + std::to_string(index + 1);
  }
  return "?";
}

namespace {

struct GaussRat {
  Rat re, im;
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat operator*(const Rat& c) const { return {re * c, im * c}; }
  void operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
  }
  bool zero() const { return re == 0 && im == 0; }
};

}  // namespace

CompactAlgebra::CompactAlgebra(ReductiveAlgebra g) : g_(std::move(g)) {
  int off = 0;
  for (std::size_t k = 0; k < g_.ideals.size(); ++k) {
    tables_.push_back(std::make_shared<StructureConstantTable>(g_.ideals[k]));
    const RootSystem& rs = *g_.ideals[k];
    step_offset_.push_back(off);
    for (std::size_t p = 0; p < rs.n_positive(); ++p) {
      elements_.push_back({CompactBasisElement::Kind::EPlus, (int)k, (int)p});
      elements_.push_back({CompactBasisElement::Kind::EMinus, (int)k, (int)p});
    }
    off += 2 * (int)rs.n_positive();
    cartan_offset_.push_back(off);
    for (int i = 0; i < rs.rank(); ++i)
      elements_.push_back({CompactBasisElement::Kind::Cartan, (int)k, i});
    off += rs.rank();
  }
  u_offset_ = off;
  for (int a = 0; a < g_.abelian_dim; ++a)
    elements_.push_back({CompactBasisElement::Kind::U, -1, a});
  dim_ = off + g_.abelian_dim;

  basis_to_toral_.assign(dim_, -1);
  for (std::size_t k = 0; k < g_.ideals.size(); ++k)
    for (int i = 0; i < g_.ideals[k]->rank(); ++i) {
      basis_to_toral_[cartan((int)k, i)] = (int)toral_to_basis_.size();
      toral_to_basis_.push_back(cartan((int)k, i));
    }
  for (int a = 0; a < g_.abelian_dim; ++a) {
    basis_to_toral_[u(a)] = (int)toral_to_basis_.size();
    toral_to_basis_.push_back(u(a));
  }

  cache_.assign((std::size_t)dim_ * dim_, {});
  cached_.assign((std::size_t)dim_ * dim_, false);
}

const SpRat& CompactAlgebra::bracket(int x, int y) const {
  std::size_t key = (std::size_t)x * dim_ + y;
  if (!cached_[key]) {
    cache_[key] = compute_bracket(x, y);
    cached_[key] = true;
  }
  return cache_[key];
}

SpRat CompactAlgebra::bracket(const SpRat& v, const SpRat& w) const {
  std::map<int, Rat> acc;
  for (const auto& [i, ci] : v)
    for (const auto& [j, cj] : w) sp_axpy(acc, ci * cj, bracket(i, j));
  return sp_normalize(std::move(acc));
}

// Brackets are computed by lifting to the complex Chevalley basis
//   E+_a = i(e_a + e_-a),  E-_a = e_a - e_-a,  H_i = -i h_i
// bracketing there and converting back; the result is asserted real.
SpRat CompactAlgebra::compute_bracket(int x, int y) const {
  const CompactBasisElement& ex = elements_[x];
  const CompactBasisElement& ey = elements_[y];
  if (ex.kind == CompactBasisElement::Kind::U || ey.kind == CompactBasisElement::Kind::U)
    return {};
  if (ex.ideal != ey.ideal) return {};
  int k = ex.ideal;
  const RootSystem& rs = *g_.ideals[k];
  const StructureConstantTable& tab = *tables_[k];
  int npos = (int)rs.n_positive();

  // Complex coefficients over {e_root (by id), h_i (npos*2 + i)}.
  auto lift = [&](const CompactBasisElement& e) {
    std::vector<std::pair<int, GaussRat>> v;
    if (e.kind == CompactBasisElement::Kind::EPlus) {
      v.push_back({e.index, {Rat(0), Rat(1)}});
      v.push_back({rs.negative_of(e.index), {Rat(0), Rat(1)}});
    } else if (e.kind == CompactBasisElement::Kind::EMinus) {
      v.push_back({e.index, {Rat(1), Rat(0)}});
      v.push_back({rs.negative_of(e.index), {Rat(-1), Rat(0)}});
    } else {
      v.push_back({2 * npos + e.index, {Rat(0), Rat(-1)}});
    }
    return v;
  };

  auto chev_bracket = [&](int a, int b) {
    std::vector<std::pair<int, Rat>> out;
    int nr = 2 * npos;
    bool ah = a >= nr, bh = b >= nr;
    if (ah && bh) return out;
    if (ah) {
      Rat p = rs.pairing_with_simple(a - nr, rs.root(b));
      if (p != 0) out.push_back({b, p});
      return out;
    }
    if (bh) {
      Rat p = rs.pairing_with_simple(b - nr, rs.root(a));
      if (p != 0) out.push_back({a, -p});
      return out;
    }
    if (b == rs.negative_of(a)) {
      RatVec c = rs.coroot_coeffs(rs.root(a));
      for (int i = 0; i < rs.rank(); ++i)
        if (c[i] != 0) out.push_back({nr + i, c[i]});
      return out;
    }
    if (auto s = rs.sum(a, b)) {
      long long n = tab.n(a, b);
      if (n != 0) out.push_back({*s, Rat(n)});
    }
    return out;
  };

  std::map<int, GaussRat> acc;
  for (const auto& [a, ca] : lift(ex))
    for (const auto& [b, cb] : lift(ey)) {
      GaussRat c = ca * cb;
      for (const auto& [w, n] : chev_bracket(a, b)) {
        auto& slot = acc[w];
        slot += c * n;
      }
    }

  // Back to the compact basis: e_a -> (-i E+ + E-)/2 for positive a,
  // e_-a -> (-i E+ - E-)/2, h_i -> i H_i.
  std::map<int, Rat> out;
  auto put = [&](int idx, const Rat& v) {
    if (v != 0) out[idx] += v;
  };
  for (int p = 0; p < npos; ++p) {
    GaussRat zp{}, zm{};
    if (auto it = acc.find(p); it != acc.end()) zp = it->second;
    if (auto it = acc.find(rs.negative_of(p)); it != acc.end()) zm = it->second;
    if (zp.zero() && zm.zero()) continue;
    // E+ coefficient: -i/2 (zp + zm); E-: 1/2 (zp - zm).
    GaussRat sum{zp.re + zm.re, zp.im + zm.im};
    GaussRat dif{zp.re - zm.re, zp.im - zm.im};
    GaussRat eplus{sum.im / 2, -sum.re / 2};
    GaussRat eminus{dif.re / 2, dif.im / 2};
    require(eplus.im == 0 && eminus.im == 0, ErrorKind::Internal, "non-real compact bracket");
    put(e_plus(k, p), eplus.re);
    put(e_minus(k, p), eminus.re);
  }
  for (int i = 0; i < rs.rank(); ++i) {
    auto it = acc.find(2 * npos + i);
    if (it == acc.end() || it->second.zero()) continue;
    // h_i = i H_i, so an h-coefficient w contributes i w to H_i.
    GaussRat h{-it->second.im, it->second.re};
    require(h.im == 0, ErrorKind::Internal, "non-real Cartan part in compact bracket");
    put(cartan(k, i), h.re);
  }
  std::map<int, Rat> clean;
  for (auto& [i, v] : out)
    if (v != 0) clean[i] = v;
  return sp_normalize(std::move(clean));
}

SpRat CompactAlgebra::toral_vector(const RatVec& coords) const {
  std::map<int, Rat> acc;
  for (std::size_t t = 0; t < coords.size(); ++t)
    if (coords[t] != 0) acc[toral_to_basis_[t]] = coords[t];
  return sp_normalize(std::move(acc));
}

Rat CompactAlgebra::root_on_toral(int ideal, const Root& alpha, const RatVec& coords) const {
  Rat v = 0;
  int t0 = basis_to_toral_[cartan(ideal, 0)];
  const RootSystem& rs = *g_.ideals[ideal];
  for (int i = 0; i < rs.rank(); ++i) {
    const Rat& c = coords[t0 + i];
    if (c != 0) v += c * rs.pairing_with_simple(i, alpha);
  }
  return v;
}

Rat CompactAlgebra::killing_scale(int ideal) const {
  const RootSystem& rs = *g_.ideals[ideal];
  // kappa(h_i, h_i) = sum_gamma <gamma, alpha_i^vee>^2 against the unit
  // metric value 4 / (alpha_i . alpha_i).
  Rat sum = 0;
  for (const auto& r : rs.roots()) {
    Rat p = rs.pairing_with_simple(0, r);
    sum += p * p;
  }
  return sum * rs.simple_gram()[0][0] / 4;
}

InvariantMetric::InvariantMetric(std::shared_ptr<const CompactAlgebra> g, RatVec scales, RatVec c)
    : g_(std::move(g)), scales_(std::move(scales)), c_(std::move(c)) {
  require(scales_.size() == g_->reductive().ideals.size(), ErrorKind::BadInput,
          "one scale per simple ideal required");
  require((int)c_.size() == g_->reductive().abelian_dim, ErrorKind::BadInput,
          "one constant per u(1) generator required");
  for (const auto& s : scales_)
    require(s > 0, ErrorKind::NonPositiveScale, "ideal scale must be positive");
  for (const auto& x : c_)
    require(x > 0, ErrorKind::NonPositiveScale, "u(1) constant must be positive");
}

InvariantMetric InvariantMetric::unit(std::shared_ptr<const CompactAlgebra> g) {
  RatVec scales(g->reductive().ideals.size(), Rat(1));
  RatVec c(g->reductive().abelian_dim, Rat(1));
  return InvariantMetric(std::move(g), std::move(scales), std::move(c));
}

Rat InvariantMetric::b(int i, int j) const {
  const auto& ei = g_->element(i);
  const auto& ej = g_->element(j);
  using K = CompactBasisElement::Kind;
  if (ei.kind == K::U || ej.kind == K::U) {
    if (ei.kind == K::U && ej.kind == K::U && ei.index == ej.index) return c_[ei.index];
    return 0;
  }
  if (ei.ideal != ej.ideal) return 0;
  const RootSystem& rs = *g_->reductive().ideals[ei.ideal];
  const Rat& s = scales_[ei.ideal];
  if (ei.kind == K::Cartan && ej.kind == K::Cartan) {
    const auto& gm = rs.simple_gram();
    return s * 4 * gm[ei.index][ej.index] / (gm[ei.index][ei.index] * gm[ej.index][ej.index]);
  }
  if (ei.kind != ej.kind || ei.index != ej.index) return 0;
  if (ei.kind == K::Cartan) return 0;  // unreachable
  return s * 4 / rs.norm2(ei.index);
}

Rat InvariantMetric::pair(const SpRat& v, const SpRat& w) const {
  Rat out = 0;
  for (const auto& [i, ci] : v)
    for (const auto& [j, cj] : w) {
      Rat bij = b(i, j);
      if (bij != 0) out += ci * cj * bij;
    }
  return out;
}

RatMat InvariantMetric::toral_gram() const {
  int t = g_->toral_dim();
  RatMat m(t, zero_vec(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) m[i][j] = b(g_->toral_to_basis(i), g_->toral_to_basis(j));
  return m;
}

bool InvariantMetric::check_invariance(std::size_t max_failures,
                                       std::vector<std::array<int, 3>>* failures) const {
  int d = g_->dim();
  bool ok = true;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = y; z < d; ++z) {
        Rat lhs = 0;
        for (const auto& [w, c] : g_->bracket(x, y)) lhs += c * b(w, z);
        for (const auto& [w, c] : g_->bracket(x, z)) lhs += c * b(y, w);
        if (lhs != 0) {
          ok = false;
          if (failures) {
            failures->push_back({x, y, z});
            if (failures->size() >= max_failures) return false;
          } else {
            return false;
          }
        }
      }
  return ok;
}

}  // namespace homkt
