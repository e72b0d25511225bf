#include "homkt/tensor.hpp"

#include <algorithm>
#include <set>

#include "homkt/error.hpp"

namespace homkt {

SurdSp surd_sp(const SpRat& v) {
  SurdSp out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i, Surd(c));
  return out;
}

void surd_axpy(std::map<int, Surd>& acc, const Surd& c, const SurdSp& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) {
    auto it = acc.find(i);
    if (it == acc.end()) {
      Surd t = c * x;
      if (!t.is_zero()) acc.emplace(i, std::move(t));
    } else {
      it->second += c * x;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

SurdSp surd_normalize(std::map<int, Surd>&& acc) {
  SurdSp out;
  out.reserve(acc.size());
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  return out;
}

bool surd_sp_zero(const SurdSp& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.second.is_zero(); });
}

Endomorphism Endomorphism::identity(int n) {
  Endomorphism e(n);
  for (int j = 0; j < n; ++j) e.col_[j] = {{j, Surd(Rat(1))}};
  return e;
}

void Endomorphism::set(int row, int column, Surd value) {
  auto& c = col_[column];
  for (auto& [i, v] : c)
    if (i == row) {
      v = std::move(value);
      return;
    }
  if (!value.is_zero()) {
    c.emplace_back(row, std::move(value));
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

Surd Endomorphism::entry(int row, int column) const {
  for (const auto& [i, v] : col_[column])
    if (i == row) return v;
  return Surd();
}

SurdSp Endomorphism::apply(const SurdSp& v) const {
  std::map<int, Surd> acc;
  for (const auto& [j, c] : v) surd_axpy(acc, c, col_[j]);
  return surd_normalize(std::move(acc));
}

CSp Endomorphism::apply(const CSp& v) const {
  std::map<int, CSurd> acc;
  for (const auto& [j, c] : v)
    for (const auto& [i, x] : col_[j]) {
      CSurd t = c * CSurd(x);
      auto it = acc.find(i);
      if (it == acc.end())
        acc.emplace(i, t);
      else
        it->second += t;
    }
  CSp out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  return out;
}

Endomorphism Endomorphism::compose(const Endomorphism& o) const {
  Endomorphism r(n_);
  for (int j = 0; j < n_; ++j) r.col_[j] = apply(o.col_[j]);
  return r;
}

Endomorphism Endomorphism::operator+(const Endomorphism& o) const {
  Endomorphism r(n_);
  for (int j = 0; j < n_; ++j) {
    std::map<int, Surd> acc;
    surd_axpy(acc, Surd(Rat(1)), col_[j]);
    surd_axpy(acc, Surd(Rat(1)), o.col_[j]);
    r.col_[j] = surd_normalize(std::move(acc));
  }
  return r;
}

Endomorphism Endomorphism::operator-(const Endomorphism& o) const {
  return *this + o.scaled(Surd(Rat(-1)));
}

Endomorphism Endomorphism::scaled(const Surd& c) const {
  Endomorphism r(n_);
  for (int j = 0; j < n_; ++j) {
    std::map<int, Surd> acc;
    surd_axpy(acc, c, col_[j]);
    r.col_[j] = surd_normalize(std::move(acc));
  }
  return r;
}

Endomorphism Endomorphism::commutator(const Endomorphism& o) const {
  return compose(o) - o.compose(*this);
}

bool Endomorphism::operator==(const Endomorphism& o) const {
  if (n_ != o.n_) return false;
  for (int j = 0; j < n_; ++j) {
    std::map<int, Surd> acc;
    surd_axpy(acc, Surd(Rat(1)), col_[j]);
    surd_axpy(acc, Surd(Rat(-1)), o.col_[j]);
    if (!acc.empty()) return false;
  }
  return true;
}

bool Endomorphism::is_zero() const {
  return std::all_of(col_.begin(), col_.end(), [](const SurdSp& c) { return surd_sp_zero(c); });
}

bool Endomorphism::is_minus_identity() const {
  return *this == identity(n_).scaled(Surd(Rat(-1)));
}

std::optional<Surd> Endomorphism::proportionality(const Endomorphism& o) const {
  std::optional<Surd> ratio;
  for (int j = 0; j < n_; ++j)
    for (const auto& [i, v] : o.col_[j]) {
      if (v.is_zero()) continue;
      Surd mine = entry(i, j);
      if (!ratio) {
        ratio = mine * v.inverse();
      } else if (mine != *ratio * v) {
        return std::nullopt;
      }
    }
  if (!ratio) return std::nullopt;
  // Every entry of *this must be matched by o as well.
  Endomorphism diff = *this - o.scaled(*ratio);
  if (!diff.is_zero()) return std::nullopt;
  return ratio;
}

int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return sign;
}

template <class V>
void AltFormT<V>::add(std::vector<int> idx, V value) {
  require((int)idx.size() == degree_, ErrorKind::BadInput, "wrong form degree");
  int s = sort_sign(idx);
  if (s == 0) return;
  if (s < 0) value = -value;
  auto it = comp_.find(idx);
  if (it == comp_.end()) {
    if (!value.is_zero()) comp_.emplace(std::move(idx), std::move(value));
  } else {
    it->second += value;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

template <class V>
V AltFormT<V>::value(const std::vector<int>& idx) const {
  std::vector<int> s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return V();
  auto it = comp_.find(s);
  if (it == comp_.end()) return V();
  return sign < 0 ? -it->second : it->second;
}

template class AltFormT<Surd>;
template class AltFormT<CSurd>;

CSurd eval_on(const AltForm& w, const std::vector<CSp>& args) {
  CSurd out;
  std::vector<int> idx(args.size());
  std::function<void(std::size_t, CSurd)> rec = [&](std::size_t slot, CSurd coeff) {
    if (slot == args.size()) {
      Surd v = w.value(idx);
      if (!v.is_zero()) out += coeff * CSurd(v);
      return;
    }
    for (const auto& [i, c] : args[slot]) {
      idx[slot] = i;
      rec(slot + 1, coeff * c);
    }
  };
  rec(0, CSurd(Surd(Rat(1))));
  return out;
}

Nijenhuis::Nijenhuis(Endomorphism I, ProjectedBrackets b) : i_(std::move(I)), b_(std::move(b)) {
  require(i_.compose(i_).is_minus_identity(), ErrorKind::NotAlmostComplex,
          "I^2 != -identity in Nijenhuis");
}

SurdSp Nijenhuis::at(int i, int j) const {
  auto bracket_vv = [&](const SurdSp& v, const SurdSp& w) {
    std::map<int, Surd> acc;
    for (const auto& [a, ca] : v)
      for (const auto& [b, cb] : w) surd_axpy(acc, ca * cb, b_.tangent(a, b));
    return surd_normalize(std::move(acc));
  };
  SurdSp ii = i_.column(i);
  SurdSp ij = i_.column(j);
  SurdSp ei{{i, Surd(Rat(1))}};
  SurdSp ej{{j, Surd(Rat(1))}};
  std::map<int, Surd> acc;
  surd_axpy(acc, Surd(Rat(1)), bracket_vv(ii, ij));
  surd_axpy(acc, Surd(Rat(-1)), b_.tangent(i, j));
  surd_axpy(acc, Surd(Rat(-1)), i_.apply(bracket_vv(ii, ej)));
  surd_axpy(acc, Surd(Rat(-1)), i_.apply(bracket_vv(ei, ij)));
  return surd_normalize(std::move(acc));
}

bool Nijenhuis::vanishes(std::pair<int, int>* witness) const {
  for (int i = 0; i < b_.dim; ++i)
    for (int j = i + 1; j < b_.dim; ++j)
      if (!at(i, j).empty()) {
        if (witness) *witness = {i, j};
        return false;
      }
  return true;
}

AltForm torsion_form(const ProjectedBrackets& b) {
  int n = b.dim;
  AltForm h(3, n);
  // f_{lmn} = B([e_l, e_m], e_n); the Gram may couple toral directions.
  auto f_low = [&](int l, int m) {
    std::map<int, Surd> row;
    for (const auto& [w, c] : b.tangent(l, m)) {
      if (b.gram_support) {
        for (int z : b.gram_support(w)) {
          Surd g = b.gram(w, z);
          if (!g.is_zero()) row[z] += c * g;
        }
      } else {
        for (int z = 0; z < n; ++z) {
          Surd g = b.gram(w, z);
          if (!g.is_zero()) row[z] += c * g;
        }
      }
    }
    return row;
  };
  auto f_at = [&](int l, int m, int z) {
    Surd v;
    for (const auto& [w, c] : b.tangent(l, m)) {
      Surd g = b.gram(w, z);
      if (!g.is_zero()) v += c * g;
    }
    return v;
  };
  std::map<std::vector<int>, Surd> seen;
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m) {
      auto row = f_low(l, m);
      for (const auto& [z, rv] : row) {
        if (rv.is_zero()) continue;
        std::vector<int> idx{l, m, z};
        int sign = sort_sign(idx);
        require(sign != 0, ErrorKind::NotAntisymmetric,
                "f_lmn has a component on a repeated index");
        Surd v = sign < 0 ? -rv : rv;
        seen.emplace(idx, v);
      }
    }
  // Total antisymmetry: the cyclic pairings must reproduce each stored
  // component (including ones a zero bracket would silently miss).
  for (const auto& [idx, v] : seen) {
    require(f_at(idx[1], idx[2], idx[0]) == v && f_at(idx[0], idx[2], idx[1]) == -v,
            ErrorKind::NotAntisymmetric,
            "lowered structure constants are not totally antisymmetric");
  }
  for (auto& [idx, v] : seen) h.add(idx, -v);
  return h;
}

AltFormT<Surd> dh_form(const ProjectedBrackets& b) {
  int n = b.dim;
  AltFormT<Surd> dh(4, n);
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m)
      for (int o = m + 1; o < n; ++o)
        for (int p = o + 1; p < n; ++p) {
          Surd t = b.isotropy_pairing(l, m, o, p) - b.isotropy_pairing(l, o, m, p) +
                   b.isotropy_pairing(l, p, m, o);
          if (t.is_zero()) continue;
          t = t * Surd(Rat(-2));
          dh.add({l, m, o, p}, t);
        }
  return dh;
}

TypeProjector::TypeProjector(const Endomorphism& I) {
  require(I.compose(I).is_minus_identity(), ErrorKind::NotAlmostComplex,
          "I^2 != -identity in type projection");
  int n = I.dim();
  plus_.resize(n);
  minus_.resize(n);
  partners_.assign(n, {});
  CSurd half(Surd(Rat(1, 2)));
  CSurd ihalf(Surd(), Surd(Rat(1, 2)));
  for (int j = 0; j < n; ++j) {
    std::map<int, CSurd> p, q;
    p[j] += half;
    q[j] += half;
    for (const auto& [i, v] : I.column(j)) {
      p[i] += -(ihalf * CSurd(v));  // (e_j - i I e_j)/2
      q[i] += ihalf * CSurd(v);     // (e_j + i I e_j)/2
    }
    for (auto& [i, c] : p)
      if (!c.is_zero()) plus_[j].emplace_back(i, c);
    for (auto& [i, c] : q)
      if (!c.is_zero()) minus_[j].emplace_back(i, c);
  }
  for (int j = 0; j < n; ++j) {
    std::set<int> s{j};
    for (const auto& [i, v] : I.column(j)) s.insert(i);
    partners_[j].assign(s.begin(), s.end());
  }
  // Extend partner sets by the transpose coupling: l is a partner of j
  // when e_l appears in I e_j or e_j appears in I e_l.
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : I.column(j)) {
      (void)v;
      if (std::find(partners_[i].begin(), partners_[i].end(), j) == partners_[i].end())
        partners_[i].push_back(j);
    }
  for (auto& p : partners_) std::sort(p.begin(), p.end());
}

CSp TypeProjector::apply_plus(const CSp& v) const {
  std::map<int, CSurd> acc;
  for (const auto& [j, c] : v)
    for (const auto& [i, x] : plus_[j]) {
      auto& slot = acc[i];
      slot += c * x;
    }
  CSp out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

CSp TypeProjector::apply_minus(const CSp& v) const {
  std::map<int, CSurd> acc;
  for (const auto& [j, c] : v)
    for (const auto& [i, x] : minus_[j]) {
      auto& slot = acc[i];
      slot += c * x;
    }
  CSp out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

CSurd TypeProjector::typed_component(const AltForm& w, const std::vector<int>& idx, int p) const {
  int d = (int)idx.size();
  CSurd out;
  // Sum over the placements of p holomorphic projectors.
  for (int mask = 0; mask < (1 << d); ++mask) {
    if (__builtin_popcount((unsigned)mask) != p) continue;
    std::vector<CSp> args(d);
    for (int s = 0; s < d; ++s) args[s] = (mask >> s) & 1 ? plus_[idx[s]] : minus_[idx[s]];
    out += eval_on(w, args);
  }
  return out;
}

CAltForm TypeProjector::part(const AltForm& w, int p) const {
  int d = w.degree();
  CAltForm out(d, w.dim());
  std::set<std::vector<int>> visited;
  std::vector<int> tuple(d);
  for (const auto& [idx, v] : w.components()) {
    (void)v;
    // Candidate component tuples live in the partner sets of the
    // support tuple.
    std::function<void(int)> rec = [&](int slot) {
      if (slot == d) {
        std::vector<int> s = tuple;
        if (sort_sign(s) == 0) return;
        if (!visited.insert(s).second) return;
        CSurd c = typed_component(w, s, p);
        if (!c.is_zero()) out.add(s, c);
        return;
      }
      for (int cand : partners_[idx[slot]]) {
        tuple[slot] = cand;
        rec(slot + 1);
      }
    };
    rec(0);
  }
  return out;
}

bool TypeProjector::part_vanishes(const AltForm& w, int p, std::vector<int>* witness) const {
  CAltForm part_form = part(w, p);
  if (part_form.is_zero()) return true;
  if (witness) *witness = part_form.components().begin()->first;
  return false;
}

TypeSplit type_split(const AltForm& w, const Endomorphism& I) {
  TypeProjector proj(I);
  TypeSplit out;
  int d = w.degree();
  for (int p = 0; p <= d; ++p) out.parts.emplace(std::make_pair(p, d - p), proj.part(w, p));
  // Reconstruction: the parts must resum to w on every stored tuple and
  // on every tuple reachable through the projector partners.
  std::set<std::vector<int>> tuples;
  for (const auto& [pq, f] : out.parts)
    for (const auto& [idx, v] : f.components()) {
      (void)v;
      tuples.insert(idx);
    }
  for (const auto& [idx, v] : w.components()) tuples.insert(idx);
  for (const auto& idx : tuples) {
    CSurd sum;
    for (const auto& [pq, f] : out.parts) sum += f.value(idx);
    require(sum == CSurd(Surd(w.value(idx))), ErrorKind::Internal,
            "type split does not reconstruct the form");
  }
  return out;
}

HermiticityReport hermitian(const std::function<Surd(int, int)>& gram, const Endomorphism& I,
                            std::size_t max_violations) {
  HermiticityReport rep;
  int n = I.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Surd lhs;
      for (const auto& [a, ca] : I.column(i))
        for (const auto& [b, cb] : I.column(j)) {
          Surd g = gram(a, b);
          if (!g.is_zero()) lhs += ca * cb * g;
        }
      if (lhs != gram(i, j)) {
        rep.pass = false;
        rep.violations.push_back({i, j});
        if (rep.violations.size() >= max_violations) return rep;
      }
    }
  return rep;
}

bool jacobi_contraction_vanishes(const CompactAlgebra& g, const InvariantMetric& B,
                                 std::array<int, 4>* witness) {
  int n = g.dim();
  // T(ij;kl) = B([e_i,e_j],[e_k,e_l]) memoized on pair keys.
  std::map<long long, Rat> memo;
  auto t = [&](int i, int j, int k, int l) -> const Rat& {
    long long key = ((long long)(i * n + j) << 32) | (long long)(k * n + l);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat v = B.pair(g.bracket(i, j), g.bracket(k, l));
    return memo.emplace(key, std::move(v)).first->second;
  };
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m)
      for (int o = m + 1; o < n; ++o)
        for (int p = o + 1; p < n; ++p) {
          Rat s = t(l, m, o, p) - t(l, o, m, p) + t(l, p, m, o);
          if (s != 0) {
            if (witness) *witness = {l, m, o, p};
            return false;
          }
        }
  return true;
}

}  // namespace homkt
