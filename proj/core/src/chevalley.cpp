#include "homkt/chevalley.hpp"

#include <algorithm>

#include "homkt/error.hpp"

namespace homkt {

SpRat sp_normalize(std::map<int, Rat>&& acc) {
  SpRat out;
  out.reserve(acc.size());
  for (auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, std::move(c));
  return out;
}

void sp_axpy(std::map<int, Rat>& acc, const Rat& c, const SpRat& v) {
  if (c == 0) return;
  for (const auto& [i, x] : v) {
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, c * x);
    else {
      it->second += c * x;
      if (it->second == 0) acc.erase(it);
    }
  }
}

bool sp_is_zero(const SpRat& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.second == 0; });
}

StructureConstantTable::StructureConstantTable(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)) {
  const RootSystem& r = *rs_;
  long long nr = (long long)r.roots().size();
  // Positive roots are already in height-major lexicographic order, so
  // id order is the total order fixing the extraspecial pairs.
  for (std::size_t g = 0; g < r.n_positive(); ++g) {
    if (r.root((int)g).height < 2) continue;
    // Special pairs (a, b), a <= b positive, a + b = gamma.
    std::vector<std::pair<int, int>> special;
    for (std::size_t a = 0; a < r.n_positive(); ++a) {
      const Root& ra = r.root((int)a);
      if (2 * ra.height > r.root((int)g).height) break;
      std::vector<int> diff = r.root((int)g).coeffs;
      for (int i = 0; i < r.rank(); ++i) diff[i] -= ra.coeffs[i];
      auto b = r.find(diff);
      if (b && *b >= (int)a && *b < (int)r.n_positive()) special.emplace_back((int)a, *b);
    }
    if (special.empty()) continue;
    // Extraspecial pair: minimal first member; N = +(p+1).
    auto [ea, eb] = special.front();
    auto [p0, q0] = r.root_string(ea, eb);
    (void)q0;
    pos_[ea * nr + eb] = p0 + 1;
    // Jacobi for (e_a, e_-x, e_-y) at the e_-b coefficient gives
    //   N(x,y) N(a,-gamma) = N(-y,a) N(-x,a-y) + N(a,-x) N(-y,a-x)
    // and only consumes entries with lower-height sums.
    long long denom = resolve(ea, r.negative_of((int)g));
    require(denom != 0, ErrorKind::Internal, "vanishing N(a, -gamma) on extraspecial pair");
    for (std::size_t s = 1; s < special.size(); ++s) {
      auto [x, y] = special[s];
      long long t1 = resolve(r.negative_of(y), ea);
      long long t2 = 0;
      if (t1 != 0) {
        auto s1 = r.sum(ea, r.negative_of(y));  // a - y
        if (s1) t2 = resolve(r.negative_of(x), *s1);
      }
      long long u1 = resolve(ea, r.negative_of(x));
      long long u2 = 0;
      if (u1 != 0) {
        auto s2 = r.sum(ea, r.negative_of(x));  // a - x
        if (s2) u2 = resolve(r.negative_of(y), *s2);
      }
      long long rhs = t1 * t2 + u1 * u2;
      require(rhs % denom == 0, ErrorKind::Internal, "four-root identity not divisible");
      long long nxy = rhs / denom;
      require(nxy != 0, ErrorKind::Internal, "vanishing structure constant on a special pair");
      pos_[(long long)x * nr + y] = nxy;
    }
  }
}

long long StructureConstantTable::resolve(int a, int b) const {
  const RootSystem& r = *rs_;
  long long nr = (long long)r.roots().size();
  int np = (int)r.n_positive();
  auto c = r.sum(a, b);
  if (!c) return 0;
  bool aneg = a >= np, bneg = b >= np;
  if (!aneg && !bneg) {
    if (a < b) {
      auto it = pos_.find((long long)a * nr + b);
      require(it != pos_.end(), ErrorKind::Internal, "positive pair not yet computed");
      return it->second;
    }
    return -resolve(b, a);
  }
  if (aneg && bneg) return -resolve(r.negative_of(a), r.negative_of(b));
  if (aneg) return -resolve(b, a);
  // a positive, b negative; c = a + b. The coroot-normalized triangle
  // identity N(x,y)/(z.z) = N(y,z)/(x.x) = N(z,x)/(y.y) for x+y+z = 0
  // carries the inverse norms of the omitted root.
  Rat v;
  if (*c < np)
    v = Rat(-resolve(r.negative_of(b), *c)) * r.norm2(*c) / r.norm2(a);
  else
    v = Rat(resolve(r.negative_of(*c), a)) * r.norm2(*c) / r.norm2(b);
  require(denominator(v) == 1, ErrorKind::Internal, "non-integer structure constant");
  return (long long)numerator(v);
}

long long StructureConstantTable::n(int a, int b) const {
  const RootSystem& r = *rs_;
  require(a >= 0 && a < (int)r.roots().size() && b >= 0 && b < (int)r.roots().size(),
          ErrorKind::NotARoot, "root id out of range");
  if (!r.sum(a, b)) return 0;
  return resolve(a, b);
}

long long StructureConstantTable::max_abs_n() const {
  long long m = 0;
  for (const auto& [k, v] : pos_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<std::array<long long, 3>> StructureConstantTable::entries() const {
  std::vector<std::array<long long, 3>> out;
  int nr = (int)rs_->roots().size();
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      if (a == b || b == rs_->negative_of(a)) continue;
      if (!rs_->sum(a, b)) continue;
      out.push_back({a, b, resolve(a, b)});
    }
  return out;
}

ChevalleyAlgebra::ChevalleyAlgebra(std::shared_ptr<const StructureConstantTable> t,
                                   std::optional<std::pair<int, int>> flip_sign)
    : tab_(std::move(t)), rs_(tab_->roots_ptr()) {
  const RootSystem& r = *rs_;
  int nr = (int)r.roots().size();
  int d = dim();
  auto nval = [&](int a, int b) {
    long long v = tab_->n(a, b);
    if (flip_sign && ((flip_sign->first == a && flip_sign->second == b) ||
                      (flip_sign->first == b && flip_sign->second == a)))
      v = -v;
    return v;
  };
  table_.assign((std::size_t)d * d, {});
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      std::map<int, Rat> acc;
      if (x < nr && y < nr) {
        if (y == r.negative_of(x)) {
          // [e_a, e_-a] = h_a, expanded over the simple coroots.
          RatVec c = r.coroot_coeffs(r.root(x));
          for (int i = 0; i < r.rank(); ++i)
            if (c[i] != 0) acc[h_index(i)] = c[i];
        } else if (auto s = r.sum(x, y)) {
          long long nv = nval(x, y);
          if (nv != 0) acc[e_index(*s)] = Rat(nv);
        }
      } else if (x >= nr && y < nr) {
        acc[y] = r.pairing_with_simple(x - nr, r.root(y));
        if (acc[y] == 0) acc.erase(y);
      } else if (x < nr && y >= nr) {
        acc[x] = -r.pairing_with_simple(y - nr, r.root(x));
        if (acc[x] == 0) acc.erase(x);
      }
      table_[(std::size_t)x * d + y] = sp_normalize(std::move(acc));
    }
}

const SpRat& ChevalleyAlgebra::bracket(int x, int y) const {
  return table_[(std::size_t)x * dim() + y];
}

JacobiReport verify_jacobi(const ChevalleyAlgebra& a, std::size_t max_failures) {
  JacobiReport rep;
  int d = a.dim();
  for (int x = 0; x < d && rep.failures.size() < max_failures; ++x)
    for (int y = x + 1; y < d && rep.failures.size() < max_failures; ++y)
      for (int z = y + 1; z < d; ++z) {
        std::map<int, Rat> acc;
        for (const auto& [w, c] : a.bracket(x, y)) sp_axpy(acc, c, a.bracket(w, z));
        for (const auto& [w, c] : a.bracket(y, z)) sp_axpy(acc, c, a.bracket(w, x));
        for (const auto& [w, c] : a.bracket(z, x)) sp_axpy(acc, c, a.bracket(w, y));
        ++rep.triples_checked;
        if (!acc.empty()) {
          rep.failures.push_back({x, y, z});
          if (rep.failures.size() >= max_failures) break;
        }
      }
  return rep;
}

JacobiReport verify_jacobi(const StructureConstantTable& t, std::size_t max_failures) {
  ChevalleyAlgebra a(std::make_shared<StructureConstantTable>(t));
  return verify_jacobi(a, max_failures);
}

}  // namespace homkt
