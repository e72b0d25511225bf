#include "homkt/rational.hpp"

#include <algorithm>

namespace homkt {

std::string rat_str(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    require(den != 0, ErrorKind::BadInput, "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::exception& e) {
    fail(ErrorKind::BadInput, "cannot parse rational '" + s + "'");
  }
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& a) {
  RatVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat bilinear(const RatVec& a, const RatMat& g, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) row += g[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

RatMat identity(std::size_t n) {
  RatMat m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec r = zero_vec(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, zero_vec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat r(m[0].size(), zero_vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

namespace {

// Row-reduce `m` in place; returns pivot columns. If `rhs` is non-null
// the same row operations are applied to it.
std::vector<std::size_t> rref(RatMat& m, RatMat* rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    Rat inv = Rat(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    if (rhs)
      for (auto& x : (*rhs)[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      if (rhs)
        for (std::size_t j = 0; j < (*rhs)[i].size(); ++j) (*rhs)[i][j] -= f * (*rhs)[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMat invert(const RatMat& m) {
  std::size_t n = m.size();
  RatMat a = m;
  RatMat inv = identity(n);
  auto pivots = rref(a, &inv);
  require(pivots.size() == n, ErrorKind::DegenerateMetric, "singular matrix");
  return inv;
}

std::size_t rank_of(RatMat m) { return rref(m).size(); }

RatMat nullspace(const RatMat& m) {
  RatMat a = m;
  auto pivots = rref(a);
  std::size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v = zero_vec(cols);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    basis.push_back(primitive(v));
  }
  return basis;
}

RatVec solve(RatMat m, RatVec v) {
  RatMat rhs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = {v[i]};
  auto pivots = rref(m, &rhs);
  std::size_t cols = m.empty() ? 0 : m[0].size();
  require(pivots.size() == cols, ErrorKind::DegenerateMetric, "singular system");
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    require(rhs[r][0] == 0, ErrorKind::DegenerateMetric, "inconsistent system");
  RatVec x = zero_vec(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r][0];
  return x;
}

RatVec primitive(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  Int g = 0;
  for (const auto& x : v) g = gcd(g, Int(numerator(x) * (l / denominator(x))));
  if (g == 0) return v;
  RatVec r(v);
  for (auto& x : r) x *= Rat(l, g);
  for (const auto& x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : r) y = -y;
    break;
  }
  return r;
}

RatMat gram_schmidt(const RatMat& vectors, const RatMat& g) {
  RatMat out;
  for (const auto& v : vectors) {
    RatVec w = v;
    for (const auto& u : out) {
      Rat nu = bilinear(u, g, u);
      require(nu != 0, ErrorKind::DegenerateMetric, "isotropic vector in Gram-Schmidt");
      w = sub(w, scale(bilinear(u, g, v) / nu, u));
    }
    require(!is_zero(w), ErrorKind::DegenerateMetric, "dependent vectors in Gram-Schmidt");
    out.push_back(w);
  }
  return out;
}

bool in_span(const RatMat& basis, const RatVec& v) {
  if (is_zero(v)) return true;
  RatMat m = basis;
  std::size_t r0 = rank_of(m);
  m.push_back(v);
  return rank_of(m) == r0;
}

}  // namespace homkt
