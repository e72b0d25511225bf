#include "homkt/root_system.hpp"

#include <algorithm>
#include <set>

#include "homkt/error.hpp"

namespace homkt {

AlgebraType AlgebraType::parse(const std::string& s) {
  require(s.size() >= 2, ErrorKind::BadInput, "algebra name too short: '" + s + "'");
  char f = s[0];
  require(f >= 'A' && f <= 'G', ErrorKind::BadInput, "unknown family in '" + s + "'");
  int r = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    require(s[i] >= '0' && s[i] <= '9', ErrorKind::BadInput, "bad rank in '" + s + "'");
    r = r * 10 + (s[i] - '0');
  }
  AlgebraType t{static_cast<Family>(f), r};
  t.validate();
  return t;
}

std::string AlgebraType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void AlgebraType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;  // C1 is A1 and is rejected
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  require(ok, ErrorKind::InvalidRank, "no simple algebra " + str());
}

long AlgebraType::root_count() const {
  long r = rank;
  switch (family) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
    case Family::E: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

namespace {

RatVec unit(int dim, int i, Rat v = 1) {
  RatVec e(dim, Rat(0));
  e[i] = v;
  return e;
}

// Standard rational realizations (Bourbaki node numbering throughout).
std::vector<RatVec> simple_roots_of(const AlgebraType& t) {
  int r = t.rank;
  std::vector<RatVec> s;
  switch (t.family) {
    case Family::A: {
      for (int i = 0; i < r; ++i) {
        RatVec v(r + 1, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::B: {
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v(r, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(unit(r, r - 1));
      break;
    }
    case Family::C: {
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v(r, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(unit(r, r - 1, 2));
      break;
    }
    case Family::D: {
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v(r, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      RatVec v(r, Rat(0));
      v[r - 2] = 1;
      v[r - 1] = 1;
      s.push_back(v);
      break;
    }
    case Family::E: {
      // E8 realization in R^8; E6, E7 take the first 6 or 7 simple roots.
      std::vector<RatVec> e8;
      RatVec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      e8.push_back(a1);
      RatVec a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      e8.push_back(a2);
      for (int i = 0; i < 6; ++i) {
        RatVec v(8, Rat(0));
        v[i] = -1;
        v[i + 1] = 1;
        e8.push_back(v);
      }
      s.assign(e8.begin(), e8.begin() + r);
      break;
    }
    case Family::F: {
      s.push_back([] { RatVec v(4, Rat(0)); v[1] = 1; v[2] = -1; return v; }());
      s.push_back([] { RatVec v(4, Rat(0)); v[2] = 1; v[3] = -1; return v; }());
      s.push_back(unit(4, 3));
      s.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    case Family::G: {
      s.push_back({Rat(1), Rat(-1), Rat(0)});
      s.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
  }
  return s;
}

}  // namespace

RootSystem::RootSystem(AlgebraType type) : type_(type) {
  type_.validate();
  simple_ = simple_roots_of(type_);
  int r = type_.rank;
  gram_.assign(r, zero_vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram_[i][j] = dot(simple_[i], simple_[j]);
  build();
}

void RootSystem::build() {
  int r = type_.rank;
  // Integer Cartan pairings <alpha_j, alpha_i^vee> for reflections.
  std::vector<std::vector<long long>> a(r, std::vector<long long>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat x = 2 * gram_[i][j] / gram_[i][i];
      require(denominator(x) == 1, ErrorKind::Internal, "non-integer Cartan pairing");
      a[i][j] = (long long)numerator(x);
    }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  // Closure under the simple reflections s_i(b) = b - <b, a_i^vee> a_i.
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::vector<int> c = queue[q];
    for (int i = 0; i < r; ++i) {
      long long pair = 0;
      for (int j = 0; j < r; ++j) pair += a[i][j] * c[j];
      std::vector<int> c2 = c;
      c2[i] -= (int)pair;
      if (seen.insert(c2).second) queue.push_back(c2);
    }
  }

  std::vector<std::vector<int>> pos;
  for (const auto& c : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    require(nonneg || nonpos, ErrorKind::Internal, "mixed-sign root from closure");
    if (nonneg) pos.push_back(c);
  }
  auto height = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
    int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  n_pos_ = pos.size();
  require((long)(2 * n_pos_) == type_.root_count(), ErrorKind::Internal,
          "root count mismatch for " + type_.str());

  roots_.clear();
  for (const auto& c : pos) {
    Root rt;
    rt.coeffs = c;
    rt.height = height(c);
    rt.id = (int)roots_.size();
    roots_.push_back(rt);
  }
  for (std::size_t i = 0; i < n_pos_; ++i) {
    Root rt;
    rt.coeffs.resize(r);
    for (int j = 0; j < r; ++j) rt.coeffs[j] = -pos[i][j];
    rt.height = -roots_[i].height;
    rt.id = (int)roots_.size();
    roots_.push_back(rt);
  }
  index_.clear();
  for (const auto& rt : roots_) index_.emplace_back(rt.coeffs, rt.id);
  std::sort(index_.begin(), index_.end());

  highest_ = (int)n_pos_ - 1;
  // The maximal-height positive root; uniqueness and dominance hold for
  // every simple type and are asserted in tests.
}

std::optional<int> RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(coeffs, -1));
  if (it == index_.end() || it->first != coeffs) return std::nullopt;
  return it->second;
}

int RootSystem::require_root(const std::vector<int>& coeffs) const {
  auto id = find(coeffs);
  require(id.has_value(), ErrorKind::NotARoot, "not a root of " + type_.str());
  return *id;
}

std::optional<int> RootSystem::sum(int a, int b) const {
  std::vector<int> c = roots_[a].coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += roots_[b].coeffs[i];
  return find(c);
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat s = 0;
  for (int i = 0; i < type_.rank; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < type_.rank; ++j)
      if (b.coeffs[j] != 0) s += Rat(a.coeffs[i]) * gram_[i][j] * b.coeffs[j];
  }
  return s;
}

Rat RootSystem::inner(int a, int b) const { return inner(roots_[a], roots_[b]); }

Rat RootSystem::pairing_with_simple(int i, const Root& beta) const {
  Rat s = 0;
  for (int j = 0; j < type_.rank; ++j)
    if (beta.coeffs[j] != 0) s += gram_[i][j] * beta.coeffs[j];
  return 2 * s / gram_[i][i];
}

std::vector<std::vector<Rat>> RootSystem::cartan_matrix() const {
  int r = type_.rank;
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = 2 * gram_[i][j] / gram_[i][i];
  return a;
}

std::pair<int, int> RootSystem::root_string(int alpha, int beta) const {
  require(alpha >= 0 && alpha < (int)roots_.size() && beta >= 0 && beta < (int)roots_.size(),
          ErrorKind::NotARoot, "root id out of range");
  require(beta != alpha && beta != negative_of(alpha), ErrorKind::NotARoot,
          "root string undefined for beta = +-alpha");
  auto walk = [&](int dir) {
    int n = 0;
    std::vector<int> c = roots_[beta].coeffs;
    for (;;) {
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += dir * roots_[alpha].coeffs[i];
      if (!find(c)) break;
      ++n;
    }
    return n;
  };
  return {walk(-1), walk(+1)};
}

RatVec RootSystem::ambient(const Root& r) const {
  RatVec v(simple_[0].size(), Rat(0));
  for (int i = 0; i < type_.rank; ++i)
    if (r.coeffs[i] != 0) v = add(v, scale(Rat(r.coeffs[i]), simple_[i]));
  return v;
}

RatVec RootSystem::coroot_coeffs(const Root& r) const {
  Rat n2 = inner(r, r);
  RatVec c(type_.rank, Rat(0));
  for (int i = 0; i < type_.rank; ++i) {
    if (r.coeffs[i] == 0) continue;
    c[i] = Rat(r.coeffs[i]) * gram_[i][i] / n2;
    require(denominator(c[i]) == 1, ErrorKind::Internal, "non-integer coroot coefficient");
  }
  return c;
}

}  // namespace homkt
