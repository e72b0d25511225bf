#include "homkt/surd.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace homkt {

namespace {

// n = square * squarefree; returns (sqrt(square), squarefree).
std::pair<Int, Int> split_square(Int n) {
  Int sq = 1, free = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2) free *= p;
  }
  free *= n;
  return {sq, free};
}

}  // namespace

void Surd::add_term(const Int& radicand, const Rat& coeff) {
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(radicand, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Surd Surd::sqrt_of(const Rat& x) {
  require(x >= 0, ErrorKind::BadInput, "sqrt of negative rational");
  if (x == 0) return Surd();
  // sqrt(p/q) = sqrt(p q) / q
  Int n = numerator(x) * denominator(x);
  auto [sq, free] = split_square(n);
  Surd s;
  s.set(free, Rat(sq, denominator(x)));
  return s;
}

Surd Surd::radical(const Rat& c, const Int& n) {
  require(n >= 1, ErrorKind::BadInput, "radicand must be positive");
  auto [sq, free] = split_square(n);
  Surd s;
  s.set(free, c * sq);
  return s;
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat Surd::rational_part() const {
  auto it = terms_.find(Int(1));
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Surd::as_rational() const {
  require(is_rational(), ErrorKind::Internal, "surd is irrational: " + str());
  return rational_part();
}

Surd Surd::operator-() const {
  Surd s(*this);
  for (auto& [n, c] : s.terms_) c = -c;
  return s;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [n1, c1] : a.terms_)
    for (const auto& [n2, c2] : b.terms_) {
      if (n1 == n2) {
        out.add_term(1, c1 * c2 * n1);
      } else {
        Int g = gcd(n1, n2);
        // sqrt(n1) sqrt(n2) = g sqrt(n1 n2 / g^2), both quotients squarefree.
        out.add_term((n1 / g) * (n2 / g), c1 * c2 * g);
      }
    }
  return out;
}

Surd Surd::inverse() const {
  require(!is_zero(), ErrorKind::DegenerateMetric, "division by zero surd");
  // Repeatedly multiply numerator and denominator by the conjugate that
  // flips the sign of every term whose radicand contains a chosen prime.
  Surd num(Rat(1));
  Surd den(*this);
  while (!den.is_rational()) {
    Int p = 0;
    for (const auto& [n, c] : den.terms_) {
      if (n == 1) continue;
      for (Int q = 2; q * q <= n; ++q)
        if (n % q == 0) {
          p = q;
          break;
        }
      if (p == 0) p = n;
      break;
    }
    Surd conj;
    for (const auto& [n, c] : den.terms_) conj.add_term(n, n % p == 0 ? -c : c);
    num *= conj;
    den *= conj;
  }
  Rat d = den.rational_part();
  require(d != 0, ErrorKind::Internal, "surd conjugation collapsed to zero");
  Surd out;
  for (const auto& [n, c] : num.terms_) out.add_term(n, c / d);
  return out;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [n, c] : terms_) {
    std::string piece;
    if (n == 1) {
      piece = rat_str(c);
    } else if (c == 1) {
      piece = "sqrt(" + n.str() + ")";
    } else if (c == -1) {
      piece = "-sqrt(" + n.str() + ")";
    } else {
      piece = rat_str(c) + "*sqrt(" + n.str() + ")";
    }
    if (!s.empty() && piece[0] != '-') s += "+";
    s += piece;
  }
  return s;
}

Surd Surd::parse(const std::string& s) {
  Surd out;
  std::size_t i = 0;
  require(!s.empty(), ErrorKind::BadInput, "empty surd string");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') sign = -1, ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    auto star = term.find("*sqrt(");
    Rat coeff(1);
    Int radicand(1);
    if (star != std::string::npos) {
      coeff = parse_rat(term.substr(0, star));
      radicand = Int(term.substr(star + 6, term.size() - star - 7));
    } else if (term.rfind("sqrt(", 0) == 0) {
      radicand = Int(term.substr(5, term.size() - 6));
    } else {
      coeff = parse_rat(term);
    }
    out += Surd::radical(sign * coeff, radicand);
  }
  return out;
}

std::string CSurd::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return "(" + im.str() + ")*i";
  return "(" + re.str() + ")+(" + im.str() + ")*i";
}

}  // namespace homkt
