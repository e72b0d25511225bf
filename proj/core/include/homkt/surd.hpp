#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "homkt/rational.hpp"

namespace homkt {

// Exact scalar of the form sum_i c_i * sqrt(n_i) with rational c_i and
// distinct squarefree positive integers n_i (n = 1 is the rational part).
// Closed under +, -, *, and inversion; equality is coefficient equality.
class Surd {
public:
  Surd() = default;
  Surd(const Rat& r) {
    if (r != 0) terms_[1] = r;
  }
  Surd(long long n) : Surd(Rat(n)) {}

  // sqrt(x) for rational x >= 0, e.g. sqrt(4/9) = 2/3, sqrt(1/15) = sqrt(15)/15.
  static Surd sqrt_of(const Rat& x);
  // c * sqrt(n) for n >= 1 (n need not be squarefree).
  static Surd radical(const Rat& c, const Int& n);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_part() const;
  // The rational value; throws if an irrational term is present.
  Rat as_rational() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  Surd inverse() const;  // throws DegenerateMetric on zero
  friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }

  bool operator==(const Surd& o) const { return terms_ == o.terms_; }
  bool operator!=(const Surd& o) const { return !(*this == o); }

  // "0", "3/5", "sqrt(15)", "1/2-3/5*sqrt(15)"
  std::string str() const;
  static Surd parse(const std::string& s);

  const std::map<Int, Rat>& terms() const { return terms_; }

private:
  void set(const Int& radicand, const Rat& coeff) {
    if (coeff == 0)
      terms_.erase(radicand);
    else
      terms_[radicand] = coeff;
  }
  void add_term(const Int& radicand, const Rat& coeff);

  std::map<Int, Rat> terms_;
};

// Complexified surd scalar a + i b.
struct CSurd {
  Surd re, im;

  CSurd() = default;
  CSurd(Surd r) : re(std::move(r)) {}
  CSurd(Surd r, Surd i) : re(std::move(r)), im(std::move(i)) {}
  CSurd(const Rat& r) : re(r) {}
  CSurd(long long n) : re(Rat(n)) {}

  static CSurd i() { return CSurd(Surd(Rat(0)), Surd(Rat(1))); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CSurd conj() const { return {re, -im}; }

  CSurd operator-() const { return {-re, -im}; }
  friend CSurd operator+(const CSurd& a, const CSurd& b) { return {a.re + b.re, a.im + b.im}; }
  friend CSurd operator-(const CSurd& a, const CSurd& b) { return {a.re - b.re, a.im - b.im}; }
  friend CSurd operator*(const CSurd& a, const CSurd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CSurd& operator+=(const CSurd& o) { return *this = *this + o; }
  CSurd& operator-=(const CSurd& o) { return *this = *this - o; }
  CSurd& operator*=(const CSurd& o) { return *this = *this * o; }
  CSurd inverse() const {
    Surd n = re * re + im * im;
    Surd ninv = n.inverse();
    return {re * ninv, -(im * ninv)};
  }
  friend CSurd operator/(const CSurd& a, const CSurd& b) { return a * b.inverse(); }

  bool operator==(const CSurd& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CSurd& o) const { return !(*this == o); }

  std::string str() const;
};

}  // namespace homkt
