#pragma once

/* Laurent polynomials over Q in one variable t.
   Stored as a dense coefficient run starting at min_exp; the zero polynomial
   has an empty run. Nonzero polys keep nonzero first/last coefficients.

   Q[t,1/t] is Euclidean with "breadth" (max_exp - min_exp) as the size
   function; that is the only degree notion used anywhere downstream, kept
   isolated in breadth(). */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace twistkit {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) {
      min_ = 0;
      c_.push_back(c);
    }
  }
  explicit LaurentPoly(long c) : LaurentPoly(rat(c)) {}

  static LaurentPoly monomial(const Rational& c, int e) {
    LaurentPoly p;
    if (sgn(c) != 0) {
      p.min_ = e;
      p.c_.push_back(c);
    }
    return p;
  }
  static LaurentPoly one() { return LaurentPoly(rat(1)); }
  static LaurentPoly t() { return monomial(rat(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && min_ == 0 && c_[0] == 1; }

  int min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return min_;
  }
  int max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return min_ + int(c_.size()) - 1;
  }
  // "deg" of a Laurent polynomial always means breadth here
  int breadth() const {
    if (is_zero()) throw std::domain_error("breadth of zero polynomial");
    return int(c_.size()) - 1;
  }
  bool is_monomial() const { return c_.size() == 1; }

  Rational coeff(int e) const {
    if (is_zero() || e < min_ || e > max_exp()) return Rational(0);
    return c_[std::size_t(e - min_)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  LaurentPoly shifted(int e) const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.min_ += e;
    return p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() == b.c_.empty();
    return a.min_ == b.min_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.min_, b.min_), hi = std::max(a.max_exp(), b.max_exp());
    LaurentPoly r;
    r.min_ = lo;
    r.c_.assign(std::size_t(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[std::size_t(a.min_ - lo) + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[std::size_t(b.min_ - lo) + i] += b.c_[i];
    r.trim();
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.min_ = a.min_ + b.min_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;  // end coefficients are products of nonzero rationals, no trim needed
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly scaled(const Rational& c) const {
    if (sgn(c) == 0) return LaurentPoly();
    LaurentPoly p(*this);
    for (auto& x : p.c_) x *= c;
    return p;
  }

  // add c * t^e * p; the in-place workhorse for Fox evaluation
  void add_monomial_multiple(const Rational& c, int e, const LaurentPoly& p) {
    *this += p.scaled(c).shifted(e);
  }

  // unit of Q[t,1/t] means c * t^n
  bool is_unit() const { return c_.size() == 1; }

  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& c : c_) h = std::max(h, rat_height(c));
    return h;
  }

  // Shift exponents so min_exp = 0, clear denominators to coprime integer
  // coefficients, make the top coefficient positive. Canonical associate.
  LaurentPoly normalize_unit() const {
    if (is_zero()) return LaurentPoly();
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(c_.back()) < 0) scale = -scale;
    LaurentPoly p = scaled(scale);
    p.min_ = 0;
    return p;
  }

  // Euclidean step: a = q*b + r with r == 0 or breadth(r) < breadth(b).
  friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    if (b.is_monomial())  // division by a unit is exact
      return {a.scaled(Rational(1) / b.c_[0]).shifted(-b.min_), LaurentPoly()};
    // long division on the coefficient runs, tracked from the top end
    LaurentPoly r(a), q;
    int db = b.breadth();
    const Rational& lead_b = b.c_.back();
    while (!r.is_zero() && r.breadth() >= db) {
      Rational f = r.c_.back() / lead_b;
      int e = r.max_exp() - b.max_exp();
      q += monomial(f, e);
      r -= b.scaled(f).shifted(e);
    }
    return {std::move(q), std::move(r)};
  }

  friend bool divides(const LaurentPoly& d, const LaurentPoly& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return divmod(a, d).second.is_zero();
  }

  friend LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& d) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  friend LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
      // primitive remainder sequence: renormalizing each remainder changes it
      // by a unit only but stops the classical coefficient swell of plain
      // Euclid dead
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = r.is_zero() ? std::move(r) : r.normalize_unit();
    }
    return a.is_zero() ? a : a.normalize_unit();
  }

  // "1 - t + t^2" style: ascending powers, unit coefficients elided on t-terms
  std::string render() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Rational& c = c_[i];
      if (sgn(c) == 0) continue;
      int e = min_ + int(i);
      Rational mag = sgn(c) < 0 ? Rational(-c) : c;
      if (first) {
        if (sgn(c) < 0) out += "-";
        first = false;
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      std::string power = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
      if (power.empty())
        out += rat_to_string(mag);
      else if (mag == 1)
        out += power;
      else
        out += rat_to_string(mag) + "*" + power;
    }
    return out;
  }

 private:
  void trim() {
    std::size_t lo = 0, hi = c_.size();
    while (hi > lo && sgn(c_[hi - 1]) == 0) --hi;
    while (lo < hi && sgn(c_[lo]) == 0) ++lo;
    if (lo == hi) {
      c_.clear();
      min_ = 0;
      return;
    }
    if (lo > 0 || hi < c_.size()) {
      c_.erase(c_.begin() + long(hi), c_.end());
      c_.erase(c_.begin(), c_.begin() + long(lo));
    }
    min_ += int(lo);
  }

  int min_ = 0;
  std::vector<Rational> c_;
};

// coefficients listed from t^min_exp upward
inline LaurentPoly poly_from(const std::vector<Rational>& coeffs, int min_exp = 0) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p += LaurentPoly::monomial(coeffs[i], min_exp + int(i));
  return p;
}

}  // namespace twistkit
