#pragma once

/* Small dense matrices over Q. Only what representation handling needs:
   products, exact inverse, blocks. Row-major. */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace twistkit {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, Rational(0)) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rational& at(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  const Rational& at(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const Rational& aik = a.at(i, k);
        if (sgn(aik) == 0) continue;
        for (int j = 0; j < b.c_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (sgn(bkj) != 0) p.at(i, j) += aik * bkj;
        }
      }
    return p;
  }

  RatMatrix transpose() const {
    RatMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  // Gauss-Jordan; throws if singular
  RatMatrix inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    RatMatrix a(*this), inv = identity(r_);
    for (int col = 0; col < c_; ++col) {
      int p = -1;
      for (int i = col; i < r_; ++i)
        if (sgn(a.at(i, col)) != 0) {
          p = i;
          break;
        }
      if (p < 0) throw std::domain_error("singular matrix");
      if (p != col)
        for (int j = 0; j < c_; ++j) {
          std::swap(a.at(p, j), a.at(col, j));
          std::swap(inv.at(p, j), inv.at(col, j));
        }
      Rational d = a.at(col, col);
      for (int j = 0; j < c_; ++j) {
        a.at(col, j) /= d;
        inv.at(col, j) /= d;
      }
      for (int i = 0; i < r_; ++i) {
        if (i == col || sgn(a.at(i, col)) == 0) continue;
        Rational f = a.at(i, col);
        for (int j = 0; j < c_; ++j) {
          a.at(i, j) -= f * a.at(col, j);
          inv.at(i, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

}  // namespace twistkit
