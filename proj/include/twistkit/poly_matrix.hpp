#pragma once

/* Dense matrices over Q[t,1/t]. Row-major, value semantics. */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "rat_matrix.hpp"

namespace twistkit {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols) {}

  static PolyMatrix identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
    return m;
  }

  static PolyMatrix from_rational(const RatMatrix& m, int tpow = 0) {
    PolyMatrix p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        p.at(i, j) = LaurentPoly::monomial(m.at(i, j), tpow);
    return p;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  LaurentPoly& at(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  const LaurentPoly& at(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& p : a_)
      if (!p.is_zero()) return false;
    return true;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const LaurentPoly& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) {
          const LaurentPoly& bkj = b.at(k, j);
          if (!bkj.is_zero()) p.at(i, j) += aik * bkj;
        }
      }
    return p;
  }

  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix p(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) p.a_[i] = a.a_[i] - b.a_[i];
    return p;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  // columns sliced out as their own matrix
  PolyMatrix columns(const std::vector<int>& idx) const {
    PolyMatrix s(r_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j)
      for (int i = 0; i < r_; ++i) s.at(i, j) = at(i, idx[std::size_t(j)]);
    return s;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<LaurentPoly> a_;
};

}  // namespace twistkit
