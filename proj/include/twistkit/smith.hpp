#pragma once

/* Smith normal form over Q[t,1/t], plus the kernel/expression helpers the
   homology computation is built from.

   Q[t,1/t] is a Euclidean domain under breadth, so the classical pivoting
   algorithm applies: pick the entry with minimal (breadth, coefficient
   height), clear its row and column by division steps, enforce the
   divisibility chain, normalize pivots to the canonical associate.
   Invariant maintained throughout: A == U * B * V with U, V unimodular
   (units of Q[t,1/t] are c*t^n, so elementary scalings by such units are
   allowed alongside swaps and transvections). */

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly_matrix.hpp"

namespace twistkit {

struct SmithForm {
  PolyMatrix D;            // diagonal, divisibility chain d_i | d_{i+1}
  PolyMatrix U, V;         // A = U * D * V
  PolyMatrix Uinv, Vinv;   // tracked so callers never invert anything
  int rank = 0;

  std::vector<LaurentPoly> diagonal() const {
    std::vector<LaurentPoly> d;
    for (int i = 0; i < rank; ++i) d.push_back(D.at(i, i));
    return d;
  }
};

namespace detail {

// s*a + u*b = g with g the canonical associate of gcd(a, b). Extended Euclid
// with every remainder renormalized (a unit tweak folded into its Bezout
// pair), which keeps coefficient sizes polynomial instead of exponential.
struct ExtGcd {
  LaurentPoly g, s, u;
};

inline ExtGcd ext_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto unit_between = [](const LaurentPoly& canon, const LaurentPoly& p) {
    // canon == p * unit with both nonzero; units are single terms
    return LaurentPoly::monomial(canon.coeff(canon.min_exp()) / p.coeff(p.min_exp()),
                                 canon.min_exp() - p.min_exp());
  };
  if (a.is_zero() && b.is_zero()) return {LaurentPoly(), LaurentPoly::one(), LaurentPoly()};
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly s0 = LaurentPoly::one(), u0, s1, u1 = LaurentPoly::one();
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    LaurentPoly s2 = s0 - q * s1;
    LaurentPoly u2 = u0 - q * u1;
    if (!r2.is_zero()) {
      LaurentPoly canon = r2.normalize_unit();
      LaurentPoly w = unit_between(canon, r2);
      r2 = std::move(canon);
      s2 *= w;
      u2 *= w;
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    u0 = std::move(u1);
    r1 = std::move(r2);
    s1 = std::move(s2);
    u1 = std::move(u2);
  }
  LaurentPoly canon = r0.normalize_unit();
  LaurentPoly w = unit_between(canon, r0);
  return {std::move(canon), s0 * w, u0 * w};
}

class SmithWorker {
 public:
  SmithWorker(PolyMatrix a, bool transforms) : b_(std::move(a)), t_(transforms) {
    if (t_) {
      u_ = PolyMatrix::identity(b_.rows());
      uinv_ = u_;
      v_ = PolyMatrix::identity(b_.cols());
      vinv_ = v_;
    }
  }

  SmithForm run() {
    const int m = b_.rows(), n = b_.cols();
    const int steps = m < n ? m : n;
    int t = 0;
    for (; t < steps; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_row_col(t);
        auto bad = find_nondivisible(t);
        if (!bad) break;
        add_row(t, bad->first);  // drags the offending row into the pivot row
      }
      normalize_pivot(t);
    }
    SmithForm f;
    f.rank = t;
    f.D = std::move(b_);
    if (t_) {
      f.U = std::move(u_);
      f.Uinv = std::move(uinv_);
      f.V = std::move(v_);
      f.Vinv = std::move(vinv_);
    }
    return f;
  }

 private:
  // ---- elementary operations, mirrored into the transforms ----
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < b_.cols(); ++c) std::swap(b_.at(i, c), b_.at(j, c));
    if (!t_) return;
    for (int r = 0; r < u_.rows(); ++r) std::swap(u_.at(r, i), u_.at(r, j));
    for (int c = 0; c < uinv_.cols(); ++c) std::swap(uinv_.at(i, c), uinv_.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < b_.rows(); ++r) std::swap(b_.at(r, i), b_.at(r, j));
    if (!t_) return;
    for (int c = 0; c < v_.cols(); ++c) std::swap(v_.at(i, c), v_.at(j, c));
    for (int r = 0; r < vinv_.rows(); ++r) std::swap(vinv_.at(r, i), vinv_.at(r, j));
  }
  // row j -= q * row i
  void sub_row(int j, int i, const LaurentPoly& q) {
    if (q.is_zero()) return;
    for (int c = 0; c < b_.cols(); ++c)
      if (!b_.at(i, c).is_zero()) b_.at(j, c) -= q * b_.at(i, c);
    if (!t_) return;
    for (int r = 0; r < u_.rows(); ++r)
      if (!u_.at(r, j).is_zero()) u_.at(r, i) += q * u_.at(r, j);
    for (int c = 0; c < uinv_.cols(); ++c)
      if (!uinv_.at(i, c).is_zero()) uinv_.at(j, c) -= q * uinv_.at(i, c);
  }
  // col j -= q * col i
  void sub_col(int j, int i, const LaurentPoly& q) {
    if (q.is_zero()) return;
    for (int r = 0; r < b_.rows(); ++r)
      if (!b_.at(r, i).is_zero()) b_.at(r, j) -= q * b_.at(r, i);
    if (!t_) return;
    for (int c = 0; c < v_.cols(); ++c)
      if (!v_.at(j, c).is_zero()) v_.at(i, c) += q * v_.at(j, c);
    for (int r = 0; r < vinv_.rows(); ++r)
      if (!vinv_.at(r, i).is_zero()) vinv_.at(r, j) -= q * vinv_.at(r, i);
  }
  // row j += row i
  void add_row(int j, int i) {
    for (int c = 0; c < b_.cols(); ++c)
      if (!b_.at(i, c).is_zero()) b_.at(j, c) += b_.at(i, c);
    if (!t_) return;
    for (int r = 0; r < u_.rows(); ++r)
      if (!u_.at(r, j).is_zero()) u_.at(r, i) -= u_.at(r, j);
    for (int c = 0; c < uinv_.cols(); ++c)
      if (!uinv_.at(i, c).is_zero()) uinv_.at(j, c) += uinv_.at(i, c);
  }
  // row i *= u where u is a unit c*t^n
  void scale_row(int i, const LaurentPoly& u) {
    if (u.is_one()) return;
    LaurentPoly uinv = LaurentPoly::monomial(Rational(1) / u.coeff(u.min_exp()), -u.min_exp());
    for (int c = 0; c < b_.cols(); ++c) b_.at(i, c) *= u;
    if (!t_) return;
    for (int r = 0; r < u_.rows(); ++r) u_.at(r, i) *= uinv;
    for (int c = 0; c < uinv_.cols(); ++c) uinv_.at(i, c) *= u;
  }

  // one det-1 block across rows t and i sending (pivot, b(i,t)) to (g, 0);
  // replaces the remainder cascade, whose intermediate values explode
  void gcd_rows(int t, int i) {
    auto [g, s, u] = ext_gcd(b_.at(t, t), b_.at(i, t));
    LaurentPoly mv = div_exact(b_.at(i, t), g);  // the block is [[s, u], [-mv, mw]]
    LaurentPoly mw = div_exact(b_.at(t, t), g);  // with det s*mw + u*mv = 1
    for (int c = 0; c < b_.cols(); ++c) {
      LaurentPoly x = std::move(b_.at(t, c)), y = std::move(b_.at(i, c));
      b_.at(t, c) = s * x + u * y;
      b_.at(i, c) = mw * y - mv * x;
    }
    if (!t_) return;
    for (int r = 0; r < u_.rows(); ++r) {  // U <- U * E^-1, E^-1 = [[mw, -u], [mv, s]]
      LaurentPoly x = std::move(u_.at(r, t)), y = std::move(u_.at(r, i));
      u_.at(r, t) = mw * x + mv * y;
      u_.at(r, i) = s * y - u * x;
    }
    for (int c = 0; c < uinv_.cols(); ++c) {  // Uinv <- E * Uinv
      LaurentPoly x = std::move(uinv_.at(t, c)), y = std::move(uinv_.at(i, c));
      uinv_.at(t, c) = s * x + u * y;
      uinv_.at(i, c) = mw * y - mv * x;
    }
  }

  // mirror image across columns t and j killing b(t,j)
  void gcd_cols(int t, int j) {
    auto [g, s, u] = ext_gcd(b_.at(t, t), b_.at(t, j));
    LaurentPoly mv = div_exact(b_.at(t, j), g);
    LaurentPoly mw = div_exact(b_.at(t, t), g);
    for (int r = 0; r < b_.rows(); ++r) {  // B <- B * F, F = [[s, -mv], [u, mw]]
      LaurentPoly x = std::move(b_.at(r, t)), y = std::move(b_.at(r, j));
      b_.at(r, t) = s * x + u * y;
      b_.at(r, j) = mw * y - mv * x;
    }
    if (!t_) return;
    for (int c = 0; c < v_.cols(); ++c) {  // V <- F^-1 * V, F^-1 = [[mw, mv], [-u, s]]
      LaurentPoly x = std::move(v_.at(t, c)), y = std::move(v_.at(j, c));
      v_.at(t, c) = mw * x + mv * y;
      v_.at(j, c) = s * y - u * x;
    }
    for (int r = 0; r < vinv_.rows(); ++r) {  // Vinv <- Vinv * F
      LaurentPoly x = std::move(vinv_.at(r, t)), y = std::move(vinv_.at(r, j));
      vinv_.at(r, t) = s * x + u * y;
      vinv_.at(r, j) = mw * y - mv * x;
    }
  }

  // ---- pivoting ----
  bool place_pivot(int t) {
    int br = -1, bc = -1;
    int best_breadth = 0;
    std::size_t best_height = 0;
    for (int i = t; i < b_.rows(); ++i)
      for (int j = t; j < b_.cols(); ++j) {
        const LaurentPoly& p = b_.at(i, j);
        if (p.is_zero()) continue;
        int w = p.breadth();
        std::size_t h = p.height();
        if (br < 0 || w < best_breadth || (w == best_breadth && h < best_height)) {
          br = i;
          bc = j;
          best_breadth = w;
          best_height = h;
        }
      }
    if (br < 0) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void clear_row_col(int t) {
    for (;;) {
      // keep the divisor canonical: pivots otherwise pick up huge rational
      // scales from earlier eliminations and every quotient compounds them
      normalize_pivot(t);
      bool pivot_shrank = false;
      for (int i = t + 1; i < b_.rows(); ++i) {
        if (b_.at(i, t).is_zero()) continue;
        auto [q, r] = divmod(b_.at(i, t), b_.at(t, t));
        if (r.is_zero()) {
          sub_row(i, t, q);
        } else {
          gcd_rows(t, i);  // pivot becomes a strictly smaller divisor
          pivot_shrank = true;
        }
      }
      for (int j = t + 1; j < b_.cols(); ++j) {
        if (b_.at(t, j).is_zero()) continue;
        auto [q, r] = divmod(b_.at(t, j), b_.at(t, t));
        if (r.is_zero()) {
          sub_col(j, t, q);
        } else {
          gcd_cols(t, j);  // reintroduces entries below the pivot, loop again
          pivot_shrank = true;
        }
      }
      if (!pivot_shrank) {
        bool col_clean = true;
        for (int i = t + 1; i < b_.rows() && col_clean; ++i)
          col_clean = b_.at(i, t).is_zero();
        if (col_clean) return;
      }
    }
  }

  std::optional<std::pair<int, int>> find_nondivisible(int t) const {
    if (b_.at(t, t).is_unit()) return std::nullopt;
    for (int i = t + 1; i < b_.rows(); ++i)
      for (int j = t + 1; j < b_.cols(); ++j)
        if (!b_.at(i, j).is_zero() && !divides(b_.at(t, t), b_.at(i, j)))
          return std::make_pair(i, j);
    return std::nullopt;
  }

  void normalize_pivot(int t) {
    const LaurentPoly& p = b_.at(t, t);
    LaurentPoly canon = p.normalize_unit();
    if (canon == p) return;
    scale_row(t, div_exact(canon, p));
  }

  PolyMatrix b_, u_, uinv_, v_, vinv_;
  bool t_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const PolyMatrix& a, bool transforms = true) {
  return detail::SmithWorker(a, transforms).run();
}

inline int poly_rank(const PolyMatrix& a) { return smith_normal_form(a, false).rank; }

// Free basis of { x : A x = 0 }, as the columns of an explicit matrix.
// These are the Vinv columns matching zero diagonal slots.
inline PolyMatrix kernel_basis(const PolyMatrix& a) {
  SmithForm f = smith_normal_form(a, true);
  std::vector<int> idx;
  for (int j = f.rank; j < a.cols(); ++j) idx.push_back(j);
  return f.Vinv.columns(idx);
}

// Solve K M = B for M, K of full column rank; throws std::logic_error if a
// column of B is not in the column span (callers rely on membership).
inline PolyMatrix express_in_basis(const PolyMatrix& k, const PolyMatrix& b) {
  if (k.rows() != b.rows()) throw std::invalid_argument("express_in_basis shape mismatch");
  SmithForm f = smith_normal_form(k, true);
  if (f.rank != k.cols()) throw std::invalid_argument("express_in_basis: basis not free");
  PolyMatrix c = f.Uinv * b;
  PolyMatrix s(k.cols(), b.cols());
  for (int i = 0; i < k.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      auto [q, r] = divmod(c.at(i, j), f.D.at(i, i));
      if (!r.is_zero()) throw std::logic_error("express_in_basis: not in span (division)");
      s.at(i, j) = std::move(q);
    }
  for (int i = k.cols(); i < k.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (!c.at(i, j).is_zero()) throw std::logic_error("express_in_basis: not in span");
  PolyMatrix m = f.Vinv * s;
  if (!(k * m == b)) throw std::logic_error("express_in_basis: verification failed");
  return m;
}

struct ModuleInvariants {
  int rank = 0;                        // free rank of Lambda^a / im M
  std::vector<LaurentPoly> divisors;   // non-unit elementary divisors, normalized
};

// Invariant factors of the module presented by ambient rank a and relation
// matrix m (columns are relations; m must have a rows).
inline ModuleInvariants module_invariants(const PolyMatrix& m, int a) {
  if (m.rows() != a) throw std::invalid_argument("module_invariants: ambient rank mismatch");
  SmithForm f = smith_normal_form(m, false);
  ModuleInvariants inv;
  inv.rank = a - f.rank;
  for (int i = 0; i < f.rank; ++i) {
    LaurentPoly d = f.D.at(i, i).normalize_unit();
    if (!d.is_one()) inv.divisors.push_back(std::move(d));
  }
  return inv;
}

}  // namespace twistkit
