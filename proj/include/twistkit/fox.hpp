#pragma once

/* Fox free differential calculus and its evaluation through a twisted
   representation.

   d/dx_j is determined by d(x_i)/dx_j = delta_ij, d(uv)/dx_j = du/dx_j +
   u dv/dx_j; on a single word this unrolls to one signed prefix per
   occurrence of x_j: +(prefix before an x_j) and -(prefix through an
   x_j^{-1}).

   Evaluation sends a group element g to alpha(g) * t^phi(g), so a word
   evaluates to a rational matrix carrying a single power of t, and the Fox
   blocks of a relator can be accumulated with one running product along the
   word instead of re-evaluating every prefix. */

#include <utility>
#include <vector>

#include "poly_matrix.hpp"
#include "reps.hpp"
#include "words.hpp"

namespace twistkit {

struct FoxTerm {
  int sign;         // +1 or -1
  FreeWord prefix;  // group element the term evaluates
  int tpow;         // phi(prefix), the power of t the term carries
};

inline std::vector<FoxTerm> fox_derivative(const FreeWord& w, int j) {
  std::vector<FoxTerm> terms;
  FreeWord prefix;
  int tpow = 0;
  for (const auto& l : w.letters) {
    if (l.gen == j && l.exp > 0) terms.push_back({+1, prefix, tpow});
    prefix.append(l.gen, l.exp);
    tpow += l.exp;
    if (l.gen == j && l.exp < 0) terms.push_back({-1, prefix, tpow});
  }
  return terms;
}

// (alpha tensor phi)(w): a rational matrix times t^phi(w)
inline PolyMatrix evaluate_word(const FreeWord& w, const MatrixRep& rep,
                                const std::vector<RatMatrix>& inverses) {
  return PolyMatrix::from_rational(evaluate_word_rational(rep, w, inverses), phi(w));
}

inline PolyMatrix evaluate_word(const FreeWord& w, const MatrixRep& rep) {
  return evaluate_word(w, rep, image_inverses(rep));
}

// block (i,j) is (alpha tensor phi)(d r_i / d x_j); rows indexed by relators
inline PolyMatrix evaluate_fox_matrix(const GroupPresentation& p, const MatrixRep& rep,
                                      const std::vector<RatMatrix>& inverses) {
  const int k = rep.k;
  PolyMatrix jac(k * int(p.relators.size()), k * p.gens);
  auto add_block = [&](int bi, int bj, const RatMatrix& m, int tpow, int sign) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        const Rational& x = m.at(r, c);
        if (sgn(x) == 0) continue;
        jac.at(bi * k + r, bj * k + c) += LaurentPoly::monomial(sign > 0 ? x : -x, tpow);
      }
  };
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    RatMatrix run = RatMatrix::identity(k);  // alpha of the prefix so far
    int tpow = 0;                            // phi of the prefix so far
    for (const auto& l : p.relators[ri].letters) {
      if (l.exp > 0) {
        add_block(int(ri), l.gen, run, tpow, +1);
        run = run * rep.images[std::size_t(l.gen)];
        ++tpow;
      } else {
        run = run * inverses[std::size_t(l.gen)];
        --tpow;
        add_block(int(ri), l.gen, run, tpow, -1);
      }
    }
  }
  return jac;
}

inline PolyMatrix evaluate_fox_matrix(const GroupPresentation& p, const MatrixRep& rep) {
  validate_rep(p, rep);
  return evaluate_fox_matrix(p, rep, image_inverses(rep));
}

}  // namespace twistkit
