#pragma once

/* Exact rational scalars. Thin helpers around GMP's mpq_class: every
   Rational in the library is kept canonical (gcd(num,den)=1, den>0). */

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistkit {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// accepts "p", "-p", "p/q"
inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// bit size of the larger of |num|, den; crude measure used for pivot choice
inline std::size_t rat_height(const Rational& q) {
  if (sgn(q) == 0) return 0;
  std::size_t a = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
  std::size_t b = mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
  return a > b ? a : b;
}

}  // namespace twistkit
