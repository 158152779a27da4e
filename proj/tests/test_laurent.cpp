#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twistkit/twistkit.hpp"

using namespace twistkit;

TEST_CASE("zero and one", "[laurent]") {
  LaurentPoly z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_one());
  CHECK_THROWS_AS(z.min_exp(), std::domain_error);
  CHECK_THROWS_AS(z.max_exp(), std::domain_error);
  CHECK_THROWS_AS(z.breadth(), std::domain_error);

  CHECK(LaurentPoly::one().is_one());
  CHECK(LaurentPoly::one().is_unit());
  CHECK(LaurentPoly::t() == LaurentPoly::monomial(rat(1), 1));
  CHECK(LaurentPoly(rat(0)).is_zero());
  CHECK(LaurentPoly(7L) == LaurentPoly::monomial(rat(7), 0));
}

TEST_CASE("exponent range", "[laurent]") {
  LaurentPoly p = LaurentPoly::monomial(rat(1), -2) + LaurentPoly::monomial(rat(5), 3);
  CHECK(p.min_exp() == -2);
  CHECK(p.max_exp() == 3);
  CHECK(p.breadth() == 5);
  CHECK(p.coeff(-2) == rat(1));
  CHECK(p.coeff(0) == rat(0));
  CHECK(p.coeff(3) == rat(5));
  CHECK(p.coeff(17) == rat(0));
  CHECK_FALSE(p.is_unit());
  CHECK(LaurentPoly::monomial(rat(-3, 7), -4).is_unit());
}

TEST_CASE("ring arithmetic", "[laurent]") {
  LaurentPoly a = poly_from({1, -1, 1});       // 1 - t + t^2
  LaurentPoly b = poly_from({1, 1});           // 1 + t
  CHECK(a * b == poly_from({1, 0, 0, 1}));     // (1+t)(1-t+t^2) = 1 + t^3
  CHECK(a + (-a) == LaurentPoly());
  CHECK(a - a == LaurentPoly());
  CHECK(a.scaled(rat(2)) == poly_from({2, -2, 2}));
  CHECK(a.shifted(-3) == poly_from({1, -1, 1}, -3));
  CHECK(a * LaurentPoly() == LaurentPoly());

  LaurentPoly c = a;
  c += b;
  CHECK(c == poly_from({2, 0, 1}));
  c -= b;
  CHECK(c == a);
  c *= LaurentPoly::t();
  CHECK(c == poly_from({1, -1, 1}, 1));

  // cancellation that must trim interior storage correctly
  LaurentPoly d = poly_from({1, 2, 1}, -1);
  LaurentPoly e = poly_from({1, 2, 0}, -1);
  CHECK((d - e) == LaurentPoly::t());
}

TEST_CASE("add_monomial_multiple", "[laurent]") {
  LaurentPoly p = poly_from({1, 1});
  p.add_monomial_multiple(rat(-2), 1, poly_from({3, 0, 1}));  // p += -2t*(3 + t^2)
  CHECK(p == poly_from({1, -5, 0, -2}));
}

TEST_CASE("random ring axioms", "[laurent]") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = oracles::rand_poly(rng);
    LaurentPoly b = oracles::rand_poly(rng);
    LaurentPoly c = oracles::rand_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
  }
}

TEST_CASE("normalization", "[laurent]") {
  // -3t^-2 + 3t^-1  ~  t - 1
  LaurentPoly p = poly_from({-3, 3}, -2);
  CHECK(p.normalize_unit() == poly_from({-1, 1}));

  // (1/2)t^3 - (1/2)t^4  ~  t - 1
  LaurentPoly q = LaurentPoly::monomial(rat(1, 2), 3) - LaurentPoly::monomial(rat(1, 2), 4);
  CHECK(q.normalize_unit() == poly_from({-1, 1}));

  CHECK(LaurentPoly().normalize_unit().is_zero());
  CHECK(LaurentPoly::monomial(rat(-7, 3), 5).normalize_unit().is_one());
  CHECK(poly_from({1, -3, 1}).normalize_unit() == poly_from({1, -3, 1}));

  // idempotent, and invariant under unit multiples
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = oracles::rand_poly(rng);
    LaurentPoly n = a.normalize_unit();
    CHECK(n.normalize_unit() == n);
    LaurentPoly unit = LaurentPoly::monomial(rat(trial % 5 - 7, 2), trial % 3 - 1);
    CHECK((a * unit).normalize_unit() == n);
    if (!n.is_zero()) {
      CHECK(n.min_exp() == 0);
      CHECK(sgn(n.coeff(n.max_exp())) > 0);
    }
  }
}

TEST_CASE("division with remainder", "[laurent]") {
  LaurentPoly a = poly_from({1, 0, 0, 1});  // 1 + t^3
  LaurentPoly b = poly_from({1, 1});        // 1 + t
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == poly_from({1, -1, 1}));
  CHECK(divides(b, a));
  CHECK(div_exact(a, b) == q);

  LaurentPoly c = poly_from({1, 0, 1});  // 1 + t^2, not divisible by 1 + t
  auto [q2, r2] = divmod(c, b);
  CHECK_FALSE(r2.is_zero());
  CHECK(q2 * b + r2 == c);
  CHECK(r2.breadth() < b.breadth());
  CHECK_FALSE(divides(b, c));

  CHECK_THROWS_AS(divmod(a, LaurentPoly()), std::domain_error);

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly x = oracles::rand_poly(rng);
    LaurentPoly y = oracles::rand_poly(rng);
    if (y.is_zero()) continue;
    auto [qq, rr] = divmod(x, y);
    CHECK(qq * y + rr == x);
    if (!rr.is_zero()) CHECK(rr.breadth() < y.breadth());
  }
}

TEST_CASE("gcd", "[laurent]") {
  LaurentPoly a = poly_from({-1, 1}) * poly_from({1, 1});   // (t-1)(t+1)
  LaurentPoly b = poly_from({-1, 1}) * poly_from({1, 0, 1});  // (t-1)(t^2+1)
  CHECK(gcd(a, b) == poly_from({-1, 1}));
  CHECK(gcd(a, LaurentPoly()) == a.normalize_unit());
  CHECK(gcd(LaurentPoly(), b) == b.normalize_unit());
  CHECK(gcd(LaurentPoly::one(), b).is_one());

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 80; ++trial) {
    LaurentPoly x = oracles::rand_poly(rng);
    LaurentPoly y = oracles::rand_poly(rng);
    LaurentPoly g = gcd(x, y);
    if (x.is_zero() && y.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(g == g.normalize_unit());
    if (!x.is_zero()) CHECK(divides(g, x));
    if (!y.is_zero()) CHECK(divides(g, y));
    // common divisors divide the gcd
    LaurentPoly common = poly_from({-1, 1});
    LaurentPoly xc = x * common, yc = y * common;
    if (!xc.is_zero() || !yc.is_zero()) CHECK(divides(common, gcd(xc, yc)));
  }
}

TEST_CASE("height", "[laurent]") {
  // height is the bit size of the largest numerator or denominator
  CHECK(poly_from({1, -3, 1}).height() == 2);
  LaurentPoly p = LaurentPoly::monomial(rat(22, 7), 0);
  CHECK(p.height() == 5);
  CHECK(LaurentPoly().height() == 0);
}

TEST_CASE("rendering", "[laurent]") {
  CHECK(LaurentPoly().render() == "0");
  CHECK(poly_from({1, -1, 1}).render() == "1 - t + t^2");
  CHECK(poly_from({-1, 1}).render() == "-1 + t");
  CHECK(LaurentPoly::monomial(rat(1, 2), 1).render() == "1/2*t");
  CHECK(LaurentPoly::monomial(rat(1), -1).render() == "t^-1");
  CHECK(LaurentPoly::monomial(rat(-1), 0).render() == "-1");
  CHECK(poly_from({2, -3, 2}).render() == "2 - 3*t + 2*t^2");
}

TEST_CASE("rational string round trips", "[laurent]") {
  CHECK(rat_from_string("-22/7") == rat(-22, 7));
  CHECK(rat_from_string("0") == rat(0));
  CHECK(rat_to_string(rat(3, 6)) == "1/2");
  CHECK(rat_to_string(rat(-4, 2)) == "-2");
  CHECK_THROWS_AS(rat_from_string("t"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK(rat_height(rat(-22, 7)) == 5);
  CHECK(rat_height(rat(3, 8)) == 4);
}
