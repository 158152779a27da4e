#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twistkit/twistkit.hpp"

using namespace twistkit;

namespace {

MatrixRep swap_rep(int gens) {
  // every generator maps to the 2x2 swap matrix
  RatMatrix s(2, 2);
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;
  MatrixRep rep;
  rep.k = 2;
  rep.images.assign(std::size_t(gens), s);
  return rep;
}

// block (bi, bj) of a blocked matrix with k x k cells
PolyMatrix block(const PolyMatrix& m, int k, int bi, int bj) {
  PolyMatrix b(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) b.at(r, c) = m.at(bi * k + r, bj * k + c);
  return b;
}

MatrixRep random_perm_rep(std::mt19937_64& rng, int gens, int n) {
  auto perms = all_perms(n);
  MatrixRep rep;
  rep.k = n;
  for (int g = 0; g < gens; ++g)
    rep.images.push_back(perm_to_matrix(perms[rng() % perms.size()]));
  return rep;
}

}  // namespace

TEST_CASE("fox derivative of a single word", "[fox]") {
  FreeWord w{{0, 1}, {1, 1}, {0, -1}};

  auto d0 = fox_derivative(w, 0);
  REQUIRE(d0.size() == 2);
  CHECK(d0[0].sign == 1);
  CHECK(d0[0].prefix == FreeWord());
  CHECK(d0[0].tpow == 0);
  CHECK(d0[1].sign == -1);
  CHECK(d0[1].prefix == w);
  CHECK(d0[1].tpow == 1);

  auto d1 = fox_derivative(w, 1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].sign == 1);
  CHECK(d1[0].prefix == FreeWord{{0, 1}});
  CHECK(d1[0].tpow == 1);

  CHECK(fox_derivative(w, 2).empty());
}

TEST_CASE("fox term t powers match phi of the prefix", "[fox]") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord w = oracles::rand_word(rng, 3, 8);
    for (int j = 0; j < 3; ++j)
      for (const auto& term : fox_derivative(w, j)) CHECK(term.tpow == phi(term.prefix));
  }
}

TEST_CASE("word evaluation", "[fox]") {
  MatrixRep rep = swap_rep(2);
  auto inv = image_inverses(rep);

  CHECK(evaluate_word(FreeWord(), rep, inv) == PolyMatrix::identity(2));

  // (alpha ox phi)(x1 x1) = (S t)^2 = t^2 I
  PolyMatrix sq = evaluate_word(FreeWord{{1, 1}, {1, 1}}, rep, inv);
  PolyMatrix expect(2, 2);
  expect.at(0, 0) = LaurentPoly::monomial(rat(1), 2);
  expect.at(1, 1) = LaurentPoly::monomial(rat(1), 2);
  CHECK(sq == expect);

  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    MatrixRep r = random_perm_rep(rng, 2, 3);
    auto ri = image_inverses(r);
    FreeWord u = oracles::rand_word(rng, 2, 5);
    FreeWord v = oracles::rand_word(rng, 2, 5);
    FreeWord uv = u;
    uv.append(v);
    CHECK(evaluate_word(uv, r, ri) == evaluate_word(u, r, ri) * evaluate_word(v, r, ri));
    CHECK(evaluate_word(u, r, ri) * evaluate_word(u.inverse(), r, ri) ==
          PolyMatrix::identity(3));
  }
}

TEST_CASE("fox matrix matches the defining recursion", "[fox]") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 30; ++trial) {
    int gens = 2 + int(rng() % 2);
    int n = 2 + int(rng() % 2);
    MatrixRep rep = random_perm_rep(rng, gens, n);
    auto inv = image_inverses(rep);

    GroupPresentation p;
    p.gens = gens;
    p.components = 1;
    p.component_of_generator.assign(std::size_t(gens), 0);
    p.relators.push_back(oracles::rand_word(rng, gens, 6));
    p.relators.push_back(oracles::rand_word(rng, gens, 4));

    PolyMatrix jac = evaluate_fox_matrix(p, rep, inv);
    REQUIRE(jac.rows() == n * 2);
    REQUIRE(jac.cols() == n * gens);
    for (int ri = 0; ri < 2; ++ri)
      for (int j = 0; j < gens; ++j)
        CHECK(block(jac, n, ri, j) == oracles::fox_eval_recursive(p.relators[std::size_t(ri)], j, rep));
  }
}

TEST_CASE("fox matrix matches termwise evaluation", "[fox]") {
  std::mt19937_64 rng(24680);
  for (int trial = 0; trial < 20; ++trial) {
    int gens = 3, n = 3;
    MatrixRep rep = random_perm_rep(rng, gens, n);
    auto inv = image_inverses(rep);
    GroupPresentation p;
    p.gens = gens;
    p.components = 1;
    p.component_of_generator.assign(std::size_t(gens), 0);
    p.relators.push_back(oracles::rand_word(rng, gens, 7));

    PolyMatrix jac = evaluate_fox_matrix(p, rep, inv);
    for (int j = 0; j < gens; ++j) {
      PolyMatrix acc(n, n);
      for (const auto& term : fox_derivative(p.relators[0], j)) {
        PolyMatrix e = evaluate_word(term.prefix, rep, inv);
        acc = term.sign > 0 ? acc - (PolyMatrix(n, n) - e) : acc - e;
      }
      CHECK(block(jac, n, 0, j) == acc);
    }
  }
}

TEST_CASE("fundamental identity of the free calculus", "[fox]") {
  // sum_j (dw/dx_j) (Phi(x_j) - I) = Phi(w) - I for every word w
  std::mt19937_64 rng(11235);
  for (int trial = 0; trial < 30; ++trial) {
    int gens = 2, n = 3;
    MatrixRep rep = random_perm_rep(rng, gens, n);
    auto inv = image_inverses(rep);
    FreeWord w = oracles::rand_word(rng, gens, 9);

    GroupPresentation p;
    p.gens = gens;
    p.components = 1;
    p.component_of_generator.assign(std::size_t(gens), 0);
    p.relators.push_back(w);
    PolyMatrix jac = evaluate_fox_matrix(p, rep, inv);

    PolyMatrix sum(n, n);
    for (int j = 0; j < gens; ++j) {
      PolyMatrix xj = evaluate_word(FreeWord::gen(j), rep, inv) - PolyMatrix::identity(n);
      sum = sum - (PolyMatrix(n, n) - block(jac, n, 0, j) * xj);
    }
    CHECK(sum == evaluate_word(w, rep, inv) - PolyMatrix::identity(n));
  }
}

TEST_CASE("validating fox evaluation rejects non-representations", "[fox]") {
  GroupPresentation p = wirtinger(parse_pd("X 1 3 2 4\nX 3 1 4 2\n"));  // hopf

  // non-commuting images cannot satisfy the hopf relators
  MatrixRep bad;
  bad.k = 2;
  RatMatrix a(2, 2), b(2, 2);
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  b.at(0, 0) = 1;
  b.at(0, 1) = 1;
  b.at(1, 1) = 1;
  bad.images = {a, b};
  CHECK_THROWS_AS(evaluate_fox_matrix(p, bad), rep_error);

  MatrixRep wrong_count;
  wrong_count.k = 1;
  wrong_count.images = {RatMatrix::identity(1)};
  CHECK_THROWS_AS(validate_rep(p, wrong_count), rep_error);

  MatrixRep wrong_shape;
  wrong_shape.k = 2;
  wrong_shape.images = {RatMatrix::identity(2), RatMatrix::identity(1)};
  CHECK_THROWS_AS(validate_rep(p, wrong_shape), rep_error);

  MatrixRep singular;
  singular.k = 1;
  RatMatrix z(1, 1);
  singular.images = {z, z};
  CHECK_THROWS_AS(validate_rep(p, singular), rep_error);

  CHECK_NOTHROW(validate_rep(p, trivial_rep(p, 2)));
  CHECK_NOTHROW(evaluate_fox_matrix(p, trivial_rep(p, 1)));
}

TEST_CASE("fox matrix of the trefoil at the trivial representation", "[fox]") {
  GroupPresentation p = wirtinger(parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"));
  MatrixRep rep = trivial_rep(p, 1);
  PolyMatrix jac = evaluate_fox_matrix(p, rep);
  REQUIRE(jac.rows() == 3);
  REQUIRE(jac.cols() == 3);
  // relator g1 g2 g0^-1 g2^-1 gives d/dg0 = -t, d/dg1 = 1, d/dg2 = t - 1
  CHECK(jac.at(0, 0) == LaurentPoly::monomial(rat(-1), 1));
  CHECK(jac.at(0, 1) == LaurentPoly::one());
  CHECK(jac.at(0, 2) == poly_from({-1, 1}));
}

TEST_CASE("evaluating with a genuine permutation representation", "[fox]") {
  // trefoil onto S3: adjacent meridians map to different transpositions
  GroupPresentation p = wirtinger(parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"));
  MatrixRep rep;
  rep.k = 3;
  rep.images = {perm_to_matrix({1, 0, 2}), perm_to_matrix({0, 2, 1}),
                perm_to_matrix({2, 1, 0})};
  CHECK_NOTHROW(validate_rep(p, rep));
  PolyMatrix jac = evaluate_fox_matrix(p, rep);
  CHECK(jac.rows() == 9);
  CHECK(jac.cols() == 9);
  CHECK_FALSE(jac.is_zero());
}

