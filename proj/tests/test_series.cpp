#include <doctest.h>

#include <random>

#include "opgpd/series.hpp"

using namespace opgpd;

namespace {

NCSeries random_series(std::mt19937_64& rng, int alpha, int N, bool zero_constant = false) {
  NCSeries s(alpha, N);
  std::uniform_int_distribution<int> len(zero_constant ? 1 : 0, N), gen(0, alpha - 1), num(-5, 5),
      den(1, 4);
  for (int k = 0; k < 6; ++k) {
    Word w(len(rng));
    for (auto& g : w) g = gen(rng);
    s.add_term(w, frac(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("rational parsing keeps canonical form") {
  Rational q = parse_rational("6/-4");
  CHECK(q == Rational(-3, 2));
  CHECK(to_string(q) == "-3/2");
  CHECK(gcd(q.get_num(), q.get_den()) == 1);
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("telescoping product") {
  NCSeries t = NCSeries::generator(1, 2, 0);
  NCSeries one = NCSeries::one(1, 2);
  NCSeries p = series_mul(one + t, one - t, 2);
  NCSeries expect = one - NCSeries::monomial(1, 2, {0, 0});
  CHECK(p == expect);
}

TEST_CASE("unit and noncommutativity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    NCSeries a = random_series(rng, 3, 4);
    CHECK(series_mul(a, NCSeries::one(3, 4)) == a);
    CHECK(series_mul(NCSeries::one(3, 4), a) == a);
  }
  NCSeries t1 = NCSeries::generator(2, 2, 0), t2 = NCSeries::generator(2, 2, 1);
  CHECK_FALSE(series_mul(t1, t2) == series_mul(t2, t1));
  CHECK(series_mul(t1, t2).coef({0, 1}) == 1);
}

TEST_CASE("associativity of truncated product") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    NCSeries a = random_series(rng, 3, 4), b = random_series(rng, 3, 4), c = random_series(rng, 3, 4);
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("exponential") {
  CHECK(series_exp(NCSeries::zero(2, 3), 3) == NCSeries::one(2, 3));
  NCSeries t = NCSeries::generator(1, 2, 0);
  NCSeries e = series_exp(t, 2);
  CHECK(e.coef({}) == 1);
  CHECK(e.coef({0}) == 1);
  CHECK(e.coef({0, 0}) == Rational(1, 2));
  CHECK(series_mul(series_exp(t.truncated(4), 4), series_exp(-t.truncated(4), 4)) == NCSeries::one(1, 4));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    NCSeries x = random_series(rng, 3, 4, true);
    CHECK(series_mul(series_exp(x, 4), series_exp(-x, 4)) == NCSeries::one(3, 4));
    CHECK(series_log(series_exp(x, 4), 4) == x);
  }
  CHECK_THROWS(series_exp(NCSeries::one(1, 2), 2));
}

TEST_CASE("alphabet mismatch is an error") {
  CHECK_THROWS(series_mul(NCSeries::one(1, 2), NCSeries::one(2, 2)));
}

TEST_CASE("solve: unique solution") {
  LinearSystem sys;
  sys.add_row({{0, 1}, {1, 1}}, 2);
  sys.add_row({{0, 1}, {1, -1}}, 0);
  SolveResult r = solve_exact(sys);
  REQUIRE(r.consistent);
  CHECK(r.solution == std::vector<Rational>{1, 1});
  CHECK(r.nullspace.empty());
}

TEST_CASE("solve: underdetermined and inconsistent") {
  LinearSystem sys;
  sys.add_row({{0, 1}, {1, 1}}, 1);
  SolveResult r = solve_exact(sys);
  REQUIRE(r.consistent);
  CHECK(r.solution[0] + r.solution[1] == 1);
  REQUIRE(r.nullspace.size() == 1);
  CHECK(r.nullspace[0][0] + r.nullspace[0][1] == 0);

  LinearSystem bad;
  bad.add_row({{0, 1}}, 1);
  bad.add_row({{0, 2}}, 3);
  CHECK_FALSE(solve_exact(bad).consistent);
}

TEST_CASE("solve: random invertible systems have zero residual") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 3; ++trial) {
    const int n = 20;
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    // unit upper triangular times random lower: invertible by construction
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[i][j] = i == j ? Rational(1 + (d(rng) + 9) % 3) : (j > i ? Rational(d(rng)) : 0);
    std::vector<std::vector<Rational>> B(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) B[i][j] = i == j ? Rational(1) : Rational(d(rng));
    LinearSystem sys;
    std::vector<Rational> rhs(n);
    for (int i = 0; i < n; ++i) {
      std::map<int, Rational> row;
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += B[i][k] * A[k][j];
        if (s != 0) row[j] = s;
      }
      rhs[i] = d(rng);
      sys.add_row(row, rhs[i]);
    }
    SolveResult r = solve_exact(sys);
    REQUIRE(r.consistent);
    CHECK(r.rank == n);
    for (auto& [row, b] : sys.rows) {
      Rational s = 0;
      for (auto& [j, c] : row) s += c * r.solution[j];
      CHECK(s == b);
    }
  }
}

TEST_CASE("series json round trip") {
  std::mt19937_64 rng(9);
  NCSeries a = random_series(rng, 3, 3);
  CHECK(series_from_json(series_to_json(a)) == a);
}
