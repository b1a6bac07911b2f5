#include <doctest.h>

#include <random>

#include "tropbound/rational_matrix.hpp"

using namespace tropbound;

namespace {

RationalMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c,
                             int spread) {
  std::uniform_int_distribution<int> e(-spread, spread);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = mpq_class(e(rng), 1 + std::abs(e(rng)));
      m(i, j).canonicalize();
    }
  return m;
}

// Leibniz expansion, independent of elimination.
mpq_class leibniz(const RationalMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        inversions += perm[i] > perm[j];
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

} // namespace

TEST_CASE("determinant matches the Leibniz formula") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 5;
    auto m = random_matrix(rng, n, n, 3);
    CHECK(determinant(m) == leibniz(m));
    auto inv = invert(m);
    if (sgn(leibniz(m)) == 0) {
      CHECK_FALSE(inv.has_value());
    } else {
      REQUIRE(inv.has_value());
      CHECK(inv->determinant == leibniz(m));
    }
  }
}

TEST_CASE("inverse times matrix is the identity") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 5;
    auto m = random_matrix(rng, n, n, 5);
    auto inv = invert(m);
    if (!inv)
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc += inv->inverse(i, k) * m(k, j);
        CHECK(acc == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("solve classifies square, singular and inconsistent systems") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK(solve(a, {1, 2}).kind == SolveKind::underdetermined);
  CHECK(solve(a, {1, 3}).kind == SolveKind::inconsistent);
  a(1, 1) = 5;
  const auto s = solve(a, {1, 3});
  REQUIRE(s.kind == SolveKind::unique);
  CHECK(s.x[0] == -1);
  CHECK(s.x[1] == 1);
  CHECK(a.apply(s.x) == std::vector<mpq_class>{1, 3});
}

TEST_CASE("left null space annihilates the columns") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 2 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c, 2);
    const auto null = left_null_space(m);
    CHECK(null.size() + rank(m) == r);
    for (const auto &y : null)
      for (std::size_t j = 0; j < c; ++j) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i < r; ++i)
          acc += y[i] * m(i, j);
        CHECK(sgn(acc) == 0);
      }
  }
}
