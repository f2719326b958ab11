#include <doctest.h>

#include <random>

#include "qhlin/matrix.hpp"

using qhlin::Matrix;
using qhlin::Rational;
namespace linalg = qhlin::linalg;

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK((Rational(3) - Rational(3)).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is detected") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

TEST_CASE("rank, nullspace and solve on a small matrix") {
  Matrix m(3, 4);
  int v[3][4] = {{1, 2, 0, 1}, {2, 4, 1, 3}, {3, 6, 1, 4}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = v[r][c];
  CHECK(linalg::rank(m) == 2);
  Matrix ns = linalg::nullspace(m);
  CHECK(ns.cols() == 2);
  CHECK((m * ns).is_zero());
  auto x = linalg::solve(m, {1, 3, 4});
  REQUIRE(x);
  Matrix xv(4, 1);
  for (int k = 0; k < 4; ++k) xv(k, 0) = (*x)[k];
  Matrix b = m * xv;
  CHECK(b(0, 0) == Rational(1));
  CHECK(b(1, 0) == Rational(3));
  CHECK(b(2, 0) == Rational(4));
  CHECK_FALSE(linalg::solve(m, {1, 0, 0}));
}

TEST_CASE("Bareiss rank agrees with rational elimination on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), dim(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    Matrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(entry(rng), 1 + (trial % 3));
    const auto e = linalg::rref(m);
    CHECK(linalg::rank(m) == e.pivots.size());
    CHECK(linalg::nullspace(m).cols() + e.pivots.size() == m.cols());
    CHECK(linalg::column_basis(m).cols() == e.pivots.size());
  }
}

TEST_CASE("empty shapes") {
  CHECK(linalg::rank(Matrix(0, 3)) == 0);
  CHECK(linalg::nullspace(Matrix(0, 3)).cols() == 3);
  CHECK(linalg::nullspace(Matrix(2, 0)).cols() == 0);
}
