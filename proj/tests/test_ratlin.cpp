#include "hocolim/ratlin.hpp"
#include "hocolim/selftest.hpp"

#include <doctest.h>

using ratlin::Matrix;
using ratlin::Rational;

namespace {

Matrix mat(std::size_t rows, std::size_t cols, std::vector<int> entries) {
  std::vector<Rational> values(entries.begin(), entries.end());
  return Matrix(rows, cols, std::move(values));
}

}  // namespace

TEST_CASE("rational parse and print round trips in lowest terms") {
  CHECK(ratlin::rational_to_string(ratlin::parse_rational("-3/6")) == "-1/2");
  CHECK(ratlin::rational_to_string(ratlin::parse_rational("4/2")) == "2");
  CHECK(ratlin::rational_to_string(ratlin::parse_rational("5")) == "5");
  CHECK(ratlin::rational_to_string(ratlin::parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(ratlin::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ratlin::parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rref on the stock examples") {
  const auto id = ratlin::rref(Matrix::identity(2));
  CHECK(id.reduced == Matrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  const auto zero = ratlin::rref(Matrix::zero(3, 2));
  CHECK(zero.reduced == Matrix::zero(3, 2));
  CHECK(zero.pivots.empty());
  CHECK(zero.rank == 0);

  const auto rank1 = ratlin::rref(mat(2, 2, {1, 2, 2, 4}));
  CHECK(rank1.reduced == mat(2, 2, {1, 2, 0, 0}));
  CHECK(rank1.pivots == std::vector<std::size_t>{0});
  CHECK(rank1.rank == 1);
}

TEST_CASE("kernel bases") {
  CHECK(ratlin::kernel_basis(Matrix::identity(3)).cols() == 0);

  const Matrix all = ratlin::kernel_basis(Matrix::zero(1, 2));
  CHECK(all.cols() == 2);
  CHECK(ratlin::rank(all) == 2);

  const Matrix line = ratlin::kernel_basis(mat(1, 2, {1, 2}));
  REQUIRE(line.cols() == 1);
  CHECK(line(0, 0) * Rational(1) + line(1, 0) * Rational(0) == line(0, 0));
  CHECK(mat(1, 2, {1, 2}) * line == Matrix::zero(1, 1));
  // Proportional to (-2, 1).
  CHECK(line(0, 0) * Rational(1) == line(1, 0) * Rational(-2));
}

TEST_CASE("exact solve with matrix right-hand sides") {
  const Matrix b = mat(2, 1, {7, -3});
  const auto via_id = ratlin::solve(Matrix::identity(2), b);
  REQUIRE(via_id.has_value());
  CHECK(*via_id == b);

  const Matrix column = mat(2, 1, {1, 2});
  const auto consistent = ratlin::solve(column, mat(2, 1, {1, 2}));
  REQUIRE(consistent.has_value());
  CHECK(*consistent == mat(1, 1, {1}));

  CHECK_FALSE(ratlin::solve(column, mat(2, 1, {1, 0})).has_value());
  CHECK_THROWS_AS(ratlin::solve(column, Matrix::zero(3, 1)), std::invalid_argument);
}

TEST_CASE("quotient bases with the deterministic complement") {
  const auto trivial = ratlin::quotient_basis(Matrix::zero(3, 0), 3);
  CHECK(trivial.projection == Matrix::identity(3));
  CHECK(trivial.section == Matrix::identity(3));

  const auto full = ratlin::quotient_basis(Matrix::identity(2), 2);
  CHECK(full.projection.rows() == 0);

  const auto diagonal = ratlin::quotient_basis(mat(2, 1, {1, 1}), 2);
  REQUIRE(diagonal.projection.rows() == 1);
  CHECK(diagonal.projection * mat(2, 1, {1, 1}) == Matrix::zero(1, 1));
  CHECK(diagonal.projection * diagonal.section == Matrix::identity(1));
}

TEST_CASE("rank properties and kernel contracts on random matrices") {
  selftest::Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = Rational(std::uniform_int_distribution<int>(-3, 3)(rng));
    CHECK(ratlin::rank(m) == ratlin::rank(m.transpose()));
    const Matrix kernel = ratlin::kernel_basis(m);
    CHECK(kernel.cols() == cols - ratlin::rank(m));
    if (kernel.cols() > 0) {
      CHECK((m * kernel).is_zero());
      CHECK(ratlin::rank(kernel) == kernel.cols());
    }
    const auto qb = ratlin::quotient_basis(m, rows);
    CHECK((qb.projection * m).is_zero());
    CHECK(qb.projection * qb.section == Matrix::identity(qb.projection.rows()));
  }
}
