#include "doctest.h"

#include <random>

#include "golodlab/errors.hpp"
#include "golodlab/matrix.hpp"
#include "oracles.hpp"

using namespace golod;

namespace {

Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_int(rows[r][c]);
  return m;
}

std::vector<std::vector<long long>> random_ints(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (auto& r : m)
    for (auto& v : r) v = d(rng);
  return m;
}

}  // namespace

TEST_CASE("field parsing and names") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("f2").characteristic() == 2);
  CHECK(Field::parse("F101").characteristic() == 101);
  CHECK(Field::parse("f2").name() == "F2");
  CHECK(Field::rationals().name() == "Q");
  CHECK_THROWS_AS(Field::parse("f4"), DomainError);
  CHECK_THROWS_AS(Field::parse("r"), DomainError);
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(7);
  CHECK(f.from_int(-1).residue() == 6);
  CHECK(f.from_int(9).residue() == 2);
  for (int a = 1; a < 7; ++a) CHECK((f.from_int(a) * f.from_int(a).inverse()).is_one());
  CHECK((f.from_int(3) / f.from_int(5) * f.from_int(5)) == f.from_int(3));
  CHECK_THROWS(f.zero().inverse());
}

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  Scalar third = q.one() / q.from_int(3);
  CHECK((third + third + third).is_one());
  CHECK((q.from_int(2) / q.from_int(6)) == third);
  CHECK(third.to_string() == "1/3");
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS(Field::prime(2).one() + Field::prime(3).one());
}

TEST_CASE("rank fixtures") {
  const Field q = Field::rationals();
  CHECK(rank(Matrix::identity(q, 3)) == 3);
  CHECK(rank(Matrix(q, 3, 4)) == 0);
  CHECK(rank(from_ints(Field::prime(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(from_ints(q, {{2, 4}, {1, 2}})) == 1);
  CHECK(rank(from_ints(Field::prime(3), {{1, 2}, {2, 1}})) == 1);
  CHECK(rank(from_ints(q, {{1, 2}, {2, 1}})) == 2);
}

TEST_CASE("solve, nullspace and column space fixtures") {
  const Field q = Field::rationals();
  Vector b{q.from_int(4), q.from_int(-2), q.from_int(7)};
  auto x = solve(Matrix::identity(q, 3), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto ns = nullspace(from_ints(q, {{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -ns[0][1]);
  CHECK(!ns[0][0].is_zero());

  CHECK_FALSE(in_column_space(Matrix(q, 2, 2), Vector{q.one(), q.zero()}));
  CHECK_FALSE(solve(from_ints(q, {{1, 1}, {1, 1}}), Vector{q.one(), q.zero()}));
}

TEST_CASE("dimension mismatch is a domain error") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(Matrix::identity(q, 2) * Matrix::identity(q, 3), DomainError);
  CHECK_THROWS_AS(solve(Matrix::identity(q, 2), Vector{q.one()}), DomainError);
}

TEST_CASE("rank agrees with the elimination oracle on random integer matrices") {
  std::mt19937 rng(17);
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    const Field f = p == 0 ? Field::rationals() : Field::prime(p);
    for (int t = 0; t < 40; ++t) {
      const int rows = 1 + t % 6, cols = 1 + (t * 7) % 7;
      auto m = random_ints(rng, rows, cols, -2, 2);
      CHECK(rank(from_ints(f, m)) == oracle::rank(m, p));
    }
  }
}

TEST_CASE("rank-nullity and back substitution") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {0u, 2u, 3u}) {
    const Field f = p == 0 ? Field::rationals() : Field::prime(p);
    for (int t = 0; t < 30; ++t) {
      const Matrix m = from_ints(f, random_ints(rng, 2 + t % 4, 3 + t % 5, -3, 3));
      const auto ns = nullspace(m);
      CHECK(rank(m) + ns.size() == m.cols());
      for (const auto& v : ns) CHECK(is_zero(m.apply(v)));

      Vector x0(m.cols());
      for (auto& v : x0) v = f.from_int(std::uniform_int_distribution<int>(-4, 4)(rng));
      const Vector b = m.apply(x0);
      auto x = solve(m, b);
      REQUIRE(x);
      CHECK(m.apply(*x) == b);
      CHECK(in_column_space(m, b));
    }
  }
}

TEST_CASE("independent columns span the column space") {
  const Field q = Field::rationals();
  const Matrix m = from_ints(q, {{1, 2, 0, 1}, {0, 0, 1, 1}, {1, 2, 1, 2}});
  const auto cols = independent_columns(m);
  CHECK(cols == std::vector<std::size_t>{0, 2});
}
