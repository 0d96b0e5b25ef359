#include <random>

#include "doctest.h"
#include "meshkit/errors.hpp"
#include "meshkit/field.hpp"
#include "meshkit/matrix.hpp"

using namespace meshkit;

namespace {

Matrix random_matrix(const GroundField& f, std::size_t r, std::size_t c, unsigned seed, int zero_rows = 0) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> dist(-4, 4);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from(dist(gen));
  // Dependent rows make the rank deficient.
  for (int k = 0; k < zero_rows && k + 1 < static_cast<int>(r); ++k) m.set_row(r - 1 - k, m.row(0));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  const GroundField F = GroundField::prime(7);
  CHECK(F.from(3) * F.from(5) == F.from(1));
  CHECK(F.from(3).inverse() == F.from(5));
  CHECK(F.from(-1) == F.from(6));
  CHECK_THROWS(F.from(0).inverse());
  const GroundField Q = GroundField::rationals();
  CHECK((Q.from(1) / Q.from(3)).str() == "1/3");
  CHECK(Q.parse_scalar("-2/4") == Q.from(-1) / Q.from(2));
  CHECK(F.parse_scalar("1/2") == F.from(4));
  CHECK_THROWS(GroundField::prime(8));
  CHECK(GroundField::parse("f101") == GroundField::prime(101));
  CHECK(GroundField::parse("q") == Q);
  CHECK_THROWS(GroundField::parse("f100"));
}

TEST_CASE("row reduction agrees with the serial reference") {
  for (const auto& f : {GroundField::rationals(), GroundField::prime(101)}) {
    for (unsigned seed = 0; seed < 12; ++seed) {
      const auto m = random_matrix(f, 6 + seed % 5, 8, seed, static_cast<int>(seed % 3));
      const auto a = row_reduce(m);
      const auto b = row_reduce_serial(m);
      CHECK(a.pivots == b.pivots);
      CHECK(a.rref == b.rref);
      CHECK(rank(m) == a.rank());
    }
    const auto big = random_matrix(f, 70, 90, 3, 5);
    CHECK(row_reduce(big).rref == row_reduce_serial(big).rref);
  }
}

TEST_CASE("kernel, solve, inverse") {
  const GroundField Q = GroundField::rationals();
  const auto m = Matrix::from_entries(Q, 2, 3, {1, 2, 3, 2, 4, 6});
  const auto k = kernel(m);
  CHECK(k.basis.rows() == 2);
  for (std::size_t r = 0; r < k.basis.rows(); ++r) {
    const Vec v = k.basis.row(r);
    for (std::size_t i = 0; i < 2; ++i) {
      Scalar s = Q.zero();
      for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * v[j];
      CHECK(s.is_zero());
    }
  }
  CHECK(solve(m, {Q.from(1), Q.from(2)}).has_value());
  CHECK_FALSE(solve(m, {Q.from(1), Q.from(3)}).has_value());
  const auto a = Matrix::from_entries(Q, 2, 2, {2, 1, 1, 1});
  CHECK(*inverse(a) * a == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(Matrix::from_entries(Q, 2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("subspaces") {
  const GroundField F = GroundField::prime(5);
  const auto a = Subspace::span(F, 3, {{F.from(1), F.from(0), F.from(0)}});
  const auto b = Subspace::span(F, 3, {{F.from(0), F.from(1), F.from(0)}, {F.from(2), F.from(0), F.from(0)}});
  CHECK(a.dim() == 1);
  CHECK(b.contains(a));
  CHECK_FALSE(a.contains(b));
  CHECK((a + b) == b);
  CHECK(a.complement_in(b).size() == 1);
  CHECK(Subspace::full(F, 3).is_full());
  CHECK(Subspace(F, 3).is_zero());
}
