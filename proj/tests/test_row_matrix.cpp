#include <doctest.h>

#include "gengroup/row_matrix.hpp"

using namespace gengroup;

TEST_CASE("row matrix certificates") {
  const std::vector<std::pair<Rational, Rational>> samples{{1, 0}, {2, 4}, {3, 1}};
  const auto rep = row_matrix_gg(samples);
  CHECK_FALSE(rep.failure);
  CHECK(rep.pairs_checked == 9);

  CHECK(rep.certificates[0].identity == row_matrix(1, 0));
  CHECK(rep.certificates[0].inverse == row_matrix(1, 0));

  CHECK(rep.certificates[1].identity == row_matrix(1, 2));
  CHECK(rep.certificates[1].inverse == row_matrix(Rational(1, 2), 1));

  const Mat2 ab = row_matrix(2, 4) * row_matrix(3, 1);
  CHECK(ab == row_matrix(6, 2));
  CHECK(rep.certificates[2].identity == row_matrix(1, Rational(1, 3)));
}

TEST_CASE("zero leading entry is rejected") {
  const std::vector<std::pair<Rational, Rational>> samples{{0, 1}};
  CHECK_THROWS_AS(row_matrix_gg(samples), PreconditionError);
}
