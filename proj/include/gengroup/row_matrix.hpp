#pragma once

// The generalized group of 2x2 rational matrices [[a, b], [0, 0]] with
// a != 0 under matrix multiplication, evaluated exactly at sample points.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gengroup/common.hpp"

namespace gengroup {

using Rational = boost::rational<std::int64_t>;

/// Dense 2x2 matrix over the rationals.
struct Mat2 {
  std::array<Rational, 4> m{};  // row-major

  Rational& operator()(int r, int c) { return m[r * 2 + c]; }
  const Rational& operator()(int r, int c) const { return m[r * 2 + c]; }

  bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
std::string to_string(const Mat2& x);

/// [[a, b], [0, 0]]
Mat2 row_matrix(Rational a, Rational b);

struct RowMatrixCertificate {
  Mat2 element;
  Mat2 identity;  // [[1, b/a], [0, 0]]
  Mat2 inverse;   // [[1/a, b/a^2], [0, 0]]
};

struct RowMatrixReport {
  std::vector<RowMatrixCertificate> certificates;
  std::size_t pairs_checked = 0;
  /// First failing law with the sample indices involved, if any.
  std::optional<std::string> failure;
};

/// Computes e(A) and A^-1 from the closed-form formulas for every sample
/// (a, b) and verifies by multiplication that A e(A) = e(A) A = A,
/// A A^-1 = A^-1 A = e(A), and e(AB) = e(B) for all ordered sample pairs.
/// Throws PreconditionError if some a is zero.
RowMatrixReport row_matrix_gg(std::span<const std::pair<Rational, Rational>> samples);

}  // namespace gengroup
