#include "gengroup/row_matrix.hpp"

#include <sstream>

#include "gengroup/common.hpp"

namespace gengroup {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
  return out;
}

std::string to_string(const Mat2& x) {
  std::ostringstream os;
  os << "[[" << x(0, 0) << ", " << x(0, 1) << "], [" << x(1, 0) << ", " << x(1, 1) << "]]";
  return os.str();
}

Mat2 row_matrix(Rational a, Rational b) {
  Mat2 out;
  out(0, 0) = a;
  out(0, 1) = b;
  return out;
}

namespace {

RowMatrixCertificate certify(Rational a, Rational b) {
  return {row_matrix(a, b), row_matrix(1, b / a), row_matrix(1 / a, b / (a * a))};
}

// e(.) of an arbitrary carrier element, read off its first row.
Mat2 identity_of(const Mat2& x) { return row_matrix(1, x(0, 1) / x(0, 0)); }

}  // namespace

RowMatrixReport row_matrix_gg(std::span<const std::pair<Rational, Rational>> samples) {
  RowMatrixReport rep;
  for (const auto& [a, b] : samples) {
    if (a.numerator() == 0) throw PreconditionError("row matrix with a = 0 is not in the carrier");
    rep.certificates.push_back(certify(a, b));
  }

  for (std::size_t i = 0; i < rep.certificates.size() && !rep.failure; ++i) {
    const auto& c = rep.certificates[i];
    const std::string tag = " at sample " + std::to_string(i) + " " + to_string(c.element);
    if (!(c.element * c.identity == c.element && c.identity * c.element == c.element)) {
      rep.failure = "A e(A) = e(A) A = A fails" + tag;
    } else if (!(c.element * c.inverse == c.identity && c.inverse * c.element == c.identity)) {
      rep.failure = "A A^-1 = A^-1 A = e(A) fails" + tag;
    }
  }

  for (std::size_t i = 0; i < rep.certificates.size() && !rep.failure; ++i) {
    for (std::size_t j = 0; j < rep.certificates.size(); ++j) {
      const Mat2 prod = rep.certificates[i].element * rep.certificates[j].element;
      ++rep.pairs_checked;
      const Mat2 e_prod = identity_of(prod);
      if (!(prod * e_prod == prod && e_prod * prod == prod)) {
        rep.failure = "e(AB) is not a local identity of AB for samples " + std::to_string(i) +
                      ", " + std::to_string(j);
        break;
      }
      if (e_prod != rep.certificates[j].identity) {
        rep.failure = "e(AB) = e(B) fails for samples " + std::to_string(i) + ", " + std::to_string(j);
        break;
      }
    }
  }
  return rep;
}

}  // namespace gengroup
