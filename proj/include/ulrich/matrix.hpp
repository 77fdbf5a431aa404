#ifndef ULRICH_MATRIX_HPP
#define ULRICH_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

/// Dense matrix over the rationals, row-major. Sized for section-space maps
/// (hundreds of rows at most); all algorithms are exact.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMatrix identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& other) const;
  bool operator==(const QMatrix& other) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Exact rank. Fraction-free elimination on a denominator-cleared copy with
/// row content stripping to keep intermediate entries small.
int rank(const QMatrix& m);

/// Exact determinant via Bareiss elimination. Requires a square matrix.
Rational det(const QMatrix& m);

/// Rank of the matrix reduced mod p (odd prime < 2^31). Always a lower bound
/// for the rational rank, so rank_mod_p == min(rows, cols) certifies full
/// rank exactly. Returns nullopt when some denominator vanishes mod p.
std::optional<int> rank_mod_p(const QMatrix& m, uint32_t p);

}  // namespace ulrich

#endif
