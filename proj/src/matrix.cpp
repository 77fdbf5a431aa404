#include "ulrich/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulrich {

namespace {

// Integer grid holding a row-scaled copy of a rational matrix. Row scaling
// by positive factors preserves rank.
std::vector<std::vector<Integer>> cleared_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Integer common = 1;
    for (int c = 0; c < m.cols(); ++c) common = lcm(common, denominator(m.at(r, c)));
    rows[r].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c)
      rows[r][c] = numerator(m.at(r, c)) * (common / denominator(m.at(r, c)));
  }
  return rows;
}

void strip_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const Integer& x : row) {
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1)
    for (Integer& x : row) x /= g;
}

}  // namespace

QMatrix QMatrix::identity(int k) {
  QMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix: inner dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const Rational& y = other.at(k, c);
        if (y != 0) out.at(r, c) += x * y;
      }
    }
  return out;
}

int rank(const QMatrix& m) {
  auto rows = cleared_rows(m);
  const int nr = m.rows(), nc = m.cols();
  int pivots = 0;
  for (int col = 0; col < nc && pivots < nr; ++col) {
    // Smallest nonzero pivot bounds coefficient growth.
    int pivot = -1;
    for (int r = pivots; r < nr; ++r) {
      if (rows[r][col] == 0) continue;
      if (pivot < 0 || abs(rows[r][col]) < abs(rows[pivot][col])) pivot = r;
    }
    if (pivot < 0) continue;
    std::swap(rows[pivots], rows[pivot]);
    const std::vector<Integer>& p = rows[pivots];
    for (int r = pivots + 1; r < nr; ++r) {
      if (rows[r][col] == 0) continue;
      const Integer f = rows[r][col];
      for (int c = col; c < nc; ++c) rows[r][c] = rows[r][c] * p[col] - f * p[c];
      strip_content(rows[r]);
    }
    ++pivots;
  }
  return pivots;
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const int n = m.rows();
  if (n == 0) return 1;

  std::vector<std::vector<Integer>> rows(n);
  Integer scale = 1;  // det of the cleared matrix equals scale * det(m)
  for (int r = 0; r < n; ++r) {
    Integer common = 1;
    for (int c = 0; c < n; ++c) common = lcm(common, denominator(m.at(r, c)));
    rows[r].resize(n);
    for (int c = 0; c < n; ++c)
      rows[r][c] = numerator(m.at(r, c)) * (common / denominator(m.at(r, c)));
    scale *= common;
  }

  // Bareiss: every division is exact.
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (rows[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (rows[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(rows[k], rows[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c)
        rows[r][c] = (rows[r][c] * rows[k][k] - rows[r][k] * rows[k][c]) / prev;
      rows[r][k] = 0;
    }
    prev = rows[k][k];
  }
  return Rational(sign * rows[n - 1][n - 1], scale);
}

std::optional<int> rank_mod_p(const QMatrix& m, uint32_t p) {
  const uint64_t mod = p;
  auto inv_mod = [&](uint64_t a) {
    // Fermat; p is prime.
    uint64_t result = 1, base = a % mod, e = mod - 2;
    while (e) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };

  const int nr = m.rows(), nc = m.cols();
  std::vector<std::vector<uint64_t>> rows(nr, std::vector<uint64_t>(nc));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) {
      const Rational& x = m.at(r, c);
      const uint64_t den = uint64_t(mpz_fdiv_ui(denominator(x).backend().data(), p));
      if (den == 0) return std::nullopt;
      const uint64_t num = uint64_t(mpz_fdiv_ui(numerator(x).backend().data(), p));
      rows[r][c] = num * inv_mod(den) % mod;
    }

  int pivots = 0;
  for (int col = 0; col < nc && pivots < nr; ++col) {
    int pivot = -1;
    for (int r = pivots; r < nr; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivots], rows[pivot]);
    const uint64_t inv = inv_mod(rows[pivots][col]);
    for (int r = pivots + 1; r < nr; ++r) {
      if (rows[r][col] == 0) continue;
      const uint64_t f = rows[r][col] * inv % mod;
      for (int c = col; c < nc; ++c)
        rows[r][c] = (rows[r][c] + (mod - f) * rows[pivots][c]) % mod;
    }
    ++pivots;
  }
  return pivots;
}

}  // namespace ulrich
