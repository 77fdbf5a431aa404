#ifndef ULRICH_POLY_HPP
#define ULRICH_POLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ulrich/matrix.hpp"
#include "ulrich/rational.hpp"

namespace ulrich {

/// Monomial in the n+1 homogeneous coordinates x_0..x_n of P^n, stored as
/// its exponent vector.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

  static Monomial unit(int n) { return Monomial(std::vector<int>(n + 1, 0)); }
  static Monomial variable(int n, int i);

  int vars() const { return int(exp.size()); }
  int degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; pre: other divides *this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const = default;
};

/// Graded reverse lexicographic order with x_0 > x_1 > ... > x_n; the one
/// term order used everywhere (bases, Groebner, serialization).
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// All C(deg+n, n) monomials of degree deg in n+1 variables, descending
/// grevlex. Empty for deg < 0.
std::vector<Monomial> monomial_basis(int n, int deg);

/// Homogeneous polynomial over the rationals: sparse terms in descending
/// grevlex, no zero coefficients stored. The zero polynomial has no terms.
class HomPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  HomPoly() = default;

  static HomPoly term(const Rational& c, Monomial m);
  /// Linear form c_0 x_0 + ... + c_n x_n from its coefficient vector.
  static HomPoly linear_form(std::span<const Rational> coeffs);

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  int vars() const { return terms_.empty() ? 0 : terms_.begin()->first.vars(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  /// Adds c*m, dropping the term if it cancels. Throws if the monomial's
  /// degree disagrees with existing terms (homogeneity invariant).
  void add_term(const Rational& c, const Monomial& m);

  HomPoly operator+(const HomPoly& other) const;
  HomPoly operator-(const HomPoly& other) const;
  HomPoly operator*(const HomPoly& other) const;
  HomPoly operator-() const;
  HomPoly scaled(const Rational& c) const;
  HomPoly times_term(const Rational& c, const Monomial& m) const;

  /// Scales so the leading coefficient is 1. Pre: nonzero.
  HomPoly monic() const;
  /// Integer-primitive representative: denominators cleared, content
  /// removed, leading coefficient positive. Controls coefficient growth
  /// during reduction without changing the ideal.
  HomPoly primitive() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Coefficient of m (zero if absent).
  Rational coeff(const Monomial& m) const;

  /// Human-readable form, e.g. "x0^2*x1 - 2*x2^3". Variables are named
  /// x,y,z,w for up to four and x0,x1,... beyond.
  std::string pretty() const;

  bool operator==(const HomPoly& other) const = default;

 private:
  TermMap terms_;
};

/// Matrix of homogeneous polynomials, row-major.
struct PolyMatrix {
  int n = 0;  // ambient projective dimension (n+1 variables)
  int rows = 0, cols = 0;
  std::vector<HomPoly> e;

  PolyMatrix() = default;
  PolyMatrix(int n_, int rows_, int cols_)
      : n(n_), rows(rows_), cols(cols_), e(size_t(rows_) * cols_) {}

  HomPoly& at(int r, int c) { return e[size_t(r) * cols + c]; }
  const HomPoly& at(int r, int c) const { return e[size_t(r) * cols + c]; }
  bool is_zero() const;

  bool operator==(const PolyMatrix& other) const = default;
};

/// Matrix of linear forms. Maps act on column vectors: an r x s matrix is a
/// map O(a)^s -> O(a+1)^r. Every nonzero entry has degree exactly 1.
class LinearMatrix {
 public:
  LinearMatrix() = default;
  /// Zero matrix of the given shape.
  LinearMatrix(int n, int rows, int cols) : m_(n, rows, cols) {}
  /// Validates that every entry is linear or zero in n+1 variables.
  explicit LinearMatrix(PolyMatrix m);

  int n() const { return m_.n; }
  int rows() const { return m_.rows; }
  int cols() const { return m_.cols; }
  const HomPoly& at(int r, int c) const { return m_.at(r, c); }
  void set(int r, int c, HomPoly p);
  const PolyMatrix& as_poly() const { return m_; }

  LinearMatrix transposed() const;

  bool operator==(const LinearMatrix& other) const = default;

 private:
  PolyMatrix m_;
};

/// Entry-wise polynomial matrix product (composition of the corresponding
/// bundle maps). Throws on inner-dimension mismatch, reporting both shapes.
PolyMatrix mat_compose(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_compose(const LinearMatrix& a, const LinearMatrix& b);

/// Scalar matrix obtained by substituting the point.
QMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

/// Rank over Q at the given projective point; invariant under scaling.
/// Throws on the zero vector (not a projective point).
int evaluate_rank(const LinearMatrix& m, std::span<const Rational> point);

/// All k x k minors as degree-k homogeneous polynomials, ordered
/// lexicographically by (row index set, column index set); identically zero
/// minors omitted. Throws when k is out of range.
std::vector<HomPoly> minors_ideal(const LinearMatrix& m, int k);

/// Matrix of the multiplication map
///   H^0(O(src_twist))^cols -> H^0(O(src_twist + deg))^rows
/// in the monomial-basis coordinates (block structure rows x cols of blocks
/// of shape |basis(src_twist+deg)| x |basis(src_twist)|). deg is the common
/// degree of the nonzero entries. A negative twist gives an empty source.
QMatrix h0_map(const PolyMatrix& m, int src_twist, int deg);
QMatrix h0_map(const LinearMatrix& m, int src_twist);

}  // namespace ulrich

#endif
