#include "ulrich/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ulrich {

Monomial Monomial::variable(int n, int i) {
  Monomial m = unit(n);
  m.exp[i] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exp.size() != other.exp.size()) return false;
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (size_t i = 0; i < exp.size(); ++i) out.exp[i] += other.exp[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (size_t i = 0; i < exp.size(); ++i) out.exp[i] -= other.exp[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = std::max(a.exp[i], b.exp[i]);
  return out;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: a < b iff the last nonzero entry of a - b is positive.
  for (size_t i = a.exp.size(); i-- > 0;) {
    const int diff = a.exp[i] - b.exp[i];
    if (diff != 0) return diff > 0;
  }
  return false;
}

std::vector<Monomial> monomial_basis(int n, int deg) {
  std::vector<Monomial> basis;
  if (deg < 0) return basis;
  std::vector<int> exp(n + 1, 0);
  std::function<void(int, int)> fill = [&](int var, int remaining) {
    if (var == n) {
      exp[var] = remaining;
      basis.emplace_back(exp);
      exp[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exp[var] = e;
      fill(var + 1, remaining - e);
    }
    exp[var] = 0;
  };
  fill(0, deg);
  std::sort(basis.begin(), basis.end(), GrevlexGreater{});
  return basis;
}

HomPoly HomPoly::term(const Rational& c, Monomial m) {
  HomPoly p;
  p.add_term(c, m);
  return p;
}

HomPoly HomPoly::linear_form(std::span<const Rational> coeffs) {
  HomPoly p;
  const int n = int(coeffs.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (coeffs[i] != 0) p.add_term(coeffs[i], Monomial::variable(n, i));
  return p;
}

void HomPoly::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  if (!terms_.empty()) {
    if (m.vars() != vars()) throw std::invalid_argument("HomPoly: mixed variable counts");
    if (m.degree() != degree()) throw std::invalid_argument("HomPoly: mixed degrees");
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomPoly HomPoly::operator+(const HomPoly& other) const {
  HomPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(c, m);
  return out;
}

HomPoly HomPoly::operator-(const HomPoly& other) const {
  HomPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(-c, m);
  return out;
}

HomPoly HomPoly::operator*(const HomPoly& other) const {
  HomPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add_term(c1 * c2, m1 * m2);
  return out;
}

HomPoly HomPoly::operator-() const { return scaled(-1); }

HomPoly HomPoly::scaled(const Rational& c) const {
  HomPoly out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

HomPoly HomPoly::times_term(const Rational& c, const Monomial& m) const {
  HomPoly out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono * m, coeff * c);
  return out;
}

HomPoly HomPoly::monic() const { return scaled(1 / leading_coeff()); }

HomPoly HomPoly::primitive() const {
  if (is_zero()) return *this;
  Integer common = 1;
  for (const auto& [m, c] : terms_) common = lcm(common, denominator(c));
  Integer content = 0;
  for (const auto& [m, c] : terms_) content = gcd(content, numerator(c) * (common / denominator(c)));
  Rational scale{common, content};
  if (leading_coeff() < 0) scale = -scale;
  return scaled(scale);
}

Rational HomPoly::evaluate(std::span<const Rational> point) const {
  Rational value = 0;
  for (const auto& [m, c] : terms_) {
    Rational prod = c;
    for (int i = 0; i < m.vars(); ++i)
      for (int e = 0; e < m.exp[i]; ++e) prod *= point[i];
    value += prod;
  }
  return value;
}

Rational HomPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string HomPoly::pretty() const {
  if (is_zero()) return "0";
  static const char* named[] = {"x", "y", "z", "w"};
  const int nv = vars();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational a = first ? c : abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    std::string vars_part;
    for (int i = 0; i < nv; ++i) {
      if (m.exp[i] == 0) continue;
      if (!vars_part.empty()) vars_part += "*";
      vars_part += (nv <= 4) ? named[i] : "x" + std::to_string(i);
      if (m.exp[i] > 1) vars_part += "^" + std::to_string(m.exp[i]);
    }
    if (vars_part.empty())
      out << to_string(a);
    else if (a == 1)
      out << vars_part;
    else if (a == -1)
      out << "-" << vars_part;
    else
      out << to_string(a) << "*" << vars_part;
    first = false;
  }
  return out.str();
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](const HomPoly& p) { return p.is_zero(); });
}

LinearMatrix::LinearMatrix(PolyMatrix m) : m_(std::move(m)) {
  for (const HomPoly& p : m_.e) {
    if (p.is_zero()) continue;
    if (p.degree() != 1) throw std::invalid_argument("LinearMatrix: entry of degree != 1");
    if (p.vars() != m_.n + 1)
      throw std::invalid_argument("LinearMatrix: entry variable count disagrees with n");
  }
}

void LinearMatrix::set(int r, int c, HomPoly p) {
  if (!p.is_zero() && (p.degree() != 1 || p.vars() != m_.n + 1))
    throw std::invalid_argument("LinearMatrix: entry must be a linear form in n+1 variables");
  m_.at(r, c) = std::move(p);
}

LinearMatrix LinearMatrix::transposed() const {
  PolyMatrix t(m_.n, m_.cols, m_.rows);
  for (int r = 0; r < m_.rows; ++r)
    for (int c = 0; c < m_.cols; ++c) t.at(c, r) = m_.at(r, c);
  return LinearMatrix(std::move(t));
}

PolyMatrix mat_compose(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("mat_compose: inner dimensions disagree: " +
                                std::to_string(a.rows) + "x" + std::to_string(a.cols) + " vs " +
                                std::to_string(b.rows) + "x" + std::to_string(b.cols));
  PolyMatrix out(a.n, a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k) {
      const HomPoly& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols; ++c)
        if (!b.at(k, c).is_zero()) out.at(r, c) = out.at(r, c) + x * b.at(k, c);
    }
  return out;
}

PolyMatrix mat_compose(const LinearMatrix& a, const LinearMatrix& b) {
  return mat_compose(a.as_poly(), b.as_poly());
}

QMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  QMatrix out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c).evaluate(point);
  return out;
}

int evaluate_rank(const LinearMatrix& m, std::span<const Rational> point) {
  if (int(point.size()) != m.n() + 1)
    throw std::invalid_argument("evaluate_rank: point has wrong length");
  if (std::all_of(point.begin(), point.end(), [](const Rational& x) { return x == 0; }))
    throw std::invalid_argument("evaluate_rank: the zero vector is not a projective point");
  return rank(evaluate(m.as_poly(), point));
}

namespace {

HomPoly poly_det(const PolyMatrix& m, const std::vector<int>& rows, size_t depth,
                 const std::vector<int>& cols) {
  // Expansion along the first remaining row; minors stay tiny (k <= 6).
  if (depth == rows.size()) return HomPoly::term(1, Monomial::unit(m.n));
  HomPoly out;
  const int row = rows[depth];
  for (size_t i = 0; i < cols.size(); ++i) {
    const HomPoly& entry = m.at(row, cols[i]);
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != i) rest.push_back(cols[j]);
    const HomPoly contrib = entry * poly_det(m, rows, depth + 1, rest);
    out = (i % 2 == 0) ? out + contrib : out - contrib;
  }
  return out;
}

void index_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::vector<HomPoly> minors_ideal(const LinearMatrix& m, int k) {
  if (k < 1 || k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minors_ideal: k out of range");
  std::vector<HomPoly> minors;
  index_subsets(m.rows(), k, [&](const std::vector<int>& rows) {
    index_subsets(m.cols(), k, [&](const std::vector<int>& cols) {
      HomPoly d = poly_det(m.as_poly(), rows, 0, cols);
      if (!d.is_zero()) minors.push_back(std::move(d));
    });
  });
  return minors;
}

QMatrix h0_map(const PolyMatrix& m, int src_twist, int deg) {
  const auto src_basis = monomial_basis(m.n, src_twist);
  const auto dst_basis = monomial_basis(m.n, src_twist + deg);
  QMatrix out(int(dst_basis.size()) * m.rows, int(src_basis.size()) * m.cols);
  if (src_basis.empty() || dst_basis.empty()) return out;

  std::map<Monomial, int, GrevlexGreater> dst_index;
  for (size_t i = 0; i < dst_basis.size(); ++i) dst_index.emplace(dst_basis[i], int(i));

  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      const HomPoly& entry = m.at(r, c);
      if (entry.is_zero()) continue;
      for (size_t b = 0; b < src_basis.size(); ++b)
        for (const auto& [mono, coeff] : entry.terms()) {
          const int row = r * int(dst_basis.size()) + dst_index.at(mono * src_basis[b]);
          out.at(row, c * int(src_basis.size()) + int(b)) += coeff;
        }
    }
  return out;
}

QMatrix h0_map(const LinearMatrix& m, int src_twist) { return h0_map(m.as_poly(), src_twist, 1); }

}  // namespace ulrich
