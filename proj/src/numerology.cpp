#include "ulrich/numerology.hpp"

#include <stdexcept>

namespace ulrich {

UlrichContext::UlrichContext(int n_, int d_, int r_) : n(n_), d(d_), r(r_) {
  if (n < 1 || d < 1 || r < 1)
    throw std::invalid_argument("UlrichContext: n, d, r must all be >= 1");
}

int CohomologyProfile::nonzero_degree() const {
  for (size_t q = 0; q < h.size(); ++q)
    if (h[q] != 0) return int(q);
  return -1;
}

Integer bott_dimension(int n, int p, int q, int t) {
  if (p < 0 || p > n || q < 0 || q > n)
    throw std::invalid_argument("bott_dimension: p and q must lie in [0, n]");
  if (q == 0 && t > p) return binomial(t + n - p, unsigned(t)) * binomial(t - 1, unsigned(p));
  if (t == 0 && p == q) return 1;
  if (q == n && t < p - n)
    return binomial(-t + p, unsigned(-t)) * binomial(-t - 1, unsigned(n - p));
  return 0;
}

Rational chi_ulrich(const UlrichContext& ctx, int p) {
  Rational d{ctx.d};
  return Rational(ctx.r) * pow(d, unsigned(ctx.n)) *
         gen_binomial(Rational(p) / d + ctx.n, unsigned(ctx.n));
}

namespace {

Integer int_pow(int base, int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Shared final step of the profile builders: the range analysis has picked
// the only degree q allowed to be nonzero; its dimension is (-1)^q chi.
Checked<CohomologyProfile> make_profile(int n, int t, int q, const Rational& chi,
                                        const std::string& label) {
  CohomologyProfile profile;
  profile.twist = t;
  profile.h.assign(n + 1, Integer(0));
  if (chi == 0) return {profile, ""};

  const Rational dim = (q % 2 == 0) ? chi : -chi;
  if (!is_integer(dim))
    return {std::nullopt,
            "h^" + std::to_string(q) + "(" + label + ") = " + to_string(dim) +
                " is not an integer"};
  if (dim < 0)
    return {std::nullopt,
            "h^" + std::to_string(q) + "(" + label + ") = " + to_string(dim) + " is negative"};
  profile.h[q] = to_integer(dim);
  return {profile, ""};
}

}  // namespace

Checked<CohomologyProfile> ulrich_profile(const UlrichContext& ctx, int t) {
  const int n = ctx.n, d = ctx.d;
  // Thm: q = 0 for t > -d, q = n for t < -nd, the middle q on the open
  // ranges -(q+1)d < t < -qd, and every h vanishes at t = -d, ..., -nd.
  int q;
  if (t > -d)
    q = 0;
  else if (t < -n * d)
    q = n;
  else if (t % d == 0) {
    CohomologyProfile zero;
    zero.twist = t;
    zero.h.assign(n + 1, Integer(0));
    return {zero, ""};
  } else
    q = -t / d;  // -(q+1)d < t < -qd
  return make_profile(n, t, q, chi_ulrich(ctx, t), "E(" + std::to_string(t) + ")");
}

Rational chi_omega(const UlrichContext& ctx, int i, int j) {
  if (j < 0 || j > ctx.n) throw std::invalid_argument("chi_omega: j must lie in [0, n]");
  const Rational d{ctx.d};
  Rational sum = 0;
  for (int k = 0; k <= j; ++k) {
    const Rational term = Rational(binomial(ctx.n + 1, unsigned(k))) *
                          gen_binomial(Rational(i + j - k) / d + ctx.n, unsigned(ctx.n));
    sum += ((j - k) % 2 == 0) ? term : -term;
  }
  return Rational(ctx.r) * Rational(int_pow(ctx.d, ctx.n)) * sum;
}

Checked<CohomologyProfile> omega_profile(const UlrichContext& ctx, int i, int j) {
  const int n = ctx.n, d = ctx.d;
  // The ranges here partition the integers: the middle ones are closed on
  // the right (q exactly when -(q+1)d < i <= -qd), and q = n takes i <= -nd.
  int q;
  if (i > -d)
    q = 0;
  else if (i <= -n * d)
    q = n;
  else
    q = (-i) / d;  // the unique q with -(q+1)d < i <= -qd
  return make_profile(n, i, q, chi_omega(ctx, i, j),
                      "E(" + std::to_string(i) + ") (x) Omega^" + std::to_string(j) + "(" +
                          std::to_string(j) + ")");
}

std::vector<Rational> resolution_ranks_exact(const UlrichContext& ctx) {
  // a_j = -r d^n sum_{k<=j} (-1)^{j-k} C(n+1, k) C((j-k)/d + n - 1, n),
  // which is -chi(E(-d) (x) Omega^j(j)).
  std::vector<Rational> a;
  a.reserve(ctx.n);
  for (int j = 1; j <= ctx.n; ++j) a.push_back(-chi_omega(ctx, -ctx.d, j));
  return a;
}

Checked<ResolutionSignature> resolution_ranks(const UlrichContext& ctx) {
  const std::vector<Rational> exact = resolution_ranks_exact(ctx);
  ResolutionSignature sig;
  for (size_t idx = 0; idx < exact.size(); ++idx) {
    const Rational& a = exact[idx];
    const std::string name = "a_" + std::to_string(idx + 1);
    if (!is_integer(a))
      return {std::nullopt, name + " = " + to_string(a) + " is not an integer"};
    if (a < 0) return {std::nullopt, name + " = " + to_string(a) + " is negative"};
    sig.ranks.push_back(to_integer(a));
  }
  return {sig, ""};
}

Rank2Chern rank2_chern(int n, int d) {
  if (n < 2) throw std::invalid_argument("rank2_chern: requires n >= 2");
  Rank2Chern chern;
  chern.c1 = Integer(n + 1) * (d - 1);
  chern.c2 = Rational(chern.c1, 12) * Integer((3 * n + 4) * d - (3 * n + 2));
  return chern;
}

bool rank2_obstructed(int n, int d) { return !is_integer(rank2_chern(n, d).c2); }

std::optional<Integer> rank1_classify(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("rank1_classify: n, d must be >= 1");
  if (n == 1) return Integer(d - 1);
  // O(a) Ulrich forces (n+1)(d-1) = 2a and d^n = C(a+n, n); verify both.
  const Integer two_a = Integer(n + 1) * (d - 1);
  if (two_a % 2 != 0) return std::nullopt;
  const Integer a = two_a / 2;
  if (int_pow(d, n) != binomial(a + n, unsigned(n))) return std::nullopt;
  return a;
}

ForcedZeroRegion forced_zeros(const UlrichContext& ctx, int q0, int i0) {
  if (q0 < 0 || q0 > ctx.n) throw std::invalid_argument("forced_zeros: q0 must lie in [0, n]");
  return ForcedZeroRegion{q0, i0};
}

}  // namespace ulrich
