#ifndef ULRICH_NUMEROLOGY_HPP
#define ULRICH_NUMEROLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

/// The triple (n, d, r): P^n embedded by O(d), bundle rank r.
struct UlrichContext {
  int n = 1, d = 1, r = 1;

  UlrichContext() = default;
  UlrichContext(int n_, int d_, int r_);

  bool operator==(const UlrichContext&) const = default;
};

/// Value of a dimension formula, or the structured reason it failed to be a
/// nonnegative integer. These failures are informative outputs (they are
/// the nonexistence mechanism for the corresponding bundle parameters), not
/// errors.
template <class T>
struct Checked {
  std::optional<T> value;
  std::string violation;  // nonempty iff !value

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// Cohomology dimensions h^0..h^n of one twist; at most one entry nonzero
/// (natural cohomology).
struct CohomologyProfile {
  int twist = 0;
  std::vector<Integer> h;

  /// Degree of the unique nonzero entry, or -1 when all vanish.
  int nonzero_degree() const;

  bool operator==(const CohomologyProfile&) const = default;
};

/// Ranks [a_1, ..., a_n] of the linear resolution
/// 0 -> O^{a_n}(-n) -> ... -> O^{a_1}(-1) -> E(-d) -> 0.
struct ResolutionSignature {
  std::vector<Integer> ranks;

  bool operator==(const ResolutionSignature&) const = default;
};

/// Bott formula: h^q(P^n, Omega^p(t)). Throws when p or q is outside [0, n].
Integer bott_dimension(int n, int p, int q, int t);

/// Euler characteristic of E(p) for an Ulrich bundle: r d^n C(p/d + n, n).
Rational chi_ulrich(const UlrichContext& ctx, int p);

/// The full profile of E(t): the twist ranges select the unique cohomology
/// degree q that can be nonzero (all-zero at t = -d, ..., -nd), and its
/// dimension is (-1)^q chi. A non-integral or negative forced dimension is
/// reported as an integrality violation.
Checked<CohomologyProfile> ulrich_profile(const UlrichContext& ctx, int t);

/// Euler characteristic of E(i) tensor Omega^j(j):
/// r d^n sum_{k=0..j} (-1)^{j-k} C(n+1, k) C((i+j-k)/d + n, n).
/// Throws when j is outside [0, n].
Rational chi_omega(const UlrichContext& ctx, int i, int j);

/// Profile of E(i) tensor Omega^j(j). The middle twist ranges are closed on
/// the right (q for -(q+1)d < i <= -qd), unlike ulrich_profile's open ones.
Checked<CohomologyProfile> omega_profile(const UlrichContext& ctx, int i, int j);

/// The resolution ranks a_j as exact rationals (identities hold for every
/// context, integral or not).
std::vector<Rational> resolution_ranks_exact(const UlrichContext& ctx);

/// Validated signature; non-integral or negative a_j yields a violation
/// naming j.
Checked<ResolutionSignature> resolution_ranks(const UlrichContext& ctx);

struct Rank2Chern {
  Integer c1;
  Rational c2;
};

/// c_1 = (n+1)(d-1) and c_2 = (n+1)(d-1)/12 [(3n+4)d - (3n+2)] for a rank-2
/// Ulrich bundle. Requires n >= 2.
Rank2Chern rank2_chern(int n, int d);

/// True iff c_2 is non-integral, ruling out any rank-2 Ulrich bundle.
bool rank2_obstructed(int n, int d);

/// Twist a with O(a) Ulrich for (P^n, O(d)), if one exists: d-1 for n = 1,
/// and for n >= 2 the candidate a = (n+1)(d-1)/2 is accepted only when it
/// is integral and d^n = C(a+n, n) holds exactly.
std::optional<Integer> rank1_classify(int n, int d);

/// Vanishing forced by one nonzero entry h^{q0}(E(i0)) != 0: zero on
/// q <= q0-1, q+i <= q0+i0 and on q >= q0+1, q+i >= q0+i0.
struct ForcedZeroRegion {
  int q0 = 0, i0 = 0;

  bool contains(int q, int i) const {
    return (q <= q0 - 1 && q + i <= q0 + i0) || (q >= q0 + 1 && q + i >= q0 + i0);
  }
};

ForcedZeroRegion forced_zeros(const UlrichContext& ctx, int q0, int i0);

}  // namespace ulrich

#endif
