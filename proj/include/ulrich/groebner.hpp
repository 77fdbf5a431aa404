#ifndef ULRICH_GROEBNER_HPP
#define ULRICH_GROEBNER_HPP

#include <span>
#include <vector>

#include "ulrich/poly.hpp"

namespace ulrich {

/// Reduced Groebner basis under degrevlex: monic generators, no leading
/// monomial divides another, every tail reduced.
struct GroebnerBasis {
  std::vector<HomPoly> generators;
};

/// Remainder of f under multivariate division by gens (degrevlex).
HomPoly normal_form(const HomPoly& f, std::span<const HomPoly> gens);

/// Buchberger with normal pair selection (lowest lcm degree first) and the
/// two classical pair-discard criteria. Coefficient growth is controlled by
/// reducing every intermediate result to an integer-primitive form. Output
/// is deterministic for identical input order; the zero ideal gives {}.
GroebnerBasis buchberger(std::vector<HomPoly> gens);

struct EmptinessCheck {
  bool empty = false;
  /// When !empty: the first variable with no pure-power leading monomial in
  /// the reduced basis (-1 for the zero ideal, where the criterion is moot).
  int missing_variable = -1;
};

/// Decides whether the common projective zero locus of the homogeneous
/// generators is empty over the algebraic closure, by the pure-power
/// criterion: the reduced basis must contain, for every variable, a
/// generator whose leading monomial is a power of that variable
/// (equivalently the quotient ring is a finite-dimensional vector space).
EmptinessCheck projective_emptiness(const std::vector<HomPoly>& gens);

inline bool projective_empty(const std::vector<HomPoly>& gens) {
  return projective_emptiness(gens).empty;
}

}  // namespace ulrich

#endif
