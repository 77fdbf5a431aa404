#include "ulrich/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ulrich {

HomPoly normal_form(const HomPoly& f, std::span<const HomPoly> gens) {
  HomPoly remainder;
  HomPoly current = f;
  while (!current.is_zero()) {
    bool divided = false;
    for (const HomPoly& g : gens) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(current.leading_monomial())) {
        const Rational c = current.leading_coeff() / g.leading_coeff();
        const Monomial q = current.leading_monomial() / g.leading_monomial();
        current = current - g.times_term(c, q);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(current.leading_coeff(), current.leading_monomial());
      current = current - HomPoly::term(current.leading_coeff(), current.leading_monomial());
    }
  }
  return remainder;
}

namespace {

HomPoly s_polynomial(const HomPoly& f, const HomPoly& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(1 / f.leading_coeff(), l / f.leading_monomial()) -
         g.times_term(1 / g.leading_coeff(), l / g.leading_monomial());
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

bool pure_power_of(const Monomial& m, int var) {
  if (m.exp[var] == 0) return false;
  for (int i = 0; i < m.vars(); ++i)
    if (i != var && m.exp[i] != 0) return false;
  return true;
}

}  // namespace

GroebnerBasis buchberger(std::vector<HomPoly> gens) {
  std::vector<HomPoly> basis;
  for (HomPoly& g : gens) {
    if (g.is_zero()) continue;
    if (!basis.empty() && g.vars() != basis.front().vars())
      throw std::invalid_argument("buchberger: generators in different variable counts");
    basis.push_back(g.primitive());
  }

  using Pair = std::pair<int, int>;
  std::set<Pair> pending;
  for (size_t j = 1; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) pending.emplace(int(i), int(j));

  auto lcm_of = [&](const Pair& p) {
    return Monomial::lcm(basis[p.first].leading_monomial(), basis[p.second].leading_monomial());
  };

  while (!pending.empty()) {
    // Normal strategy: lowest lcm degree first, ties by index.
    auto best = pending.begin();
    int best_deg = lcm_of(*best).degree();
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const int deg = lcm_of(*it).degree();
      if (deg < best_deg) {
        best = it;
        best_deg = deg;
      }
    }
    const Pair pair = *best;
    pending.erase(best);

    const Monomial& lm_i = basis[pair.first].leading_monomial();
    const Monomial& lm_j = basis[pair.second].leading_monomial();
    if (coprime(lm_i, lm_j)) continue;  // first Buchberger criterion

    // Chain criterion: some k with LM_k | lcm and both companion pairs
    // already treated.
    const Monomial l = Monomial::lcm(lm_i, lm_j);
    bool skip = false;
    for (int k = 0; k < int(basis.size()) && !skip; ++k) {
      if (k == pair.first || k == pair.second) continue;
      if (!basis[k].leading_monomial().divides(l)) continue;
      const Pair ik{std::min(pair.first, k), std::max(pair.first, k)};
      const Pair jk{std::min(pair.second, k), std::max(pair.second, k)};
      if (!pending.count(ik) && !pending.count(jk)) skip = true;
    }
    if (skip) continue;

    const HomPoly reduced =
        normal_form(s_polynomial(basis[pair.first], basis[pair.second]), basis);
    if (reduced.is_zero()) continue;
    basis.push_back(reduced.primitive());
    const int added = int(basis.size()) - 1;
    for (int i = 0; i < added; ++i) pending.emplace(i, added);
  }

  // Minimalize: drop generators whose leading monomial is divisible by
  // another survivor's.
  std::vector<HomPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lm_j = basis[j].leading_monomial();
      if (!lm_j.divides(basis[i].leading_monomial())) continue;
      // Equal leading monomials: keep the earlier generator.
      redundant = !(lm_j == basis[i].leading_monomial() && j > i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails and normalize to monic.
  GroebnerBasis out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<HomPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.generators.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(out.generators.begin(), out.generators.end(),
            [](const HomPoly& a, const HomPoly& b) {
              return grevlex_less(a.leading_monomial(), b.leading_monomial());
            });
  return out;
}

EmptinessCheck projective_emptiness(const std::vector<HomPoly>& gens) {
  int nvars = 0;
  bool any = false;
  for (const HomPoly& g : gens) {
    if (g.is_zero()) continue;
    any = true;
    nvars = g.vars();
    if (g.degree() == 0) return {true, -1};  // unit ideal
  }
  if (!any) return {false, -1};  // zero ideal: the locus is all of P^n

  const GroebnerBasis gb = buchberger(gens);
  for (const HomPoly& g : gb.generators)
    if (g.degree() == 0) return {true, -1};
  for (int var = 0; var < nvars; ++var) {
    bool covered = false;
    for (const HomPoly& g : gb.generators)
      if (pure_power_of(g.leading_monomial(), var)) {
        covered = true;
        break;
      }
    if (!covered) return {false, var};
  }
  return {true, -1};
}

}  // namespace ulrich
