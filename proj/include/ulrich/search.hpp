#ifndef ULRICH_SEARCH_HPP
#define ULRICH_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ulrich/resolution.hpp"

namespace ulrich {

enum class SearchMode { random, exhaustive };

struct SearchConfig {
  UlrichContext ctx{2, 3, 3};
  std::vector<Rational> pool;  // candidate coefficients, e.g. {0, 1}
  uint64_t budget = 0;         // candidates examined
  uint64_t seed = 0;           // random mode stream key
  SearchMode mode = SearchMode::random;
  Integer start = 0;  // exhaustive mode: first enumeration index
  int jobs = 1;
  VerifyOptions verify{};
};

struct SearchStats {
  uint64_t generated = 0;
  uint64_t complex_rejected = 0;
  uint64_t dual_map_rejected = 0;
  uint64_t screen_rejected = 0;
  uint64_t verified = 0;   // candidates that reached full verification
  uint64_t certified = 0;  // distinct certificates emitted
  uint64_t duplicates = 0;
  double wall_seconds = 0;
};

struct SearchResult {
  std::vector<UlrichCertificate> certificates;  // ordered by candidate index
  SearchStats stats;
};

/// Number of pool draws per candidate: one coefficient per (differential,
/// row, column, variable).
uint64_t coefficient_positions(const UlrichContext& ctx);

/// Deterministic candidate k. Random mode keys a counter-based generator by
/// (seed, k); exhaustive mode decodes start + k in base |pool|, least
/// significant digit first over the position order (j, row, col, var).
std::vector<LinearMatrix> candidate_differentials(const SearchConfig& cfg, uint64_t k);

/// Enumeration index of a differential tuple, when every coefficient lies
/// in the pool (e.g. to locate a known matrix inside exhaustive order).
std::optional<Integer> exhaustive_index_of(const SearchConfig& cfg,
                                           const std::vector<LinearMatrix>& diffs);

/// The cheap necessary filter (top-cohomology conditions of the n <= 3
/// criteria) with a modular fast path; decisions are exact.
bool dual_map_filter(const LinearResolution& res);

/// Seeded randomized or exhaustive search for certified Ulrich bundles.
/// Requires n in {2, 3} and an integral resolution signature. Identical
/// configs produce identical certificate lists and hashes regardless of the
/// job count.
SearchResult search_ulrich(const SearchConfig& cfg);

}  // namespace ulrich

#endif
