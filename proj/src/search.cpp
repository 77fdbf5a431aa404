#include "ulrich/search.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "ulrich/rng.hpp"
#include "ulrich/serialize.hpp"

namespace ulrich {

namespace {

constexpr uint32_t kFilterPrime = 2147483647u;  // 2^31 - 1

std::vector<std::pair<int, int>> differential_shapes(const UlrichContext& ctx) {
  const Checked<ResolutionSignature> sig = resolution_ranks(ctx);
  if (!sig.ok())
    throw std::invalid_argument("search: context has no integral resolution signature: " +
                                sig.violation);
  std::vector<std::pair<int, int>> shapes;
  for (int j = 1; j < ctx.n; ++j)
    shapes.emplace_back(int(sig->ranks[j - 1]), int(sig->ranks[j]));
  return shapes;
}

std::string pool_string(const std::vector<Rational>& pool) {
  std::string s;
  for (size_t i = 0; i < pool.size(); ++i) {
    if (i) s += ",";
    s += to_string(pool[i]);
  }
  return s;
}

}  // namespace

uint64_t coefficient_positions(const UlrichContext& ctx) {
  uint64_t total = 0;
  for (const auto& [rows, cols] : differential_shapes(ctx))
    total += uint64_t(rows) * cols * (ctx.n + 1);
  return total;
}

std::vector<LinearMatrix> candidate_differentials(const SearchConfig& cfg, uint64_t k) {
  if (cfg.pool.empty()) throw std::invalid_argument("search: empty coefficient pool");
  const auto shapes = differential_shapes(cfg.ctx);
  const int n = cfg.ctx.n;
  const uint64_t pool_size = cfg.pool.size();

  SplitMix64 gen(SplitMix64::mix(cfg.seed, k));
  Integer index;
  if (cfg.mode == SearchMode::exhaustive) index = cfg.start + k;

  auto next_digit = [&]() -> uint64_t {
    if (cfg.mode == SearchMode::random) return gen.below(pool_size);
    const Integer digit = index % pool_size;
    index /= pool_size;
    return digit.convert_to<uint64_t>();
  };

  std::vector<LinearMatrix> diffs;
  std::vector<Rational> coeffs(n + 1);
  for (const auto& [rows, cols] : shapes) {
    PolyMatrix m(n, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        for (int v = 0; v <= n; ++v) coeffs[v] = cfg.pool[next_digit()];
        m.at(r, c) = HomPoly::linear_form(coeffs);
      }
    diffs.emplace_back(std::move(m));
  }
  return diffs;
}

std::optional<Integer> exhaustive_index_of(const SearchConfig& cfg,
                                           const std::vector<LinearMatrix>& diffs) {
  const auto shapes = differential_shapes(cfg.ctx);
  if (diffs.size() != shapes.size()) return std::nullopt;
  const int n = cfg.ctx.n;

  Integer index = 0;
  Integer place = 1;
  for (size_t di = 0; di < shapes.size(); ++di) {
    const auto [rows, cols] = shapes[di];
    if (diffs[di].rows() != rows || diffs[di].cols() != cols) return std::nullopt;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        for (int v = 0; v <= n; ++v) {
          const Rational coeff = diffs[di].at(r, c).coeff(Monomial::variable(n, v));
          const auto it = std::find(cfg.pool.begin(), cfg.pool.end(), coeff);
          if (it == cfg.pool.end()) return std::nullopt;
          index += place * Integer(it - cfg.pool.begin());
          place *= Integer(cfg.pool.size());
        }
  }
  return index;
}

bool dual_map_filter(const LinearResolution& res) {
  const int n = res.ctx().n, d = res.ctx().d;
  const auto& diffs = res.differentials();

  auto full_col_rank = [](const QMatrix& m) {
    if (const auto modular = rank_mod_p(m, kFilterPrime); modular && *modular == m.cols())
      return true;  // nonzero mod p certifies full rank exactly
    return rank(m) == m.cols();
  };
  auto full_row_rank = [](const QMatrix& m) {
    if (const auto modular = rank_mod_p(m, kFilterPrime); modular && *modular == m.rows())
      return true;
    return rank(m) == m.rows();
  };

  if (n == 2) {
    const QMatrix dual = serre_dual_map(diffs[0], -d - 2);
    if (dual.rows() != dual.cols())
      throw ResolutionDefect("P^2 dual map must be square for a resolution shape");
    return full_col_rank(dual);
  }
  if (n == 3) {
    for (int i = 1; i <= 2; ++i) {
      if (!full_col_rank(serre_dual_map(diffs[1], -i * d - 3))) return false;
      if (!full_row_rank(serre_dual_map(diffs[0], -i * d - 2))) return false;
    }
    return true;
  }
  throw std::invalid_argument("dual_map_filter: only n = 2 and n = 3");
}

SearchResult search_ulrich(const SearchConfig& cfg) {
  if (cfg.ctx.n != 2 && cfg.ctx.n != 3)
    throw std::invalid_argument(
        "search: only n = 2 and n = 3 are supported (no iff-criterion beyond P^3)");
  if (cfg.pool.empty()) throw std::invalid_argument("search: empty coefficient pool");
  (void)differential_shapes(cfg.ctx);  // validates integrality up front

  const auto start_time = std::chrono::steady_clock::now();
  const std::string pool_str = pool_string(cfg.pool);

  struct Hit {
    uint64_t index;
    UlrichCertificate certificate;
  };
  std::vector<Hit> hits;
  SearchStats stats;
  std::mutex merge_mutex;

  // Expected ranks for the cheap point screen.
  const Checked<ResolutionSignature> sig = resolution_ranks(cfg.ctx);
  std::vector<long long> rho(cfg.ctx.n - 1, 0);
  {
    long long tail = 0;
    for (int j = cfg.ctx.n - 1; j >= 1; --j) {
      tail = sig->ranks[j].convert_to<long long>() - tail;
      rho[j - 1] = tail;
    }
  }

  auto process_range = [&](uint64_t begin, uint64_t step) {
    SearchStats local;
    std::vector<Hit> found;
    for (uint64_t k = begin; k < cfg.budget; k += step) {
      ++local.generated;
      LinearResolution res(cfg.ctx, candidate_differentials(cfg, k));

      if (cfg.ctx.n >= 3 && !validate_complex(res).ok) {
        ++local.complex_rejected;
        continue;
      }
      if (!dual_map_filter(res)) {
        ++local.dual_map_rejected;
        continue;
      }
      // Point screen: a handful of seeded samples kill most rank-deficient
      // candidates before any Groebner work.
      bool screened_out = false;
      SplitMix64 gen(SplitMix64::mix(cfg.verify.prescreen_seed ^ 0x5ca1ab1eull, k));
      for (size_t j = 0; j < res.differentials().size() && !screened_out; ++j)
        for (int s = 0; s < 8 && !screened_out; ++s) {
          const auto point = random_projective_point(gen, cfg.ctx.n);
          screened_out = evaluate_rank(res.differentials()[j], point) != rho[j];
        }
      if (screened_out) {
        ++local.screen_rejected;
        continue;
      }

      ++local.verified;
      Provenance provenance{
          {"mode", cfg.mode == SearchMode::random ? "random" : "exhaustive"},
          {"seed", std::to_string(cfg.seed)},
          {"pool", pool_str},
          {"candidate_index",
           cfg.mode == SearchMode::exhaustive ? (cfg.start + k).str() : std::to_string(k)},
      };
      Verdict verdict = ulrich_verdict(res, cfg.verify, std::move(provenance));
      if (verdict.ok()) found.push_back(Hit{k, std::move(*verdict.certificate)});
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    stats.generated += local.generated;
    stats.complex_rejected += local.complex_rejected;
    stats.dual_map_rejected += local.dual_map_rejected;
    stats.screen_rejected += local.screen_rejected;
    stats.verified += local.verified;
    for (Hit& hit : found) hits.push_back(std::move(hit));
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || cfg.budget <= 1) {
    process_range(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) workers.emplace_back(process_range, uint64_t(w), uint64_t(jobs));
    for (std::thread& worker : workers) worker.join();
  }

  // Order-normalize, then suppress duplicates by differential hash.
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.index < b.index; });
  SearchResult result;
  std::set<std::string> seen;
  for (Hit& hit : hits) {
    const std::string key = differentials_hash(hit.certificate.resolution);
    if (!seen.insert(key).second) {
      ++stats.duplicates;
      continue;
    }
    result.certificates.push_back(std::move(hit.certificate));
  }
  stats.certified = result.certificates.size();
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  result.stats = stats;
  return result;
}

}  // namespace ulrich
