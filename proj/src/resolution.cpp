#include "ulrich/resolution.hpp"

#include <algorithm>

#include "ulrich/groebner.hpp"
#include "ulrich/rng.hpp"
#include "ulrich/serialize.hpp"

namespace ulrich {

namespace {

long long to_ll(const Integer& x) { return x.convert_to<long long>(); }

// dim H^0(P^n, O(t)) and dim H^n(P^n, O(t)).
Integer dim_h0(int n, int t) { return t < 0 ? Integer(0) : binomial(t + n, unsigned(n)); }
Integer dim_hn(int n, int t) {
  return t > -n - 1 ? Integer(0) : binomial(-t - 1, unsigned(n));
}

// Expected pointwise ranks: rho_j = a_{j+1} - a_{j+2} + ... +- a_n.
std::vector<long long> expected_ranks(const std::vector<Integer>& a) {
  const int n = int(a.size());
  std::vector<long long> rho(n > 0 ? n - 1 : 0, 0);
  long long tail = 0;
  for (int j = n - 1; j >= 1; --j) {
    tail = to_ll(a[j]) - tail;
    rho[j - 1] = tail;
  }
  return rho;
}

}  // namespace

LinearResolution::LinearResolution(UlrichContext ctx, std::vector<LinearMatrix> diffs)
    : ctx_(ctx), diffs_(std::move(diffs)) {
  const Checked<ResolutionSignature> sig = resolution_ranks(ctx_);
  if (!sig.ok())
    throw std::invalid_argument("LinearResolution: no integral signature for this context: " +
                                sig.violation);
  ranks_ = sig->ranks;
  if (int(diffs_.size()) != ctx_.n - 1)
    throw std::invalid_argument("LinearResolution: expected " + std::to_string(ctx_.n - 1) +
                                " differentials, got " + std::to_string(diffs_.size()));
  for (int j = 1; j < ctx_.n; ++j) {
    const LinearMatrix& d = diffs_[j - 1];
    if (d.n() != ctx_.n)
      throw std::invalid_argument("LinearResolution: D_" + std::to_string(j) +
                                  " lives on the wrong projective space");
    if (Integer(d.rows()) != ranks_[j - 1] || Integer(d.cols()) != ranks_[j])
      throw std::invalid_argument(
          "LinearResolution: D_" + std::to_string(j) + " must be " + ranks_[j - 1].str() + "x" +
          ranks_[j].str() + ", got " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
  }
}

ComplexReport validate_complex(const LinearResolution& res) {
  const auto& diffs = res.differentials();
  for (size_t j = 0; j + 1 < diffs.size(); ++j) {
    const PolyMatrix product = mat_compose(diffs[j], diffs[j + 1]);
    for (int r = 0; r < product.rows; ++r)
      for (int c = 0; c < product.cols; ++c)
        if (!product.at(r, c).is_zero())
          return {false, int(j + 1), r, c, product.at(r, c).pretty()};
  }
  return {};
}

ExactnessReport pointwise_exactness(const LinearResolution& res, const VerifyOptions& opts) {
  ExactnessReport report;
  report.expected_ranks = expected_ranks(res.ranks());
  const auto& diffs = res.differentials();

  for (size_t idx = 0; idx < diffs.size(); ++idx) {
    const LinearMatrix& d = diffs[idx];
    const long long rho = report.expected_ranks[idx];
    const int j = int(idx) + 1;

    // Cheap failure path: sampled points must show rank exactly rho.
    SplitMix64 gen(SplitMix64::mix(opts.prescreen_seed, idx));
    for (int s = 0; s < opts.prescreen_points; ++s) {
      const auto point = random_projective_point(gen, d.n());
      if (evaluate_rank(d, point) != rho) {
        report.ok = false;
        report.failed_j = j;
        report.reason = "sampled point witnesses rank != " + std::to_string(rho);
        report.witness_point = point;
        return report;
      }
    }

    // Upper bound everywhere: all (rho+1)-minors vanish identically.
    if (rho + 1 <= std::min(d.rows(), d.cols())) {
      const auto oversized = minors_ideal(d, int(rho) + 1);
      if (!oversized.empty()) {
        report.ok = false;
        report.failed_j = j;
        report.reason = "nonzero " + std::to_string(rho + 1) + "-minor " + oversized.front().pretty();
        return report;
      }
    }

    // Lower bound everywhere: the rho-minors have no common projective zero.
    if (rho > 0) {
      const EmptinessCheck emptiness = projective_emptiness(minors_ideal(d, int(rho)));
      if (!emptiness.empty) {
        report.ok = false;
        report.failed_j = j;
        report.reason = "common zero locus of the " + std::to_string(rho) + "-minors is nonempty";
        report.missing_pure_power = emptiness.missing_variable;
        return report;
      }
    }
  }
  return report;
}

QMatrix serre_dual_map(const LinearMatrix& m, int src_twist) {
  // H^n(O(a))^cols -> H^n(O(a+1))^rows is dual to composition on the other
  // side: f |-> f . M between Hom(-, O(-n-1)) spaces, whose matrix is the
  // multiplication map of M^T one degree below.
  const int dual_deg = -src_twist - m.n() - 2;
  return h0_map(m.transposed(), dual_deg).transposed();
}

CohomologyTable cohomology_table(const LinearResolution& res, int t_min, int t_max) {
  if (t_min > t_max) throw std::invalid_argument("cohomology_table: empty window");
  const int n = res.ctx().n, d = res.ctx().d;
  const auto& a = res.ranks();
  const auto& diffs = res.differentials();

  CohomologyTable table;
  table.ctx = res.ctx();
  table.t_min = t_min;

  for (int t = t_min; t <= t_max; ++t) {
    const int u = t + d;  // the complex twisted so that its cokernel is E(t)

    std::vector<Integer> dim0(n + 1), dimn(n + 1);  // index j = 1..n
    for (int j = 1; j <= n; ++j) {
      dim0[j] = a[j - 1] * dim_h0(n, u - j);
      dimn[j] = a[j - 1] * dim_hn(n, u - j);
    }

    std::vector<long long> r0(n + 1, 0), rn(n + 1, 0);  // ranks of H^0(D_j), H^n(D_j)
    for (int j = 1; j < n; ++j) {
      r0[j] = rank(h0_map(diffs[j - 1], u - j - 1));
      rn[j] = rank(serre_dual_map(diffs[j - 1], u - j - 1));
    }

    // Left exactness: the H^0-complex must be exact away from its final
    // position. Anything else means the input was not a resolution.
    for (int j = 2; j <= n; ++j) {
      const Integer defect = dim0[j] - r0[j - 1] - (j < n ? r0[j] : 0);
      if (defect != 0)
        throw ResolutionDefect("H^0-complex not exact at position " + std::to_string(j) +
                               " for twist " + std::to_string(t) + " (defect " + defect.str() +
                               ")");
    }

    std::vector<Integer> h(n + 1);
    h[0] = dim0[1] - r0[1];
    for (int q = 1; q <= n; ++q) {
      const int m = n - q + 1;  // homological term F_m carries h^q
      h[q] = dimn[m] - (m >= 2 ? rn[m - 1] : 0) - (m <= n - 1 ? rn[m] : 0);
      if (h[q] < 0)
        throw ResolutionDefect("negative h^" + std::to_string(q) + " at twist " +
                               std::to_string(t));
    }
    table.rows.push_back(std::move(h));
  }
  return table;
}

bool dual_map_conditions(const LinearResolution& res) {
  const int n = res.ctx().n, d = res.ctx().d, r = res.ctx().r;
  const auto& diffs = res.differentials();
  if (n == 2) {
    // Full rank of H^2(D_1(-d)); source and target have equal dimension.
    const Integer source = res.ranks()[1] * binomial(d + 1, 2);
    const Integer target = res.ranks()[0] * binomial(d, 2);
    const Integer expected = Integer(r) * (d - 1) * d * (d + 1) / 4;
    if (source != target || source != expected)
      throw ResolutionDefect("P^2 dual-map dimensions disagree with r(d-1)d(d+1)/4");
    const QMatrix dual = serre_dual_map(diffs[0], -d - 2);
    return rank(dual) == dual.cols();
  }
  if (n == 3) {
    // H^3(D_2(-id)) injective and H^3(D_1(-id)) surjective for i = 1, 2.
    for (int i = 1; i <= 2; ++i) {
      const QMatrix alpha = serre_dual_map(diffs[1], -i * d - 3);
      if (rank(alpha) != alpha.cols()) return false;
      const QMatrix beta = serre_dual_map(diffs[0], -i * d - 2);
      if (rank(beta) != beta.rows()) return false;
    }
    return true;
  }
  throw std::invalid_argument("dual_map_conditions: only n = 2 and n = 3 have such criteria");
}

Verdict ulrich_verdict(const LinearResolution& res, const VerifyOptions& opts,
                       Provenance provenance) {
  Verdict verdict;
  VerificationReport& report = verdict.report;

  report.complex_check = validate_complex(res);
  if (!report.complex_check.ok) return verdict;

  report.exactness = pointwise_exactness(res, opts);
  if (!report.exactness.ok) return verdict;
  report.local_freeness_ok = true;  // constant rank of D_1 is part of exactness

  const int n = res.ctx().n, d = res.ctx().d;
  const bool reduce = res.ctx().r == 2 && !opts.force_full_definition && n >= 2;
  const int p_max = reduce ? (n + 1) / 2 : n;
  report.r2_reduction_used = reduce;

  for (int p = 1; p <= p_max; ++p) {
    const int t = -p * d;
    report.checked_twists.push_back(t);
    const CohomologyTable table = cohomology_table(res, t, t);
    for (int q = 0; q <= n; ++q)
      if (table.rows[0][q] != 0) {
        report.cohomology.ok = false;
        report.cohomology.q = q;
        report.cohomology.t = t;
        report.cohomology.value = table.rows[0][q];
        return verdict;
      }
  }

  provenance.try_emplace("tool", "ulrich 0.1.0");
  provenance.try_emplace("prescreen_seed", std::to_string(opts.prescreen_seed));
  provenance.try_emplace("prescreen_points", std::to_string(opts.prescreen_points));
  UlrichCertificate certificate{res, report, std::move(provenance), ""};
  certificate.content_hash = certificate_content_hash(certificate);
  verdict.certificate = std::move(certificate);
  return verdict;
}

}  // namespace ulrich
