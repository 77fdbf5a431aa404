#ifndef ULRICH_SERIALIZE_HPP
#define ULRICH_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "ulrich/resolution.hpp"

namespace ulrich {

// nlohmann::json with the default (std::map) object backend: keys come out
// sorted, which is what makes canonical_dump canonical.
using Json = nlohmann::json;

Json to_json(const UlrichContext& ctx);
UlrichContext context_from_json(const Json& j);

/// Schema: { "n": int, "rows": int, "cols": int, "entries": [[ [coeff,
/// exponents], ... ]] } with coefficients as "p/q" strings and terms in
/// descending grevlex. Round-trips bit-exactly.
Json to_json(const LinearMatrix& m);
LinearMatrix linear_matrix_from_json(const Json& j);

Json to_json(const VerificationReport& report);

Json to_json(const CohomologyProfile& profile);

/// { "context": ..., "differentials": [...] }
Json resolution_to_json(const LinearResolution& res);
/// Accepts both the bare resolution payload and a full certificate.
LinearResolution resolution_from_json(const Json& j);

Json certificate_to_json(const UlrichCertificate& cert);

struct ParsedCertificate {
  LinearResolution resolution;
  Provenance provenance;
  std::string content_hash;
  Json report;
};

ParsedCertificate certificate_from_json(const Json& j);

/// Compact dump with sorted keys; the canonical byte form everything is
/// hashed over.
std::string canonical_dump(const Json& j);

std::string sha256_hex(std::string_view data);

/// SHA-256 of the canonical certificate serialization. The content_hash
/// field itself and the provenance "timestamp" entry are excluded, so the
/// hash is reproducible across re-verification runs.
std::string certificate_content_hash(const UlrichCertificate& cert);
std::string certificate_content_hash(Json certificate_json);

/// Dedup key for search results: hash of context and differentials only.
std::string differentials_hash(const LinearResolution& res);

}  // namespace ulrich

#endif
