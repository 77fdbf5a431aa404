#include "ulrich/serialize.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace ulrich {

Json to_json(const UlrichContext& ctx) {
  return Json{{"n", ctx.n}, {"d", ctx.d}, {"r", ctx.r}};
}

UlrichContext context_from_json(const Json& j) {
  return UlrichContext(j.at("n").get<int>(), j.at("d").get<int>(), j.at("r").get<int>());
}

Json to_json(const LinearMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) {
      Json entry = Json::array();
      for (const auto& [mono, coeff] : m.at(r, c).terms())
        entry.push_back(Json::array({to_string(coeff), mono.exp}));
      row.push_back(std::move(entry));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

LinearMatrix linear_matrix_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (int(entries.size()) != rows) throw std::invalid_argument("LinearMatrix JSON: bad row count");
  PolyMatrix m(n, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (int(row.size()) != cols) throw std::invalid_argument("LinearMatrix JSON: bad col count");
    for (int c = 0; c < cols; ++c) {
      HomPoly p;
      for (const Json& term : row.at(c)) {
        const Rational coeff = rational_from_string(term.at(0).get<std::string>());
        Monomial mono(term.at(1).get<std::vector<int>>());
        if (mono.vars() != n + 1)
          throw std::invalid_argument("LinearMatrix JSON: exponent vector of wrong length");
        p.add_term(coeff, mono);
      }
      m.at(r, c) = std::move(p);
    }
  }
  return LinearMatrix(std::move(m));
}

Json to_json(const VerificationReport& report) {
  Json j{{"complex_ok", report.complex_check.ok},
         {"exactness_ok", report.exactness.ok},
         {"local_freeness_ok", report.local_freeness_ok},
         {"cohomology_ok", report.cohomology.ok},
         {"expected_ranks", report.exactness.expected_ranks},
         {"r2_reduction_used", report.r2_reduction_used},
         {"checked_twists", report.checked_twists}};
  Json witnesses = Json::array();
  if (!report.complex_check.ok)
    witnesses.push_back(Json{{"stage", "complex"},
                             {"j", report.complex_check.j},
                             {"row", report.complex_check.row},
                             {"col", report.complex_check.col},
                             {"entry", report.complex_check.entry}});
  if (!report.exactness.ok) {
    Json w{{"stage", "exactness"},
           {"j", report.exactness.failed_j},
           {"reason", report.exactness.reason}};
    if (!report.exactness.witness_point.empty()) {
      Json point = Json::array();
      for (const Rational& x : report.exactness.witness_point) point.push_back(to_string(x));
      w["point"] = std::move(point);
    }
    if (report.exactness.missing_pure_power >= 0)
      w["missing_pure_power"] = report.exactness.missing_pure_power;
    witnesses.push_back(std::move(w));
  }
  if (!report.cohomology.ok)
    witnesses.push_back(Json{{"stage", "cohomology"},
                             {"q", report.cohomology.q},
                             {"t", report.cohomology.t},
                             {"value", report.cohomology.value.str()}});
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json to_json(const CohomologyProfile& profile) {
  Json h = Json::array();
  for (const Integer& v : profile.h) h.push_back(v.convert_to<long long>());
  return Json{{"t", profile.twist}, {"h", h}, {"nonzero_degree", profile.nonzero_degree()}};
}

Json resolution_to_json(const LinearResolution& res) {
  Json diffs = Json::array();
  for (const LinearMatrix& d : res.differentials()) diffs.push_back(to_json(d));
  return Json{{"context", to_json(res.ctx())}, {"differentials", diffs}};
}

LinearResolution resolution_from_json(const Json& j) {
  const UlrichContext ctx = context_from_json(j.at("context"));
  std::vector<LinearMatrix> diffs;
  for (const Json& d : j.at("differentials")) diffs.push_back(linear_matrix_from_json(d));
  return LinearResolution(ctx, std::move(diffs));
}

Json certificate_to_json(const UlrichCertificate& cert) {
  Json j = resolution_to_json(cert.resolution);
  j["report"] = to_json(cert.report);
  j["provenance"] = cert.provenance;
  j["content_hash"] = cert.content_hash;
  return j;
}

ParsedCertificate certificate_from_json(const Json& j) {
  ParsedCertificate parsed{resolution_from_json(j), {}, {}, Json::object()};
  if (j.contains("provenance")) parsed.provenance = j.at("provenance").get<Provenance>();
  if (j.contains("content_hash")) parsed.content_hash = j.at("content_hash").get<std::string>();
  if (j.contains("report")) parsed.report = j.at("report");
  return parsed;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: digest failure");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(size_t(length) * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string certificate_content_hash(Json certificate_json) {
  certificate_json.erase("content_hash");
  if (certificate_json.contains("provenance")) certificate_json.at("provenance").erase("timestamp");
  return sha256_hex(canonical_dump(certificate_json));
}

std::string certificate_content_hash(const UlrichCertificate& cert) {
  Json j = resolution_to_json(cert.resolution);
  j["report"] = to_json(cert.report);
  j["provenance"] = cert.provenance;
  return certificate_content_hash(std::move(j));
}

std::string differentials_hash(const LinearResolution& res) {
  return sha256_hex(canonical_dump(resolution_to_json(res)));
}

}  // namespace ulrich
