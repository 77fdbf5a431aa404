#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ulrich/gallery.hpp"
#include "ulrich/groebner.hpp"
#include "ulrich/render.hpp"
#include "ulrich/search.hpp"
#include "ulrich/serialize.hpp"

namespace {

using namespace ulrich;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // negative verdicts
constexpr int kExitUsage = 2;     // usage or input errors

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw CLI::ValidationError("--out", "cannot open '" + out_file + "' for writing");
  out << text;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--input", "cannot read '" + path + "'");
  Json j;
  in >> j;
  return j;
}

LinearResolution load_resolution(const std::string& gallery_name, const std::string& input_file) {
  if (!gallery_name.empty()) {
    if (!is_gallery_name(gallery_name))
      throw CLI::ValidationError("--gallery", "unknown fixture '" + gallery_name + "'");
    return gallery_resolution(gallery_name);
  }
  return resolution_from_json(load_json_file(input_file));
}

std::vector<Rational> parse_pool(const std::string& csv) {
  std::vector<Rational> pool;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) pool.push_back(rational_from_string(item));
  if (pool.empty()) throw CLI::ValidationError("--pool", "empty coefficient pool");
  return pool;
}

struct CommonContext {
  int n = 0, d = 0, r = 0;
  UlrichContext get() const { return UlrichContext(n, d, r); }
};

void add_context_flags(CLI::App* cmd, CommonContext& ctx) {
  cmd->add_option("-n", ctx.n, "Projective dimension n")->required();
  cmd->add_option("-d", ctx.d, "Veronese degree d")->required();
  cmd->add_option("-r", ctx.r, "Bundle rank r")->required();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact cohomological numerology and verification of Ulrich bundles on P^n"};
  app.require_subcommand(1);

  // chi ----------------------------------------------------------------
  CommonContext chi_ctx;
  int chi_twist = 0, chi_j = 0;
  bool chi_json = false;
  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of E(p) (x) Omega^j(j)");
  add_context_flags(chi_cmd, chi_ctx);
  chi_cmd->add_option("-p,--twist", chi_twist, "Twist p")->required();
  chi_cmd->add_option("-j", chi_j, "Exterior power j (default 0)");
  chi_cmd->add_flag("--json", chi_json);
  std::string chi_out;
  chi_cmd->add_option("--out", chi_out, "Write output to file");

  // profile --------------------------------------------------------------
  CommonContext prof_ctx;
  int prof_twist = 0, prof_j = 0;
  bool prof_json = false;
  std::string prof_out;
  auto* prof_cmd = app.add_subcommand("profile", "Natural-cohomology profile of one twist");
  add_context_flags(prof_cmd, prof_ctx);
  prof_cmd->add_option("-t,--twist", prof_twist, "Twist t")->required();
  prof_cmd->add_option("-j", prof_j, "Exterior power j (default 0)");
  prof_cmd->add_flag("--json", prof_json);
  prof_cmd->add_option("--out", prof_out, "Write output to file");

  // table ----------------------------------------------------------------
  CommonContext table_ctx;
  int table_from = 0, table_to = 0;
  std::string table_format = "text", table_out, table_gallery, table_input;
  auto* table_cmd = app.add_subcommand("table", "Cohomology table over a twist window");
  table_cmd->add_option("-n", table_ctx.n, "Projective dimension n");
  table_cmd->add_option("-d", table_ctx.d, "Veronese degree d");
  table_cmd->add_option("-r", table_ctx.r, "Bundle rank r");
  table_cmd->add_option("--from", table_from, "First twist")->required();
  table_cmd->add_option("--to", table_to, "Last twist")->required();
  table_cmd->add_option("--format", table_format, "text|csv|json");
  table_cmd->add_option("--gallery", table_gallery, "Tabulate a gallery resolution");
  table_cmd->add_option("--input", table_input, "Tabulate a resolution/certificate JSON file");
  table_cmd->add_option("--out", table_out, "Write output to file");

  // ranks ----------------------------------------------------------------
  CommonContext ranks_ctx;
  bool ranks_json = false;
  std::string ranks_out;
  auto* ranks_cmd = app.add_subcommand("ranks", "Linear resolution ranks a_1..a_n");
  add_context_flags(ranks_cmd, ranks_ctx);
  ranks_cmd->add_flag("--json", ranks_json);
  ranks_cmd->add_option("--out", ranks_out, "Write output to file");

  // bott -----------------------------------------------------------------
  int bott_n = 0, bott_p = 0, bott_q = 0, bott_t = 0;
  auto* bott_cmd = app.add_subcommand("bott", "h^q(P^n, Omega^p(t)) by the Bott formula");
  bott_cmd->add_option("-n", bott_n)->required();
  bott_cmd->add_option("-p", bott_p)->required();
  bott_cmd->add_option("-q", bott_q)->required();
  bott_cmd->add_option("-t,--twist", bott_t)->required();

  // chern ----------------------------------------------------------------
  int chern_n = 0, chern_d = 0;
  bool chern_json = false;
  auto* chern_cmd = app.add_subcommand("chern", "Rank-2 Chern classes and the c_2 obstruction");
  chern_cmd->add_option("-n", chern_n)->required();
  chern_cmd->add_option("-d", chern_d)->required();
  chern_cmd->add_flag("--json", chern_json);

  // rank1 ----------------------------------------------------------------
  int rank1_n = 0, rank1_d = 0;
  auto* rank1_cmd = app.add_subcommand("rank1", "Classify line-bundle (rank-1) Ulrich twists");
  rank1_cmd->add_option("-n", rank1_n)->required();
  rank1_cmd->add_option("-d", rank1_d)->required();

  // verify ---------------------------------------------------------------
  std::string verify_gallery, verify_input, verify_out;
  bool verify_full = false;
  uint64_t verify_seed = kDefaultPrescreenSeed;
  int verify_points = 128;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a linear resolution; emit a certificate");
  verify_cmd->add_option("--gallery", verify_gallery, "Gallery fixture name");
  verify_cmd->add_option("--input", verify_input, "Resolution or certificate JSON file");
  verify_cmd->add_flag("--full", verify_full, "Force the full-definition twist set (disable r=2 reduction)");
  verify_cmd->add_option("--seed", verify_seed, "Prescreen seed");
  verify_cmd->add_option("--points", verify_points, "Prescreen sample count");
  verify_cmd->add_option("--out", verify_out, "Write the certificate/report to file");

  // gallery ----------------------------------------------------------------
  bool gallery_list = false;
  std::string gallery_name, gallery_out;
  auto* gallery_cmd = app.add_subcommand("gallery", "Built-in fixtures from the example gallery");
  gallery_cmd->add_flag("--list", gallery_list, "List fixture names");
  gallery_cmd->add_option("--name", gallery_name, "Dump one fixture as JSON");
  gallery_cmd->add_option("--out", gallery_out, "Write output to file");

  // search ---------------------------------------------------------------
  CommonContext search_ctx;
  std::string search_pool = "0,1", search_mode = "random", search_outdir, search_start = "0";
  uint64_t search_budget = 0;
  std::optional<uint64_t> search_seed;
  int search_jobs = 1;
  bool search_json = false;
  auto* search_cmd = app.add_subcommand("search", "Search for certified Ulrich bundles");
  add_context_flags(search_cmd, search_ctx);
  search_cmd->add_option("--pool", search_pool, "Comma-separated coefficient pool (default 0,1)");
  search_cmd->add_option("--budget", search_budget, "Candidates to examine")->required();
  search_cmd->add_option("--seed", search_seed, "Stream seed (required in random mode)");
  search_cmd->add_option("--mode", search_mode, "random|exhaustive");
  search_cmd->add_option("--start", search_start, "Exhaustive mode: first enumeration index");
  search_cmd->add_option("--jobs", search_jobs, "Worker threads (default 1)");
  search_cmd->add_option("--outdir", search_outdir, "Directory for certificates and the manifest");
  search_cmd->add_flag("--json", search_json, "Print the run manifest as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (chi_cmd->parsed()) {
    const Rational value = chi_omega(chi_ctx.get(), chi_twist, chi_j);
    if (chi_json)
      emit(Json{{"chi", to_string(value)}}.dump(), chi_out);
    else
      emit(to_string(value), chi_out);
    return kExitOk;
  }

  if (prof_cmd->parsed()) {
    const auto profile = omega_profile(prof_ctx.get(), prof_twist, prof_j);
    if (!profile.ok()) {
      if (prof_json)
        emit(Json{{"violation", profile.violation}}.dump(), prof_out);
      else
        emit("integrality violation: " + profile.violation, prof_out);
      return kExitNegative;
    }
    emit(prof_json ? to_json(*profile).dump() : render_table({*profile}, TableFormat::text),
         prof_out);
    return kExitOk;
  }

  if (table_cmd->parsed()) {
    if (table_from > table_to)
      throw CLI::ValidationError("--from", "empty twist window");
    const TableFormat format = table_format_from_string(table_format);
    std::vector<CohomologyProfile> profiles;
    if (!table_gallery.empty() || !table_input.empty()) {
      const LinearResolution res = load_resolution(table_gallery, table_input);
      if (!validate_complex(res).ok || !pointwise_exactness(res).ok) {
        std::cerr << "input is not an exact locally free resolution; no table\n";
        return kExitNegative;
      }
      const CohomologyTable table = cohomology_table(res, table_from, table_to);
      for (int t = table_from; t <= table_to; ++t)
        profiles.push_back(CohomologyProfile{t, table.at_twist(t)});
    } else {
      if (!table_cmd->count("-n") || !table_cmd->count("-d") || !table_cmd->count("-r"))
        throw CLI::ValidationError("table", "need -n, -d, -r (or --gallery/--input)");
      for (int t = table_from; t <= table_to; ++t) {
        const auto profile = ulrich_profile(table_ctx.get(), t);
        if (!profile.ok()) {
          std::cerr << "integrality violation: " << profile.violation << "\n";
          return kExitNegative;
        }
        profiles.push_back(*profile);
      }
    }
    emit(render_table(profiles, format), table_out);
    return kExitOk;
  }

  if (ranks_cmd->parsed()) {
    const auto sig = resolution_ranks(ranks_ctx.get());
    if (!sig.ok()) {
      emit("integrality violation: " + sig.violation, ranks_out);
      return kExitNegative;
    }
    if (ranks_json) {
      Json ranks = Json::array();
      for (const Integer& a : sig->ranks) ranks.push_back(a.convert_to<long long>());
      emit(Json{{"ranks", ranks}}.dump(), ranks_out);
    } else {
      std::string line;
      for (const Integer& a : sig->ranks) {
        if (!line.empty()) line += " ";
        line += a.str();
      }
      emit(line, ranks_out);
    }
    return kExitOk;
  }

  if (bott_cmd->parsed()) {
    emit(bott_dimension(bott_n, bott_p, bott_q, bott_t).str(), "");
    return kExitOk;
  }

  if (chern_cmd->parsed()) {
    const Rank2Chern chern = rank2_chern(chern_n, chern_d);
    const bool obstructed = rank2_obstructed(chern_n, chern_d);
    if (chern_json)
      emit(Json{{"c1", chern.c1.str()},
                {"c2", to_string(chern.c2)},
                {"rank2_obstructed", obstructed}}
               .dump(),
           "");
    else
      emit("c1 = " + chern.c1.str() + "\nc2 = " + to_string(chern.c2) +
               "\nrank2_obstructed = " + (obstructed ? "true" : "false"),
           "");
    return kExitOk;
  }

  if (rank1_cmd->parsed()) {
    const auto a = rank1_classify(rank1_n, rank1_d);
    if (!a) {
      emit("none", "");
      return kExitNegative;
    }
    emit(a->str(), "");
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    if (verify_gallery.empty() == verify_input.empty())
      throw CLI::ValidationError("verify", "need exactly one of --gallery or --input");
    const LinearResolution res = load_resolution(verify_gallery, verify_input);
    VerifyOptions opts;
    opts.prescreen_seed = verify_seed;
    opts.prescreen_points = verify_points;
    opts.force_full_definition = verify_full;
    Provenance provenance{{"timestamp", timestamp_utc()}};
    if (!verify_gallery.empty()) {
      provenance["source"] = "gallery";
      provenance["name"] = verify_gallery;
    } else {
      provenance["source"] = "file";
      provenance["name"] = verify_input;
    }
    const Verdict verdict = ulrich_verdict(res, opts, std::move(provenance));
    if (!verdict.ok()) {
      Json failure = to_json(verdict.report);
      failure["ok"] = false;
      emit(failure.dump(2), verify_out);
      return kExitNegative;
    }
    emit(certificate_to_json(*verdict.certificate).dump(2), verify_out);
    return kExitOk;
  }

  if (gallery_cmd->parsed()) {
    if (gallery_list) {
      std::string lines;
      for (const std::string& name : gallery_names()) lines += name + "\n";
      emit(lines, gallery_out);
      return kExitOk;
    }
    if (gallery_name.empty())
      throw CLI::ValidationError("gallery", "need --list or --name NAME");
    if (!is_gallery_name(gallery_name))
      throw CLI::ValidationError("--name", "unknown fixture '" + gallery_name + "'");
    const GalleryFixture fixture = gallery_fixture(gallery_name);
    Json j{{"name", fixture.name}, {"context", to_json(fixture.ctx)}};
    Json diffs = Json::array(), displayed = Json::array();
    for (const LinearMatrix& d : fixture.differentials) diffs.push_back(to_json(d));
    for (const LinearMatrix& d : fixture.displayed) {
      Json rows = Json::array();
      for (int r = 0; r < d.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < d.cols(); ++c) row.push_back(d.at(r, c).pretty());
        rows.push_back(std::move(row));
      }
      displayed.push_back(std::move(rows));
    }
    j["differentials"] = std::move(diffs);
    j["display"] = std::move(displayed);
    emit(j.dump(2), gallery_out);
    return kExitOk;
  }

  if (search_cmd->parsed()) {
    SearchConfig cfg;
    cfg.ctx = search_ctx.get();
    cfg.pool = parse_pool(search_pool);
    cfg.budget = search_budget;
    cfg.mode = search_mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::random;
    if (search_mode != "random" && search_mode != "exhaustive")
      throw CLI::ValidationError("--mode", "expected random or exhaustive");
    if (cfg.mode == SearchMode::random && !search_seed)
      throw CLI::ValidationError("--seed", "random mode requires an explicit seed");
    cfg.seed = search_seed.value_or(0);
    cfg.start = Integer(search_start);
    cfg.jobs = search_jobs;

    const SearchResult result = search_ulrich(cfg);

    Json manifest{{"config",
                   Json{{"context", to_json(cfg.ctx)},
                        {"pool", search_pool},
                        {"budget", cfg.budget},
                        {"seed", cfg.seed},
                        {"mode", search_mode},
                        {"start", cfg.start.str()},
                        {"jobs", cfg.jobs}}},
                  {"stats",
                   Json{{"generated", result.stats.generated},
                        {"complex_rejected", result.stats.complex_rejected},
                        {"dual_map_rejected", result.stats.dual_map_rejected},
                        {"screen_rejected", result.stats.screen_rejected},
                        {"verified", result.stats.verified},
                        {"certified", result.stats.certified},
                        {"duplicates", result.stats.duplicates},
                        {"wall_seconds", result.stats.wall_seconds}}}};
    Json hashes = Json::array();
    for (const UlrichCertificate& cert : result.certificates)
      hashes.push_back(cert.content_hash);
    manifest["certificates"] = std::move(hashes);

    if (!search_outdir.empty()) {
      std::filesystem::create_directories(search_outdir);
      for (const UlrichCertificate& cert : result.certificates) {
        const std::string index = cert.provenance.at("candidate_index");
        std::ofstream out(search_outdir + "/cert-" + index + ".json", std::ios::binary);
        out << certificate_to_json(cert).dump(2) << "\n";
      }
      std::ofstream out(search_outdir + "/manifest.json", std::ios::binary);
      out << manifest.dump(2) << "\n";
    }

    if (search_json)
      std::cout << manifest.dump() << "\n";
    else
      std::cout << "candidates " << result.stats.generated << ", certified "
                << result.stats.certified << " (complex- " << result.stats.complex_rejected
                << ", dual-map- " << result.stats.dual_map_rejected << ", screen- "
                << result.stats.screen_rejected << "), " << result.stats.wall_seconds << "s\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
