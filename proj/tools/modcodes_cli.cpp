// modcodes: construct Z4 codes, compute covering radii and bounds, run the theorem checks.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcodes/bounds.hpp"
#include "modcodes/covering.hpp"
#include "modcodes/families.hpp"
#include "modcodes/io.hpp"
#include "modcodes/verify.hpp"

#ifndef MODCODES_DEFAULT_ERRATA
#define MODCODES_DEFAULT_ERRATA "data/errata.txt"
#endif

using json = nlohmann::ordered_json;
using namespace modcodes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t budget_vectors = 0;
  std::uint64_t budget_memory = 0;
  bool extended = false;
};

struct FamilyOptions {
  std::string family;
  std::uint64_t n = 0, m = 0, n2 = 0, n3 = 0, k = 0, u = 0;
  bool allow_beta_u1 = false;
  bool dual = false;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "length n (repetition) or block size n");
    app->add_option("--m", m, "size of the 1-block");
    app->add_option("--n2", n2, "size of the 2-block (block-repetition)");
    app->add_option("--n3", n3, "size of the 3-block (block-repetition)");
    app->add_option("--k", k, "simplex/MacDonald parameter k");
    app->add_option("--u", u, "MacDonald parameter u");
    app->add_flag("--allow-beta-u1", allow_beta_u1, "allow MacDonald beta with u = 1 (deletes [0; 1])");
    app->add_flag("--dual", dual, "take the dual of the constructed code");
  }

  FamilySpec spec() const {
    FamilySpec s;
    s.family = parse_family(family);
    s.n = n;
    s.m = m;
    s.n2 = n2;
    s.n3 = n3;
    s.k = k;
    s.u = u;
    s.allow_beta_u1 = allow_beta_u1;
    if (!dual) return s;
    FamilySpec d;
    d.family = Family::Dual;
    d.inner = std::make_shared<FamilySpec>(s);
    return d;
  }
};

SearchBudget make_budget(const GlobalOptions& g, std::uint64_t distance_budget) {
  SearchBudget b;
  b.threads = g.threads;
  if (g.budget_vectors) {
    b.syndrome_vectors = g.budget_vectors;
    b.bfs_vectors = g.budget_vectors;
  }
  // one byte per table entry is the smallest layout the syndrome engine uses
  if (g.budget_memory) b.table_entries = g.budget_memory;
  if (distance_budget) b.distance_evaluations = distance_budget;
  return b;
}

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

json params_json(const ParameterTuple& p) {
  return {{"length", p.length},
          {"two_dimension", p.two_dimension},
          {"d_hamming", optional_json(p.d_hamming)},
          {"d_lee", optional_json(p.d_lee)},
          {"d_euclidean", optional_json(p.d_euclidean)}};
}

json spec_params_json(const FamilySpec& s) {
  json j = json::object();
  switch (s.family) {
    case Family::RepetitionAlpha:
    case Family::RepetitionBeta:
    case Family::BlockRep2n:
    case Family::BlockRep3n:
      j["n"] = s.n;
      break;
    case Family::BlockRepMN:
      j["m"] = s.m;
      j["n"] = s.n;
      break;
    case Family::BlockRepetition:
      j["m"] = s.m;
      j["n2"] = s.n2;
      j["n3"] = s.n3;
      break;
    case Family::SimplexAlpha:
    case Family::SimplexBeta:
      j["k"] = s.k;
      break;
    case Family::MacDonaldAlpha:
    case Family::MacDonaldBeta:
      j["k"] = s.k;
      j["u"] = s.u;
      if (s.family == Family::MacDonaldBeta && s.u == 1) j["allow_beta_u1"] = true;
      break;
    case Family::Dual:
      j["of"] = {{"family", std::string(to_string(s.inner->family))}, {"params", spec_params_json(*s.inner)}};
      break;
  }
  return j;
}

json radius_json(const RadiusReport& r) {
  json j;
  j["metric"] = std::string(to_string(r.metric));
  j["method"] = std::string(to_string(r.method));
  j["exact"] = r.exact;
  if (r.exact) {
    j["value"] = r.lo;
  } else {
    j["interval"] = {{"lo", r.lo}, {"hi", optional_json(r.hi)}};
  }
  j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  j["stats"] = {{"vectors_visited", r.stats.vectors_visited},
                {"distance_evaluations", r.stats.distance_evaluations},
                {"seconds", r.stats.seconds},
                {"threads", r.stats.threads}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void print(const GlobalOptions& g, const json& j, const std::function<void()>& table) {
  if (g.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    table();
  }
}

LinearCode load_code(const std::string& path, const FamilyOptions& fam) {
  if (!path.empty() && !fam.family.empty()) throw InvalidArgument("give either a matrix file or --family, not both");
  if (!fam.family.empty()) return build_code(fam.spec());
  if (path.empty()) throw InvalidArgument("a matrix file (or '-' for standard input) or --family is required");
  if (path == "-") return read_matrix(std::cin);
  return read_matrix_file(path);
}

// ---------------------------------------------------------------------------------------------

int cmd_construct(const GlobalOptions& g, const FamilyOptions& fam, const std::string& output, const std::string& meta) {
  const FamilySpec spec = fam.spec();
  const FamilyCode fc = construct(spec);
  json md;
  md["family"] = std::string(to_string(spec.family));
  md["params"] = spec_params_json(spec);
  md["label"] = spec.label();
  md["length"] = fc.code.length();
  md["two_dimension"] = fc.code.two_dimension();
  md["free"] = fc.code.is_free();
  md["audited_parameters"] = {{"declared", params_json(fc.declared)},
                              {"measured", fc.measured ? params_json(*fc.measured) : json(nullptr)},
                              {"status", std::string(to_string(fc.audit))},
                              {"detail", fc.audit_detail}};
  const std::string matrix = format_matrix(fc.code);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InvalidArgument("cannot write '" + output + "'");
    out << matrix;
  }
  if (!meta.empty()) {
    std::ofstream out(meta);
    if (!out) throw InvalidArgument("cannot write '" + meta + "'");
    out << md.dump(2) << '\n';
  }
  if (g.format == "json") {
    json j = md;
    if (output.empty()) j["matrix"] = matrix;
    std::cout << j.dump(2) << '\n';
  } else if (output.empty()) {
    std::cout << matrix;
  } else {
    std::cout << spec.label() << ": length " << fc.code.length() << ", 2-dimension " << fc.code.two_dimension()
              << ", audit " << to_string(fc.audit) << '\n';
  }
  return fc.audit == AuditStatus::Failed ? kExitMismatch : kExitOk;
}

int cmd_radius(const GlobalOptions& g, const LinearCode& code, const std::string& metric_name,
               const std::string& method_name, std::optional<std::uint64_t> r_cap, std::uint64_t budget) {
  const Metric metric = parse_metric(metric_name);
  const Method method = parse_method(method_name);
  const SearchBudget b = make_budget(g, budget);
  RadiusReport r;
  if (method == Method::Bfs && r_cap) {
    r = covering_radius_bfs(code, metric, *r_cap, b);
  } else {
    r = covering_radius(code, metric, method, b);
  }
  json j = radius_json(r);
  j["code"] = {{"s", code.ring().s()}, {"length", code.length()}, {"two_dimension", code.two_dimension()}};
  print(g, j, [&] {
    std::cout << "metric   " << to_string(r.metric) << '\n' << "method   " << to_string(r.method) << '\n';
    if (r.exact) {
      std::cout << "radius   " << r.lo << '\n';
    } else {
      std::cout << "interval [" << r.lo << ", " << (r.hi ? std::to_string(*r.hi) : "inf") << "]\n";
    }
    if (r.witness) std::cout << "witness  " << r.witness->to_string() << '\n';
    std::cout << "visited  " << r.stats.vectors_visited << '\n'
              << "seconds  " << std::setprecision(3) << r.stats.seconds << '\n';
    if (!r.note.empty()) std::cout << "note     " << r.note << '\n';
  });
  return kExitOk;
}

int cmd_bounds(const GlobalOptions& g, const LinearCode& code, const std::string& metric_name,
               const std::vector<std::size_t>& split, bool with_exact) {
  const Metric metric = parse_metric(metric_name);
  std::optional<std::pair<std::size_t, std::size_t>> sp;
  if (!split.empty()) {
    if (split.size() != 2) throw InvalidArgument("--split takes TOP_ROWS LEFT_COLS");
    sp = std::pair{split[0], split[1]};
  }
  const SearchBudget b = make_budget(g, 0);
  const BoundReport rep = compute_bounds(code, metric, b, sp);
  json j;
  j["metric"] = std::string(to_string(rep.metric));
  j["sphere_covering_lb"] = rep.sphere_covering_lb;
  j["delsarte_ub"] = optional_json(rep.delsarte_ub);
  j["mattson_ub"] = optional_json(rep.mattson_ub);
  j["mattson_decomposition"] = rep.mattson_decomposition.empty() ? json(nullptr) : json(rep.mattson_decomposition);
  if (with_exact) j["radius"] = radius_json(covering_radius(code, metric, Method::Auto, b));
  print(g, j, [&] {
    std::cout << "sphere-covering lower bound  " << rep.sphere_covering_lb << '\n';
    std::cout << "Delsarte upper bound         " << (rep.delsarte_ub ? std::to_string(*rep.delsarte_ub) : "n/a") << '\n';
    std::cout << "Mattson upper bound          " << (rep.mattson_ub ? std::to_string(*rep.mattson_ub) : "n/a") << '\n';
    if (!rep.mattson_decomposition.empty()) std::cout << "decomposition                " << rep.mattson_decomposition << '\n';
    if (with_exact) std::cout << "exact                        " << j["radius"].dump() << '\n';
  });
  return kExitOk;
}

int cmd_gray(const GlobalOptions& g, std::vector<std::string> vectors, bool inverse) {
  if (vectors.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty()) vectors.push_back(line);
    }
  }
  json arr = json::array();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& text : vectors) {
    const ZqVector in = parse_vector(text, inverse ? RingSpec(1) : RingSpec::z4());
    const ZqVector out = inverse ? gray_unmap(in) : gray_map(in);
    arr.push_back({{"input", in.to_string()}, {"output", out.to_string()}});
    pairs.emplace_back(in.to_string(), out.to_string());
  }
  print(g, arr, [&] {
    for (const auto& [a, b] : pairs) std::cout << b << '\n';
  });
  return kExitOk;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() + 1 >= w ? s + ' ' : s + std::string(w - s.size(), ' '); }

int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& ids, const std::string& errata_path,
               const std::string& json_out, bool list) {
  if (list) {
    for (const auto& c : theorem_checks()) std::cout << pad(c.id, 24) << c.claim << '\n';
    return kExitOk;
  }
  VerifyOptions opt;
  opt.budget = make_budget(g, 0);
  opt.extended = g.extended;
  opt.errata = Errata::load(errata_path);
  const VerifyReport rep = run_verification(ids, opt);

  json j;
  j["extended"] = g.extended;
  j["errata"] = errata_path;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = {{"id", r.id},         {"instance", r.instance},
                {"claim", r.claim},   {"exact", r.exact},
                {"formula", r.formula}, {"status", std::string(to_string(r.status))},
                {"method", r.method}, {"witness", r.witness ? json(*r.witness) : json(nullptr)},
                {"seconds", r.seconds}};
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  json summary = json::object();
  for (auto s : {CheckStatus::Match, CheckStatus::BoundHolds, CheckStatus::Flagged, CheckStatus::SkippedBudget,
                 CheckStatus::Mismatch}) {
    summary[std::string(to_string(s))] = rep.count(s);
  }
  j["summary"] = summary;
  json stale = json::array();
  for (const auto& [id, inst] : rep.stale_errata) stale.push_back(id + " " + inst);
  j["stale_errata"] = stale;
  j["ok"] = rep.ok();

  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw InvalidArgument("cannot write '" + json_out + "'");
    out << j.dump(2) << '\n';
  }
  print(g, j, [&] {
    std::cout << pad("check", 23) << pad("instance", 52) << pad("exact", 16) << pad("formula", 16) << "status\n";
    for (const auto& r : rep.rows) {
      std::cout << pad(r.id, 23) << pad(r.instance, 52) << pad(r.exact, 16) << pad(r.formula, 16)
                << to_string(r.status);
      if (r.status == CheckStatus::Flagged || r.status == CheckStatus::Mismatch ||
          r.status == CheckStatus::SkippedBudget) {
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
      }
      std::cout << '\n';
    }
    std::cout << '\n';
    for (auto& [k, v] : summary.items()) std::cout << pad(k, 16) << v << '\n';
    for (const auto& [id, inst] : rep.stale_errata) std::cout << "stale errata entry: " << id << ' ' << inst << '\n';
  });
  return rep.ok() ? kExitOk : kExitMismatch;
}

unsigned default_threads() {
  if (const char* env = std::getenv("MODCODES_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring MODCODES_THREADS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering radius tools for codes over Z4 and Z_{2^s}"};
  app.require_subcommand(1);
  GlobalOptions g;
  g.threads = default_threads();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", g.threads, "worker threads (default: MODCODES_THREADS or 1)")->check(CLI::Range(1u, 1024u));
  app.add_option("--budget-vectors", g.budget_vectors, "max vectors visited by the syndrome and bfs engines");
  app.add_option("--budget-memory", g.budget_memory, "max coset-table size in bytes (one byte per entry)");
  app.add_flag("--extended", g.extended, "enable the 4^16-vector simplex runs in verify");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "build a code family member");
  FamilyOptions construct_fam;
  std::string construct_out, construct_meta;
  construct_cmd->add_option("family", construct_fam.family, "family name")->required();
  construct_fam.attach(construct_cmd);
  construct_cmd->add_option("-o,--output", construct_out, "write the generator matrix file here");
  construct_cmd->add_option("--meta", construct_meta, "write the JSON metadata here");

  // radius
  auto* radius_cmd = app.add_subcommand("radius", "covering radius of a code");
  FamilyOptions radius_fam;
  std::string radius_file, radius_metric = "lee", radius_method = "auto";
  std::optional<std::uint64_t> r_cap;
  std::uint64_t radius_budget = 0;
  radius_cmd->add_option("matrix", radius_file, "generator matrix file, '-' for standard input");
  radius_cmd->add_option("--family", radius_fam.family, "build the code from a family instead of a file");
  radius_fam.attach(radius_cmd);
  radius_cmd->add_option("--metric", radius_metric)->check(CLI::IsMember({"hamming", "lee", "homogeneous", "euclidean"}));
  radius_cmd->add_option("--method", radius_method)->check(CLI::IsMember({"auto", "direct", "syndrome", "bfs", "bound_only"}));
  radius_cmd->add_option("--r-cap", r_cap, "weight cap for the bfs engine");
  radius_cmd->add_option("--budget", radius_budget, "max distance evaluations for the direct engine");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "sphere-covering, Delsarte and Mattson bounds");
  FamilyOptions bounds_fam;
  std::string bounds_file, bounds_metric = "lee";
  std::vector<std::size_t> split;
  bool with_exact = false;
  bounds_cmd->add_option("matrix", bounds_file, "generator matrix file, '-' for standard input");
  bounds_cmd->add_option("--family", bounds_fam.family, "build the code from a family instead of a file");
  bounds_fam.attach(bounds_cmd);
  bounds_cmd->add_option("--metric", bounds_metric)->check(CLI::IsMember({"hamming", "lee", "homogeneous", "euclidean"}));
  bounds_cmd->add_option("--split", split, "Mattson split: TOP_ROWS LEFT_COLS")->expected(2);
  bounds_cmd->add_flag("--exact", with_exact, "also compute the exact radius");

  // gray
  auto* gray_cmd = app.add_subcommand("gray", "Gray map Z4^n -> Z2^2n");
  std::vector<std::string> gray_vectors;
  bool inverse = false;
  gray_cmd->add_option("vectors", gray_vectors, "vectors such as \"1 3\"; read from standard input if absent");
  gray_cmd->add_flag("--inverse", inverse, "map binary vectors back to Z4");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the theorem verification matrix");
  std::vector<std::string> ids;
  std::string errata_path = MODCODES_DEFAULT_ERRATA, json_out;
  bool list = false;
  verify_cmd->add_option("ids", ids, "check ids, or 'all' (default)");
  verify_cmd->add_option("--errata", errata_path, "errata file listing predicted discrepancies");
  verify_cmd->add_option("--json-out", json_out, "also write the JSON report here");
  verify_cmd->add_flag("--list", list, "list the check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct(g, construct_fam, construct_out, construct_meta);
    if (*radius_cmd) {
      return cmd_radius(g, load_code(radius_file, radius_fam), radius_metric, radius_method, r_cap, radius_budget);
    }
    if (*bounds_cmd) return cmd_bounds(g, load_code(bounds_file, bounds_fam), bounds_metric, split, with_exact);
    if (*gray_cmd) return cmd_gray(g, gray_vectors, inverse);
    if (*verify_cmd) return cmd_verify(g, ids, errata_path, json_out, list);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
