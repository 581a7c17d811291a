#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qrf/errors.hpp"
#include "qrf/group.hpp"
#include "qrf/invariants.hpp"
#include "qrf/io.hpp"
#include "reproduce.hpp"

namespace qrf::cli {
namespace {

constexpr double kViolationThreshold = 1e-6;

struct Common {
  std::string format = "json";
  std::string out_path;
};

struct Output {
  Json json;
  std::string csv;
  int code = kSuccess;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : ""; }

Json rows_json(const Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"quantity", row.quantity}, {"computed", row.computed}, {"pass", row.pass}};
    j["expected"] = row.expected ? Json(*row.expected) : Json(nullptr);
    j["tolerance"] = row.tolerance ? Json(*row.tolerance) : Json(nullptr);
    rows.push_back(std::move(j));
  }
  return rows;
}

std::string rows_csv(const Report& r) {
  std::ostringstream s;
  s << "quantity,expected,computed,tolerance,pass\n";
  for (const auto& row : r.rows) {
    s << row.quantity << ',' << opt_num(row.expected) << ',' << num(row.computed) << ','
      << opt_num(row.tolerance) << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return s.str();
}

Output report_output(const std::string& command, const Report& r) {
  Output o;
  o.json = Json{{"command", command}, {"id", r.id}, {"pass", r.pass()}, {"rows", rows_json(r)},
                {"details", r.details}};
  o.csv = rows_csv(r);
  o.code = r.pass() ? kSuccess : kCheckFailure;
  return o;
}

Output sweep_output(const std::string& group_spec, const QuantifierPair& pair, const SweepOptions& opt,
                    const SweepResult& res) {
  const bool conserved_pair = is_conserved_pair(pair);
  const auto& s = res.summary;
  std::string verdict;
  int code = kSuccess;
  if (!s.all_diagonals_match) {
    verdict = "diagonal multiset mismatch";
    code = kCheckFailure;
  } else if (conserved_pair) {
    verdict = s.all_conserved ? "conserved" : "violated";
    code = s.all_conserved ? kSuccess : kCheckFailure;
  } else {
    verdict = "non-conserved pair";
  }

  Output o;
  o.code = code;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "state_id,group,pair,C_before,E_before,C_after,E_after,delta_sum,product\n";
  const std::string pname = pair_name(pair);
  for (const auto& row : res.rows) {
    const auto& r = row.report;
    rows.push_back(Json{{"state_id", row.state_id},
                        {"C_before", r.before.coherence},
                        {"E_before", r.before.entanglement},
                        {"C_after", r.after.coherence},
                        {"E_after", r.after.entanglement},
                        {"delta_sum", r.delta_sum},
                        {"product", r.product()},
                        {"conserved", r.conserved},
                        {"diagonals_match", row.diagonals.equal && row.diagonals.inverse_permutation}});
    csv << row.state_id << ',' << group_spec << ",\"" << pname << "\"," << num(r.before.coherence) << ','
        << num(r.before.entanglement) << ',' << num(r.after.coherence) << ',' << num(r.after.entanglement) << ','
        << num(r.delta_sum) << ',' << num(r.product()) << '\n';
  }
  Json summary{{"states", s.states},
               {"max_abs_delta_sum", s.max_abs_delta_sum},
               {"max_product", s.max_product},
               {"verdict", verdict}};
  if (!conserved_pair && s.max_product > kViolationThreshold) {
    summary["note"] = "non-conserved pair: trade-off violation observed";
  }
  o.json = Json{{"command", "sweep"}, {"group", group_spec},  {"pair", pname}, {"samples", opt.samples},
                {"seed", opt.seed},    {"tol", opt.tol},       {"conserved_pair", conserved_pair},
                {"rows", std::move(rows)}, {"summary", std::move(summary)}};
  o.csv = csv.str();
  return o;
}

Output search_output(const std::string& group_spec, const QuantifierPair& pair, const SearchOptions& opt,
                     double tol, const SearchResult& res) {
  const bool conserved_pair = is_conserved_pair(pair);
  const bool found = res.best_product > (conserved_pair ? tol : kViolationThreshold);
  Output o;
  o.code = conserved_pair && found ? kCheckFailure : kSuccess;
  o.json = Json{{"command", "search"},
                {"group", group_spec},
                {"pair", pair_name(pair)},
                {"samples", opt.samples},
                {"seed", opt.seed},
                {"conserved_pair", conserved_pair},
                {"best_product", res.best_product},
                {"best_sample", res.best_sample},
                {"evaluations", res.evaluations},
                {"verdict", found ? "violation found" : "no violation"},
                {"best_state", matrix_to_json(res.best->coeffs())}};
  std::ostringstream csv;
  csv << "quantity,value\n"
      << "best_product," << num(res.best_product) << '\n'
      << "best_sample," << res.best_sample << '\n'
      << "evaluations," << res.evaluations << '\n';
  o.csv = csv.str();
  return o;
}

Output validate_output(const std::string& name, const std::vector<GroupViolation>& violations) {
  static const char* kinds[] = {"shape", "closure", "identity", "inverse", "associativity"};
  Output o;
  Json list = Json::array();
  std::ostringstream csv;
  csv << "kind,message\n";
  for (const auto& v : violations) {
    const char* kind = kinds[static_cast<int>(v.kind)];
    list.push_back(Json{{"kind", kind}, {"message", v.message}});
    csv << kind << ",\"" << v.message << "\"\n";
  }
  o.json = Json{{"command", "validate-group"}, {"group", name}, {"valid", violations.empty()}, {"violations", list}};
  o.csv = csv.str();
  o.code = violations.empty() ? kSuccess : kCheckFailure;
  return o;
}

int emit(const Output& o, const Common& common, std::ostream& out, std::ostream& err) {
  const std::string text = common.format == "csv" ? o.csv : o.json.dump(2) + "\n";
  if (common.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << common.out_path << "\n";
      return kUsageError;
    }
    f << text;
  }
  return o.code;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", common.out_path, "Write the report to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum reference frame verification lab"};
  app.require_subcommand(1);
  Common common;

  std::string fixture_id;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a shipped fixture and compare with expected values");
  reproduce_cmd->add_option("fixture", fixture_id, "Fixture id")->required();
  add_common(reproduce_cmd, common);

  std::string group_spec = "cyclic:3";
  std::string pair_text = "C_e,E_e";
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = kConservationTol;
  unsigned jobs = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check conservation laws on random states");
  auto* search_cmd = app.add_subcommand("search", "Search for trade-off violations");
  for (auto* cmd : {sweep_cmd, search_cmd}) {
    cmd->add_option("--group", group_spec, "S3, cyclic:n or Zn")->capture_default_str();
    cmd->add_option("--pair", pair_text, "Quantifier pair, e.g. C_e,E_e")->capture_default_str();
    cmd->add_option("--samples", samples, "Number of random states")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    cmd->add_option("--tol", tol, "Conservation tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(cmd, common);
  }
  SearchOptions search_opt;
  search_cmd->add_option("--restarts", search_opt.restarts, "Hill-climb starts")->capture_default_str();
  search_cmd->add_option("--climb-steps", search_opt.climb_steps, "Steps per hill climb")->capture_default_str();
  search_cmd->add_option("--sigma", search_opt.sigma, "Hill-climb step size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  double diagonal_tol = 1e-12;
  sweep_cmd->add_option("--diagonal-tol", diagonal_tol, "Diagonal multiset tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string state_path;
  double bell_tol = 1e-12;
  auto* bell_cmd = app.add_subcommand("bell", "CHSH probabilities in both frames");
  bell_cmd->add_option("--state", state_path, "State or scenario JSON (default: shipped Bell fixture)");
  bell_cmd->add_option("--tol", bell_tol, "Probability table tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(bell_cmd, common);

  std::string demo = "paper";
  auto* imperfect_cmd = app.add_subcommand("imperfect", "Imperfect S3 frame demonstrations");
  imperfect_cmd->add_option("--demo", demo, "paper or params")->check(CLI::IsMember({"paper", "params"}))->capture_default_str();
  add_common(imperfect_cmd, common);

  std::string validate_spec;
  std::string table_path;
  auto* validate_cmd = app.add_subcommand("validate-group", "Validate a Cayley table");
  auto* g_opt = validate_cmd->add_option("--group", validate_spec, "S3, cyclic:n or Zn");
  auto* t_opt = validate_cmd->add_option("--table", table_path, "JSON Cayley table");
  g_opt->excludes(t_opt);
  add_common(validate_cmd, common);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("qrf-lab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*reproduce_cmd) {
      const auto& ids = fixture_ids();
      if (std::find(ids.begin(), ids.end(), fixture_id) == ids.end()) {
        err << "error: unknown fixture '" << fixture_id << "'\n";
        return kUsageError;
      }
      return emit(report_output("reproduce", reproduce(fixture_id, fixture_dir())), common, out, err);
    }
    if (*sweep_cmd || *search_cmd) {
      const auto group = parse_group_spec(group_spec);
      const auto pair = parse_pair(pair_text);
      if (*sweep_cmd) {
        SweepOptions opt{samples, seed, tol, diagonal_tol, jobs};
        return emit(sweep_output(group_spec, pair, opt, conservation_sweep(group, pair, opt)), common, out, err);
      }
      search_opt.samples = samples;
      search_opt.seed = seed;
      search_opt.jobs = jobs;
      return emit(search_output(group_spec, pair, search_opt, tol, counterexample_search(group, pair, search_opt)),
                  common, out, err);
    }
    if (*bell_cmd) {
      const auto path = state_path.empty() ? fixture_dir() / "bell.json" : std::filesystem::path(state_path);
      return emit(report_output("bell", bell_report(path, bell_tol)), common, out, err);
    }
    if (*imperfect_cmd) {
      const auto r = demo == "paper" ? imperfect_paper_demo(fixture_dir()) : imperfect_params_demo(fixture_dir());
      // The params demo reports its deltas and always exits 0.
      Output o = report_output("imperfect", r);
      if (demo == "params") o.code = kSuccess;
      return emit(o, common, out, err);
    }
    if (*validate_cmd) {
      if (validate_spec.empty() && table_path.empty()) {
        err << "error: validate-group needs --group or --table\n";
        return kUsageError;
      }
      CayleyTable table;
      if (!table_path.empty()) {
        table = cayley_from_json(load_json_file(table_path));
      } else {
        table = parse_group_spec(validate_spec)->table();
      }
      return emit(validate_output(table.name, validate_group(table)), common, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsageError;
}

}  // namespace qrf::cli
