#include "sonckit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sonckit/corpus.hpp"
#include "sonckit/grid.hpp"
#include "sonckit/mediated.hpp"
#include "sonckit/report.hpp"

namespace sonckit::cli {
namespace {

Json exponents_json(const ExponentSet& s) {
  Json a = Json::array();
  for (const auto& e : s) {
    Json p = Json::array();
    for (Eigen::Index i = 0; i < e.size(); ++i) p.push_back(e[i]);
    a.push_back(p);
  }
  return a;
}

std::string exponents_text(const ExponentSet& s) {
  std::string out;
  for (const auto& e : s) out += (out.empty() ? "" : " ") + to_string(e);
  return out.empty() ? "(none)" : out;
}

int cmd_analyze(const std::string& path, bool json, const AnalysisOptions& options, std::ostream& out) {
  const SparseForm f = read_form_file(path);
  const AnalysisReport report = analyze(f, options);
  if (json)
    out << to_json(report).dump(2) << "\n";
  else
    out << format_report(report);
  return kOk;
}

int cmd_corpus(const std::optional<std::string>& filter, bool json, const std::string& export_dir,
               std::ostream& out) {
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& entry : builtin_corpus()) {
      std::ofstream file(std::filesystem::path(export_dir) / (entry.name + ".poly"));
      if (!file) throw Error("cannot write into " + export_dir);
      file << format_form_file(entry.form);
    }
  }
  const auto rows = run_corpus(filter);
  if (json)
    out << corpus_json(rows).dump(2) << "\n";
  else
    out << format_corpus_table(rows);
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const CorpusRow& r) { return r.pass; });
  return all_pass ? kOk : kCorpusMismatch;
}

int cmd_mms(const std::string& points, bool json, std::ostream& out) {
  const auto delta = parse_point_list(points);
  const auto m = maximal_mediated_set(delta);
  if (json) {
    out << Json{{"schema", 1},
                {"delta", exponents_json(m.delta)},
                {"star", exponents_json(m.star)},
                {"lattice", exponents_json(m.lattice)},
                {"mid_delta", exponents_json(m.mid_delta)},
                {"classification", to_string(m.classification)}}
                .dump(2)
        << "\n";
    return kOk;
  }
  out << "classification: " << to_string(m.classification) << "\n";
  out << "delta (" << m.delta.size() << "): " << exponents_text(m.delta) << "\n";
  out << "star (" << m.star.size() << "): " << exponents_text(m.star) << "\n";
  out << "mid(delta) (" << m.mid_delta.size() << "): " << exponents_text(m.mid_delta) << "\n";
  out << "lattice (" << m.lattice.size() << "): " << exponents_text(m.lattice) << "\n";
  return kOk;
}

int cmd_grid(const std::string& path, const std::string& grid_name, bool json, std::ostream& out) {
  const auto grid = parse_grid_name(grid_name);
  if (!grid) throw Error("unknown grid \"" + grid_name + "\" (expected X, Xprime or Y)");
  const SparseForm f = read_form_file(path);
  const auto report = evaluate_grid(f, *grid);
  if (json) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      Json p = Json::array();
      for (Eigen::Index i = 0; i < e.point.size(); ++i) p.push_back(to_string(e.point[i]));
      entries.push_back({{"point", p}, {"value", to_string(e.value)}, {"zero", e.value == 0}});
    }
    out << Json{{"schema", 1}, {"form_name", f.name()}, {"grid", to_string(*grid)}, {"zeros", report.zeros},
                {"entries", entries}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "grid " << to_string(*grid) << " for " << (f.name().empty() ? path : f.name()) << "\n";
  for (const auto& e : report.entries)
    out << "  " << point_string(e.point) << "  " << (e.value == 0 ? "zero" : to_string(e.value)) << "\n";
  out << report.zeros << " of " << report.entries.size() << " points are zeros\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of sparse forms: circuits, SONC certificates, mediated sets"};
  app.name("sonckit");
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  AnalysisOptions options;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a form file");
  analyze_cmd->add_option("file", path, "form file")->required();
  analyze_cmd->add_flag("--json", json, "print the report as JSON");
  analyze_cmd->add_flag("--search", options.search, "run the decomposition feasibility search");
  analyze_cmd->add_flag("--mms", options.mediated, "include the maximal mediated set of a circuit");
  analyze_cmd->add_option("--max-params", options.budget.max_params, "search parameter budget")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--margin", options.budget.infeasibility_margin, "normalized infeasibility margin");
  analyze_cmd->add_option("--iters", options.budget.iterations, "iterations per start")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--seeds", options.budget.seeds, "number of starts")->check(CLI::PositiveNumber);

  std::string filter;
  std::string export_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run the built-in regression corpus");
  corpus_cmd->add_option("--filter", filter, "regular expression on entry names");
  corpus_cmd->add_flag("--json", json, "print the table as JSON");
  corpus_cmd->add_option("--export-dir", export_dir, "also write every corpus form as a .poly file");

  std::string points;
  auto* mms_cmd = app.add_subcommand("mms", "Maximal mediated set of an even point set");
  mms_cmd->add_option("--points", points, "points such as \"4,2,0; 2,4,0; 0,0,6\"")->required();
  mms_cmd->add_flag("--json", json, "print as JSON");

  std::string grid_name;
  auto* grid_cmd = app.add_subcommand("grid", "Exact evaluation on a named grid");
  grid_cmd->add_option("file", path, "form file")->required();
  grid_cmd->add_option("--grid", grid_name, "X, Xprime or Y")->required();
  grid_cmd->add_flag("--json", json, "print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path, json, options, out);
    if (*corpus_cmd)
      return cmd_corpus(corpus_cmd->count("--filter") ? std::optional<std::string>(filter) : std::nullopt, json,
                        export_dir, out);
    if (*mms_cmd) return cmd_mms(points, json, out);
    if (*grid_cmd) return cmd_grid(path, grid_name, json, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::regex_error& e) {
    err << "error: bad filter expression: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace sonckit::cli
