#include "interlock/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "interlock/projection.hpp"
#include "interlock/report.hpp"

namespace interlock {

namespace {

struct AnalyzeArgs {
  std::string input;
  std::string format;
  std::vector<int> slices;
  std::string closeness = "paper";
  std::string density = "loops";
  std::string project = "events";
  std::string out;
  std::string export_net;
  std::string export_csv;
  std::string export_dot;
  bool tables = false;
  bool stats_only = false;
  bool normalize_names = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw IoError("no such input: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write: " + path);
  out << content;
  if (!out.flush()) throw IoError("write failed: " + path);
}

std::string infer_format(const AnalyzeArgs& args) {
  if (!args.format.empty()) return args.format;
  const std::string ext = std::filesystem::path(args.input).extension().string();
  return ext == ".net" || ext == ".NET" ? "net" : "csv";
}

int analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  ReportOptions opts;
  opts.closeness = args.closeness == "paper" ? ClosenessVariant::kReachable
                                             : ClosenessVariant::kComponentNormalized;
  opts.density = args.density == "loops" ? DensityVariant::kLoopsAllowed : DensityVariant::kNoLoops;
  opts.slices = args.slices;
  const NameOptions names{args.normalize_names};

  const std::string text = read_file(args.input);
  const std::string format = infer_format(args);

  std::optional<OneModeNetwork> network;
  AnalysisReport report;
  auto report_warnings = [&](const ParseDiagnostics& diag) {
    for (const ParseWarning& w : diag.warnings) {
      err << "warning: " << args.input << ": line " << w.line << ": " << w.message << '\n';
    }
  };
  auto from_two_mode = [&](const AffiliationParse& parsed) {
    report_warnings(parsed.diagnostics);
    network = args.project == "actors" ? project_actors(parsed.network)
                                       : project_events(parsed.network);
    report = build_report(*network, opts, affiliation_stats(parsed.network));
  };

  try {
    if (format == "net") {
      if (is_two_mode_net(text)) {
        from_two_mode(parse_net_two_mode(text, names));
      } else {
        network = parse_net_one_mode(text);
        report = build_report(*network, opts);
      }
    } else {
      switch (detect_csv_kind(text)) {
        case CsvKind::kDegreeTable: {
          if (!args.export_net.empty() || !args.export_csv.empty() || !args.export_dot.empty()) {
            throw UsageError("network exports need an edge list; a degree table has none");
          }
          if (!args.slices.empty()) throw UsageError("--slice needs line values; a degree table has none");
          report = build_degree_report(parse_degree_table(text), opts);
          break;
        }
        case CsvKind::kAffiliations:
        case CsvKind::kUnknown:
          from_two_mode(parse_csv_affiliations(text, names));
          break;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << args.input << ": " << e.what() << '\n';
    return kExitAnalysis;
  }

  if (network) {
    if (!args.export_net.empty()) write_file(args.export_net, write_net_one_mode(*network));
    if (!args.export_csv.empty()) write_file(args.export_csv, write_edge_list_csv(*network));
    if (!args.export_dot.empty()) write_file(args.export_dot, write_dot(*network));
  }

  const std::string json = to_json(report, args.stats_only).dump(2) + "\n";
  if (!args.out.empty()) write_file(args.out, json);
  if (args.tables) {
    out << "Degree distribution\n" << render_table(report, TableKind::kDegreeDistribution) << '\n';
    if (!args.stats_only) {
      out << "Centrality\n" << render_table(report, TableKind::kCentrality) << '\n';
    }
    out << "Line multiplicity\n" << render_table(report, TableKind::kLineMultiplicity);
    if (!report.slices.empty()) out << '\n' << render_slices(report);
  }
  if (args.out.empty() && !args.tables) out << json;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interlocking editorship network analysis", "interlock"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  CLI::App* cmd = app.add_subcommand("analyze", "Project affiliations and compute network measures");
  cmd->add_option("--input", a.input, "Affiliation CSV, degree-table CSV or NET file")->required();
  cmd->add_option("--format", a.format, "Input format (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "net"}));
  cmd->add_option("--slice", a.slices, "m-slice threshold (repeatable)")
      ->check(CLI::PositiveNumber)
      ->take_all();
  cmd->add_option("--closeness-variant", a.closeness,
                  "paper: r/sum d; component: scaled by r/(n-1) (default: paper)")
      ->check(CLI::IsMember({"paper", "component"}));
  cmd->add_option("--density-variant", a.density, "Which density fills 'density' (default: loops)")
      ->check(CLI::IsMember({"loops", "no-loops"}));
  cmd->add_option("--project", a.project, "Which one-mode projection to analyze")
      ->check(CLI::IsMember({"events", "actors"}));
  cmd->add_option("--out", a.out, "Write the JSON report here (default: standard output)");
  cmd->add_option("--export-net", a.export_net, "Write the one-mode network as NET");
  cmd->add_option("--export-csv", a.export_csv, "Write the one-mode network as an edge-list CSV");
  cmd->add_option("--export-dot", a.export_dot, "Write the one-mode network as DOT");
  cmd->add_flag("--tables", a.tables, "Print the plain-text tables to standard output");
  cmd->add_flag("--stats-only", a.stats_only, "Keep only the aggregate blocks");
  cmd->add_flag("--normalize-names", a.normalize_names, "Case-fold identifiers before matching");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return analyze(a, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAnalysis;
  }
}

}  // namespace interlock
