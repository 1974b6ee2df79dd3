#include "interlock/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace interlock {

namespace {

const char* closeness_name(ClosenessVariant v) {
  return v == ClosenessVariant::kReachable ? "paper" : "component";
}

const char* density_name(DensityVariant v) {
  return v == DensityVariant::kLoopsAllowed ? "loops" : "no-loops";
}

std::vector<std::string> common_notes(const ReportOptions& opts) {
  return {
      std::string("density_loops_allowed = 2m/n^2 and density_no_loops = 2m/(n(n-1)) are both "
                  "reported; they differ by the factor (n-1)/n. 'density' repeats the ") +
          density_name(opts.density) + " variant.",
      "betweenness_centralization = sum(max_i B_i - B_i)/(n-1) over normalized betweenness "
      "scores; other centralization conventions give different values.",
      "closeness_centralization is computed on the largest connected subnetwork (k vertices) "
      "using closeness (k-1)/sum of distances.",
  };
}

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

// Columns are separated by two spaces; numeric columns are right-aligned.
class TextTable {
 public:
  TextTable(std::vector<std::string> header, std::vector<bool> numeric)
      : header_(std::move(header)), numeric_(std::move(numeric)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = display_width(header_[c]);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
    }
    std::ostringstream out;
    emit(out, header_, width);
    for (const auto& row : rows_) emit(out, row, width);
    return out.str();
  }

 private:
  // UTF-8 code points, so accented journal titles line up.
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  }

  void emit(std::ostringstream& out, const std::vector<std::string>& row,
            const std::vector<std::size_t>& width) const {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - display_width(row[c]), ' ');
      if (c > 0) line += "  ";
      line += numeric_[c] ? pad + row[c] : row[c] + pad;
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }

  std::vector<std::string> header_;
  std::vector<bool> numeric_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace

AnalysisReport build_report(const OneModeNetwork& net, const ReportOptions& opts,
                            std::optional<AffiliationStats> affiliation) {
  AnalysisReport report;
  report.source = affiliation ? "affiliations" : "one-mode";
  report.options = opts;
  report.affiliation = affiliation;

  MetricsReport metrics = compute_metrics(net, MetricsOptions{opts.closeness});
  report.aggregates = metrics.aggregates;
  report.vertices = std::move(metrics.vertices);
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    report.labels.push_back(std::to_string(v + 1));
    report.names.push_back(net.vertices()[v].display());
  }
  report.degree_distribution = degree_distribution(net);
  report.line_multiplicity = line_multiplicity_distribution(net);
  for (int m : opts.slices) report.slices.push_back(slice_decomposition(net, m));
  report.notes = common_notes(opts);
  return report;
}

AnalysisReport build_degree_report(const DegreeTable& table, const ReportOptions& opts) {
  if (!opts.slices.empty()) {
    throw std::domain_error("m-slices need line values; a degree table has none");
  }
  AnalysisReport report;
  report.source = "degree-table";
  report.options = opts;
  MetricsReport metrics = compute_degree_metrics(table.degrees);
  report.aggregates = metrics.aggregates;
  report.vertices = std::move(metrics.vertices);
  report.labels = table.labels;
  report.names = table.names;
  report.extra_columns = table.extra_columns;
  report.extra = table.extra;
  report.degree_distribution = degree_distribution(table.degrees);
  report.notes = common_notes(opts);
  report.notes.push_back(
      "input is a degree sequence: closeness, betweenness, components and line values need an "
      "edge list and are null.");
  return report;
}

nlohmann::ordered_json to_json(const AnalysisReport& report, bool stats_only) {
  using json = nlohmann::ordered_json;
  json out;
  out["schema"] = kReportSchema;
  out["source"] = report.source;

  json slices = json::array();
  for (int m : report.options.slices) slices.push_back(m);
  out["options"] = {{"closeness_variant", closeness_name(report.options.closeness)},
                    {"density_variant", density_name(report.options.density)},
                    {"slices", slices}};

  if (report.affiliation) {
    const AffiliationStats& a = *report.affiliation;
    out["affiliation"] = {{"seats", a.seats},
                          {"actors", a.actors},
                          {"events", a.events},
                          {"mean_seats_per_event", a.mean_seats_per_event},
                          {"mean_participation_rate", a.mean_participation_rate}};
  } else {
    out["affiliation"] = nullptr;
  }

  const NetworkAggregates& g = report.aggregates;
  out["aggregates"] = {
      {"n", g.n},
      {"m", g.m},
      {"density", report.options.density == DensityVariant::kLoopsAllowed ? g.density_loops_allowed
                                                                          : g.density_no_loops},
      {"density_loops_allowed", g.density_loops_allowed},
      {"density_no_loops", g.density_no_loops},
      {"mean_degree", g.mean_degree},
      {"median_degree", g.median_degree},
      {"sd_degree_population", g.sd_degree_population},
      {"degree_centralization", optional_json(g.degree_centralization)},
      {"betweenness_centralization", optional_json(g.betweenness_centralization)},
      {"closeness_centralization", optional_json(g.closeness_centralization)},
      {"component_count", optional_json(g.component_count)},
      {"largest_component_size", optional_json(g.largest_component_size)},
      {"isolate_count", g.isolate_count},
  };
  out["notes"] = report.notes;
  if (stats_only) return out;

  json vertices = json::array();
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    const VertexMetrics& v = report.vertices[i];
    json row = {
        {"label", report.labels[i]},
        {"name", report.names[i]},
        {"degree", v.degree},
        {"normalized_degree", v.normalized_degree},
        {"degree_rank", v.ranks.degree},
        {"closeness", optional_json(v.closeness)},
        {"closeness_rank", v.closeness ? json(v.ranks.closeness) : json(nullptr)},
        {"betweenness", optional_json(v.betweenness)},
        {"betweenness_rank", v.betweenness ? json(v.ranks.betweenness) : json(nullptr)},
    };
    if (!report.extra_columns.empty()) {
      json extra = json::object();
      for (std::size_t k = 0; k < report.extra_columns.size(); ++k) {
        extra[report.extra_columns[k]] = report.extra[i][k];
      }
      row["extra"] = extra;
    }
    vertices.push_back(std::move(row));
  }
  out["vertices"] = vertices;

  json dist = json::array();
  for (const DegreeRow& r : report.degree_distribution.rows) {
    dist.push_back({{"degree", r.degree},
                    {"frequency", r.frequency},
                    {"relative", r.relative},
                    {"cumulative", r.cumulative}});
  }
  out["degree_distribution"] = dist;

  if (report.line_multiplicity) {
    json rows = json::array();
    for (const MultiplicityRow& r : report.line_multiplicity->rows) {
      rows.push_back({{"value", r.value}, {"frequency", r.frequency}, {"relative", r.relative}});
    }
    out["line_multiplicity"] = {{"max_value", report.line_multiplicity->max_value},
                                {"total", report.line_multiplicity->total},
                                {"rows", rows}};
  } else {
    out["line_multiplicity"] = nullptr;
  }

  json slice_blocks = json::array();
  for (const SliceDecomposition& s : report.slices) {
    json comps = json::array();
    for (const ComponentSummary& c : s.components) {
      json members = json::array();
      for (std::size_t v : c.members) members.push_back(report.names[v]);
      comps.push_back({{"size", c.size},
                       {"edge_count", c.edge_count},
                       {"density", c.density},
                       {"members", members}});
    }
    slice_blocks.push_back(
        {{"threshold", s.threshold}, {"edge_count", s.sliced.edge_count()}, {"components", comps}});
  }
  out["slices"] = slice_blocks;
  return out;
}

std::string render_table(const AnalysisReport& report, TableKind which) {
  switch (which) {
    case TableKind::kDegreeDistribution: {
      TextTable t({"Degree", "Freq", "Freq%", "CumFreq"}, {true, true, true, true});
      for (const DegreeRow& r : report.degree_distribution.rows) {
        t.add({std::to_string(r.degree), std::to_string(r.frequency), fixed3(r.relative),
               fixed3(r.cumulative)});
      }
      return t.render();
    }
    case TableKind::kCentrality: {
      TextTable t({"Label", "Journal", "Degree", "NormDegree", "DegreeRank", "Closeness",
                   "ClosenessRank", "Betweenness", "BetweennessRank"},
                  {true, false, true, true, true, true, true, true, true});
      for (std::size_t i = 0; i < report.vertices.size(); ++i) {
        const VertexMetrics& v = report.vertices[i];
        t.add({report.labels[i], report.names[i], std::to_string(v.degree),
               fixed3(v.normalized_degree), std::to_string(v.ranks.degree),
               v.closeness ? fixed3(*v.closeness) : "-",
               v.closeness ? std::to_string(v.ranks.closeness) : "-",
               v.betweenness ? fixed3(*v.betweenness) : "-",
               v.betweenness ? std::to_string(v.ranks.betweenness) : "-"});
      }
      return t.render();
    }
    case TableKind::kLineMultiplicity: {
      TextTable t({"LineValue", "Freq", "Freq%"}, {true, true, true});
      if (report.line_multiplicity) {
        for (const MultiplicityRow& r : report.line_multiplicity->rows) {
          t.add({std::to_string(r.value), std::to_string(r.frequency), fixed3(r.relative)});
        }
      }
      return t.render();
    }
  }
  return {};
}

std::string render_slices(const AnalysisReport& report) {
  std::ostringstream out;
  for (const SliceDecomposition& s : report.slices) {
    out << s.threshold << "-slice: " << s.sliced.edge_count() << " lines, " << s.components.size()
        << " weak components\n";
    TextTable t({"Size", "Lines", "Density", "Members"}, {true, true, true, false});
    for (const ComponentSummary& c : s.components) {
      std::string members;
      for (std::size_t v : c.members) members += (members.empty() ? "" : "; ") + report.names[v];
      t.add({std::to_string(c.size), std::to_string(c.edge_count), fixed3(c.density), members});
    }
    out << t.render();
  }
  return out.str();
}

}  // namespace interlock
