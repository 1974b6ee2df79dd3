#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "interlock/core.hpp"

namespace interlock {

/// A rejected input. `line()` is the 1-based line the problem was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseWarning {
  std::size_t line;
  std::string message;
};

struct ParseDiagnostics {
  std::vector<ParseWarning> warnings;
  std::size_t records_read = 0;
  std::size_t duplicates_collapsed = 0;
};

struct AffiliationParse {
  TwoModeNetwork network;
  ParseDiagnostics diagnostics;
};

/// Reads `actor,event` rows (column order taken from the header).
AffiliationParse parse_csv_affiliations(std::istream& in, const NameOptions& opts = {});
AffiliationParse parse_csv_affiliations(std::string_view text, const NameOptions& opts = {});

/// Reads a two-mode NET file: `*Vertices n n_events`, events first.
AffiliationParse parse_net_two_mode(std::istream& in, const NameOptions& opts = {});
AffiliationParse parse_net_two_mode(std::string_view text, const NameOptions& opts = {});

/// Reads a one-mode NET file as produced by write_net_one_mode. Vertex ids
/// are the labels; a missing line value defaults to 1.
OneModeNetwork parse_net_one_mode(std::istream& in);
OneModeNetwork parse_net_one_mode(std::string_view text);

/// True when the first `*Vertices` line declares a two-mode partition.
bool is_two_mode_net(std::string_view text);

void write_net_one_mode(const OneModeNetwork& net, std::ostream& out);
std::string write_net_one_mode(const OneModeNetwork& net);

void write_edge_list_csv(const OneModeNetwork& net, std::ostream& out);
std::string write_edge_list_csv(const OneModeNetwork& net);

void write_dot(const OneModeNetwork& net, std::ostream& out);
std::string write_dot(const OneModeNetwork& net);

/// Per-vertex degrees without an edge list, e.g. a transcribed centrality
/// table. Columns other than label/journal/degree are carried through.
struct DegreeTable {
  std::vector<std::string> labels;
  std::vector<std::string> names;
  std::vector<std::size_t> degrees;
  std::vector<std::string> extra_columns;
  /// extra[i][k] is row i's value for extra_columns[k].
  std::vector<std::vector<std::string>> extra;
};

/// Header must name `journal` and `degree`; `label` is optional.
DegreeTable parse_degree_table(std::istream& in);
DegreeTable parse_degree_table(std::string_view text);

enum class CsvKind { kAffiliations, kDegreeTable, kUnknown };

/// Classifies a CSV document by its header row.
CsvKind detect_csv_kind(std::string_view text);

/// Quotes a CSV field when it holds a comma, quote, line break or
/// surrounding whitespace.
std::string csv_escape(std::string_view field);

}  // namespace interlock
