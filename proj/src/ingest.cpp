#include "interlock/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace interlock {

namespace {

// --- CSV ------------------------------------------------------------------

struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
  bool blank = false;
};

// RFC 4180 style reader: double quotes delimit fields, "" escapes a quote,
// quoted fields may span lines. Accepts \n and \r\n terminators.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  std::optional<CsvRecord> next() {
    if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;
    CsvRecord rec;
    rec.line = line_;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    bool any = false;
    int c;
    while ((c = in_.get()) != std::char_traits<char>::eof()) {
      any = true;
      const char ch = static_cast<char>(c);
      if (quoted) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
        continue;
      }
      if (ch == '"') {
        const bool blank_so_far = std::all_of(field.begin(), field.end(),
                                              [](char x) { return x == ' ' || x == '\t'; });
        if (!blank_so_far) {
          throw ParseError(line_, "stray quote inside unquoted field");
        }
        field.clear();
        quoted = true;
        was_quoted = true;
      } else if (ch == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (ch == '\n') {
        ++line_;
        break;
      } else if (ch == '\r' && in_.peek() == '\n') {
        continue;
      } else {
        if (was_quoted && ch != ' ' && ch != '\t') {
          throw ParseError(line_, "text after closing quote");
        }
        if (!was_quoted) field.push_back(ch);
      }
    }
    if (quoted) throw ParseError(rec.line, "unterminated quoted field");
    rec.fields.push_back(std::move(field));
    rec.blank = any && rec.fields.size() == 1 && rec.fields[0].empty() && !was_quoted;
    if (!any) return std::nullopt;
    return rec;
  }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

std::string lower_trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  std::string out = b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void skip_bom(std::istream& in) {
  if (in.peek() != 0xEF) return;
  char bom[3];
  in.read(bom, 3);
  if (!(static_cast<unsigned char>(bom[1]) == 0xBB && static_cast<unsigned char>(bom[2]) == 0xBF)) {
    throw ParseError(1, "input is not UTF-8 text");
  }
}

std::vector<std::string> header_names(const CsvRecord& header) {
  std::vector<std::string> names;
  for (const auto& f : header.fields) names.push_back(lower_trim(f));
  return names;
}

std::optional<std::size_t> column(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

std::optional<CsvRecord> next_nonblank(CsvReader& reader) {
  while (auto rec = reader.next()) {
    if (!rec->blank) return rec;
  }
  return std::nullopt;
}

// --- NET ------------------------------------------------------------------

struct NetLine {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<NetLine> net_lines(std::istream& in) {
  skip_bom(in);
  std::vector<NetLine> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '%') continue;
    out.push_back({number, std::move(t)});
  }
  return out;
}

bool keyword_is(const std::string& line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[i])) != keyword[i]) return false;
  }
  return line.size() == keyword.size() || line[keyword.size()] == ' ' || line[keyword.size()] == '\t';
}

class Tokens {
 public:
  Tokens(const NetLine& line) : line_(line), text_(line.text) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string word() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(line_.number, "unexpected end of line");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t index() {
    const std::string w = word();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      throw ParseError(line_.number, "expected a non-negative integer, got '" + w + "'");
    }
    return value;
  }

  // A double-quoted label with \" and \\ escapes, or a bare token.
  std::string label() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(line_.number, "missing vertex label");
    if (text_[pos_] != '"') return word();
    ++pos_;
    std::string out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (c == '\\' && pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\\')) {
        out.push_back(text_[pos_++]);
      } else if (c == '"') {
        return out;
      } else {
        out.push_back(c);
      }
    }
    throw ParseError(line_.number, "unterminated quoted label");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  const NetLine& line_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

struct NetDocument {
  std::size_t vertex_count = 0;
  std::optional<std::size_t> partition;
  std::vector<std::string> labels;
  std::vector<std::size_t> label_lines;
  struct Link {
    std::size_t line;
    std::size_t a;
    std::size_t b;
    std::optional<std::size_t> value;
  };
  std::vector<Link> links;
};

NetDocument read_net(std::istream& in) {
  const auto lines = net_lines(in);
  if (lines.empty()) throw ParseError(1, "missing *Vertices line");
  NetDocument doc;

  std::size_t i = 0;
  {
    const NetLine& first = lines[i++];
    if (!keyword_is(first.text, "*vertices")) {
      throw ParseError(first.number, "expected *Vertices");
    }
    Tokens tok(first);
    tok.word();
    doc.vertex_count = tok.index();
    if (!tok.done()) doc.partition = tok.index();
    if (!tok.done()) throw ParseError(first.number, "unexpected text after *Vertices counts");
    if (doc.partition && *doc.partition > doc.vertex_count) {
      throw ParseError(first.number, "partition size exceeds vertex count");
    }
  }
  doc.labels.resize(doc.vertex_count);
  doc.label_lines.resize(doc.vertex_count, 0);
  for (std::size_t v = 0; v < doc.vertex_count; ++v) doc.labels[v] = std::to_string(v + 1);

  for (; i < lines.size() && lines[i].text[0] != '*'; ++i) {
    Tokens tok(lines[i]);
    const std::size_t index = tok.index();
    if (index < 1 || index > doc.vertex_count) {
      throw ParseError(lines[i].number, "vertex index " + std::to_string(index) + " out of range");
    }
    if (doc.label_lines[index - 1] != 0) {
      throw ParseError(lines[i].number, "vertex " + std::to_string(index) + " declared twice");
    }
    doc.labels[index - 1] = tok.label();
    doc.label_lines[index - 1] = lines[i].number;
  }

  bool in_links = false;
  for (; i < lines.size(); ++i) {
    const NetLine& line = lines[i];
    if (line.text[0] == '*') {
      if (keyword_is(line.text, "*edges") || keyword_is(line.text, "*arcs")) {
        in_links = true;
        continue;
      }
      throw ParseError(line.number, "unsupported section " + Tokens(line).word());
    }
    if (!in_links) throw ParseError(line.number, "data outside of a section");
    Tokens tok(line);
    NetDocument::Link link{line.number, tok.index(), tok.index(), std::nullopt};
    if (!tok.done()) link.value = tok.index();
    for (std::size_t endpoint : {link.a, link.b}) {
      if (endpoint < 1 || endpoint > doc.vertex_count) {
        throw ParseError(line.number, "vertex index " + std::to_string(endpoint) + " out of range");
      }
    }
    doc.links.push_back(link);
  }
  return doc;
}

std::string net_quote(std::string_view label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string dot_quote(std::string_view id) { return net_quote(id); }

template <typename Fn>
std::string to_string_via(Fn&& fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}

}  // namespace

// --- public API -----------------------------------------------------------

std::string csv_escape(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

AffiliationParse parse_csv_affiliations(std::istream& in, const NameOptions& opts) {
  skip_bom(in);
  CsvReader reader(in);
  AffiliationParse result{TwoModeNetwork(opts), {}};

  auto header = next_nonblank(reader);
  if (!header) throw ParseError(1, "missing header 'actor,event'");
  const auto names = header_names(*header);
  const auto actor_col = column(names, "actor");
  const auto event_col = column(names, "event");
  if (names.size() != 2 || !actor_col || !event_col) {
    throw ParseError(header->line, "header must name exactly the columns 'actor' and 'event'");
  }

  while (auto rec = next_nonblank(reader)) {
    if (rec->fields.size() != 2) {
      throw ParseError(rec->line, "expected 2 fields, found " + std::to_string(rec->fields.size()));
    }
    ++result.diagnostics.records_read;
    bool inserted;
    try {
      inserted = result.network.add_affiliation(rec->fields[*event_col], rec->fields[*actor_col]);
    } catch (const ValidationError& e) {
      throw ParseError(rec->line, e.what());
    }
    if (!inserted) {
      ++result.diagnostics.duplicates_collapsed;
      result.diagnostics.warnings.push_back({rec->line, "duplicate affiliation collapsed"});
    }
  }
  return result;
}

AffiliationParse parse_csv_affiliations(std::string_view text, const NameOptions& opts) {
  std::istringstream in{std::string(text)};
  return parse_csv_affiliations(in, opts);
}

AffiliationParse parse_net_two_mode(std::istream& in, const NameOptions& opts) {
  const NetDocument doc = read_net(in);
  if (!doc.partition) throw ParseError(1, "*Vertices line does not declare a two-mode partition");
  const std::size_t n_events = *doc.partition;

  AffiliationParse result{TwoModeNetwork(opts), {}};
  TwoModeNetwork& net = result.network;
  for (std::size_t v = 0; v < n_events; ++v) {
    const std::size_t line = doc.label_lines[v] ? doc.label_lines[v] : 1;
    try {
      if (net.add_event(EventId{doc.labels[v], std::nullopt}) != v) {
        throw ParseError(line, "duplicate event label '" + doc.labels[v] + "'");
      }
    } catch (const ValidationError& e) {
      throw ParseError(line, e.what());
    }
  }

  // Distinct NET vertices must stay distinct actors.
  std::map<std::string, std::size_t> actor_vertex;
  for (const auto& link : doc.links) {
    const bool a_event = link.a <= n_events;
    const bool b_event = link.b <= n_events;
    if (a_event == b_event) {
      throw ParseError(link.line, a_event ? "edge joins two events" : "edge joins two actors");
    }
    const std::size_t event = (a_event ? link.a : link.b) - 1;
    const std::size_t actor = (a_event ? link.b : link.a) - 1;
    ++result.diagnostics.records_read;
    try {
      const std::string key = normalize_identifier(doc.labels[actor], opts);
      auto [it, fresh] = actor_vertex.emplace(key, actor);
      if (!fresh && it->second != actor) {
        throw ParseError(link.line, "duplicate actor label '" + doc.labels[actor] + "'");
      }
      if (!net.add_affiliation(EventId{net.events()[event].id, std::nullopt},
                               ActorId{doc.labels[actor]})) {
        ++result.diagnostics.duplicates_collapsed;
        result.diagnostics.warnings.push_back({link.line, "duplicate affiliation collapsed"});
      }
    } catch (const ValidationError& e) {
      throw ParseError(link.line, e.what());
    }
  }
  for (std::size_t v = n_events; v < doc.vertex_count; ++v) {
    if (!actor_vertex.contains(normalize_identifier(doc.labels[v], opts))) {
      const std::size_t line = doc.label_lines[v] ? doc.label_lines[v] : 1;
      result.diagnostics.warnings.push_back(
          {line, "actor vertex " + std::to_string(v + 1) + " has no affiliation; dropped"});
    }
  }
  return result;
}

AffiliationParse parse_net_two_mode(std::string_view text, const NameOptions& opts) {
  std::istringstream in{std::string(text)};
  return parse_net_two_mode(in, opts);
}

OneModeNetwork parse_net_one_mode(std::istream& in) {
  const NetDocument doc = read_net(in);
  if (doc.partition) throw ParseError(1, "expected a one-mode *Vertices line");

  std::vector<Vertex> vertices;
  std::map<std::string, std::size_t> seen;
  for (std::size_t v = 0; v < doc.vertex_count; ++v) {
    const std::size_t line = doc.label_lines[v] ? doc.label_lines[v] : 1;
    if (doc.labels[v].empty()) throw ParseError(line, "empty vertex label");
    if (!seen.emplace(doc.labels[v], v).second) {
      throw ParseError(line, "duplicate vertex label '" + doc.labels[v] + "'");
    }
    vertices.push_back({doc.labels[v], std::nullopt});
  }

  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_line;
  for (const auto& link : doc.links) {
    if (link.a == link.b) throw ParseError(link.line, "self-loop");
    const std::pair<std::size_t, std::size_t> key{std::min(link.a, link.b) - 1,
                                                  std::max(link.a, link.b) - 1};
    if (!pair_line.emplace(key, link.line).second) {
      throw ParseError(link.line, "duplicate edge");
    }
    const std::size_t value = link.value.value_or(1);
    if (value < 1 || value > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
      throw ParseError(link.line, "line value must be a positive integer");
    }
    edges.push_back({key.first, key.second, static_cast<int>(value)});
  }
  return OneModeNetwork(std::move(vertices), std::move(edges));
}

OneModeNetwork parse_net_one_mode(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_net_one_mode(in);
}

bool is_two_mode_net(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (const NetLine& line : net_lines(in)) {
    if (!keyword_is(line.text, "*vertices")) return false;
    Tokens tok(line);
    tok.word();
    tok.word();
    return !tok.done();
  }
  return false;
}

void write_net_one_mode(const OneModeNetwork& net, std::ostream& out) {
  out << "*Vertices " << net.vertex_count() << '\n';
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    out << v + 1 << ' ' << net_quote(net.vertices()[v].display()) << '\n';
  }
  out << "*Edges\n";
  for (const Edge& e : net.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.value << '\n';
}

std::string write_net_one_mode(const OneModeNetwork& net) {
  return to_string_via([&](std::ostream& o) { write_net_one_mode(net, o); });
}

void write_edge_list_csv(const OneModeNetwork& net, std::ostream& out) {
  out << "source,target,value\n";
  for (const Edge& e : net.edges()) {
    out << csv_escape(net.vertices()[e.u].display()) << ','
        << csv_escape(net.vertices()[e.v].display()) << ',' << e.value << '\n';
  }
}

std::string write_edge_list_csv(const OneModeNetwork& net) {
  return to_string_via([&](std::ostream& o) { write_edge_list_csv(net, o); });
}

void write_dot(const OneModeNetwork& net, std::ostream& out) {
  out << "graph interlock {\n";
  for (const Vertex& v : net.vertices()) out << "  " << dot_quote(v.display()) << ";\n";
  for (const Edge& e : net.edges()) {
    out << "  " << dot_quote(net.vertices()[e.u].display()) << " -- "
        << dot_quote(net.vertices()[e.v].display()) << " [weight=" << e.value
        << ", label=\"" << e.value << "\"];\n";
  }
  out << "}\n";
}

std::string write_dot(const OneModeNetwork& net) {
  return to_string_via([&](std::ostream& o) { write_dot(net, o); });
}

DegreeTable parse_degree_table(std::istream& in) {
  skip_bom(in);
  CsvReader reader(in);
  auto header = next_nonblank(reader);
  if (!header) throw ParseError(1, "missing header");
  const auto names = header_names(*header);
  const auto name_col = column(names, "journal");
  const auto degree_col = column(names, "degree");
  const auto label_col = column(names, "label");
  if (!name_col || !degree_col) {
    throw ParseError(header->line, "header must name the columns 'journal' and 'degree'");
  }

  DegreeTable table;
  std::vector<std::size_t> extra_idx;
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (c == *name_col || c == *degree_col || (label_col && c == *label_col)) continue;
    if (names[c].empty()) throw ParseError(header->line, "empty column name");
    extra_idx.push_back(c);
    table.extra_columns.push_back(names[c]);
  }

  while (auto rec = next_nonblank(reader)) {
    if (rec->fields.size() != names.size()) {
      throw ParseError(rec->line, "expected " + std::to_string(names.size()) + " fields, found " +
                                      std::to_string(rec->fields.size()));
    }
    const std::string raw = trim(rec->fields[*degree_col]);
    std::size_t degree = 0;
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), degree);
    if (raw.empty() || ec != std::errc() || ptr != raw.data() + raw.size()) {
      throw ParseError(rec->line, "degree must be a non-negative integer, got '" + raw + "'");
    }
    std::string name = trim(rec->fields[*name_col]);
    if (name.empty()) throw ParseError(rec->line, "empty journal name");
    table.names.push_back(std::move(name));
    table.labels.push_back(label_col ? trim(rec->fields[*label_col])
                                     : std::to_string(table.names.size()));
    table.degrees.push_back(degree);
    std::vector<std::string> row;
    for (std::size_t c : extra_idx) row.push_back(trim(rec->fields[c]));
    table.extra.push_back(std::move(row));
  }
  return table;
}

DegreeTable parse_degree_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_degree_table(in);
}

CsvKind detect_csv_kind(std::string_view text) {
  std::istringstream in{std::string(text)};
  try {
    skip_bom(in);
    CsvReader reader(in);
    auto header = next_nonblank(reader);
    if (!header) return CsvKind::kUnknown;
    const auto names = header_names(*header);
    if (column(names, "actor") && column(names, "event")) return CsvKind::kAffiliations;
    if (column(names, "journal") && column(names, "degree")) return CsvKind::kDegreeTable;
  } catch (const ParseError&) {
  }
  return CsvKind::kUnknown;
}

}  // namespace interlock
