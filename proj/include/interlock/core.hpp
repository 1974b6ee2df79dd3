#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace interlock {

/// Raised for malformed identifiers, out-of-range vertices and other
/// violations of a documented precondition on domain values.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NameOptions {
  bool case_fold = false;
};

/// Trims surrounding whitespace and applies Unicode canonical composition
/// (NFC), optionally followed by case folding. Invalid UTF-8 is rejected.
std::string normalize_identifier(std::string_view raw, const NameOptions& opts = {});

/// An editor.
struct ActorId {
  std::string id;

  friend bool operator==(const ActorId&, const ActorId&) = default;
};

/// A journal. `label` is a display name; identity is `id` alone.
struct EventId {
  std::string id;
  std::optional<std::string> label;

  const std::string& display() const { return label ? *label : id; }

  friend bool operator==(const EventId&, const EventId&) = default;
};

struct AffiliationStats {
  std::size_t seats = 0;
  std::size_t actors = 0;
  std::size_t events = 0;
  double mean_seats_per_event = 0.0;
  double mean_participation_rate = 0.0;
};

/// Two-mode affiliation network: events (journals) holding boards of actors
/// (editors). Vertex order is ingestion order. Actors exist only through a
/// membership; events may have empty boards.
class TwoModeNetwork {
 public:
  TwoModeNetwork() = default;
  explicit TwoModeNetwork(NameOptions opts) : opts_(opts) {}

  /// Registers an event (possibly with an empty board). Returns its index.
  /// A label on an already known event replaces a missing one.
  std::size_t add_event(const EventId& event);

  /// Records `actor` on the board of `event`. Returns false when the pair
  /// was already present.
  bool add_affiliation(const EventId& event, const ActorId& actor);
  bool add_affiliation(std::string_view event, std::string_view actor) {
    return add_affiliation(EventId{std::string(event), std::nullopt}, ActorId{std::string(actor)});
  }

  std::size_t event_count() const { return events_.size(); }
  std::size_t actor_count() const { return actors_.size(); }
  std::size_t seat_count() const { return seats_; }

  const std::vector<EventId>& events() const { return events_; }
  const std::vector<ActorId>& actors() const { return actors_; }

  /// Actor indices on the board of event `e`, in insertion order.
  std::span<const std::size_t> members(std::size_t e) const;
  /// Event indices of actor `a`, in insertion order.
  std::span<const std::size_t> events_of(std::size_t a) const;

  std::optional<std::size_t> find_event(std::string_view id) const;
  std::optional<std::size_t> find_actor(std::string_view id) const;
  bool is_member(std::size_t e, std::size_t a) const;

  const NameOptions& name_options() const { return opts_; }

  friend bool operator==(const TwoModeNetwork& a, const TwoModeNetwork& b) {
    return a.events_ == b.events_ && a.actors_ == b.actors_ && a.members_ == b.members_;
  }

 private:
  static std::uint64_t pair_key(std::size_t e, std::size_t a) {
    return (static_cast<std::uint64_t>(e) << 32) | static_cast<std::uint64_t>(a);
  }

  NameOptions opts_;
  std::vector<EventId> events_;
  std::vector<ActorId> actors_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::vector<std::size_t>> events_of_;
  std::unordered_map<std::string, std::size_t> event_index_;
  std::unordered_map<std::string, std::size_t> actor_index_;
  std::unordered_set<std::uint64_t> pairs_;
  std::size_t seats_ = 0;
};

/// Value-returning form of TwoModeNetwork::add_affiliation.
TwoModeNetwork add_affiliation(TwoModeNetwork net, const EventId& event, const ActorId& actor);

AffiliationStats affiliation_stats(const TwoModeNetwork& net);

struct Vertex {
  std::string id;
  std::optional<std::string> label;

  const std::string& display() const { return label ? *label : id; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  int value = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  std::size_t vertex;
  int value;
};

/// Undirected valued graph. Edges are stored with u < v, sorted by (u, v).
/// Immutable after construction.
class OneModeNetwork {
 public:
  OneModeNetwork() = default;

  /// Throws ValidationError on self-loops, duplicate pairs, values < 1,
  /// endpoints out of range or duplicate vertex ids.
  OneModeNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

  /// Line value between u and v, 0 when not adjacent.
  int value(std::size_t u, std::size_t v) const;

  std::optional<std::size_t> find(std::string_view id) const;
  /// Like find() but throws std::domain_error for unknown ids.
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const OneModeNetwork& a, const OneModeNetwork& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Degree sequence in vertex order.
std::vector<std::size_t> degrees(const OneModeNetwork& net);

}  // namespace interlock
