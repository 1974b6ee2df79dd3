#include "interlock/core.hpp"

#include <algorithm>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>

namespace interlock {

std::string normalize_identifier(std::string_view raw, const NameOptions& opts) {
  UErrorCode status = U_ZERO_ERROR;
  int32_t needed = 0;
  u_strFromUTF8(nullptr, 0, &needed, raw.data(), static_cast<int32_t>(raw.size()), &status);
  if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
    throw ValidationError("identifier is not valid UTF-8");
  }

  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  text.trim();
  if (opts.case_fold) text.foldCase();

  status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
  icu::UnicodeString composed = nfc->normalize(text, status);
  if (U_FAILURE(status)) throw ValidationError("identifier could not be normalized");

  std::string out;
  composed.toUTF8String(out);
  if (out.empty()) throw ValidationError("identifier is empty");
  return out;
}

// --- TwoModeNetwork -------------------------------------------------------

std::size_t TwoModeNetwork::add_event(const EventId& event) {
  std::string id = normalize_identifier(event.id, opts_);
  std::optional<std::string> label;
  if (event.label) {
    std::string trimmed = normalize_identifier(*event.label, NameOptions{});
    label = std::move(trimmed);
  }
  if (auto it = event_index_.find(id); it != event_index_.end()) {
    if (label && !events_[it->second].label) events_[it->second].label = std::move(label);
    return it->second;
  }
  const std::size_t index = events_.size();
  event_index_.emplace(id, index);
  events_.push_back(EventId{std::move(id), std::move(label)});
  members_.emplace_back();
  return index;
}

bool TwoModeNetwork::add_affiliation(const EventId& event, const ActorId& actor) {
  // Normalize the actor before touching any state so a bad actor leaves no
  // half-registered event behind.
  std::string actor_key = normalize_identifier(actor.id, opts_);
  normalize_identifier(event.id, opts_);

  const std::size_t e = add_event(event);
  std::size_t a;
  if (auto it = actor_index_.find(actor_key); it != actor_index_.end()) {
    a = it->second;
  } else {
    a = actors_.size();
    actor_index_.emplace(actor_key, a);
    actors_.push_back(ActorId{std::move(actor_key)});
    events_of_.emplace_back();
  }
  if (!pairs_.insert(pair_key(e, a)).second) return false;
  members_[e].push_back(a);
  events_of_[a].push_back(e);
  ++seats_;
  return true;
}

std::span<const std::size_t> TwoModeNetwork::members(std::size_t e) const {
  if (e >= members_.size()) throw std::domain_error("event index out of range");
  return members_[e];
}

std::span<const std::size_t> TwoModeNetwork::events_of(std::size_t a) const {
  if (a >= events_of_.size()) throw std::domain_error("actor index out of range");
  return events_of_[a];
}

std::optional<std::size_t> TwoModeNetwork::find_event(std::string_view id) const {
  auto it = event_index_.find(normalize_identifier(id, opts_));
  if (it == event_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TwoModeNetwork::find_actor(std::string_view id) const {
  auto it = actor_index_.find(normalize_identifier(id, opts_));
  if (it == actor_index_.end()) return std::nullopt;
  return it->second;
}

bool TwoModeNetwork::is_member(std::size_t e, std::size_t a) const {
  return pairs_.contains(pair_key(e, a));
}

TwoModeNetwork add_affiliation(TwoModeNetwork net, const EventId& event, const ActorId& actor) {
  net.add_affiliation(event, actor);
  return net;
}

AffiliationStats affiliation_stats(const TwoModeNetwork& net) {
  AffiliationStats s;
  s.seats = net.seat_count();
  s.actors = net.actor_count();
  s.events = net.event_count();
  if (s.events > 0) s.mean_seats_per_event = static_cast<double>(s.seats) / static_cast<double>(s.events);
  if (s.actors > 0) s.mean_participation_rate = static_cast<double>(s.seats) / static_cast<double>(s.actors);
  return s;
}

// --- OneModeNetwork -------------------------------------------------------

OneModeNetwork::OneModeNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i].id.empty()) throw ValidationError("vertex id is empty");
    if (!index_.emplace(vertices_[i].id, i).second) {
      throw ValidationError("duplicate vertex id: " + vertices_[i].id);
    }
  }
  for (Edge& e : edges_) {
    if (e.u >= n || e.v >= n) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("self-loop on vertex " + vertices_[e.u].id);
    if (e.value < 1) throw ValidationError("edge value must be >= 1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(),
                                [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; });
  if (dup != edges_.end()) {
    throw ValidationError("duplicate edge " + vertices_[dup->u].id + " -- " + vertices_[dup->v].id);
  }

  adjacency_.resize(n);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.value});
    adjacency_[e.v].push_back({e.u, e.value});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::span<const Neighbor> OneModeNetwork::neighbors(std::size_t v) const {
  if (v >= adjacency_.size()) throw std::domain_error("vertex index out of range");
  return adjacency_[v];
}

int OneModeNetwork::value(std::size_t u, std::size_t v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& nb, std::size_t x) { return nb.vertex < x; });
  return (it != list.end() && it->vertex == v) ? it->value : 0;
}

std::optional<std::size_t> OneModeNetwork::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OneModeNetwork::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw std::domain_error("unknown vertex: " + std::string(id));
}

std::vector<std::size_t> degrees(const OneModeNetwork& net) {
  std::vector<std::size_t> out(net.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = net.degree(v);
  return out;
}

}  // namespace interlock
