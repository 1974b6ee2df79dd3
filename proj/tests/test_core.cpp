#include <doctest.h>

#include <random>

#include "interlock/core.hpp"
#include "oracles.hpp"

using namespace interlock;

TEST_CASE("add_affiliation records each membership once") {
  TwoModeNetwork net;
  CHECK(net.add_affiliation("J1", "a"));
  CHECK(net.event_count() == 1);
  CHECK(net.actor_count() == 1);
  CHECK(net.seat_count() == 1);

  CHECK_FALSE(net.add_affiliation("J1", "a"));
  CHECK(net.seat_count() == 1);

  net.add_affiliation("J1", "b");
  net.add_affiliation("J2", "b");
  CHECK(net.event_count() == 2);
  CHECK(net.actor_count() == 2);
  CHECK(net.seat_count() == 3);
}

TEST_CASE("value-returning add_affiliation leaves the input untouched") {
  const TwoModeNetwork empty;
  const TwoModeNetwork one = add_affiliation(empty, EventId{"J1", std::nullopt}, ActorId{"a"});
  CHECK(empty.seat_count() == 0);
  CHECK(one.seat_count() == 1);
  CHECK(add_affiliation(one, EventId{"J1", std::nullopt}, ActorId{"a"}) == one);
}

TEST_CASE("empty identifiers are rejected without side effects") {
  TwoModeNetwork net;
  CHECK_THROWS_AS(net.add_affiliation("J1", "   "), ValidationError);
  CHECK_THROWS_AS(net.add_affiliation("", "a"), ValidationError);
  CHECK(net.event_count() == 0);
  CHECK(net.actor_count() == 0);
}

TEST_CASE("identifiers are trimmed and composed") {
  CHECK(normalize_identifier("  Smith, J.\t") == "Smith, J.");
  // "e" + combining acute accent composes to U+00E9.
  CHECK(normalize_identifier("Jose\xCC\x81") == "Jos\xC3\xA9");
  CHECK(normalize_identifier("Jos\xC3\xA9") == "Jos\xC3\xA9");
  CHECK(normalize_identifier("Smith", {.case_fold = true}) == "smith");
  CHECK_THROWS_AS(normalize_identifier("\xFF\xFE"), ValidationError);

  TwoModeNetwork net;
  net.add_affiliation("J1", "Jose\xCC\x81");
  net.add_affiliation("J2", " Jos\xC3\xA9 ");
  CHECK(net.actor_count() == 1);

  TwoModeNetwork exact;
  exact.add_affiliation("J1", "Smith");
  exact.add_affiliation("J1", "SMITH");
  CHECK(exact.actor_count() == 2);

  TwoModeNetwork folded({.case_fold = true});
  folded.add_affiliation("J1", "Smith");
  folded.add_affiliation("J1", "SMITH");
  CHECK(folded.actor_count() == 1);
}

TEST_CASE("events may have empty boards") {
  TwoModeNetwork net;
  net.add_event({"ITAL", std::string("Information Technology and Libraries")});
  net.add_affiliation("J1", "a");
  CHECK(net.event_count() == 2);
  CHECK(net.members(0).empty());
  CHECK(net.events()[0].display() == "Information Technology and Libraries");
}

TEST_CASE("affiliation_stats") {
  SUBCASE("empty network") {
    const auto s = affiliation_stats(TwoModeNetwork{});
    CHECK(s.seats == 0);
    CHECK(s.actors == 0);
    CHECK(s.events == 0);
    CHECK(s.mean_seats_per_event == 0.0);
    CHECK(s.mean_participation_rate == 0.0);
  }
  SUBCASE("J1={a,b}, J2={b}") {
    TwoModeNetwork net;
    net.add_affiliation("J1", "a");
    net.add_affiliation("J1", "b");
    net.add_affiliation("J2", "b");
    const auto s = affiliation_stats(net);
    CHECK(s.seats == 3);
    CHECK(s.actors == 2);
    CHECK(s.events == 2);
    CHECK(s.mean_seats_per_event == doctest::Approx(1.5));
    CHECK(s.mean_participation_rate == doctest::Approx(1.5));
  }
  SUBCASE("reported seat counts give the reported ratios") {
    // 2003 seats, 1752 scholars, 61 journals.
    CHECK(2003.0 / 61.0 == doctest::Approx(32.8).epsilon(0.002));
    CHECK(2003.0 / 1752.0 == doctest::Approx(1.14).epsilon(0.005));
  }
}

TEST_CASE("membership lookup is symmetric and seats count both ways") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto boards = oracle::random_boards(rng, 8, 12);
    TwoModeNetwork net;
    for (const auto& e : boards.events) net.add_event({e, std::nullopt});
    for (const auto& [e, a] : boards.rows) net.add_affiliation(e, a);

    std::size_t by_event = 0, by_actor = 0;
    for (std::size_t e = 0; e < net.event_count(); ++e) {
      by_event += net.members(e).size();
      for (std::size_t a = 0; a < net.actor_count(); ++a) {
        const auto m = net.members(e);
        const auto ev = net.events_of(a);
        const bool in_members = std::find(m.begin(), m.end(), a) != m.end();
        const bool in_events = std::find(ev.begin(), ev.end(), e) != ev.end();
        REQUIRE(in_members == in_events);
        REQUIRE(in_members == net.is_member(e, a));
      }
    }
    for (std::size_t a = 0; a < net.actor_count(); ++a) {
      by_actor += net.events_of(a).size();
      REQUIRE_FALSE(net.events_of(a).empty());
    }
    REQUIRE(by_event == net.seat_count());
    REQUIRE(by_actor == net.seat_count());
  }
}

TEST_CASE("OneModeNetwork validates its edges") {
  std::vector<Vertex> v{{"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt}};
  CHECK_THROWS_AS(OneModeNetwork(v, {{0, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(OneModeNetwork(v, {{0, 1, 1}, {1, 0, 2}}), ValidationError);
  CHECK_THROWS_AS(OneModeNetwork(v, {{0, 1, 0}}), ValidationError);
  CHECK_THROWS_AS(OneModeNetwork(v, {{0, 3, 1}}), ValidationError);
  CHECK_THROWS_AS(OneModeNetwork({{"a", {}}, {"a", {}}}, {}), ValidationError);

  const OneModeNetwork net(v, {{2, 0, 4}, {1, 0, 1}});
  REQUIRE(net.edge_count() == 2);
  CHECK(net.edges()[0] == Edge{0, 1, 1});
  CHECK(net.edges()[1] == Edge{0, 2, 4});
  CHECK(net.value(2, 0) == 4);
  CHECK(net.value(1, 2) == 0);
  CHECK(net.index_of("c") == 2);
  CHECK_THROWS_AS(net.index_of("zz"), std::domain_error);
}

TEST_CASE("handshake identity on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = oracle::random_graph(rng, 1 + trial % 12, 0.4);
    const auto d = degrees(net);
    std::size_t sum = 0;
    for (auto x : d) sum += x;
    REQUIRE(sum == 2 * net.edge_count());
  }
}
