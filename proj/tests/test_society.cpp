#include <doctest.h>

#include "helpers.hpp"
#include "socsim/error.hpp"
#include "socsim/io.hpp"
#include "socsim/snapshot.hpp"

using namespace socsim;

namespace {

InteractionEvent ev(const std::string& a, const std::string& b, Timestamp t, double c = 1.0,
                    InteractionKind kind = InteractionKind::FriendRequest) {
    InteractionEvent e;
    e.initiator = a;
    e.receiver = b;
    e.kind = kind;
    e.time = t;
    e.strength = c;
    return e;
}

} // namespace

TEST_CASE("streaming ingest appends and validates") {
    InteractionLog log;
    log.append(ev("a", "b", 5));
    CHECK(log.size() == 1);

    SUBCASE("out-of-order append is rejected") {
        log.append(ev("a", "b", 10));
        CHECK_THROWS_AS(log.append(ev("a", "b", 3)), Error);
        try {
            log.append(ev("a", "b", 3));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::OrderViolation);
        }
    }
    SUBCASE("negative strength") {
        CHECK_THROWS_AS(log.append(ev("a", "b", 6, -1.0)), Error);
    }
    SUBCASE("self loop") {
        CHECK_THROWS_AS(log.append(ev("a", "a", 6)), Error);
    }
}

TEST_CASE("bulk load sorts stably") {
    InteractionLog log;
    log.bulk_load({ev("c", "d", 9), ev("a", "b", 1), ev("b", "c", 5)});
    REQUIRE(log.size() == 3);
    CHECK(log.events()[0].time == 1);
    CHECK(log.events()[1].time == 5);
    CHECK(log.events()[2].time == 9);

    // ties ordered by (initiator, receiver, kind)
    InteractionLog tied;
    tied.bulk_load({ev("b", "a", 4), ev("a", "b", 4), ev("a", "b", 4, 1.0, InteractionKind::GroupPost)});
    CHECK(tied.events()[0].initiator == "a");
    CHECK(tied.events()[0].kind == InteractionKind::FriendRequest);
    CHECK(tied.events()[1].kind == InteractionKind::GroupPost);
    CHECK(tied.events()[2].initiator == "b");
}

TEST_CASE("window selection uses half-open bounds") {
    InteractionLog log;
    log.bulk_load({ev("a", "b", 1), ev("a", "b", 5), ev("a", "b", 9)});

    auto w1 = log.window({0, 6});
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].time == 1);
    CHECK(w1[1].time == 5);

    auto w2 = log.window({9, 10});
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].time == 9);

    CHECK(log.window({100, 200}).empty());
}

TEST_CASE("window concatenation matches a single larger window") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<InteractionEvent> events;
        const int n = 30;
        for (int i = 0; i < n; ++i)
            events.push_back(ev(testing::node_name(static_cast<int>(rng.below(5))),
                                testing::node_name(5 + static_cast<int>(rng.below(5))),
                                static_cast<Timestamp>(rng.below(100))));
        InteractionLog log;
        log.bulk_load(events);

        Timestamp t0 = static_cast<Timestamp>(rng.below(30));
        Timestamp t1 = t0 + 1 + static_cast<Timestamp>(rng.below(30));
        Timestamp t2 = t1 + 1 + static_cast<Timestamp>(rng.below(40));

        auto whole = log.window({t0, t2});
        auto first = log.window({t0, t1});
        auto second = log.window({t1, t2});
        REQUIRE(whole.size() == first.size() + second.size());
        for (std::size_t i = 0; i < first.size(); ++i) CHECK(whole[i].time == first[i].time);
        for (std::size_t i = 0; i < second.size(); ++i)
            CHECK(whole[first.size() + i].time == second[i].time);
    }
}

TEST_CASE("entity events filter by participation") {
    InteractionLog log;
    log.bulk_load({ev("a", "b", 1), ev("b", "c", 2), ev("c", "d", 3)});
    auto b = log.entity_events("b");
    REQUIRE(b.size() == 2);
    CHECK(b[0].initiator == "a");
    CHECK(b[1].initiator == "b");

    CHECK(log.entity_events("zz").empty());

    InteractionLog dup;
    dup.bulk_load({ev("a", "b", 1), ev("a", "b", 2)});
    CHECK(dup.entity_events("a").size() == 2);
}

TEST_CASE("relation derivation follows the weighted decay rule") {
    RelationConfig cfg; // decay 0, min_weight 2, saturation 1

    SUBCASE("three unit events reach saturation 3/4") {
        std::vector<InteractionEvent> events{ev("a", "b", 1), ev("a", "b", 2), ev("a", "b", 3)};
        auto g = derive_relations(events, cfg, 10);
        REQUIRE(g.edge_count() == 1);
        const auto* e = g.edge("a", "b");
        REQUIRE(e != nullptr);
        CHECK(e->strength == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(g.node_count() == 2);
    }
    SUBCASE("single event stays below the threshold") {
        std::vector<InteractionEvent> events{ev("a", "b", 1)};
        auto g = derive_relations(events, cfg, 10);
        CHECK(g.edge_count() == 0);
        CHECK(g.node_count() == 2); // endpoints still known
    }
    SUBCASE("full decay empties the graph") {
        RelationConfig heavy = cfg;
        heavy.decay_rate = 50.0;
        std::vector<InteractionEvent> events{ev("a", "b", 1), ev("a", "b", 2), ev("a", "b", 3)};
        auto g = derive_relations(events, heavy, 1000000);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("invalid configs are rejected") {
        std::vector<InteractionEvent> events;
        RelationConfig bad = cfg;
        bad.min_weight = 0.0;
        CHECK_THROWS_AS(derive_relations(events, bad, 0), Error);
        bad = cfg;
        bad.saturation = -1.0;
        CHECK_THROWS_AS(derive_relations(events, bad, 0), Error);
        bad = cfg;
        bad.decay_rate = -0.1;
        CHECK_THROWS_AS(derive_relations(events, bad, 0), Error);
    }
    SUBCASE("tags merge into edge semantics") {
        auto tagged = ev("a", "b", 1);
        tagged.tags = {"travel", "trip"};
        auto tagged2 = ev("a", "b", 2);
        tagged2.tags = {"travel"};
        std::vector<InteractionEvent> events{tagged, tagged2};
        auto g = derive_relations(events, cfg, 10);
        const auto* e = g.edge("a", "b");
        REQUIRE(e != nullptr);
        CHECK(e->semantics.at("travel") == 2);
        CHECK(e->semantics.at("trip") == 1);
    }
}

TEST_CASE("relation weight accumulation is monotone") {
    Rng rng(23);
    RelationConfig cfg;
    cfg.min_weight = 1.5;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<InteractionEvent> events;
        const int n = static_cast<int>(rng.below(12)) + 1;
        for (int i = 0; i < n; ++i)
            events.push_back(ev(testing::node_name(static_cast<int>(rng.below(3))),
                                testing::node_name(3 + static_cast<int>(rng.below(3))),
                                static_cast<Timestamp>(i), rng.uniform01() * 2.0));
        cfg.decay_rate = rng.uniform01() * 0.1;
        auto before = derive_relations(events, cfg, 100);

        events.push_back(ev("n00", "n03", 99, rng.uniform01() * 2.0));
        auto after = derive_relations(events, cfg, 100);

        // no edge disappears when an event is appended at fixed `now`
        for (const auto& [key, e] : before.edges()) {
            CHECK(after.has_edge(key.first, key.second));
            CHECK(after.edge(key.first, key.second)->strength >= e.strength);
        }
    }
}

TEST_CASE("saturation strength is bounded and increasing") {
    RelationConfig cfg;
    double prev = 0.0;
    for (double w = 0.1; w < 50.0; w += 0.7) {
        double s = w / (w + cfg.saturation);
        CHECK(s > 0.0);
        CHECK(s < 1.0);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("pair independence of relation derivation") {
    // interleaved streams over disjoint pairs equal the union of the parts
    RelationConfig cfg;
    std::vector<InteractionEvent> ab{ev("a", "b", 1), ev("a", "b", 5), ev("a", "b", 9)};
    std::vector<InteractionEvent> cd{ev("c", "d", 2), ev("c", "d", 6), ev("c", "d", 8)};
    std::vector<InteractionEvent> merged{ab[0], cd[0], ab[1], cd[1], cd[2], ab[2]};

    auto g_merged = derive_relations(merged, cfg, 20);
    auto g_ab = derive_relations(ab, cfg, 20);
    auto g_cd = derive_relations(cd, cfg, 20);

    CHECK(g_merged.edge("a", "b")->strength == g_ab.edge("a", "b")->strength);
    CHECK(g_merged.edge("c", "d")->strength == g_cd.edge("c", "d")->strength);
    CHECK(g_merged.edge_count() == g_ab.edge_count() + g_cd.edge_count());
}

TEST_CASE("snapshot assembly") {
    SnapshotConfig cfg;
    cfg.window_seconds = 10;
    cfg.lookback_windows = 1;

    SUBCASE("empty log gives an empty snapshot") {
        InteractionLog log;
        auto s = snapshot(log, 100, cfg);
        CHECK(s.entities.empty());
        CHECK(s.relations.edge_count() == 0);
        CHECK(s.groups.empty());
    }
    SUBCASE("single strong interaction gives two entities, one edge, no groups") {
        InteractionLog log;
        log.append(ev("a", "b", 95, 3.0)); // one event over the threshold
        auto s = snapshot(log, 100, cfg);
        CHECK(s.entities == std::vector<EntityId>{"a", "b"});
        CHECK(s.relations.edge_count() == 1);
        CHECK(s.relations.edge("a", "b")->strength == doctest::Approx(0.75));
        CHECK(s.groups.empty());
        CHECK(s.categories.size() == 2);
    }
    SUBCASE("identical inputs produce byte-identical snapshots") {
        InteractionLog log;
        log.bulk_load({ev("a", "b", 91, 3.0), ev("b", "c", 93, 2.5), ev("a", "c", 95, 2.0),
                       ev("c", "a", 97, 4.0)});
        auto s1 = snapshot(log, 100, cfg);
        auto s2 = snapshot(log, 100, cfg);
        CHECK(write_snapshot_json(s1) == write_snapshot_json(s2));
    }
}

TEST_CASE("add_entities") {
    SnapshotConfig cfg;
    cfg.window_seconds = 10;
    cfg.lookback_windows = 1;
    InteractionLog log;
    log.append(ev("a", "b", 95, 3.0));
    auto s = snapshot(log, 100, cfg);

    SUBCASE("newcomers join without relations, as Observers") {
        auto s2 = add_entities(s, {{"c", {{"host", 1.0}}}});
        CHECK(s2.entities == std::vector<EntityId>{"a", "b", "c"});
        CHECK(s2.relations.edge_count() == s.relations.edge_count());
        CHECK(s2.categories.at("c") == UserCategory::Observer);
        CHECK(s2.attributes.get("c", kDomainNamespace, "host") == 1.0);
        CHECK_FALSE(s2.roles.at("c").dominant.has_value());
    }
    SUBCASE("empty batch is the identity") {
        auto s2 = add_entities(s, {});
        CHECK(write_snapshot_json(s2) == write_snapshot_json(s));
    }
    SUBCASE("duplicates are rejected") {
        CHECK_THROWS_AS(add_entities(s, {{"a", {}}}), Error);
    }
}
