#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "socsim/error.hpp"
#include "socsim/io.hpp"
#include "socsim/sna.hpp"
#include "socsim/snapshot.hpp"

using namespace socsim;
using namespace socsim::testing;

TEST_CASE("degree counting") {
    SUBCASE("fan-out") {
        auto g = make_graph({{"a", "b"}, {"a", "c"}});
        auto [in, out] = degrees(g);
        CHECK(out["a"] == 2);
        CHECK(in["b"] == 1);
        CHECK(in["c"] == 1);
        CHECK(in["a"] == 0);
        CHECK(out["b"] == 0);
    }
    SUBCASE("empty graph keeps known entities at zero") {
        auto g = make_graph({}, {"a", "b"});
        auto [in, out] = degrees(g);
        CHECK(in.size() == 2);
        CHECK(in["a"] == 0);
        CHECK(out["b"] == 0);
    }
    SUBCASE("mutual edge") {
        auto g = make_graph({{"a", "b"}, {"b", "a"}});
        auto [in, out] = degrees(g);
        CHECK(in["a"] == 1);
        CHECK(out["a"] == 1);
        CHECK(in["b"] == 1);
        CHECK(out["b"] == 1);
    }
}

TEST_CASE("closeness on hop distances") {
    SUBCASE("star") {
        auto g = make_undirected({{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
        auto values = closeness(g, PathMode::Symmetrized);
        CHECK(values["c"] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(values["l1"] == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(values["l3"] == doctest::Approx(0.2).epsilon(1e-12));
    }
    SUBCASE("two connected nodes score 1") {
        auto g = make_undirected({{"a", "b"}});
        auto values = closeness(g, PathMode::Symmetrized);
        CHECK(values["a"] == 1.0);
        CHECK(values["b"] == 1.0);
    }
    SUBCASE("isolated node scores 0") {
        auto g = make_undirected({{"a", "b"}}, {"z"});
        auto values = closeness(g, PathMode::Symmetrized);
        CHECK(values["z"] == 0.0);
    }
    SUBCASE("directed mode: a sink reaches nothing") {
        auto g = make_graph({{"a", "b"}, {"b", "c"}});
        auto values = closeness(g, PathMode::Directed);
        CHECK(values["a"] == doctest::Approx(1.0 / 3.0));
        CHECK(values["c"] == 0.0);
    }
}

TEST_CASE("betweenness") {
    SUBCASE("middle of a path carries the one unordered pair") {
        auto g = make_undirected({{"a", "b"}, {"b", "c"}});
        auto values = betweenness(g, PathMode::Symmetrized);
        CHECK(values["b"] == doctest::Approx(1.0));
        CHECK(values["a"] == 0.0);
        CHECK(values["c"] == 0.0);
    }
    SUBCASE("complete graph has no intermediaries") {
        auto g = make_undirected(
            {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
        for (const auto& [id, v] : betweenness(g, PathMode::Symmetrized)) CHECK(v == 0.0);
    }
    SUBCASE("directed chain counts the ordered pair (a,c)") {
        auto g = make_graph({{"a", "b"}, {"b", "c"}});
        auto values = betweenness(g, PathMode::Directed);
        CHECK(values["b"] == doctest::Approx(1.0));
    }
}

TEST_CASE("closeness and betweenness match the brute-force oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        double p = 0.3 + rng.uniform01() * 0.4;
        auto g = random_digraph(rng, n, p);
        for (auto mode : {PathMode::Directed, PathMode::Symmetrized}) {
            auto fast_c = closeness(g, mode);
            auto slow_c = oracle_closeness(g, mode);
            auto fast_b = betweenness(g, mode);
            auto slow_b = oracle_betweenness(g, mode);
            for (const auto& [id, v] : slow_c)
                CHECK(fast_c[id] == doctest::Approx(v).epsilon(1e-9));
            for (const auto& [id, v] : slow_b)
                CHECK(fast_b[id] == doctest::Approx(v).epsilon(1e-9));
        }
    }
}

TEST_CASE("hits fixpoints") {
    SUBCASE("single edge") {
        auto g = make_graph({{"a", "b"}});
        auto [hub, auth] = hits(g);
        CHECK(hub["a"] == doctest::Approx(1.0));
        CHECK(auth["b"] == doctest::Approx(1.0));
        CHECK(hub["b"] == doctest::Approx(0.0));
        CHECK(auth["a"] == doctest::Approx(0.0));
    }
    SUBCASE("two-cycle is symmetric") {
        auto g = make_graph({{"a", "b"}, {"b", "a"}});
        auto [hub, auth] = hits(g);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(hub["a"] == doctest::Approx(inv_sqrt2));
        CHECK(hub["b"] == doctest::Approx(inv_sqrt2));
        CHECK(auth["a"] == doctest::Approx(inv_sqrt2));
        CHECK(auth["b"] == doctest::Approx(inv_sqrt2));
    }
    SUBCASE("two hubs, one authority") {
        auto g = make_graph({{"a", "c"}, {"b", "c"}});
        auto [hub, auth] = hits(g);
        CHECK(auth["c"] == doctest::Approx(1.0));
        CHECK(hub["a"] == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(hub["b"] == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
    SUBCASE("empty graph is an error") {
        RelationGraph g;
        CHECK_THROWS_AS(hits(g), Error);
    }
}

TEST_CASE("pagerank fixpoints") {
    SUBCASE("three-cycle is uniform") {
        auto g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
        auto pr = pagerank(g);
        CHECK(pr["a"] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
        CHECK(pr["b"] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
        CHECK(pr["c"] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
    SUBCASE("two isolated nodes split the mass") {
        auto g = make_graph({}, {"a", "b"});
        auto pr = pagerank(g);
        CHECK(pr["a"] == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(pr["b"] == doctest::Approx(0.5).epsilon(1e-9));
    }
    SUBCASE("a single edge favours the target") {
        auto g = make_graph({{"a", "b"}});
        auto pr = pagerank(g);
        CHECK(pr["b"] > pr["a"]);
    }
    SUBCASE("mass conservation and the teleport floor") {
        Rng rng(37);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + static_cast<int>(rng.below(7));
            auto g = random_digraph(rng, n, 0.4);
            auto pr = pagerank(g);
            double sum = 0.0;
            for (const auto& [id, v] : pr) {
                sum += v;
                CHECK(v >= (1.0 - 0.85) / n - 1e-12);
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("hits is equivariant under relabeling") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng.below(5));
        auto g = random_digraph(rng, n, 0.45);

        // relabel node i -> zNN(i) reversing the order
        auto relabel = [&](const EntityId& id) {
            int i = std::stoi(id.substr(1));
            return std::string("z") + std::to_string(n - 1 - i);
        };
        RelationGraph h;
        for (const auto& id : g.nodes()) h.add_node(relabel(id));
        for (const auto& [key, e] : g.edges()) {
            RelationEdge copy = e;
            copy.initiator = relabel(key.first);
            copy.receiver = relabel(key.second);
            h.add_edge(std::move(copy));
        }

        auto [hub_g, auth_g] = hits(g);
        auto [hub_h, auth_h] = hits(h);
        for (const auto& id : g.nodes()) {
            CHECK(hub_h[relabel(id)] == doctest::Approx(hub_g[id]).epsilon(1e-9));
            CHECK(auth_h[relabel(id)] == doctest::Approx(auth_g[id]).epsilon(1e-9));
        }
    }
}

TEST_CASE("edge reversal swaps hubs with authorities and in with out degrees") {
    Rng rng(43);
    auto g = random_digraph(rng, 6, 0.4);
    RelationGraph r;
    for (const auto& id : g.nodes()) r.add_node(id);
    for (const auto& [key, e] : g.edges()) {
        RelationEdge copy = e;
        std::swap(copy.initiator, copy.receiver);
        r.add_edge(std::move(copy));
    }

    auto [hub_g, auth_g] = hits(g);
    auto [hub_r, auth_r] = hits(r);
    auto [in_g, out_g] = degrees(g);
    auto [in_r, out_r] = degrees(r);
    for (const auto& id : g.nodes()) {
        CHECK(hub_r[id] == doctest::Approx(auth_g[id]).epsilon(1e-9));
        CHECK(auth_r[id] == doctest::Approx(hub_g[id]).epsilon(1e-9));
        CHECK(in_r[id] == out_g[id]);
        CHECK(out_r[id] == in_g[id]);
    }
}

TEST_CASE("sna annotation fills the attribute namespace") {
    SnapshotConfig cfg;
    cfg.window_seconds = 10;
    cfg.lookback_windows = 1;

    SUBCASE("empty snapshot stays empty") {
        InteractionLog log;
        auto s = snapshot(log, 100, cfg);
        s = annotate_sna(s);
        CHECK(s.attributes.rows().empty());
    }
    SUBCASE("path graph exposes the bridge in sna:betweenness") {
        InteractionLog log;
        log.bulk_load({{"a", "b", InteractionKind::FriendRequest, 95, 3.0, {}},
                       {"b", "c", InteractionKind::FriendRequest, 96, 3.0, {}}});
        auto s = snapshot(log, 100, cfg);
        CHECK(s.attributes.get("b", kSnaNamespace, "betweenness") == doctest::Approx(1.0));
        CHECK(s.attributes.get("a", kSnaNamespace, "betweenness") == 0.0);

        // all seven metrics exist for every entity
        for (const auto& id : s.entities)
            for (const char* metric : kMetricNames)
                CHECK(s.attributes.rows().at(id).count(std::string(kSnaNamespace) + ":" + metric));
    }
    SUBCASE("annotation is idempotent") {
        InteractionLog log;
        log.bulk_load({{"a", "b", InteractionKind::FriendRequest, 95, 3.0, {}},
                       {"b", "c", InteractionKind::FriendRequest, 96, 3.0, {}}});
        auto s = snapshot(log, 100, cfg);
        auto again = annotate_sna(s);
        CHECK(write_snapshot_json(again) == write_snapshot_json(s));
    }
}
