/*
Copyright 2026 the msnkit authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "msn/core.hpp"
#include "support/fixtures.hpp"

using namespace msn;

namespace {

std::set<std::string> label_set(const Msn& net, const std::vector<ActorId>& ids) {
    std::set<std::string> out;
    for (ActorId a : ids) out.insert(net.label(a));
    return out;
}

#define CHECK_ERRC(expr, expected)                  \
    do {                                            \
        try {                                       \
            (void)(expr);                           \
            FAIL_CHECK("expected " #expected);      \
        } catch (const Error& e) {                  \
            CHECK(e.code() == errc::expected);      \
        }                                           \
    } while (0)

} // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("construction declares a fixed layer set") {
    Msn net({"friendship", "work", "family"});
    CHECK(net.layer_count() == 3);
    CHECK(net.actor_count() == 0);
    CHECK(net.edge_count() == 0);

    Msn empty(std::vector<std::string>{});
    CHECK(empty.layer_count() == 0);

    CHECK_ERRC(Msn({"a", "a"}), duplicate_layer);
    CHECK_ERRC(Msn({"a", ""}), empty_name);
}

TEST_CASE("add_actor is idempotent and validates labels") {
    Msn net({"l1"});
    ActorId t = net.add_actor("t");
    ActorId u = net.add_actor("u");
    CHECK(t != u);
    CHECK(net.add_actor("x") == net.add_actor("x"));
    CHECK(net.actor_count() == 3);

    CHECK_ERRC(net.add_actor(""), invalid_label);
    CHECK_ERRC(net.add_actor(" x"), invalid_label);
    CHECK_ERRC(net.add_actor("x "), invalid_label);
    CHECK_ERRC(net.add_actor("a,b"), invalid_label);
    CHECK_ERRC(net.add_actor("a\nb"), invalid_label);
    CHECK(net.add_actor("John Smith") == net.add_actor("John Smith"));
}

TEST_CASE("add_edge keeps set semantics per direction") {
    Msn net({"l1"});
    ActorId x = net.add_actor("x");
    ActorId y = net.add_actor("y");
    LayerId l1 = net.layer("l1");

    net.add_edge(x, y, l1);
    net.add_edge(y, x, l1);
    CHECK(net.edge_count(l1) == 2);
    CHECK(net.has_edge(x, y, l1));
    CHECK(net.has_edge(y, x, l1));

    CHECK_ERRC(net.add_edge(x, x, l1), self_loop);
    CHECK_ERRC(net.add_edge(x, y, l1), duplicate_edge);
    CHECK_ERRC(net.add_edge(x, ActorId(99), l1), unknown_actor);
    CHECK_ERRC(net.add_edge(x, y, LayerId(7)), unknown_layer);
}

TEST_CASE("remove_actor cascades over every layer") {
    Msn net = fixtures::fig1();
    LayerId l1 = net.layer("l1");
    CHECK(net.edge_count(l1) == 8);

    net.remove_actor(*net.find_actor("z"));
    // the four l1 tuples touching z disappear
    CHECK(net.edge_count(l1) == 4);
    CHECK(net.actor_count() == 5);
    CHECK(!net.find_actor("z").has_value());

    auto remaining = fixtures::layer_pairs_by_label(net, l1);
    CHECK(remaining == std::set<std::pair<std::string, std::string>>{
                           {"x", "y"}, {"y", "x"}, {"u", "v"}, {"v", "u"}});
}

TEST_CASE("remove_edge errors and layer persistence") {
    Msn net({"l1", "l2"});
    ActorId x = net.add_actor("x");
    ActorId y = net.add_actor("y");
    LayerId l1 = net.layer("l1");

    CHECK_ERRC(net.remove_edge(x, y, l1), not_found);
    net.add_edge(x, y, l1);
    net.remove_edge(x, y, l1);
    CHECK(net.edge_count(l1) == 0);
    // layers are fixed: an empty layer stays declared
    CHECK(net.layer_count() == 2);
    CHECK(net.find_layer("l1").has_value());

    CHECK_ERRC(net.remove_actor(ActorId(99)), not_found);
}

TEST_CASE("layer projection covers the full actor set") {
    Msn net = fixtures::fig1();
    SsnView view = net.layer_projection(net.layer("l1"));
    CHECK(view.actor_count() == 6);
    CHECK(view.edge_count() == 8);
    CHECK(view.provenance().layers == std::vector<std::string>{"l1"});

    // t is isolated on l1 but still part of the view
    auto t = *net.find_actor("t");
    bool touched = false;
    for (const auto& [s, tgt] : view.edges())
        touched = touched || s == t || tgt == t;
    CHECK(!touched);
    CHECK(label_set(net, view.actors()).count("t") == 1);

    std::set<std::pair<std::string, std::string>> expected(
        fixtures::kFig1Layer1.begin(), fixtures::kFig1Layer1.end());
    CHECK(fixtures::view_pairs_by_label(view) == expected);
}

TEST_CASE("projections of empty layers and edge-count partition") {
    Msn net = fixtures::fig1();
    Msn sparse({"l1", "empty"});
    sparse.add_actor("a");
    sparse.add_actor("b");
    CHECK(sparse.layer_projection(sparse.layer("empty")).edge_count() == 0);
    CHECK(sparse.layer_projection(sparse.layer("empty")).actor_count() == 2);

    std::size_t total = 0;
    for (LayerId l : net.layers()) total += net.layer_projection(l).edge_count();
    CHECK(total == 21);
    CHECK(total == net.edge_count());
}

TEST_CASE("neighbors merges and deduplicates over layers") {
    Msn net = fixtures::fig1();
    auto x = *net.find_actor("x");
    auto z = *net.find_actor("z");
    auto t = *net.find_actor("t");
    std::vector<LayerId> l1{net.layer("l1")};

    CHECK(label_set(net, net.neighbors(x, Direction::Out, l1)) ==
          std::set<std::string>{"y", "z"});
    CHECK(label_set(net, net.neighbors(z, Direction::In, l1)) ==
          std::set<std::string>{"x", "y", "u"});
    CHECK(net.neighbors(t, Direction::Out, l1).empty());

    auto all = net.layers();
    CHECK(label_set(net, net.neighbors(x, Direction::Out, all)) ==
          std::set<std::string>{"y", "z"});

    CHECK_ERRC(net.neighbors(x, Direction::Out, std::vector<LayerId>{}),
               empty_layer_set);
    CHECK_ERRC(net.neighbors(ActorId(42), Direction::Out, l1), unknown_actor);
    CHECK_ERRC(net.neighbors(x, Direction::Out, std::vector<LayerId>{LayerId(9)}),
               unknown_layer);
}

TEST_CASE("direction independence of has_edge") {
    std::mt19937 rng(7);
    Msn net({"l1"});
    std::vector<ActorId> ids;
    for (int i = 0; i < 8; ++i) ids.push_back(net.add_actor("a" + std::to_string(i)));
    LayerId l1 = net.layer("l1");

    std::uniform_int_distribution<int> pick(0, 7);
    for (int round = 0; round < 200; ++round) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (!net.has_edge(ids[i], ids[j], l1) && !net.has_edge(ids[j], ids[i], l1)) {
            net.add_edge(ids[i], ids[j], l1);
            CHECK(net.has_edge(ids[i], ids[j], l1));
            CHECK(!net.has_edge(ids[j], ids[i], l1));
        }
    }
}

TEST_CASE("projection soundness against brute-force filter") {
    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
        Msn net = fixtures::random_msn(rng);
        for (LayerId l : net.layers()) {
            CHECK(fixtures::view_pairs_by_label(net.layer_projection(l)) ==
                  fixtures::layer_pairs_by_label(net, l));
        }
    }
}

TEST_CASE("partition: per-layer counts sum to the total") {
    std::mt19937 rng(13);
    for (int round = 0; round < 50; ++round) {
        Msn net = fixtures::random_msn(rng);
        std::size_t total = 0;
        for (LayerId l : net.layers()) total += net.edge_count(l);
        CHECK(total == net.edge_count());
        CHECK(net.edges().size() == net.edge_count());
    }
}

TEST_CASE("add/remove round-trip restores the edge set") {
    std::mt19937 rng(17);
    for (int round = 0; round < 30; ++round) {
        Msn net = fixtures::random_msn(rng, 6, 3);
        if (net.layer_count() == 0) continue;
        ActorId a = net.add_actor("fresh1");
        ActorId b = net.add_actor("fresh2");
        LayerId l = net.layers().front();

        Msn before = net;
        net.add_edge(a, b, l);
        CHECK(net.edge_count() == before.edge_count() + 1);
        net.remove_edge(a, b, l);
        CHECK(net == before);
    }
}

TEST_CASE("reachable states keep every invariant") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> op(0, 5);
    std::uniform_int_distribution<int> pick(0, 9);

    Msn net({"l1", "l2", "l3"});
    for (int round = 0; round < 2000; ++round) {
        std::string a = "a" + std::to_string(pick(rng));
        std::string b = "a" + std::to_string(pick(rng));
        LayerId l(static_cast<std::uint32_t>(pick(rng) % 3));
        try {
            switch (op(rng)) {
                case 0: net.add_actor(a); break;
                case 1: case 2: {
                    ActorId x = net.add_actor(a);
                    ActorId y = net.add_actor(b);
                    net.add_edge(x, y, l);
                    break;
                }
                case 3: {
                    auto x = net.find_actor(a);
                    auto y = net.find_actor(b);
                    if (x && y) net.remove_edge(*x, *y, l);
                    break;
                }
                case 4: {
                    auto x = net.find_actor(a);
                    if (x) net.remove_actor(*x);
                    break;
                }
                default: {
                    auto x = net.find_actor(a);
                    auto y = net.find_actor(b);
                    if (x && y) (void)net.has_edge(*x, *y, l);
                    break;
                }
            }
        } catch (const Error& e) {
            bool expected = e.code() == errc::self_loop ||
                            e.code() == errc::duplicate_edge ||
                            e.code() == errc::not_found;
            CHECK(expected);
        }
    }

    // audit: adjacency symmetric, sorted, self-loop free, counts consistent
    std::size_t total = 0;
    for (LayerId l : net.layers()) {
        std::size_t layer_total = 0;
        for (ActorId s : net.actors()) {
            auto out = net.out_neighbors(s, l);
            CHECK(std::is_sorted(out.begin(), out.end()));
            CHECK(std::adjacent_find(out.begin(), out.end()) == out.end());
            for (ActorId t : out) {
                CHECK(s != t);
                CHECK(net.contains(t));
                auto in = net.in_neighbors(t, l);
                CHECK(std::binary_search(in.begin(), in.end(), s));
            }
            layer_total += out.size();
        }
        CHECK(layer_total == net.edge_count(l));
        total += layer_total;
    }
    CHECK(total == net.edge_count());
}

TEST_CASE("views stay valid after the source network mutates") {
    Msn net = fixtures::fig1();
    SsnView view = net.layer_projection(net.layer("l1"));
    net.remove_actor(*net.find_actor("z"));
    net.add_actor("fresh");
    // the view still resolves its snapshot labels
    CHECK(view.edge_count() == 8);
    std::set<std::pair<std::string, std::string>> expected(
        fixtures::kFig1Layer1.begin(), fixtures::kFig1Layer1.end());
    CHECK(fixtures::view_pairs_by_label(view) == expected);
}

TEST_SUITE_END();
