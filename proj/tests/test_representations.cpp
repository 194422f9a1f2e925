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

#include <map>

#include "msn/multigraph.hpp"
#include "support/fixtures.hpp"

using namespace msn;

namespace {

/// Multigraph that flattens actor x's out-list to (v, y, y, y, z, z).
Msn flat_list_example() {
    Msn net({"l1", "l2", "l3"});
    ActorId x = net.add_actor("x");
    ActorId v = net.add_actor("v");
    ActorId y = net.add_actor("y");
    ActorId z = net.add_actor("z");
    net.add_edge(x, v, net.layer("l1"));
    net.add_edge(x, y, net.layer("l1"));
    net.add_edge(x, y, net.layer("l2"));
    net.add_edge(x, y, net.layer("l3"));
    net.add_edge(x, z, net.layer("l1"));
    net.add_edge(x, z, net.layer("l2"));
    return net;
}

/// Independent tally: number of layers carrying each ordered label pair.
std::map<std::pair<std::string, std::string>, std::uint32_t> brute_counts(
    const Msn& net) {
    std::map<std::pair<std::string, std::string>, std::uint32_t> tally;
    for (LayerId l : net.layers())
        for (ActorId s : net.actors())
            for (ActorId t : net.actors())
                if (s != t && net.has_edge(s, t, l))
                    ++tally[{net.label(s), net.label(t)}];
    return tally;
}

} // namespace

TEST_SUITE_BEGIN("representations");

TEST_CASE("multiedge counts for the flattened-list example") {
    Msn net = flat_list_example();
    MultigraphView mg = to_multigraph(net);
    ActorId x = *net.find_actor("x");

    CHECK(mg.count(x, *net.find_actor("v")) == 1);
    CHECK(mg.count(x, *net.find_actor("y")) == 3);
    CHECK(mg.count(x, *net.find_actor("z")) == 2);
    CHECK(mg.total() == 6);

    RepeatedAdjacencyList lists = to_repeated_list(mg);
    CHECK(lists.to_string(x) == "[v, y, y, y, z, z]");
    CHECK(lists.list(*net.find_actor("v")).empty());
    CHECK(lists.total_entries() == net.edge_count());
}

TEST_CASE("empty network and trivial counts") {
    Msn empty({"l1"});
    MultigraphView mg = to_multigraph(empty);
    CHECK(mg.total() == 0);
    CHECK(mg.actors().empty());

    // actors but no edges: every pair counts zero
    Msn bare({"l1"});
    ActorId p = bare.add_actor("p");
    ActorId q = bare.add_actor("q");
    MultigraphView none = to_multigraph(bare);
    CHECK(none.count(p, q) == 0);
    CHECK(none.count(q, p) == 0);
    CHECK(none.total() == 0);

    Msn net = fixtures::fig1();
    MultigraphView fig = to_multigraph(net);
    CHECK(fig.total() == 21);
    ActorId x = *net.find_actor("x");
    CHECK(fig.count(x, x) == 0);
    CHECK(multiedge_count(fig, x, x) == 0);
    // x -> y exists on all three layers of the fixture
    CHECK(fig.count(x, *net.find_actor("y")) == 3);

    CHECK_THROWS_AS((void)fig.count(ActorId(77), x), Error);
}

TEST_CASE("oracle equivalence on random networks") {
    std::mt19937 rng(23);
    for (int round = 0; round < 60; ++round) {
        Msn net = fixtures::random_msn(rng);
        MultigraphView mg = to_multigraph(net);
        auto expected = brute_counts(net);

        std::uint64_t mass = 0;
        for (ActorId s : net.actors()) {
            for (ActorId t : net.actors()) {
                std::uint32_t want = 0;
                auto it = expected.find({net.label(s), net.label(t)});
                if (it != expected.end()) want = it->second;
                CHECK(mg.count(s, t) == want);
            }
            for (const auto& [t, count] : mg.row(s)) {
                CHECK(count >= 1);
                mass += count;
            }
        }
        CHECK(mass == net.edge_count());
        CHECK(mg.total() == net.edge_count());
    }
}

TEST_CASE("repeated lists are label-sorted and conserve mass") {
    std::mt19937 rng(29);
    for (int round = 0; round < 40; ++round) {
        Msn net = fixtures::random_msn(rng);
        MultigraphView mg = to_multigraph(net);
        RepeatedAdjacencyList lists = to_repeated_list(mg);

        CHECK(lists.total_entries() == net.edge_count());
        for (ActorId a : net.actors()) {
            const auto& list = lists.list(a);
            for (std::size_t i = 1; i < list.size(); ++i)
                CHECK(lists.label(list[i - 1]) <= lists.label(list[i]));
            // entry multiset equals the counts map
            std::map<std::string, std::uint32_t> seen;
            for (ActorId n : list) ++seen[lists.label(n)];
            std::map<std::string, std::uint32_t> want;
            for (const auto& [t, count] : mg.row(a)) want[mg.label(t)] = count;
            CHECK(seen == want);
        }
    }
}

TEST_CASE("two distinct networks share one multigraph view") {
    // same actor set, same per-pair totals, different layer labels
    Msn first({"l1", "l2"});
    ActorId x1 = first.add_actor("x");
    ActorId y1 = first.add_actor("y");
    first.add_edge(x1, y1, first.layer("l1"));

    Msn second({"l1", "l2"});
    ActorId x2 = second.add_actor("x");
    ActorId y2 = second.add_actor("y");
    second.add_edge(x2, y2, second.layer("l2"));

    CHECK(!(first == second));
    CHECK(to_multigraph(first) == to_multigraph(second));

    // a richer witness: swap which layer carries which pair
    Msn third({"a", "b"});
    Msn fourth({"a", "b"});
    for (Msn* net : {&third, &fourth}) {
        net->add_actor("p");
        net->add_actor("q");
        net->add_actor("r");
    }
    third.add_edge(*third.find_actor("p"), *third.find_actor("q"), third.layer("a"));
    third.add_edge(*third.find_actor("q"), *third.find_actor("r"), third.layer("b"));
    fourth.add_edge(*fourth.find_actor("p"), *fourth.find_actor("q"), fourth.layer("b"));
    fourth.add_edge(*fourth.find_actor("q"), *fourth.find_actor("r"), fourth.layer("a"));
    CHECK(!(third == fourth));
    CHECK(to_multigraph(third) == to_multigraph(fourth));
}

TEST_CASE("counts survive actor removal") {
    Msn net = fixtures::fig1();
    net.remove_actor(*net.find_actor("z"));
    MultigraphView mg = to_multigraph(net);
    CHECK(mg.total() == net.edge_count());
    CHECK(mg.actor_count() == 5);
}

TEST_SUITE_END();
