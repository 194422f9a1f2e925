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

#include <fstream>
#include <sstream>

#include "msn/io.hpp"
#include "support/fixtures.hpp"

using namespace msn;

namespace {

Msn parse_static(const std::string& text, const ParseOptions& opts = {}) {
    std::istringstream in(text);
    return read_msn(in, opts);
}

EventStream parse_events(const std::string& text, const ParseOptions& opts = {}) {
    std::istringstream in(text);
    return read_events(in, opts);
}

void check_error(const std::string& text, errc code, std::size_t line) {
    std::istringstream in(text);
    try {
        (void)parse_edge_list(in);
        FAIL_CHECK("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == code);
        CHECK(e.line() == line);
    }
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("the bundled fixture parses to the expected network") {
    Msn net = load_msn(fixtures::fig1_path());
    CHECK(net.actor_count() == 6);
    CHECK(net.layer_count() == 3);
    CHECK(net.edge_count(net.layer("l1")) == 8);
    CHECK(net.edge_count(net.layer("l2")) == 6);
    CHECK(net.edge_count(net.layer("l3")) == 7);
    CHECK(net == fixtures::fig1());
}

TEST_CASE("header-only and missing files") {
    Msn empty = parse_static("source,target,layer\n");
    CHECK(empty.actor_count() == 0);
    CHECK(empty.layer_count() == 0);
    CHECK(empty.edge_count() == 0);

    try {
        (void)load_msn("no/such/file.csv");
        FAIL_CHECK("expected io_failure");
    } catch (const Error& e) {
        CHECK(e.code() == errc::io_failure);
    }
}

TEST_CASE("parse errors carry the offending line number") {
    check_error("source,target,layer\nx,x,l1\n", errc::self_loop, 2);
    check_error("who,what\n", errc::bad_header, 1);
    check_error("", errc::bad_header, 1);
    check_error("source,target,layer\nx,y\n", errc::arity_mismatch, 2);
    check_error("source,target,layer\nx,y,l1\nx,y,l1\n", errc::duplicate_edge, 3);
    check_error("source,target,layer\nx,y,l1\n x,y,l1\n", errc::invalid_label, 3);
    check_error("source,target,layer,time\nx,y,l1,soon\n", errc::bad_timestamp, 2);
    check_error("source,target,layer,time\nx,y,l1,-4\n", errc::bad_timestamp, 2);

    // comments and blank lines still count for numbering
    check_error("# leading comment\n\nsource,target,layer\n# another\nx,x,l1\n",
                errc::self_loop, 5);
}

TEST_CASE("declared layers are enforced") {
    ParseOptions opts;
    opts.declared_layers = std::vector<std::string>{"l1", "l2"};

    Msn net = parse_static("source,target,layer\nx,y,l1\n", opts);
    CHECK(net.layer_count() == 2); // l2 declared but unused
    CHECK(net.edge_count(net.layer("l2")) == 0);

    std::istringstream in("source,target,layer\nx,y,l9\n");
    try {
        (void)read_msn(in, opts);
        FAIL_CHECK("expected undeclared_layer");
    } catch (const Error& e) {
        CHECK(e.code() == errc::undeclared_layer);
        CHECK(e.line() == 2);
    }
}

TEST_CASE("temporal form keeps repeated records as events") {
    EventStream stream = parse_events(
        "source,target,layer,time\n"
        "a,b,l1,0\n"
        "a,b,l1,5\n"
        "b,a,l2,3\n");
    CHECK(stream.events().size() == 3);
    CHECK(stream.layer_names() == std::vector<std::string>{"l1", "l2"});
    CHECK(stream.time_span() == std::make_pair<std::int64_t, std::int64_t>(0, 5));

    // the static reader refuses the temporal header and vice versa
    std::istringstream temporal("source,target,layer,time\n");
    CHECK_THROWS_AS((void)read_msn(temporal), Error);
    std::istringstream fixed("source,target,layer\n");
    CHECK_THROWS_AS((void)read_events(fixed), Error);

    std::istringstream either("source,target,layer,time\na,b,l1,0\n");
    auto parsed = parse_edge_list(either);
    CHECK(std::holds_alternative<EventStream>(parsed));
}

TEST_CASE("canonical writer round-trips and is a fixed point") {
    Msn net = fixtures::fig1();
    std::string text = write_edge_list(net);

    Msn back = parse_static(text);
    CHECK(back == net);
    CHECK(write_edge_list(back) == text);

    Msn blank(std::vector<std::string>{});
    CHECK(write_edge_list(blank) == "source,target,layer\n");
}

TEST_CASE("directives preserve isolated actors and empty layers") {
    Msn net({"l1", "busy", "idle"});
    net.add_actor("loner");
    ActorId a = net.add_actor("a");
    ActorId b = net.add_actor("b");
    net.add_edge(a, b, net.layer("busy"));

    std::string text = write_edge_list(net);
    Msn back = parse_static(text);
    CHECK(back == net);
    CHECK(back.find_actor("loner").has_value());
    CHECK(back.layer_count() == 3);
    CHECK(back.edge_count(back.layer("idle")) == 0);

    // hand-written directives work the same way
    Msn manual = parse_static(
        "# actors: p,q\n"
        "# layers: l1,l2\n"
        "source,target,layer\n"
        "p,q,l1\n");
    CHECK(manual.actor_count() == 2);
    CHECK(manual.layer_count() == 2);

    // an unrelated comment is not a directive
    Msn plain = parse_static(
        "# this file lists friendships\n"
        "source,target,layer\n"
        "p,q,l1\n");
    CHECK(plain.layer_count() == 1);
}

TEST_CASE("round-trip identity on random networks") {
    std::mt19937 rng(73);
    for (int round = 0; round < 200; ++round) {
        Msn net = fixtures::random_msn(rng);
        std::string text = write_edge_list(net);
        Msn back = parse_static(text);
        CHECK(back == net);
        CHECK(write_edge_list(back) == text);
    }
}

TEST_CASE("membership files") {
    std::istringstream in(
        "actor,group\n"
        "x,team\n"
        "y,team\n"
        "x,team\n"  // duplicate collapses
        "x,board\n");
    GroupMembership membership = read_membership(in);
    CHECK(membership.is_member("x", "team"));
    CHECK(membership.is_member("x", "board"));
    CHECK(!membership.is_member("y", "board"));
    CHECK(membership.members("team") == std::vector<std::string>{"x", "y"});
    CHECK(membership.groups() == std::set<std::string>{"board", "team"});

    std::istringstream bad("actor,group\nx\n");
    try {
        (void)read_membership(bad);
        FAIL_CHECK("expected arity_mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == errc::arity_mismatch);
        CHECK(e.line() == 2);
    }
    std::istringstream wrong("actors,groups\n");
    CHECK_THROWS_AS((void)read_membership(wrong), Error);
}

TEST_CASE("node mapping files") {
    std::istringstream in(
        "fine,coarse\n"
        "x,D1\n"
        "y,D1\n"
        "z,D2\n");
    NodeMapping mapping = read_node_mapping(in);
    CHECK(mapping.coarse_of("x") == std::string("D1"));
    CHECK(mapping.coarse_of("z") == std::string("D2"));
    CHECK(mapping.coarse_of("ghost") == std::nullopt);

    std::istringstream conflict("fine,coarse\nx,D1\nx,D2\n");
    try {
        (void)read_node_mapping(conflict);
        FAIL_CHECK("expected invalid_argument");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_argument);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("pillar files round-trip through a directory") {
    namespace fs = std::filesystem;
    Msn net = fixtures::fig1();
    net.add_actor("loner"); // isolated actors travel via mapping.csv only

    fs::path dir = fs::temp_directory_path() / "msn_pillar_test";
    fs::remove_all(dir);
    auto written = write_pillar(to_pillar(net), dir);
    CHECK(written.size() == 4); // mapping + three networks

    PillarNetwork back = read_pillar(dir);
    REQUIRE(back.networks().size() == 3);
    CHECK(back.classes().size() == 7);
    Msn rebuilt = from_pillar(back, net.layer_names());
    CHECK(rebuilt == net);
    fs::remove_all(dir);
}

TEST_CASE("exit code categories") {
    CHECK(exit_code_for(Error(errc::bad_header, "")) == 2);
    CHECK(exit_code_for(Error(errc::io_failure, "")) == 2);
    CHECK(exit_code_for(Error(errc::self_loop, "", 3)) == 2);
    CHECK(exit_code_for(Error(errc::self_loop, "")) == 1);
    CHECK(exit_code_for(Error(errc::unknown_layer, "")) == 1);
    CHECK(exit_code_for(Error(errc::too_few_actors, "")) == 1);
}

TEST_SUITE_END();
