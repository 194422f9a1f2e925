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
#pragma once

#include <array>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "msn/core.hpp"
#include "msn/dimensions.hpp"

namespace fixtures {

// The eight layer-1 tuples of the fig1 network, enumerated independently of
// any file or builder so tests can use them as an oracle.
inline const std::vector<std::pair<std::string, std::string>> kFig1Layer1{
    {"x", "y"}, {"y", "x"}, {"x", "z"}, {"z", "x"},
    {"y", "z"}, {"u", "z"}, {"u", "v"}, {"v", "u"},
};

// Synthetic filler layers; totals (6, 7) are the fixed facts.
inline const std::vector<std::pair<std::string, std::string>> kFig1Layer2{
    {"t", "u"}, {"u", "t"}, {"x", "y"}, {"y", "x"}, {"u", "y"}, {"y", "u"},
};
inline const std::vector<std::pair<std::string, std::string>> kFig1Layer3{
    {"x", "y"}, {"y", "x"}, {"y", "z"}, {"z", "y"},
    {"x", "z"}, {"z", "x"}, {"t", "v"},
};

/// In-code twin of data/fig1.csv (same actors, layers and edges).
inline msn::Msn fig1() {
    msn::Msn net({"l1", "l2", "l3"});
    for (const char* label : {"x", "y", "z", "u", "v", "t"}) net.add_actor(label);
    auto add_layer = [&](const auto& edges, const char* layer) {
        for (const auto& [s, t] : edges)
            net.add_edge(*net.find_actor(s), *net.find_actor(t), net.layer(layer));
    };
    add_layer(kFig1Layer1, "l1");
    add_layer(kFig1Layer2, "l2");
    add_layer(kFig1Layer3, "l3");
    return net;
}

inline std::filesystem::path fig1_path() {
    return std::filesystem::path(MSN_DATA_DIR) / "fig1.csv";
}

/// Random network with up to max_actors actors and max_layers layers;
/// isolated actors and empty layers are possible on purpose.
inline msn::Msn random_msn(std::mt19937& rng, int max_actors = 8,
                           int max_layers = 4, double edge_prob = 0.25) {
    std::uniform_int_distribution<int> actor_count(0, max_actors);
    std::uniform_int_distribution<int> layer_count(0, max_layers);
    std::bernoulli_distribution keep(edge_prob);

    const int actors = actor_count(rng);
    const int layers = layer_count(rng);

    std::vector<std::string> layer_names;
    for (int l = 0; l < layers; ++l)
        layer_names.push_back("l" + std::to_string(l + 1));
    msn::Msn net(layer_names);

    std::vector<msn::ActorId> ids;
    for (int a = 0; a < actors; ++a)
        ids.push_back(net.add_actor("a" + std::to_string(a + 1)));

    for (int l = 0; l < layers; ++l)
        for (int i = 0; i < actors; ++i)
            for (int j = 0; j < actors; ++j)
                if (i != j && keep(rng))
                    net.add_edge(ids[i], ids[j], msn::LayerId(l));
    return net;
}

/// Random event stream over a small actor/layer universe.
inline msn::EventStream random_events(std::mt19937& rng, int max_actors = 6,
                                      int max_layers = 3, int max_events = 40,
                                      std::int64_t max_time = 20) {
    std::uniform_int_distribution<int> actor_count(2, max_actors);
    std::uniform_int_distribution<int> layer_count(1, max_layers);
    const int actors = actor_count(rng);
    const int layers = layer_count(rng);

    std::vector<std::string> layer_names;
    for (int l = 0; l < layers; ++l)
        layer_names.push_back("l" + std::to_string(l + 1));
    msn::EventStream stream(layer_names);
    for (int a = 0; a < actors; ++a) stream.add_actor("a" + std::to_string(a + 1));

    std::uniform_int_distribution<int> events(0, max_events);
    std::uniform_int_distribution<int> pick_actor(0, actors - 1);
    std::uniform_int_distribution<int> pick_layer(0, layers - 1);
    std::uniform_int_distribution<std::int64_t> pick_time(0, max_time);
    const int n = events(rng);
    for (int e = 0; e < n; ++e) {
        int i = pick_actor(rng);
        int j = pick_actor(rng);
        if (i == j) continue;
        stream.add_event(msn::ActorId(i), msn::ActorId(j),
                         msn::LayerId(pick_layer(rng)), pick_time(rng));
    }
    return stream;
}

/// Brute-force edge set of one layer: every (source, target) label pair.
inline std::set<std::pair<std::string, std::string>> layer_pairs_by_label(
    const msn::Msn& net, msn::LayerId layer) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& e : net.edges())
        if (e.layer == layer)
            pairs.insert({net.label(e.source), net.label(e.target)});
    return pairs;
}

inline std::set<std::pair<std::string, std::string>> view_pairs_by_label(
    const msn::SsnView& view) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& [s, t] : view.edges())
        pairs.insert({view.label(s), view.label(t)});
    return pairs;
}

} // namespace fixtures
