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
#include "msn/models.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace msn {

// --- NodeMapping ---

void NodeMapping::assign(std::string_view fine, std::string_view coarse) {
    require_actor_label(fine);
    require_actor_label(coarse);
    auto [it, inserted] = assignment_.emplace(fine, coarse);
    if (!inserted && it->second != coarse)
        throw Error(errc::invalid_argument,
                    "conflicting assignment for '" + std::string(fine) + "'");
}

std::optional<std::string> NodeMapping::coarse_of(std::string_view fine) const {
    auto it = assignment_.find(std::string(fine));
    if (it == assignment_.end()) return std::nullopt;
    return it->second;
}

// --- CoarseGraph ---

CoarseGraph::CoarseGraph(std::vector<std::string> actors,
                         std::vector<Entry> entries)
    : actors_(std::move(actors)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (const auto& [from, to, count] : entries_) total_ += count;
}

std::uint32_t CoarseGraph::index_of(std::string_view label) const {
    auto it = std::lower_bound(actors_.begin(), actors_.end(), label);
    if (it == actors_.end() || *it != label)
        throw Error(errc::unknown_actor,
                    "unknown coarse actor '" + std::string(label) + "'");
    return static_cast<std::uint32_t>(it - actors_.begin());
}

std::uint64_t CoarseGraph::count(std::uint32_t from, std::uint32_t to) const {
    if (from >= actors_.size() || to >= actors_.size())
        throw Error(errc::unknown_actor, "coarse actor index out of range");
    Entry probe{from, to, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                               [](const Entry& a, const Entry& b) {
                                   return std::tie(std::get<0>(a), std::get<1>(a)) <
                                          std::tie(std::get<0>(b), std::get<1>(b));
                               });
    if (it == entries_.end() || std::get<0>(*it) != from || std::get<1>(*it) != to)
        return 0;
    return std::get<2>(*it);
}

std::uint64_t CoarseGraph::count(std::string_view from, std::string_view to) const {
    return count(index_of(from), index_of(to));
}

// --- pillar ---

PillarNetwork to_pillar(const Msn& net) {
    const auto live = net.actors();

    // local index = position in the live actor order, identical per network
    std::unordered_map<std::uint32_t, std::uint32_t> local_of;
    std::vector<std::string> local_labels;
    for (std::uint32_t i = 0; i < live.size(); ++i) {
        local_of.emplace(live[i].value, i);
        local_labels.push_back(net.label(live[i]));
    }

    std::vector<PillarNetwork::Network> networks;
    for (LayerId l : net.layers()) {
        PillarNetwork::Network network;
        network.actors = local_labels;
        for (const auto& [s, t] : net.layer_edges(l))
            network.edges.emplace_back(local_of.at(s.value), local_of.at(t.value));
        std::sort(network.edges.begin(), network.edges.end());
        networks.push_back(std::move(network));
    }

    std::vector<PillarNetwork::IdentityClass> classes;
    for (std::uint32_t i = 0; i < live.size(); ++i) {
        PillarNetwork::IdentityClass cls;
        cls.label = local_labels[i];
        for (std::uint32_t k = 0; k < networks.size(); ++k)
            cls.members.emplace_back(k, i);
        classes.push_back(std::move(cls));
    }
    return PillarNetwork(std::move(networks), std::move(classes));
}

Msn from_pillar(const PillarNetwork& pillar,
                const std::vector<std::string>& layer_names) {
    const auto& networks = pillar.networks();
    if (layer_names.size() != networks.size())
        throw Error(errc::invalid_argument,
                    "expected one layer name per network");

    Msn net(layer_names);

    // class label per (network, local actor)
    std::vector<std::unordered_map<std::uint32_t, const std::string*>> class_of(
        networks.size());
    for (const auto& cls : pillar.classes()) {
        require_actor_label(cls.label);
        if (net.find_actor(cls.label))
            throw Error(errc::non_injective_mapping,
                        "two identity classes labelled '" + cls.label + "'");
        net.add_actor(cls.label);
        for (const auto& [network, local] : cls.members) {
            if (network >= networks.size() ||
                local >= networks[network].actors.size())
                throw Error(errc::invalid_argument,
                            "class member outside the pillar");
            auto [it, inserted] = class_of[network].emplace(local, &cls.label);
            if (!inserted)
                throw Error(errc::non_injective_mapping,
                            "two classes claim actor '" +
                                networks[network].actors[local] +
                                "' of network " + std::to_string(network));
        }
    }
    for (std::uint32_t k = 0; k < networks.size(); ++k) {
        for (std::uint32_t local = 0; local < networks[k].actors.size(); ++local)
            if (!class_of[k].count(local))
                throw Error(errc::unmapped_actor,
                            "actor '" + networks[k].actors[local] +
                                "' of network " + std::to_string(k) +
                                " is in no identity class");
    }
    // one-to-one also means no class holds two actors of one network
    for (const auto& cls : pillar.classes()) {
        std::vector<std::uint32_t> nets;
        for (const auto& [network, local] : cls.members) nets.push_back(network);
        std::sort(nets.begin(), nets.end());
        if (std::adjacent_find(nets.begin(), nets.end()) != nets.end())
            throw Error(errc::non_injective_mapping,
                        "class '" + cls.label +
                            "' holds two actors of one network");
    }

    for (std::uint32_t k = 0; k < networks.size(); ++k) {
        for (const auto& [s, t] : networks[k].edges) {
            if (s >= networks[k].actors.size() || t >= networks[k].actors.size())
                throw Error(errc::invalid_argument,
                            "edge endpoint outside network " + std::to_string(k));
            ActorId x = *net.find_actor(*class_of[k].at(s));
            ActorId y = *net.find_actor(*class_of[k].at(t));
            net.add_edge(x, y, LayerId(k));
        }
    }
    return net;
}

// --- coarsen ---

CoarseGraph coarsen(const SsnView& view, const NodeMapping& mapping) {
    // coarse label per view actor; totality check up front
    std::unordered_map<std::uint32_t, std::string> coarse_of;
    std::vector<std::string> coarse_labels;
    for (ActorId a : view.actors()) {
        auto coarse = mapping.coarse_of(view.label(a));
        if (!coarse)
            throw Error(errc::partial_mapping,
                        "actor '" + view.label(a) + "' has no coarse assignment");
        coarse_of.emplace(a.value, *coarse);
        coarse_labels.push_back(*coarse);
    }
    std::sort(coarse_labels.begin(), coarse_labels.end());
    coarse_labels.erase(std::unique(coarse_labels.begin(), coarse_labels.end()),
                        coarse_labels.end());

    auto index_of = [&](const std::string& label) {
        return static_cast<std::uint32_t>(
            std::lower_bound(coarse_labels.begin(), coarse_labels.end(), label) -
            coarse_labels.begin());
    };

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> tally;
    for (const auto& [s, t] : view.edges())
        ++tally[{index_of(coarse_of.at(s.value)), index_of(coarse_of.at(t.value))}];

    std::vector<CoarseGraph::Entry> entries;
    for (const auto& [pair, count] : tally)
        entries.emplace_back(pair.first, pair.second, count);
    return CoarseGraph(std::move(coarse_labels), std::move(entries));
}

// --- edge-set family ---

EdgeSetFamily to_edge_set_family(const Msn& net) {
    const auto live = net.actors();
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    std::vector<std::string> actors;
    for (std::uint32_t i = 0; i < live.size(); ++i) {
        dense.emplace(live[i].value, i);
        actors.push_back(net.label(live[i]));
    }

    std::vector<EdgeSetFamily::Set> sets;
    for (LayerId l : net.layers()) {
        EdgeSetFamily::Set set;
        set.name = net.layer_name(l);
        for (const auto& [s, t] : net.layer_edges(l))
            set.pairs.emplace_back(dense.at(s.value), dense.at(t.value));
        std::sort(set.pairs.begin(), set.pairs.end());
        sets.push_back(std::move(set));
    }
    return EdgeSetFamily(std::move(actors), std::move(sets));
}

Msn from_edge_set_family(const EdgeSetFamily& family) {
    std::vector<std::string> layer_names;
    for (const auto& set : family.sets()) layer_names.push_back(set.name);

    Msn net(layer_names);
    std::vector<ActorId> ids;
    for (const auto& label : family.actors()) ids.push_back(net.add_actor(label));

    for (std::uint32_t k = 0; k < family.sets().size(); ++k) {
        const auto& set = family.sets()[k];
        auto pairs = set.pairs;
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        for (const auto& [s, t] : pairs) {
            if (s >= ids.size() || t >= ids.size())
                throw Error(errc::unknown_actor,
                            "edge pair outside the actor set");
            if (s == t)
                throw Error(errc::self_pair,
                            "self pair on '" + family.actors()[s] +
                                "' in set '" + set.name + "'");
            net.add_edge(ids[s], ids[t], LayerId(k));
        }
    }
    return net;
}

} // namespace msn
