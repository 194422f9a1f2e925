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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "msn/core.hpp"

namespace msn {

/// A family of separate single-layer networks, each with its own local actor
/// namespace, joined by identity classes: a class names the actors (at most
/// one per network) that represent the same entity.
class PillarNetwork {
public:
    struct Network {
        std::vector<std::string> actors;                       // local labels
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // local indices
    };

    struct IdentityClass {
        std::string label;
        // (network index, local actor index) pairs
        std::vector<std::pair<std::uint32_t, std::uint32_t>> members;
    };

    PillarNetwork() = default;
    PillarNetwork(std::vector<Network> networks,
                  std::vector<IdentityClass> classes)
        : networks_(std::move(networks)), classes_(std::move(classes)) {}

    const std::vector<Network>& networks() const { return networks_; }
    const std::vector<IdentityClass>& classes() const { return classes_; }

private:
    std::vector<Network> networks_;
    std::vector<IdentityClass> classes_;
};

/// Many-to-one actor assignment (e.g. employees to their department), by
/// label. Totality is only required where it is used (coarsen).
class NodeMapping {
public:
    /// Registers fine -> coarse. Re-assigning a fine actor to a different
    /// coarse actor is rejected; identical repeats collapse.
    void assign(std::string_view fine, std::string_view coarse);

    std::optional<std::string> coarse_of(std::string_view fine) const;
    const std::map<std::string, std::string>& assignment() const {
        return assignment_;
    }

private:
    std::map<std::string, std::string> assignment_;
};

/// Quotient of a view under a node mapping: directed edges between coarse
/// actors with multiplicity counts. Unlike a network layer, self-loops are
/// meaningful here (edges inside one coarse actor) and are kept.
class CoarseGraph {
public:
    using Entry = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>;

    CoarseGraph(std::vector<std::string> actors, std::vector<Entry> entries);

    /// Coarse actor labels, sorted.
    const std::vector<std::string>& actors() const { return actors_; }

    std::uint32_t index_of(std::string_view label) const;

    /// Number of fine edges mapped onto (from, to); 0 when none.
    std::uint64_t count(std::uint32_t from, std::uint32_t to) const;
    std::uint64_t count(std::string_view from, std::string_view to) const;

    /// Sum of all counts (= number of fine edges in the source view).
    std::uint64_t total() const { return total_; }

    /// Nonzero (from, to, count) entries, sorted by (from, to).
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<std::string> actors_;
    std::vector<Entry> entries_;
    std::uint64_t total_ = 0;
};

/// The network re-encoded as a shared actor set plus one named edge set per
/// layer. This form is lossless in both directions.
class EdgeSetFamily {
public:
    struct Set {
        std::string name;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs; // into actors()
    };

    EdgeSetFamily() = default;
    EdgeSetFamily(std::vector<std::string> actors, std::vector<Set> sets)
        : actors_(std::move(actors)), sets_(std::move(sets)) {}

    const std::vector<std::string>& actors() const { return actors_; }
    const std::vector<Set>& sets() const { return sets_; }

private:
    std::vector<std::string> actors_;
    std::vector<Set> sets_;
};

/// One network per layer over cloned local namespaces; identity classes pair
/// same-label actors across all networks (one class per actor).
PillarNetwork to_pillar(const Msn& net);

/// Rebuilds a unified-actor network from a pillar family. The class relation
/// must be one-to-one per network (non_injective_mapping otherwise) and
/// cover every local actor (unmapped_actor). layer_names must match the
/// number of networks.
Msn from_pillar(const PillarNetwork& pillar,
                const std::vector<std::string>& layer_names);

/// Quotients the view under the mapping; the mapping must cover every view
/// actor (partial_mapping otherwise).
CoarseGraph coarsen(const SsnView& view, const NodeMapping& mapping);

EdgeSetFamily to_edge_set_family(const Msn& net);

/// Inverse of to_edge_set_family; rejects self-pairs.
Msn from_edge_set_family(const EdgeSetFamily& family);

} // namespace msn
