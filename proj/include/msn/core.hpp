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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msn/types.hpp"

namespace msn {

/// A directed edge labelled with the layer it belongs to.
struct LayeredEdge {
    ActorId source;
    ActorId target;
    LayerId layer;

    bool operator==(const LayeredEdge&) const = default;
};

/// Which layers a view was built from and how they were folded.
struct Provenance {
    std::vector<std::string> layers;
    AggregationPolicy policy = AggregationPolicy::Union;
};

/// Immutable single-layer (or aggregated) directed view over a network's
/// actor set. Edges are sorted by (source, target) id and never contain
/// self-loops or duplicates. When built under the Count policy, counts()
/// holds one positive multiplicity per edge.
class SsnView {
public:
    SsnView(std::shared_ptr<const std::vector<std::string>> labels,
            std::vector<ActorId> actors,
            std::vector<std::pair<ActorId, ActorId>> edges,
            Provenance provenance,
            std::vector<std::uint32_t> counts = {});

    std::size_t actor_count() const { return actors_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<ActorId>& actors() const { return actors_; }
    const std::vector<std::pair<ActorId, ActorId>>& edges() const { return edges_; }

    bool has_counts() const { return !counts_.empty(); }
    const std::vector<std::uint32_t>& counts() const { return counts_; }

    const Provenance& provenance() const { return provenance_; }
    const std::string& label(ActorId a) const;

    bool contains_edge(ActorId source, ActorId target) const;

    /// Semantic equality: same actor labels, same edges (as label pairs),
    /// same counts.
    bool operator==(const SsnView& other) const;

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
    std::vector<ActorId> actors_;
    std::vector<std::pair<ActorId, ActorId>> edges_;
    std::vector<std::uint32_t> counts_;
    Provenance provenance_;
};

/// A multi-layered social network: a unified actor set, a layer set fixed at
/// construction, and directed (source, target, layer) edges with at most one
/// edge per triple and no self-loops.
///
/// Storage is per-layer sorted adjacency (out- and in-rows) over dense actor
/// slots. Construction is single-writer; once built, all read access is
/// const and safe to share across threads.
class Msn {
public:
    /// An empty network with no layers (no edge can ever be added).
    Msn();

    /// Declares the fixed layer set. Names must be pairwise distinct and
    /// well formed.
    explicit Msn(std::vector<std::string> layer_names);

    // --- actors ---

    /// Registers a label, or returns the existing id when already present.
    ActorId add_actor(std::string_view label);

    std::optional<ActorId> find_actor(std::string_view label) const;
    bool contains(ActorId a) const;
    const std::string& label(ActorId a) const;

    /// Live actors in insertion order.
    std::vector<ActorId> actors() const;
    std::size_t actor_count() const { return live_actors_; }

    // --- layers ---

    std::size_t layer_count() const { return layer_names_.size(); }
    std::optional<LayerId> find_layer(std::string_view name) const;

    /// Resolves a layer name, throwing unknown_layer when absent.
    LayerId layer(std::string_view name) const;
    const std::string& layer_name(LayerId l) const;

    /// All layers in declaration order.
    std::vector<LayerId> layers() const;
    const std::vector<std::string>& layer_names() const { return layer_names_; }

    // --- edges ---

    void add_edge(ActorId source, ActorId target, LayerId layer);
    void remove_edge(ActorId source, ActorId target, LayerId layer);

    /// Removes the actor and every edge incident to it, on all layers.
    void remove_actor(ActorId a);

    bool has_edge(ActorId source, ActorId target, LayerId layer) const;

    std::size_t edge_count() const { return total_edges_; }
    std::size_t edge_count(LayerId layer) const;

    /// Out-/in-neighbours on one layer, sorted by actor id.
    std::span<const ActorId> out_neighbors(ActorId a, LayerId layer) const;
    std::span<const ActorId> in_neighbors(ActorId a, LayerId layer) const;

    /// Union of direction-respecting neighbours over the given layers,
    /// deduplicated, sorted by actor id. Layer set must be non-empty.
    std::vector<ActorId> neighbors(ActorId a, Direction direction,
                                   std::span<const LayerId> layers) const;

    /// One layer's edges as (source, target) pairs sorted by id.
    std::vector<std::pair<ActorId, ActorId>> layer_edges(LayerId layer) const;

    /// Every edge, in canonical order: layer declaration order, then source
    /// label, then target label.
    std::vector<LayeredEdge> edges() const;

    /// View over the full actor set with exactly this layer's edges.
    SsnView layer_projection(LayerId layer) const;

    /// Semantic equality: same layer-name set, same live-actor label set,
    /// same (source, target, layer) label triples.
    bool operator==(const Msn& other) const;

    // --- raw slot access (kernels, views) ---
    // Slots include removed actors; callers must consult slot_alive().

    std::size_t slot_count() const { return labels_->size(); }
    bool slot_alive(std::uint32_t slot) const { return alive_[slot] != 0; }
    std::span<const ActorId> out_row(std::uint32_t layer, std::uint32_t slot) const;
    std::span<const ActorId> in_row(std::uint32_t layer, std::uint32_t slot) const;

    /// Shared label table, indexed by actor slot. Views hold a reference so
    /// labels stay valid after the network itself mutates or dies.
    std::shared_ptr<const std::vector<std::string>> label_table() const;

private:
    struct LayerStore {
        std::vector<std::vector<ActorId>> out;
        std::vector<std::vector<ActorId>> in;
        std::size_t edges = 0;
    };

    std::vector<std::string>& labels_mut();
    void require_actor(ActorId a) const;
    void require_layer(LayerId l) const;

    std::shared_ptr<std::vector<std::string>> labels_;
    std::vector<std::uint8_t> alive_;
    std::unordered_map<std::string, std::uint32_t> actor_index_;
    std::vector<std::string> layer_names_;
    std::unordered_map<std::string, std::uint32_t> layer_index_;
    std::vector<LayerStore> store_;
    std::size_t live_actors_ = 0;
    std::size_t total_edges_ = 0;
};

} // namespace msn
