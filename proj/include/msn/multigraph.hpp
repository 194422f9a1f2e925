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
#include <string>
#include <utility>
#include <vector>

#include "msn/core.hpp"

namespace msn {

/// Layer-erased multigraph view: for each ordered actor pair, the number of
/// layers carrying that edge. Zero entries are not stored. The conversion is
/// irreversible — which layer contributed which parallel edge is lost.
class MultigraphView {
public:
    using Row = std::vector<std::pair<ActorId, std::uint32_t>>;

    MultigraphView(std::shared_ptr<const std::vector<std::string>> labels,
                   std::vector<ActorId> actors, std::vector<Row> rows);

    const std::vector<ActorId>& actors() const { return actors_; }
    std::size_t actor_count() const { return actors_.size(); }

    /// Multiplicity of (source, target); 0 when the pair has no edge on any
    /// layer. Throws unknown_actor for ids outside the view.
    std::uint32_t count(ActorId source, ActorId target) const;

    /// Sum of all multiplicities (= |E| of the source network).
    std::uint64_t total() const { return total_; }

    /// Nonzero out-entries of one actor, sorted by target id.
    const Row& row(ActorId source) const;

    const std::string& label(ActorId a) const;
    std::shared_ptr<const std::vector<std::string>> label_table() const {
        return labels_;
    }

    /// Semantic equality: same actor labels, same (source, target, count)
    /// entries by label.
    bool operator==(const MultigraphView& other) const;

private:
    void require_actor(ActorId a) const;

    std::shared_ptr<const std::vector<std::string>> labels_;
    std::vector<ActorId> actors_;
    std::vector<Row> rows_;               // indexed by actor slot
    std::vector<std::uint8_t> in_view_;   // indexed by actor slot
    std::uint64_t total_ = 0;
};

/// Per-actor neighbour lists with one entry per parallel edge, sorted by
/// neighbour label (so three edges to y read y, y, y).
class RepeatedAdjacencyList {
public:
    RepeatedAdjacencyList(std::shared_ptr<const std::vector<std::string>> labels,
                          std::vector<ActorId> actors,
                          std::vector<std::vector<ActorId>> lists);

    const std::vector<ActorId>& actors() const { return actors_; }
    const std::vector<ActorId>& list(ActorId actor) const;
    const std::string& label(ActorId a) const;

    /// Total entries across all actors (= |E| of the source network).
    std::uint64_t total_entries() const;

    /// "[v, y, y, y, z, z]" — the list rendered as labels.
    std::string to_string(ActorId actor) const;

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
    std::vector<ActorId> actors_;
    std::vector<std::vector<ActorId>> lists_; // indexed by actor slot
};

/// Collapses the network to multiedge counts. Runs the parallel kernel.
MultigraphView to_multigraph(const Msn& net);

/// Expands counts into repeated, label-sorted neighbour lists.
RepeatedAdjacencyList to_repeated_list(const MultigraphView& mg);

/// counts[(source, target)] or 0.
std::uint32_t multiedge_count(const MultigraphView& mg, ActorId source,
                              ActorId target);

} // namespace msn
