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

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msn/core.hpp"

namespace msn {

/// A timestamped interaction. Unlike edges, the same (source, target, layer)
/// may recur at different (or equal) timestamps.
class EventStream {
public:
    struct Event {
        ActorId source;
        ActorId target;
        LayerId layer;
        std::int64_t time;
    };

    /// Layers register on first use.
    EventStream() = default;

    /// Fixes the layer set up front; events on other layers are rejected
    /// with undeclared_layer.
    explicit EventStream(std::vector<std::string> layer_names);

    ActorId add_actor(std::string_view label);
    LayerId add_layer(std::string_view name);

    void add_event(ActorId source, ActorId target, LayerId layer,
                   std::int64_t time);
    /// Convenience: registers labels as needed.
    void add_event(std::string_view source, std::string_view target,
                   std::string_view layer, std::int64_t time);

    const std::vector<Event>& events() const { return events_; }

    const std::vector<std::string>& actor_labels() const { return actor_labels_; }
    const std::vector<std::string>& layer_names() const { return layer_names_; }
    std::optional<ActorId> find_actor(std::string_view label) const;
    std::optional<LayerId> find_layer(std::string_view name) const;
    const std::string& label(ActorId a) const;
    const std::string& layer_name(LayerId l) const;

    /// (min, max) event time; empty when there are no events.
    std::optional<std::pair<std::int64_t, std::int64_t>> time_span() const;

private:
    std::vector<std::string> actor_labels_;
    std::unordered_map<std::string, std::uint32_t> actor_index_;
    std::vector<std::string> layer_names_;
    std::unordered_map<std::string, std::uint32_t> layer_index_;
    bool layers_declared_ = false;
    std::vector<Event> events_;
};

/// Actor-to-groups assignment. Groups may overlap and an actor may be in no
/// group at all.
class GroupMembership {
public:
    void add(std::string_view actor, std::string_view group);

    bool is_member(std::string_view actor, std::string_view group) const;
    bool has_group(std::string_view group) const;

    /// All group labels, sorted.
    const std::set<std::string>& groups() const { return all_groups_; }

    /// Members of one group, label-sorted.
    std::vector<std::string> members(std::string_view group) const;

    const std::map<std::string, std::set<std::string>>& assignment() const {
        return groups_of_;
    }

private:
    std::map<std::string, std::set<std::string>> groups_of_;
    std::set<std::string> all_groups_;
};

/// Coordinate selecting a sub-network: a layer subset, a half-open time
/// window [begin, end), and an optional group.
struct SnapshotKey {
    std::vector<std::string> layers;
    std::int64_t begin = 0;
    std::int64_t end = 0;
    std::optional<std::string> group;
};

/// The sub-network at the key's intersection. Actors are the group's members
/// (all stream actors when no group is given); an edge ⟨x,y,l⟩ exists when
/// some event on a selected layer falls inside the window and both endpoints
/// pass the group filter. Repeated events collapse to one edge.
Msn snapshot(const EventStream& events, const GroupMembership& membership,
             const SnapshotKey& key);

/// Folds the selected layers into one view under the given policy. Runs the
/// parallel kernel.
SsnView aggregate_layers(const Msn& net, std::span<const LayerId> layers,
                         AggregationPolicy policy);

struct OverlapReport {
    std::vector<std::pair<ActorId, ActorId>> shared;
    std::vector<std::pair<ActorId, ActorId>> a_only;
    std::vector<std::pair<ActorId, ActorId>> b_only;
    double jaccard = 1.0; // 1.0 when both views are empty
};

/// Compares the Union views of two layer subsets.
OverlapReport compare_aggregations(const Msn& net,
                                   std::span<const LayerId> layers_a,
                                   std::span<const LayerId> layers_b);

struct TimeSlice {
    std::int64_t begin = 0;
    std::int64_t end = 0;
    Msn network;
};

/// Sliding-window snapshots (tumbling when step == window_length) over the
/// event span: windows start at the earliest event time and advance by step
/// while ≤ the latest. No events yields an empty list. Windows are
/// independent and computed in parallel, assembled in window order.
std::vector<TimeSlice> time_series(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length,
                                   std::int64_t step,
                                   const std::optional<std::string>& group = {});

/// Validates a layer selection: non-empty, all known; duplicates dropped
/// (first occurrence kept). Shared by the aggregation entry points.
std::vector<LayerId> validate_layer_selection(const Msn& net,
                                              std::span<const LayerId> layers);

/// begin + length, saturating instead of overflowing. Event timestamps are
/// < INT64_MAX, so a saturated window stays non-empty.
inline std::int64_t window_end(std::int64_t begin, std::int64_t length) {
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    return begin > kMax - length ? kMax : begin + length;
}

} // namespace msn
