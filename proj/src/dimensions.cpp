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
#include "msn/dimensions.hpp"

#include <algorithm>
#include <limits>

#include "msn/kernels.hpp"

namespace msn {

// --- EventStream ---

EventStream::EventStream(std::vector<std::string> layer_names)
    : layers_declared_(true) {
    for (const auto& name : layer_names) {
        require_layer_name(name);
        if (layer_index_.count(name))
            throw Error(errc::duplicate_layer, "duplicate layer '" + name + "'");
        layer_index_.emplace(name, static_cast<std::uint32_t>(layer_names_.size()));
        layer_names_.push_back(name);
    }
}

ActorId EventStream::add_actor(std::string_view label) {
    require_actor_label(label);
    auto it = actor_index_.find(std::string(label));
    if (it != actor_index_.end()) return ActorId(it->second);
    auto id = static_cast<std::uint32_t>(actor_labels_.size());
    actor_index_.emplace(std::string(label), id);
    actor_labels_.emplace_back(label);
    return ActorId(id);
}

LayerId EventStream::add_layer(std::string_view name) {
    require_layer_name(name);
    auto it = layer_index_.find(std::string(name));
    if (it != layer_index_.end()) return LayerId(it->second);
    if (layers_declared_)
        throw Error(errc::undeclared_layer,
                    "layer '" + std::string(name) + "' not declared");
    auto id = static_cast<std::uint32_t>(layer_names_.size());
    layer_index_.emplace(std::string(name), id);
    layer_names_.emplace_back(name);
    return LayerId(id);
}

void EventStream::add_event(ActorId source, ActorId target, LayerId layer,
                            std::int64_t time) {
    if (source.value >= actor_labels_.size() || target.value >= actor_labels_.size())
        throw Error(errc::unknown_actor, "unknown actor id");
    if (layer.value >= layer_names_.size())
        throw Error(errc::unknown_layer, "unknown layer id");
    if (source == target)
        throw Error(errc::self_loop,
                    "self loop on '" + actor_labels_[source.value] + "'");
    if (time < 0) throw Error(errc::bad_timestamp, "negative timestamp");
    if (time == std::numeric_limits<std::int64_t>::max())
        throw Error(errc::bad_timestamp, "timestamp too large");
    events_.push_back({source, target, layer, time});
}

void EventStream::add_event(std::string_view source, std::string_view target,
                            std::string_view layer, std::int64_t time) {
    ActorId s = add_actor(source);
    ActorId t = add_actor(target);
    add_event(s, t, add_layer(layer), time);
}

std::optional<ActorId> EventStream::find_actor(std::string_view label) const {
    auto it = actor_index_.find(std::string(label));
    if (it == actor_index_.end()) return std::nullopt;
    return ActorId(it->second);
}

std::optional<LayerId> EventStream::find_layer(std::string_view name) const {
    auto it = layer_index_.find(std::string(name));
    if (it == layer_index_.end()) return std::nullopt;
    return LayerId(it->second);
}

const std::string& EventStream::label(ActorId a) const {
    if (a.value >= actor_labels_.size())
        throw Error(errc::unknown_actor, "unknown actor id");
    return actor_labels_[a.value];
}

const std::string& EventStream::layer_name(LayerId l) const {
    if (l.value >= layer_names_.size())
        throw Error(errc::unknown_layer, "unknown layer id");
    return layer_names_[l.value];
}

std::optional<std::pair<std::int64_t, std::int64_t>> EventStream::time_span()
    const {
    if (events_.empty()) return std::nullopt;
    std::int64_t lo = events_.front().time;
    std::int64_t hi = lo;
    for (const auto& e : events_) {
        lo = std::min(lo, e.time);
        hi = std::max(hi, e.time);
    }
    return std::make_pair(lo, hi);
}

// --- GroupMembership ---

void GroupMembership::add(std::string_view actor, std::string_view group) {
    require_actor_label(actor);
    require_actor_label(group);
    groups_of_[std::string(actor)].insert(std::string(group));
    all_groups_.insert(std::string(group));
}

bool GroupMembership::is_member(std::string_view actor,
                                std::string_view group) const {
    auto it = groups_of_.find(std::string(actor));
    return it != groups_of_.end() && it->second.count(std::string(group));
}

bool GroupMembership::has_group(std::string_view group) const {
    return all_groups_.count(std::string(group)) != 0;
}

std::vector<std::string> GroupMembership::members(std::string_view group) const {
    std::vector<std::string> out;
    for (const auto& [actor, groups] : groups_of_)
        if (groups.count(std::string(group))) out.push_back(actor);
    return out; // std::map iteration keeps this label-sorted
}

// --- snapshot ---

Msn snapshot(const EventStream& events, const GroupMembership& membership,
             const SnapshotKey& key) {
    if (key.begin >= key.end)
        throw Error(errc::empty_window, "empty time window");
    if (key.layers.empty())
        throw Error(errc::empty_layer_set, "no layers selected");
    for (const auto& name : key.layers)
        if (!events.find_layer(name))
            throw Error(errc::unknown_layer, "unknown layer '" + name + "'");
    if (key.group && !membership.has_group(*key.group))
        throw Error(errc::unknown_group, "unknown group '" + *key.group + "'");

    Msn net(key.layers);

    if (key.group) {
        for (const auto& actor : membership.members(*key.group))
            net.add_actor(actor);
    } else {
        for (const auto& actor : events.actor_labels()) net.add_actor(actor);
    }

    // stream layer id -> snapshot layer id (or absent)
    std::vector<std::optional<LayerId>> layer_map(events.layer_names().size());
    for (const auto& name : key.layers)
        layer_map[events.find_layer(name)->value] = net.layer(name);

    for (const auto& e : events.events()) {
        if (e.time < key.begin || e.time >= key.end) continue;
        const auto& mapped = layer_map[e.layer.value];
        if (!mapped) continue;
        const auto& src = events.label(e.source);
        const auto& tgt = events.label(e.target);
        if (key.group && !(membership.is_member(src, *key.group) &&
                           membership.is_member(tgt, *key.group)))
            continue;
        ActorId x = *net.find_actor(src);
        ActorId y = *net.find_actor(tgt);
        if (!net.has_edge(x, y, *mapped)) net.add_edge(x, y, *mapped);
    }
    return net;
}

// --- aggregation ---

std::vector<LayerId> validate_layer_selection(const Msn& net,
                                              std::span<const LayerId> layers) {
    if (layers.empty())
        throw Error(errc::empty_layer_set, "no layers selected");
    std::vector<LayerId> out;
    for (LayerId l : layers) {
        if (l.value >= net.layer_count())
            throw Error(errc::unknown_layer, "unknown layer id");
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return out;
}

SsnView aggregate_layers(const Msn& net, std::span<const LayerId> layers,
                         AggregationPolicy policy) {
    auto selection = validate_layer_selection(net, layers);
    return kernels::aggregate(net, selection, policy);
}

OverlapReport compare_aggregations(const Msn& net,
                                   std::span<const LayerId> layers_a,
                                   std::span<const LayerId> layers_b) {
    SsnView a = aggregate_layers(net, layers_a, AggregationPolicy::Union);
    SsnView b = aggregate_layers(net, layers_b, AggregationPolicy::Union);

    OverlapReport report;
    std::set_intersection(a.edges().begin(), a.edges().end(),
                          b.edges().begin(), b.edges().end(),
                          std::back_inserter(report.shared));
    std::set_difference(a.edges().begin(), a.edges().end(), b.edges().begin(),
                        b.edges().end(), std::back_inserter(report.a_only));
    std::set_difference(b.edges().begin(), b.edges().end(), a.edges().begin(),
                        a.edges().end(), std::back_inserter(report.b_only));

    std::size_t union_size =
        report.shared.size() + report.a_only.size() + report.b_only.size();
    report.jaccard = union_size == 0
                         ? 1.0
                         : static_cast<double>(report.shared.size()) /
                               static_cast<double>(union_size);
    return report;
}

// --- time series ---

static void validate_series_inputs(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length, std::int64_t step,
                                   const std::optional<std::string>& group) {
    if (window_length <= 0)
        throw Error(errc::empty_window, "window length must be positive");
    if (step <= 0)
        throw Error(errc::invalid_argument, "step must be positive");
    if (layers.empty())
        throw Error(errc::empty_layer_set, "no layers selected");
    for (const auto& name : layers)
        if (!events.find_layer(name))
            throw Error(errc::unknown_layer, "unknown layer '" + name + "'");
    if (group && !membership.has_group(*group))
        throw Error(errc::unknown_group, "unknown group '" + *group + "'");
}

std::vector<TimeSlice> time_series(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length, std::int64_t step,
                                   const std::optional<std::string>& group) {
    validate_series_inputs(events, membership, layers, window_length, step, group);
    return kernels::time_series(events, membership, layers, window_length, step,
                                group);
}

} // namespace msn
