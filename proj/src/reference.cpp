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
#include <map>
#include <set>

#include "msn/kernels.hpp"

namespace msn::reference {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

MultigraphView multigraph(const Msn& net) {
    std::map<Pair, std::uint32_t> tally;
    for (LayerId l : net.layers())
        for (const auto& [s, t] : net.layer_edges(l))
            ++tally[{s.value, t.value}];

    std::vector<MultigraphView::Row> rows(net.slot_count());
    for (const auto& [pair, count] : tally)
        rows[pair.first].emplace_back(ActorId(pair.second), count);
    return MultigraphView(net.label_table(), net.actors(), std::move(rows));
}

SsnView aggregate(const Msn& net, std::span<const LayerId> layers,
                  AggregationPolicy policy) {
    std::map<Pair, std::uint32_t> tally;
    for (LayerId l : layers)
        for (const auto& [s, t] : net.layer_edges(l))
            ++tally[{s.value, t.value}];

    std::vector<std::pair<ActorId, ActorId>> edges;
    std::vector<std::uint32_t> counts;
    for (const auto& [pair, count] : tally) {
        edges.emplace_back(ActorId(pair.first), ActorId(pair.second));
        if (policy == AggregationPolicy::Count) counts.push_back(count);
    }

    Provenance provenance;
    provenance.policy = policy;
    for (LayerId l : layers) provenance.layers.push_back(net.layer_name(l));
    return SsnView(net.label_table(), net.actors(), std::move(edges),
                   std::move(provenance), std::move(counts));
}

std::vector<DegreeRow> degree_table(const Msn& net,
                                    std::span<const LayerId> layers,
                                    AggregationPolicy policy) {
    std::vector<DegreeRow> table;
    table.reserve(net.actor_count());
    for (ActorId a : net.actors()) {
        DegreeRow row{a, 0, 0};
        if (policy == AggregationPolicy::Count) {
            for (LayerId l : layers) {
                row.out += net.out_neighbors(a, l).size();
                row.in += net.in_neighbors(a, l).size();
            }
        } else {
            row.out = net.neighbors(a, Direction::Out, layers).size();
            row.in = net.neighbors(a, Direction::In, layers).size();
        }
        table.push_back(row);
    }
    return table;
}

std::vector<TimeSlice> time_series(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length, std::int64_t step,
                                   const std::optional<std::string>& group) {
    auto span = events.time_span();
    if (!span) return {};

    std::vector<TimeSlice> slices;
    for (std::int64_t t = span->first;;) {
        SnapshotKey key{layers, t, window_end(t, window_length), group};
        slices.push_back({key.begin, key.end, snapshot(events, membership, key)});
        if (t > span->second - step) break; // overflow-safe: step >= 1
        t += step;
    }
    return slices;
}

} // namespace msn::reference
