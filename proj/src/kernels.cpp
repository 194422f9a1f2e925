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
#include "msn/kernels.hpp"

#include <algorithm>

namespace msn::kernels {

namespace {

// Concatenation of one actor's out-rows over the selected layers. The rows
// are id-sorted individually, so a sort of the concatenation is cheap.
std::vector<ActorId> merged_row(const Msn& net, std::span<const LayerId> layers,
                                std::uint32_t slot, Direction direction) {
    std::vector<ActorId> merged;
    for (LayerId l : layers) {
        auto row = direction == Direction::Out ? net.out_row(l.value, slot)
                                               : net.in_row(l.value, slot);
        merged.insert(merged.end(), row.begin(), row.end());
    }
    std::sort(merged.begin(), merged.end());
    return merged;
}

MultigraphView::Row run_length_encode(const std::vector<ActorId>& sorted) {
    MultigraphView::Row row;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        row.emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
        i = j;
    }
    return row;
}

} // namespace

MultigraphView multigraph(const Msn& net) {
    const auto slots = static_cast<std::int64_t>(net.slot_count());
    const auto all = net.layers();
    std::vector<MultigraphView::Row> rows(net.slot_count());

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < slots; ++s) {
        if (!net.slot_alive(static_cast<std::uint32_t>(s))) continue;
        rows[s] = run_length_encode(
            merged_row(net, all, static_cast<std::uint32_t>(s), Direction::Out));
    }
    return MultigraphView(net.label_table(), net.actors(), std::move(rows));
}

SsnView aggregate(const Msn& net, std::span<const LayerId> layers,
                  AggregationPolicy policy) {
    const auto slots = static_cast<std::int64_t>(net.slot_count());
    std::vector<MultigraphView::Row> rows(net.slot_count());

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < slots; ++s) {
        if (!net.slot_alive(static_cast<std::uint32_t>(s))) continue;
        rows[s] = run_length_encode(
            merged_row(net, layers, static_cast<std::uint32_t>(s), Direction::Out));
    }

    std::vector<std::pair<ActorId, ActorId>> edges;
    std::vector<std::uint32_t> counts;
    for (std::uint32_t s = 0; s < rows.size(); ++s) {
        for (const auto& [target, count] : rows[s]) {
            edges.emplace_back(ActorId(s), target);
            if (policy == AggregationPolicy::Count) counts.push_back(count);
        }
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
    const auto slots = static_cast<std::int64_t>(net.slot_count());
    std::vector<DegreeRow> per_slot(net.slot_count());

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < slots; ++s) {
        auto slot = static_cast<std::uint32_t>(s);
        if (!net.slot_alive(slot)) continue;
        DegreeRow& row = per_slot[s];
        row.actor = ActorId(slot);
        if (policy == AggregationPolicy::Count) {
            for (LayerId l : layers) {
                row.out += net.out_row(l.value, slot).size();
                row.in += net.in_row(l.value, slot).size();
            }
        } else {
            auto out = merged_row(net, layers, slot, Direction::Out);
            out.erase(std::unique(out.begin(), out.end()), out.end());
            auto in = merged_row(net, layers, slot, Direction::In);
            in.erase(std::unique(in.begin(), in.end()), in.end());
            row.out = out.size();
            row.in = in.size();
        }
    }

    std::vector<DegreeRow> table;
    table.reserve(net.actor_count());
    for (std::uint32_t s = 0; s < per_slot.size(); ++s)
        if (net.slot_alive(s)) table.push_back(per_slot[s]);
    return table;
}

std::vector<TimeSlice> time_series(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length, std::int64_t step,
                                   const std::optional<std::string>& group) {
    auto span = events.time_span();
    if (!span) return {};

    std::vector<std::int64_t> starts;
    for (std::int64_t t = span->first;;) {
        starts.push_back(t);
        if (t > span->second - step) break; // overflow-safe: step >= 1
        t += step;
    }

    std::vector<TimeSlice> slices(starts.size());
    const auto n = static_cast<std::int64_t>(starts.size());

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t w = 0; w < n; ++w) {
        SnapshotKey key{layers, starts[w], window_end(starts[w], window_length),
                        group};
        slices[w] = TimeSlice{key.begin, key.end,
                              snapshot(events, membership, key)};
    }
    return slices;
}

} // namespace msn::kernels
