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

#include <span>
#include <vector>

#include "msn/core.hpp"
#include "msn/dimensions.hpp"
#include "msn/multigraph.hpp"

namespace msn {

struct DegreeRow {
    ActorId actor;
    std::uint64_t out = 0;
    std::uint64_t in = 0;

    bool operator==(const DegreeRow&) const = default;
};

// OpenMP-parallel read kernels. The networks are frozen during a kernel run;
// each thread writes only its own actor slots (or window slot), so output is
// deterministic regardless of scheduling. Serial twins with the same results
// live in msn::reference.
namespace kernels {

/// Multiedge counts per ordered actor pair, parallel over actors.
MultigraphView multigraph(const Msn& net);

/// Layer aggregation, parallel over actors. `layers` must already be
/// validated and deduplicated (see validate_layer_selection).
SsnView aggregate(const Msn& net, std::span<const LayerId> layers,
                  AggregationPolicy policy);

/// Per-actor aggregated out/in degree over the given layers, in actor
/// insertion order. `layers` must be validated and deduplicated.
std::vector<DegreeRow> degree_table(const Msn& net,
                                    std::span<const LayerId> layers,
                                    AggregationPolicy policy);

/// Windowed snapshots, parallel over windows. Inputs must be pre-validated
/// (time_series in dimensions.hpp does this).
std::vector<TimeSlice> time_series(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length,
                                   std::int64_t step,
                                   const std::optional<std::string>& group);

} // namespace kernels

// Serial reference implementations. Deliberately written the simple way
// (edge iteration into ordered maps) so they can back-check the kernels in
// tests and benchmarks.
namespace reference {

MultigraphView multigraph(const Msn& net);
SsnView aggregate(const Msn& net, std::span<const LayerId> layers,
                  AggregationPolicy policy);
std::vector<DegreeRow> degree_table(const Msn& net,
                                    std::span<const LayerId> layers,
                                    AggregationPolicy policy);
std::vector<TimeSlice> time_series(const EventStream& events,
                                   const GroupMembership& membership,
                                   const std::vector<std::string>& layers,
                                   std::int64_t window_length,
                                   std::int64_t step,
                                   const std::optional<std::string>& group);

} // namespace reference

} // namespace msn
