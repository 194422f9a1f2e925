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

namespace msn {

/// Aggregated degree of one actor over a layer subset. Union counts distinct
/// neighbours across the layers; Count sums per-layer degrees (so parallel
/// edges to the same neighbour count once per layer).
std::uint64_t degree(const Msn& net, ActorId actor, Direction direction,
                     std::span<const LayerId> layers, AggregationPolicy policy);

struct DegreeReport {
    ActorId actor;
    std::vector<LayerId> layers;
    AggregationPolicy policy = AggregationPolicy::Count;
    // (out, in) per selected layer, in selection order
    std::vector<std::pair<std::uint64_t, std::uint64_t>> per_layer;
    std::uint64_t aggregated_out = 0;
    std::uint64_t aggregated_in = 0;
};

DegreeReport degree_report(const Msn& net, ActorId actor,
                           std::span<const LayerId> layers,
                           AggregationPolicy policy);

/// Directed density of one layer: |E_l| / (|V|·(|V|−1)). Needs at least two
/// actors.
double density(const Msn& net, LayerId layer);

/// Layers ordered by density, descending; ties broken by layer name.
std::vector<LayerId> density_ranking(const Msn& net);

struct DensityReport {
    LayerId layer;
    std::size_t edges = 0;
    double value = 0.0;
};

/// One row per layer, in ranking order.
std::vector<DensityReport> density_report(const Msn& net);

/// Per-layer neighbour sets of one actor, plus union and intersection of the
/// out-neighbour sets across all layers.
struct NeighbourhoodReport {
    ActorId actor;
    std::vector<std::vector<ActorId>> out_per_layer; // indexed by layer
    std::vector<std::vector<ActorId>> in_per_layer;
    std::vector<ActorId> out_union;
    std::vector<ActorId> out_intersection;
};

NeighbourhoodReport neighbourhood_report(const Msn& net, ActorId actor);

} // namespace msn
