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
#include "msn/measures.hpp"

#include <algorithm>

#include "msn/dimensions.hpp"

namespace msn {

std::uint64_t degree(const Msn& net, ActorId actor, Direction direction,
                     std::span<const LayerId> layers, AggregationPolicy policy) {
    auto selection = validate_layer_selection(net, layers);
    if (policy == AggregationPolicy::Union)
        return net.neighbors(actor, direction, selection).size();

    std::uint64_t total = 0;
    for (LayerId l : selection)
        total += direction == Direction::Out ? net.out_neighbors(actor, l).size()
                                             : net.in_neighbors(actor, l).size();
    return total;
}

DegreeReport degree_report(const Msn& net, ActorId actor,
                           std::span<const LayerId> layers,
                           AggregationPolicy policy) {
    DegreeReport report;
    report.actor = actor;
    report.layers = validate_layer_selection(net, layers);
    report.policy = policy;
    for (LayerId l : report.layers)
        report.per_layer.emplace_back(net.out_neighbors(actor, l).size(),
                                      net.in_neighbors(actor, l).size());
    report.aggregated_out = degree(net, actor, Direction::Out, report.layers, policy);
    report.aggregated_in = degree(net, actor, Direction::In, report.layers, policy);
    return report;
}

double density(const Msn& net, LayerId layer) {
    const auto n = net.actor_count();
    if (n < 2)
        throw Error(errc::too_few_actors,
                    "density needs at least two actors");
    return static_cast<double>(net.edge_count(layer)) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::vector<LayerId> density_ranking(const Msn& net) {
    if (net.actor_count() < 2)
        throw Error(errc::too_few_actors,
                    "density needs at least two actors");
    auto ranked = net.layers();
    std::stable_sort(ranked.begin(), ranked.end(), [&](LayerId a, LayerId b) {
        // shared |V| makes edge counts order densities exactly
        if (net.edge_count(a) != net.edge_count(b))
            return net.edge_count(a) > net.edge_count(b);
        return net.layer_name(a) < net.layer_name(b);
    });
    return ranked;
}

std::vector<DensityReport> density_report(const Msn& net) {
    std::vector<DensityReport> rows;
    for (LayerId l : density_ranking(net))
        rows.push_back({l, net.edge_count(l), density(net, l)});
    return rows;
}

NeighbourhoodReport neighbourhood_report(const Msn& net, ActorId actor) {
    if (!net.contains(actor))
        throw Error(errc::unknown_actor, "unknown actor id");

    NeighbourhoodReport report;
    report.actor = actor;
    bool first = true;
    for (LayerId l : net.layers()) {
        auto out = net.out_neighbors(actor, l);
        auto in = net.in_neighbors(actor, l);
        report.out_per_layer.emplace_back(out.begin(), out.end());
        report.in_per_layer.emplace_back(in.begin(), in.end());

        std::vector<ActorId> merged;
        std::set_union(report.out_union.begin(), report.out_union.end(),
                       out.begin(), out.end(), std::back_inserter(merged));
        report.out_union = std::move(merged);

        if (first) {
            report.out_intersection.assign(out.begin(), out.end());
            first = false;
        } else {
            std::vector<ActorId> kept;
            std::set_intersection(report.out_intersection.begin(),
                                  report.out_intersection.end(), out.begin(),
                                  out.end(), std::back_inserter(kept));
            report.out_intersection = std::move(kept);
        }
    }
    return report;
}

} // namespace msn
