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
#include "msn/multigraph.hpp"

#include <algorithm>

#include "msn/kernels.hpp"

namespace msn {

MultigraphView::MultigraphView(
    std::shared_ptr<const std::vector<std::string>> labels,
    std::vector<ActorId> actors, std::vector<Row> rows)
    : labels_(std::move(labels)),
      actors_(std::move(actors)),
      rows_(std::move(rows)),
      in_view_(rows_.size(), 0) {
    for (ActorId a : actors_) in_view_[a.value] = 1;
    for (const auto& row : rows_)
        for (const auto& [target, count] : row) total_ += count;
}

void MultigraphView::require_actor(ActorId a) const {
    if (a.value >= rows_.size() || !in_view_[a.value])
        throw Error(errc::unknown_actor, "actor id not in view");
}

std::uint32_t MultigraphView::count(ActorId source, ActorId target) const {
    require_actor(source);
    require_actor(target);
    const Row& row = rows_[source.value];
    auto it = std::lower_bound(
        row.begin(), row.end(), target,
        [](const auto& entry, ActorId t) { return entry.first < t; });
    if (it == row.end() || !(it->first == target)) return 0;
    return it->second;
}

const MultigraphView::Row& MultigraphView::row(ActorId source) const {
    require_actor(source);
    return rows_[source.value];
}

const std::string& MultigraphView::label(ActorId a) const {
    require_actor(a);
    return (*labels_)[a.value];
}

bool MultigraphView::operator==(const MultigraphView& other) const {
    if (actors_.size() != other.actors_.size() || total_ != other.total_)
        return false;
    for (std::size_t i = 0; i < actors_.size(); ++i) {
        ActorId a = actors_[i];
        ActorId b = other.actors_[i];
        if (label(a) != other.label(b)) return false;
        const Row& ra = rows_[a.value];
        const Row& rb = other.rows_[b.value];
        if (ra.size() != rb.size()) return false;
        for (std::size_t k = 0; k < ra.size(); ++k) {
            if (label(ra[k].first) != other.label(rb[k].first) ||
                ra[k].second != rb[k].second)
                return false;
        }
    }
    return true;
}

RepeatedAdjacencyList::RepeatedAdjacencyList(
    std::shared_ptr<const std::vector<std::string>> labels,
    std::vector<ActorId> actors, std::vector<std::vector<ActorId>> lists)
    : labels_(std::move(labels)),
      actors_(std::move(actors)),
      lists_(std::move(lists)) {}

const std::vector<ActorId>& RepeatedAdjacencyList::list(ActorId actor) const {
    if (actor.value >= lists_.size())
        throw Error(errc::unknown_actor, "actor id out of range");
    return lists_[actor.value];
}

const std::string& RepeatedAdjacencyList::label(ActorId a) const {
    if (a.value >= labels_->size())
        throw Error(errc::unknown_actor, "actor id out of range");
    return (*labels_)[a.value];
}

std::uint64_t RepeatedAdjacencyList::total_entries() const {
    std::uint64_t total = 0;
    for (const auto& list : lists_) total += list.size();
    return total;
}

std::string RepeatedAdjacencyList::to_string(ActorId actor) const {
    std::string out = "[";
    bool first = true;
    for (ActorId n : list(actor)) {
        if (!first) out += ", ";
        out += label(n);
        first = false;
    }
    out += "]";
    return out;
}

MultigraphView to_multigraph(const Msn& net) {
    return kernels::multigraph(net);
}

RepeatedAdjacencyList to_repeated_list(const MultigraphView& mg) {
    auto labels = mg.label_table();
    std::vector<std::vector<ActorId>> lists(labels->size());
    for (ActorId a : mg.actors()) {
        auto& list = lists[a.value];
        for (const auto& [target, count] : mg.row(a))
            list.insert(list.end(), count, target);
        std::sort(list.begin(), list.end(), [&](ActorId x, ActorId y) {
            return (*labels)[x.value] < (*labels)[y.value];
        });
    }
    return RepeatedAdjacencyList(std::move(labels), mg.actors(), std::move(lists));
}

std::uint32_t multiedge_count(const MultigraphView& mg, ActorId source,
                              ActorId target) {
    return mg.count(source, target);
}

} // namespace msn
