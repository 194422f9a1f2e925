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
#include "msn/core.hpp"

#include <algorithm>
#include <cctype>

namespace msn {

const char* errc_name(errc code) {
    switch (code) {
        case errc::duplicate_layer: return "duplicate layer";
        case errc::empty_name: return "empty name";
        case errc::invalid_label: return "invalid label";
        case errc::self_loop: return "self loop";
        case errc::unknown_actor: return "unknown actor";
        case errc::unknown_layer: return "unknown layer";
        case errc::duplicate_edge: return "duplicate edge";
        case errc::not_found: return "not found";
        case errc::empty_layer_set: return "empty layer set";
        case errc::non_injective_mapping: return "non-injective mapping";
        case errc::unmapped_actor: return "unmapped actor";
        case errc::partial_mapping: return "partial mapping";
        case errc::empty_window: return "empty window";
        case errc::unknown_group: return "unknown group";
        case errc::too_few_actors: return "too few actors";
        case errc::self_pair: return "self pair";
        case errc::bad_header: return "bad header";
        case errc::arity_mismatch: return "arity mismatch";
        case errc::bad_timestamp: return "bad timestamp";
        case errc::undeclared_layer: return "undeclared layer";
        case errc::invalid_argument: return "invalid argument";
        case errc::io_failure: return "i/o failure";
    }
    return "unknown error";
}

bool valid_label(std::string_view label) {
    if (label.empty()) return false;
    if (std::isspace(static_cast<unsigned char>(label.front())) ||
        std::isspace(static_cast<unsigned char>(label.back())))
        return false;
    for (char c : label)
        if (c == ',' || c == '\n' || c == '\r') return false;
    return true;
}

void require_actor_label(std::string_view label) {
    if (!valid_label(label))
        throw Error(errc::invalid_label,
                    "invalid label '" + std::string(label) + "'");
}

void require_layer_name(std::string_view name) {
    if (name.empty()) throw Error(errc::empty_name, "empty layer name");
    if (!valid_label(name))
        throw Error(errc::invalid_label,
                    "invalid layer name '" + std::string(name) + "'");
}

namespace {

// Sorted-vector insert; returns false when already present.
bool insert_sorted(std::vector<ActorId>& row, ActorId v) {
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it != row.end() && *it == v) return false;
    row.insert(it, v);
    return true;
}

bool erase_sorted(std::vector<ActorId>& row, ActorId v) {
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || !(*it == v)) return false;
    row.erase(it);
    return true;
}

bool contains_sorted(std::span<const ActorId> row, ActorId v) {
    return std::binary_search(row.begin(), row.end(), v);
}

} // namespace

// --- SsnView ---

SsnView::SsnView(std::shared_ptr<const std::vector<std::string>> labels,
                 std::vector<ActorId> actors,
                 std::vector<std::pair<ActorId, ActorId>> edges,
                 Provenance provenance,
                 std::vector<std::uint32_t> counts)
    : labels_(std::move(labels)),
      actors_(std::move(actors)),
      edges_(std::move(edges)),
      counts_(std::move(counts)),
      provenance_(std::move(provenance)) {}

const std::string& SsnView::label(ActorId a) const {
    if (a.value >= labels_->size())
        throw Error(errc::unknown_actor, "actor id out of range");
    return (*labels_)[a.value];
}

bool SsnView::contains_edge(ActorId source, ActorId target) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(source, target));
}

bool SsnView::operator==(const SsnView& other) const {
    if (actors_.size() != other.actors_.size() ||
        edges_.size() != other.edges_.size() || counts_ != other.counts_)
        return false;
    for (std::size_t i = 0; i < actors_.size(); ++i)
        if (label(actors_[i]) != other.label(other.actors_[i])) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (label(edges_[i].first) != other.label(other.edges_[i].first) ||
            label(edges_[i].second) != other.label(other.edges_[i].second))
            return false;
    }
    return true;
}

// --- Msn ---

Msn::Msn() : labels_(std::make_shared<std::vector<std::string>>()) {}

Msn::Msn(std::vector<std::string> layer_names) : Msn() {
    for (const auto& name : layer_names) {
        require_layer_name(name);
        if (layer_index_.count(name))
            throw Error(errc::duplicate_layer, "duplicate layer '" + name + "'");
        layer_index_.emplace(name, static_cast<std::uint32_t>(layer_names_.size()));
        layer_names_.push_back(name);
    }
    store_.resize(layer_names_.size());
}

std::vector<std::string>& Msn::labels_mut() {
    if (labels_.use_count() > 1)
        labels_ = std::make_shared<std::vector<std::string>>(*labels_);
    return *labels_;
}

void Msn::require_actor(ActorId a) const {
    if (a.value >= alive_.size() || !alive_[a.value])
        throw Error(errc::unknown_actor, "unknown actor id");
}

void Msn::require_layer(LayerId l) const {
    if (l.value >= layer_names_.size())
        throw Error(errc::unknown_layer, "unknown layer id");
}

ActorId Msn::add_actor(std::string_view label) {
    require_actor_label(label);
    auto it = actor_index_.find(std::string(label));
    if (it != actor_index_.end()) return ActorId(it->second);

    auto slot = static_cast<std::uint32_t>(labels_->size());
    labels_mut().emplace_back(label);
    alive_.push_back(1);
    actor_index_.emplace(std::string(label), slot);
    for (auto& layer : store_) {
        layer.out.emplace_back();
        layer.in.emplace_back();
    }
    ++live_actors_;
    return ActorId(slot);
}

std::optional<ActorId> Msn::find_actor(std::string_view label) const {
    auto it = actor_index_.find(std::string(label));
    if (it == actor_index_.end()) return std::nullopt;
    return ActorId(it->second);
}

bool Msn::contains(ActorId a) const {
    return a.value < alive_.size() && alive_[a.value];
}

const std::string& Msn::label(ActorId a) const {
    require_actor(a);
    return (*labels_)[a.value];
}

std::vector<ActorId> Msn::actors() const {
    std::vector<ActorId> out;
    out.reserve(live_actors_);
    for (std::uint32_t s = 0; s < alive_.size(); ++s)
        if (alive_[s]) out.push_back(ActorId(s));
    return out;
}

std::optional<LayerId> Msn::find_layer(std::string_view name) const {
    auto it = layer_index_.find(std::string(name));
    if (it == layer_index_.end()) return std::nullopt;
    return LayerId(it->second);
}

LayerId Msn::layer(std::string_view name) const {
    auto found = find_layer(name);
    if (!found)
        throw Error(errc::unknown_layer,
                    "unknown layer '" + std::string(name) + "'");
    return *found;
}

const std::string& Msn::layer_name(LayerId l) const {
    require_layer(l);
    return layer_names_[l.value];
}

std::vector<LayerId> Msn::layers() const {
    std::vector<LayerId> out;
    out.reserve(layer_names_.size());
    for (std::uint32_t i = 0; i < layer_names_.size(); ++i)
        out.push_back(LayerId(i));
    return out;
}

void Msn::add_edge(ActorId source, ActorId target, LayerId layer) {
    require_actor(source);
    require_actor(target);
    require_layer(layer);
    if (source == target)
        throw Error(errc::self_loop,
                    "self loop on '" + label(source) + "'");

    auto& st = store_[layer.value];
    if (!insert_sorted(st.out[source.value], target))
        throw Error(errc::duplicate_edge,
                    "duplicate edge " + label(source) + "->" + label(target) +
                        " on layer '" + layer_names_[layer.value] + "'");
    insert_sorted(st.in[target.value], source);
    ++st.edges;
    ++total_edges_;
}

void Msn::remove_edge(ActorId source, ActorId target, LayerId layer) {
    require_actor(source);
    require_actor(target);
    require_layer(layer);

    auto& st = store_[layer.value];
    if (!erase_sorted(st.out[source.value], target))
        throw Error(errc::not_found, "no such edge");
    erase_sorted(st.in[target.value], source);
    --st.edges;
    --total_edges_;
}

void Msn::remove_actor(ActorId a) {
    if (!contains(a)) throw Error(errc::not_found, "no such actor");

    for (auto& st : store_) {
        auto& out = st.out[a.value];
        auto& in = st.in[a.value];
        std::size_t incident = out.size() + in.size();
        for (ActorId t : out) erase_sorted(st.in[t.value], a);
        for (ActorId s : in) erase_sorted(st.out[s.value], a);
        out.clear();
        in.clear();
        st.edges -= incident;
        total_edges_ -= incident;
    }
    actor_index_.erase((*labels_)[a.value]);
    alive_[a.value] = 0;
    --live_actors_;
}

bool Msn::has_edge(ActorId source, ActorId target, LayerId layer) const {
    require_actor(source);
    require_actor(target);
    require_layer(layer);
    return contains_sorted(store_[layer.value].out[source.value], target);
}

std::size_t Msn::edge_count(LayerId layer) const {
    require_layer(layer);
    return store_[layer.value].edges;
}

std::span<const ActorId> Msn::out_neighbors(ActorId a, LayerId layer) const {
    require_actor(a);
    require_layer(layer);
    return store_[layer.value].out[a.value];
}

std::span<const ActorId> Msn::in_neighbors(ActorId a, LayerId layer) const {
    require_actor(a);
    require_layer(layer);
    return store_[layer.value].in[a.value];
}

std::vector<ActorId> Msn::neighbors(ActorId a, Direction direction,
                                    std::span<const LayerId> layers) const {
    require_actor(a);
    if (layers.empty())
        throw Error(errc::empty_layer_set, "no layers selected");
    for (LayerId l : layers) require_layer(l);

    std::vector<ActorId> merged;
    for (LayerId l : layers) {
        const auto& row = direction == Direction::Out ? store_[l.value].out[a.value]
                                                      : store_[l.value].in[a.value];
        merged.insert(merged.end(), row.begin(), row.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

std::vector<std::pair<ActorId, ActorId>> Msn::layer_edges(LayerId layer) const {
    require_layer(layer);
    std::vector<std::pair<ActorId, ActorId>> out;
    out.reserve(store_[layer.value].edges);
    const auto& rows = store_[layer.value].out;
    for (std::uint32_t s = 0; s < rows.size(); ++s)
        for (ActorId t : rows[s]) out.emplace_back(ActorId(s), t);
    return out;
}

std::vector<LayeredEdge> Msn::edges() const {
    std::vector<LayeredEdge> out;
    out.reserve(total_edges_);
    for (std::uint32_t l = 0; l < store_.size(); ++l) {
        auto pairs = layer_edges(LayerId(l));
        std::sort(pairs.begin(), pairs.end(),
                  [this](const auto& a, const auto& b) {
                      const auto& sa = (*labels_)[a.first.value];
                      const auto& sb = (*labels_)[b.first.value];
                      if (sa != sb) return sa < sb;
                      return (*labels_)[a.second.value] < (*labels_)[b.second.value];
                  });
        for (const auto& [s, t] : pairs) out.push_back({s, t, LayerId(l)});
    }
    return out;
}

SsnView Msn::layer_projection(LayerId layer) const {
    require_layer(layer);
    return SsnView(label_table(), actors(), layer_edges(layer),
                   Provenance{{layer_names_[layer.value]}, AggregationPolicy::Union});
}

bool Msn::operator==(const Msn& other) const {
    if (live_actors_ != other.live_actors_ || total_edges_ != other.total_edges_)
        return false;

    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(layer_names_) != sorted(other.layer_names_)) return false;

    std::vector<std::string> mine, theirs;
    for (ActorId a : actors()) mine.push_back(label(a));
    for (ActorId a : other.actors()) theirs.push_back(other.label(a));
    if (sorted(std::move(mine)) != sorted(std::move(theirs))) return false;

    using Triple = std::tuple<std::string, std::string, std::string>;
    auto triples = [](const Msn& g) {
        std::vector<Triple> out;
        for (const auto& e : g.edges())
            out.emplace_back(g.layer_name(e.layer), g.label(e.source),
                             g.label(e.target));
        std::sort(out.begin(), out.end());
        return out;
    };
    return triples(*this) == triples(other);
}

std::span<const ActorId> Msn::out_row(std::uint32_t layer, std::uint32_t slot) const {
    return store_[layer].out[slot];
}

std::span<const ActorId> Msn::in_row(std::uint32_t layer, std::uint32_t slot) const {
    return store_[layer].in[slot];
}

std::shared_ptr<const std::vector<std::string>> Msn::label_table() const {
    return labels_;
}

} // namespace msn
