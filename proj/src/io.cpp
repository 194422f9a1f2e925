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
#include "msn/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <tuple>
#include <unordered_map>

namespace msn {

namespace {

struct LineReader {
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        if (!std::getline(in_, out)) return false;
        ++line_no_;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        if (line_no_ == 1 && out.starts_with("\xEF\xBB\xBF")) out.erase(0, 3);
        return true;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::vector<std::string> split_label_list(const std::string& text,
                                          std::size_t line) {
    std::vector<std::string> labels;
    for (auto& token : split_fields(text)) {
        if (!valid_label(token))
            throw Error(errc::invalid_label,
                        "invalid label '" + token + "' in directive", line);
        labels.push_back(std::move(token));
    }
    return labels;
}

struct Directives {
    std::optional<std::vector<std::string>> actors;
    std::optional<std::vector<std::string>> layers;
};

// Recognizes `# actors: ...` and `# layers: ...` ahead of the header; any
// other comment is ignored.
void scan_directive(const std::string& line, std::size_t line_no,
                    Directives& directives) {
    std::string_view body(line);
    body.remove_prefix(1); // '#'
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);

    for (auto [prefix, slot] :
         {std::pair{std::string_view("actors:"), &directives.actors},
          std::pair{std::string_view("layers:"), &directives.layers}}) {
        if (!body.starts_with(prefix)) continue;
        std::string_view rest = body.substr(prefix.size());
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        if (rest.empty()) return; // empty list: nothing to declare
        *slot = split_label_list(std::string(rest), line_no);
        return;
    }
}

std::int64_t parse_timestamp(const std::string& field, std::size_t line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                     value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0)
        throw Error(errc::bad_timestamp,
                    "bad timestamp '" + field + "'", line);
    return value;
}

// Rethrows a validation error with the input line attached.
template <typename Fn>
void at_line(std::size_t line, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        if (e.line() != 0) throw;
        throw Error(e.code(), e.what(), line);
    }
}

constexpr std::string_view kStaticHeader = "source,target,layer";
constexpr std::string_view kTemporalHeader = "source,target,layer,time";

struct EdgeListInput {
    bool temporal = false;
    std::optional<std::vector<std::string>> declared_layers;
    std::optional<std::vector<std::string>> declared_actors;
    LineReader reader;
};

EdgeListInput open_edge_list(std::istream& in, const ParseOptions& opts) {
    EdgeListInput input{false, {}, {}, LineReader(in)};
    Directives directives;

    std::string line;
    bool have_header = false;
    while (input.reader.next(line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            scan_directive(line, input.reader.line_no(), directives);
            continue;
        }
        if (line == kStaticHeader) {
            input.temporal = false;
        } else if (line == kTemporalHeader) {
            input.temporal = true;
        } else {
            throw Error(errc::bad_header,
                        "expected header '" + std::string(kStaticHeader) +
                            "' or '" + std::string(kTemporalHeader) + "'",
                        input.reader.line_no());
        }
        have_header = true;
        break;
    }
    if (!have_header)
        throw Error(errc::bad_header, "missing header line",
                    input.reader.line_no() + 1);

    input.declared_layers =
        opts.declared_layers ? opts.declared_layers : directives.layers;
    input.declared_actors = std::move(directives.actors);
    return input;
}

Msn parse_static(EdgeListInput& input) {
    struct Record {
        std::string source, target, layer;
        std::size_t line;
    };
    std::vector<Record> records;
    std::vector<std::string> layer_order;
    std::set<std::string> layer_seen;
    std::set<std::tuple<std::string, std::string, std::string>> triples;

    const bool declared = input.declared_layers.has_value();
    if (declared) {
        for (const auto& name : *input.declared_layers) {
            require_layer_name(name);
            if (!layer_seen.insert(name).second)
                throw Error(errc::duplicate_layer,
                            "duplicate layer '" + name + "'");
            layer_order.push_back(name);
        }
    }

    std::string line;
    while (input.reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t line_no = input.reader.line_no();
        auto fields = split_fields(line);
        if (fields.size() != 3)
            throw Error(errc::arity_mismatch,
                        "expected 3 fields, got " + std::to_string(fields.size()),
                        line_no);
        at_line(line_no, [&] {
            require_actor_label(fields[0]);
            require_actor_label(fields[1]);
            require_layer_name(fields[2]);
        });
        if (fields[0] == fields[1])
            throw Error(errc::self_loop, "self loop on '" + fields[0] + "'",
                        line_no);
        if (!layer_seen.count(fields[2])) {
            if (declared)
                throw Error(errc::undeclared_layer,
                            "layer '" + fields[2] + "' not declared", line_no);
            layer_seen.insert(fields[2]);
            layer_order.push_back(fields[2]);
        }
        if (!triples.insert({fields[0], fields[1], fields[2]}).second)
            throw Error(errc::duplicate_edge,
                        "duplicate edge " + fields[0] + "->" + fields[1] +
                            " on layer '" + fields[2] + "'",
                        line_no);
        records.push_back({std::move(fields[0]), std::move(fields[1]),
                           std::move(fields[2]), line_no});
    }

    Msn net(layer_order);
    if (input.declared_actors)
        for (const auto& label : *input.declared_actors) net.add_actor(label);
    for (const auto& r : records) {
        at_line(r.line, [&] {
            // sequenced so first appearance fixes the actor order
            ActorId source = net.add_actor(r.source);
            ActorId target = net.add_actor(r.target);
            net.add_edge(source, target, net.layer(r.layer));
        });
    }
    return net;
}

EventStream parse_temporal(EdgeListInput& input) {
    EventStream stream = input.declared_layers
                             ? EventStream(*input.declared_layers)
                             : EventStream();
    if (input.declared_actors)
        for (const auto& label : *input.declared_actors) stream.add_actor(label);

    std::string line;
    while (input.reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t line_no = input.reader.line_no();
        auto fields = split_fields(line);
        if (fields.size() != 4)
            throw Error(errc::arity_mismatch,
                        "expected 4 fields, got " + std::to_string(fields.size()),
                        line_no);
        std::int64_t time = parse_timestamp(fields[3], line_no);
        at_line(line_no,
                [&] { stream.add_event(fields[0], fields[1], fields[2], time); });
    }
    return stream;
}

} // namespace

std::variant<Msn, EventStream> parse_edge_list(std::istream& in,
                                               const ParseOptions& opts) {
    auto input = open_edge_list(in, opts);
    if (input.temporal) return parse_temporal(input);
    return parse_static(input);
}

Msn read_msn(std::istream& in, const ParseOptions& opts) {
    auto input = open_edge_list(in, opts);
    if (input.temporal)
        throw Error(errc::bad_header,
                    "expected a static edge list (header '" +
                        std::string(kStaticHeader) + "')",
                    input.reader.line_no());
    return parse_static(input);
}

EventStream read_events(std::istream& in, const ParseOptions& opts) {
    auto input = open_edge_list(in, opts);
    if (!input.temporal)
        throw Error(errc::bad_header,
                    "expected a temporal edge list (header '" +
                        std::string(kTemporalHeader) + "')",
                    input.reader.line_no());
    return parse_temporal(input);
}

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += items[i];
    }
    return out;
}

} // namespace

std::string write_edge_list(const Msn& net) {
    std::string out;

    std::vector<std::string> actor_labels;
    for (ActorId a : net.actors()) actor_labels.push_back(net.label(a));
    if (!actor_labels.empty())
        out += "# actors: " + join(actor_labels) + "\n";
    if (net.layer_count() != 0)
        out += "# layers: " + join(net.layer_names()) + "\n";

    out += kStaticHeader;
    out += '\n';
    for (const auto& e : net.edges()) {
        out += net.label(e.source);
        out += ',';
        out += net.label(e.target);
        out += ',';
        out += net.layer_name(e.layer);
        out += '\n';
    }
    return out;
}

GroupMembership read_membership(std::istream& in) {
    LineReader reader(in);
    std::string line;
    bool have_header = false;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line != "actor,group")
            throw Error(errc::bad_header, "expected header 'actor,group'",
                        reader.line_no());
        have_header = true;
        break;
    }
    if (!have_header)
        throw Error(errc::bad_header, "missing header line", reader.line_no() + 1);

    GroupMembership membership;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (fields.size() != 2)
            throw Error(errc::arity_mismatch,
                        "expected 2 fields, got " + std::to_string(fields.size()),
                        reader.line_no());
        at_line(reader.line_no(), [&] { membership.add(fields[0], fields[1]); });
    }
    return membership;
}

NodeMapping read_node_mapping(std::istream& in) {
    LineReader reader(in);
    std::string line;
    bool have_header = false;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line != "fine,coarse")
            throw Error(errc::bad_header, "expected header 'fine,coarse'",
                        reader.line_no());
        have_header = true;
        break;
    }
    if (!have_header)
        throw Error(errc::bad_header, "missing header line", reader.line_no() + 1);

    NodeMapping mapping;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (fields.size() != 2)
            throw Error(errc::arity_mismatch,
                        "expected 2 fields, got " + std::to_string(fields.size()),
                        reader.line_no());
        at_line(reader.line_no(), [&] { mapping.assign(fields[0], fields[1]); });
    }
    return mapping;
}

// --- pillar files ---

std::vector<std::filesystem::path> write_pillar(
    const PillarNetwork& pillar, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;

    auto open_out = [](const std::filesystem::path& path) {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw Error(errc::io_failure,
                        "cannot write '" + path.string() + "'");
        return out;
    };

    {
        auto path = dir / "mapping.csv";
        auto out = open_out(path);
        out << "class_id,network_index,local_actor\n";
        for (const auto& cls : pillar.classes()) {
            auto members = cls.members;
            std::sort(members.begin(), members.end());
            for (const auto& [network, local] : members)
                out << cls.label << ',' << network << ','
                    << pillar.networks()[network].actors[local] << '\n';
        }
        written.push_back(path);
    }

    for (std::size_t k = 0; k < pillar.networks().size(); ++k) {
        const auto& network = pillar.networks()[k];
        auto path = dir / ("network_" + std::to_string(k) + ".csv");
        auto out = open_out(path);
        out << "source,target\n";
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [s, t] : network.edges)
            rows.emplace_back(network.actors[s], network.actors[t]);
        std::sort(rows.begin(), rows.end());
        for (const auto& [s, t] : rows) out << s << ',' << t << '\n';
        written.push_back(path);
    }
    return written;
}

namespace {

PillarNetwork::Network read_pillar_network(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_failure, "cannot open '" + path.string() + "'");

    LineReader reader(in);
    std::string line;
    bool have_header = false;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line != "source,target")
            throw Error(errc::bad_header, "expected header 'source,target'",
                        reader.line_no());
        have_header = true;
        break;
    }
    if (!have_header)
        throw Error(errc::bad_header, "missing header line", reader.line_no() + 1);

    PillarNetwork::Network network;
    std::unordered_map<std::string, std::uint32_t> index;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    auto local_of = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        auto id = static_cast<std::uint32_t>(network.actors.size());
        index.emplace(label, id);
        network.actors.push_back(label);
        return id;
    };

    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (fields.size() != 2)
            throw Error(errc::arity_mismatch,
                        "expected 2 fields, got " + std::to_string(fields.size()),
                        reader.line_no());
        at_line(reader.line_no(), [&] {
            require_actor_label(fields[0]);
            require_actor_label(fields[1]);
        });
        if (fields[0] == fields[1])
            throw Error(errc::self_loop, "self loop on '" + fields[0] + "'",
                        reader.line_no());
        auto edge = std::make_pair(local_of(fields[0]), local_of(fields[1]));
        if (!seen.insert(edge).second)
            throw Error(errc::duplicate_edge,
                        "duplicate edge " + fields[0] + "->" + fields[1],
                        reader.line_no());
        network.edges.push_back(edge);
    }
    std::sort(network.edges.begin(), network.edges.end());
    return network;
}

} // namespace

PillarNetwork read_pillar(const std::filesystem::path& dir) {
    std::vector<PillarNetwork::Network> networks;
    for (std::size_t k = 0;; ++k) {
        auto path = dir / ("network_" + std::to_string(k) + ".csv");
        if (!std::filesystem::exists(path)) break;
        networks.push_back(read_pillar_network(path));
    }

    auto mapping_path = dir / "mapping.csv";
    std::ifstream in(mapping_path, std::ios::binary);
    if (!in)
        throw Error(errc::io_failure,
                    "cannot open '" + mapping_path.string() + "'");

    LineReader reader(in);
    std::string line;
    bool have_header = false;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line != "class_id,network_index,local_actor")
            throw Error(errc::bad_header,
                        "expected header 'class_id,network_index,local_actor'",
                        reader.line_no());
        have_header = true;
        break;
    }
    if (!have_header)
        throw Error(errc::bad_header, "missing header line", reader.line_no() + 1);

    std::vector<PillarNetwork::IdentityClass> classes;
    std::unordered_map<std::string, std::size_t> class_index;
    std::vector<std::unordered_map<std::string, std::uint32_t>> local_index(
        networks.size());
    for (std::size_t k = 0; k < networks.size(); ++k)
        for (std::uint32_t i = 0; i < networks[k].actors.size(); ++i)
            local_index[k].emplace(networks[k].actors[i], i);

    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t line_no = reader.line_no();
        auto fields = split_fields(line);
        if (fields.size() != 3)
            throw Error(errc::arity_mismatch,
                        "expected 3 fields, got " + std::to_string(fields.size()),
                        line_no);
        at_line(line_no, [&] {
            require_actor_label(fields[0]);
            require_actor_label(fields[2]);
        });

        std::uint32_t network = 0;
        auto [ptr, ec] = std::from_chars(
            fields[1].data(), fields[1].data() + fields[1].size(), network);
        if (ec != std::errc{} || ptr != fields[1].data() + fields[1].size())
            throw Error(errc::invalid_argument,
                        "bad network index '" + fields[1] + "'", line_no);
        if (network >= networks.size())
            throw Error(errc::invalid_argument,
                        "network index " + fields[1] + " has no network file",
                        line_no);

        auto [it, inserted] = class_index.emplace(fields[0], classes.size());
        if (inserted) classes.push_back({fields[0], {}});

        auto local_it = local_index[network].find(fields[2]);
        std::uint32_t local;
        if (local_it != local_index[network].end()) {
            local = local_it->second;
        } else {
            local = static_cast<std::uint32_t>(networks[network].actors.size());
            networks[network].actors.push_back(fields[2]);
            local_index[network].emplace(fields[2], local);
        }

        auto& members = classes[it->second].members;
        if (std::find(members.begin(), members.end(),
                      std::make_pair(network, local)) == members.end())
            members.emplace_back(network, local);
    }
    return PillarNetwork(std::move(networks), std::move(classes));
}

// --- file helpers ---

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_failure, "cannot open '" + path.string() + "'");
    return in;
}

} // namespace

Msn load_msn(const std::filesystem::path& path, const ParseOptions& opts) {
    auto in = open_in(path);
    return read_msn(in, opts);
}

EventStream load_events(const std::filesystem::path& path,
                        const ParseOptions& opts) {
    auto in = open_in(path);
    return read_events(in, opts);
}

std::variant<Msn, EventStream> load_edge_list(const std::filesystem::path& path,
                                              const ParseOptions& opts) {
    auto in = open_in(path);
    return parse_edge_list(in, opts);
}

GroupMembership load_membership(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_membership(in);
}

NodeMapping load_node_mapping(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_node_mapping(in);
}

int exit_code_for(const Error& error) {
    if (error.line() != 0) return 2;
    switch (error.code()) {
        case errc::bad_header:
        case errc::arity_mismatch:
        case errc::bad_timestamp:
        case errc::undeclared_layer:
        case errc::io_failure:
            return 2;
        default:
            return 1;
    }
}

} // namespace msn
