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
#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msn/core.hpp"
#include "msn/dimensions.hpp"
#include "msn/format.hpp"
#include "msn/io.hpp"
#include "msn/kernels.hpp"
#include "msn/measures.hpp"
#include "msn/models.hpp"
#include "msn/multigraph.hpp"

namespace {

using namespace msn;

struct CommonOpts {
    std::string file;
    std::string format = "table";
    std::vector<std::string> declare_layers;

    ParseOptions parse_options() const {
        ParseOptions opts;
        if (!declare_layers.empty()) opts.declared_layers = declare_layers;
        return opts;
    }
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("file", opts.file, "edge list file")->required();
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
    sub->add_option("--declare-layers", opts.declare_layers,
                    "fix the layer set up front (comma separated)")
        ->delimiter(',');
}

void emit(const TextTable& table, const std::string& format) {
    if (format == "csv")
        table.render_csv(std::cout);
    else
        table.render(std::cout, color_from_env());
}

AggregationPolicy parse_policy(const std::string& name) {
    if (name == "union") return AggregationPolicy::Union;
    if (name == "count") return AggregationPolicy::Count;
    throw Error(errc::invalid_argument,
                "policy must be 'union' or 'count', got '" + name + "'");
}

// "out", "in" or "both"
std::pair<bool, bool> parse_direction(const std::string& name) {
    if (name == "out") return {true, false};
    if (name == "in") return {false, true};
    if (name == "both") return {true, true};
    throw Error(errc::invalid_argument,
                "direction must be 'out', 'in' or 'both', got '" + name + "'");
}

std::vector<LayerId> resolve_layers(const Msn& net,
                                    const std::vector<std::string>& names) {
    if (names.empty()) return net.layers();
    std::vector<LayerId> out;
    for (const auto& name : names) out.push_back(net.layer(name));
    return out;
}

ActorId resolve_actor(const Msn& net, const std::string& label) {
    auto id = net.find_actor(label);
    if (!id)
        throw Error(errc::unknown_actor, "unknown actor '" + label + "'");
    return *id;
}

std::string join_labels(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ' ';
        out += labels[i];
    }
    return out;
}

template <typename Range, typename LabelFn>
std::string join_ids(const Range& ids, LabelFn&& label) {
    std::vector<std::string> labels;
    for (ActorId a : ids) labels.push_back(label(a));
    return join_labels(std::move(labels));
}

// --- subcommands ---

// Event streams get their own shape: snapshots collapse repeated events into
// plain edges, so multiplicity is only visible here.
void run_event_stats(const CommonOpts& o, const EventStream& stream) {
    std::vector<std::uint64_t> events_per_layer(stream.layer_names().size(), 0);
    std::vector<std::set<std::pair<ActorId, ActorId>>> distinct(
        stream.layer_names().size());
    for (const auto& e : stream.events()) {
        ++events_per_layer[e.layer.value];
        distinct[e.layer.value].insert({e.source, e.target});
    }
    std::uint64_t edges = 0;
    for (const auto& set : distinct) edges += set.size();
    auto span = stream.time_span();

    if (o.format == "csv") {
        TextTable table({"section", "name", "value"});
        table.add_row({"summary", "actors",
                       std::to_string(stream.actor_labels().size())});
        table.add_row({"summary", "layers",
                       std::to_string(stream.layer_names().size())});
        table.add_row({"summary", "events",
                       std::to_string(stream.events().size())});
        table.add_row({"summary", "edges", std::to_string(edges)});
        if (span) {
            table.add_row({"summary", "first", std::to_string(span->first)});
            table.add_row({"summary", "last", std::to_string(span->second)});
        }
        for (std::size_t l = 0; l < stream.layer_names().size(); ++l) {
            table.add_row({"events", stream.layer_names()[l],
                           std::to_string(events_per_layer[l])});
            table.add_row({"edges", stream.layer_names()[l],
                           std::to_string(distinct[l].size())});
        }
        table.render_csv(std::cout);
        return;
    }

    TextTable summary({"metric", "value"},
                      {TextTable::Align::Left, TextTable::Align::Right});
    summary.add_row({"actors", std::to_string(stream.actor_labels().size())});
    summary.add_row({"layers", std::to_string(stream.layer_names().size())});
    summary.add_row({"events", std::to_string(stream.events().size())});
    summary.add_row({"edges", std::to_string(edges)});
    if (span) {
        summary.add_row({"first", std::to_string(span->first)});
        summary.add_row({"last", std::to_string(span->second)});
    }
    summary.render(std::cout, color_from_env());

    if (!stream.layer_names().empty()) {
        std::cout << '\n';
        TextTable layers({"layer", "events", "edges"},
                         {TextTable::Align::Left, TextTable::Align::Right,
                          TextTable::Align::Right});
        for (std::size_t l = 0; l < stream.layer_names().size(); ++l)
            layers.add_row({stream.layer_names()[l],
                            std::to_string(events_per_layer[l]),
                            std::to_string(distinct[l].size())});
        layers.render(std::cout, color_from_env());
    }
}

void run_stats(const CommonOpts& o) {
    auto parsed = load_edge_list(o.file, o.parse_options());
    if (std::holds_alternative<EventStream>(parsed)) {
        run_event_stats(o, std::get<EventStream>(parsed));
        return;
    }
    const Msn& net = std::get<Msn>(parsed);
    const bool has_density = net.actor_count() >= 2;

    if (o.format == "csv") {
        TextTable table({"section", "name", "value"});
        table.add_row({"summary", "actors", std::to_string(net.actor_count())});
        table.add_row({"summary", "layers", std::to_string(net.layer_count())});
        table.add_row({"summary", "edges", std::to_string(net.edge_count())});
        for (LayerId l : net.layers())
            table.add_row({"edges", net.layer_name(l),
                           std::to_string(net.edge_count(l))});
        if (has_density)
            for (LayerId l : net.layers())
                table.add_row({"density", net.layer_name(l),
                               format_double(density(net, l))});
        table.render_csv(std::cout);
        return;
    }

    TextTable summary({"metric", "value"},
                      {TextTable::Align::Left, TextTable::Align::Right});
    summary.add_row({"actors", std::to_string(net.actor_count())});
    summary.add_row({"layers", std::to_string(net.layer_count())});
    summary.add_row({"edges", std::to_string(net.edge_count())});
    summary.render(std::cout, color_from_env());

    if (net.layer_count() != 0) {
        std::cout << '\n';
        TextTable layers({"layer", "edges", "density"},
                         {TextTable::Align::Left, TextTable::Align::Right,
                          TextTable::Align::Right});
        for (LayerId l : net.layers())
            layers.add_row({net.layer_name(l), std::to_string(net.edge_count(l)),
                            has_density ? format_double(density(net, l)) : "-"});
        layers.render(std::cout, color_from_env());
    }
}

void add_edge_rows(TextTable& table, const Msn& net, const SsnView& view) {
    const bool counted = view.has_counts();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < view.edges().size(); ++i) {
        const auto& [s, t] = view.edges()[i];
        std::vector<std::string> row{net.label(s), net.label(t)};
        if (counted) row.push_back(std::to_string(view.counts()[i]));
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    for (auto& row : rows) table.add_row(std::move(row));
}

void run_project(const CommonOpts& o, const std::string& layer_name) {
    Msn net = load_msn(o.file, o.parse_options());
    SsnView view = net.layer_projection(net.layer(layer_name));
    TextTable table({"source", "target"});
    add_edge_rows(table, net, view);
    emit(table, o.format);
}

void run_aggregate(const CommonOpts& o, const std::vector<std::string>& layers,
                   const std::string& policy_name) {
    Msn net = load_msn(o.file, o.parse_options());
    AggregationPolicy policy = parse_policy(policy_name);
    SsnView view = aggregate_layers(net, resolve_layers(net, layers), policy);

    TextTable table(policy == AggregationPolicy::Count
                        ? std::vector<std::string>{"source", "target", "count"}
                        : std::vector<std::string>{"source", "target"});
    add_edge_rows(table, net, view);
    emit(table, o.format);
}

void run_compare(const CommonOpts& o, const std::vector<std::string>& layers_a,
                 const std::vector<std::string>& layers_b) {
    Msn net = load_msn(o.file, o.parse_options());
    OverlapReport report = compare_aggregations(
        net, resolve_layers(net, layers_a), resolve_layers(net, layers_b));

    TextTable table({"metric", "value"},
                    {TextTable::Align::Left, TextTable::Align::Right});
    table.add_row({"shared", std::to_string(report.shared.size())});
    table.add_row({"a_only", std::to_string(report.a_only.size())});
    table.add_row({"b_only", std::to_string(report.b_only.size())});
    table.add_row({"jaccard", format_double(report.jaccard)});
    emit(table, o.format);
}

void run_degree(const CommonOpts& o, const std::optional<std::string>& actor,
                const std::string& direction_name,
                const std::vector<std::string>& layers,
                const std::string& policy_name) {
    Msn net = load_msn(o.file, o.parse_options());
    AggregationPolicy policy = parse_policy(policy_name);
    auto [show_out, show_in] = parse_direction(direction_name);
    auto selection = validate_layer_selection(net, resolve_layers(net, layers));

    std::vector<std::string> header{"actor", "layer"};
    std::vector<TextTable::Align> aligns{TextTable::Align::Left,
                                         TextTable::Align::Left};
    if (show_out) {
        header.push_back("out");
        aligns.push_back(TextTable::Align::Right);
    }
    if (show_in) {
        header.push_back("in");
        aligns.push_back(TextTable::Align::Right);
    }
    TextTable table(std::move(header), std::move(aligns));

    auto add = [&](const std::string& who, const std::string& scope,
                   std::uint64_t out, std::uint64_t in) {
        std::vector<std::string> cells{who, scope};
        if (show_out) cells.push_back(std::to_string(out));
        if (show_in) cells.push_back(std::to_string(in));
        table.add_row(std::move(cells));
    };

    if (actor) {
        DegreeReport report =
            degree_report(net, resolve_actor(net, *actor), selection, policy);
        for (std::size_t i = 0; i < report.layers.size(); ++i)
            add(*actor, net.layer_name(report.layers[i]),
                report.per_layer[i].first, report.per_layer[i].second);
        add(*actor, policy_name, report.aggregated_out, report.aggregated_in);
    } else {
        auto rows = kernels::degree_table(net, selection, policy);
        std::sort(rows.begin(), rows.end(),
                  [&](const DegreeRow& a, const DegreeRow& b) {
                      return net.label(a.actor) < net.label(b.actor);
                  });
        for (const auto& row : rows)
            add(net.label(row.actor), policy_name, row.out, row.in);
    }
    emit(table, o.format);
}

void run_density(const CommonOpts& o, const std::optional<std::string>& layer) {
    Msn net = load_msn(o.file, o.parse_options());
    TextTable table({"layer", "edges", "density"},
                    {TextTable::Align::Left, TextTable::Align::Right,
                     TextTable::Align::Right});
    if (layer) {
        LayerId l = net.layer(*layer);
        table.add_row({*layer, std::to_string(net.edge_count(l)),
                       format_double(density(net, l))});
    } else {
        for (const auto& row : density_report(net))
            table.add_row({net.layer_name(row.layer), std::to_string(row.edges),
                           format_double(row.value)});
    }
    emit(table, o.format);
}

void run_neighbourhood(const CommonOpts& o, const std::string& actor) {
    Msn net = load_msn(o.file, o.parse_options());
    NeighbourhoodReport report =
        neighbourhood_report(net, resolve_actor(net, actor));
    auto label = [&](ActorId a) { return net.label(a); };

    TextTable table({"scope", "direction", "neighbours"});
    for (std::size_t i = 0; i < report.out_per_layer.size(); ++i) {
        const auto& name = net.layer_name(LayerId(static_cast<std::uint32_t>(i)));
        table.add_row({name, "out", join_ids(report.out_per_layer[i], label)});
        table.add_row({name, "in", join_ids(report.in_per_layer[i], label)});
    }
    table.add_row({"union", "out", join_ids(report.out_union, label)});
    table.add_row({"intersection", "out", join_ids(report.out_intersection, label)});
    emit(table, o.format);
}

void run_convert(const CommonOpts& o, const std::string& to,
                 const std::string& out_dir) {
    Msn net = load_msn(o.file, o.parse_options());

    if (to == "multigraph") {
        MultigraphView mg = to_multigraph(net);
        TextTable table({"source", "target", "count"},
                        {TextTable::Align::Left, TextTable::Align::Left,
                         TextTable::Align::Right});
        std::vector<std::vector<std::string>> rows;
        for (ActorId a : mg.actors())
            for (const auto& [t, count] : mg.row(a))
                rows.push_back({mg.label(a), mg.label(t), std::to_string(count)});
        std::sort(rows.begin(), rows.end());
        for (auto& row : rows) table.add_row(std::move(row));
        emit(table, o.format);
    } else if (to == "repeated") {
        RepeatedAdjacencyList lists = to_repeated_list(to_multigraph(net));
        TextTable table({"actor", "neighbours"});
        std::vector<std::pair<std::string, std::string>> rows;
        for (ActorId a : lists.actors())
            rows.emplace_back(lists.label(a),
                              join_ids(lists.list(a), [&](ActorId n) {
                                  return lists.label(n);
                              }));
        std::sort(rows.begin(), rows.end());
        for (auto& [actor, list] : rows) table.add_row({actor, list});
        emit(table, o.format);
    } else if (to == "canonical") {
        std::cout << write_edge_list(net);
    } else if (to == "pillar") {
        if (out_dir.empty())
            throw Error(errc::invalid_argument,
                        "--to pillar needs --out-dir");
        for (const auto& path : write_pillar(to_pillar(net), out_dir))
            std::cout << path.string() << '\n';
    } else {
        throw Error(errc::invalid_argument,
                    "--to must be multigraph, repeated, canonical or pillar");
    }
}

void run_coarsen(const CommonOpts& o, const std::string& mapping_path,
                 const std::optional<std::string>& layer,
                 const std::vector<std::string>& layers) {
    Msn net = load_msn(o.file, o.parse_options());
    NodeMapping mapping = load_node_mapping(mapping_path);

    SsnView view = layer ? net.layer_projection(net.layer(*layer))
                         : aggregate_layers(net, resolve_layers(net, layers),
                                            AggregationPolicy::Union);
    CoarseGraph coarse = coarsen(view, mapping);

    TextTable table({"source", "target", "count"},
                    {TextTable::Align::Left, TextTable::Align::Left,
                     TextTable::Align::Right});
    for (const auto& [from, to, count] : coarse.entries())
        table.add_row({coarse.actors()[from], coarse.actors()[to],
                       std::to_string(count)});
    emit(table, o.format);
}

struct GroupOpts {
    std::string membership_file;
    std::string group;

    std::optional<std::string> group_filter() const {
        if (group.empty()) return std::nullopt;
        return group;
    }

    GroupMembership load() const {
        if (!group.empty() && membership_file.empty())
            throw Error(errc::invalid_argument, "--group needs --membership");
        if (membership_file.empty()) return {};
        return load_membership(membership_file);
    }
};

void run_snapshot(const CommonOpts& o, std::int64_t from, std::int64_t to,
                  const std::vector<std::string>& layers,
                  const GroupOpts& group) {
    EventStream events = load_events(o.file, o.parse_options());
    SnapshotKey key{layers.empty() ? events.layer_names() : layers, from, to,
                    group.group_filter()};
    std::cout << write_edge_list(snapshot(events, group.load(), key));
}

void run_timeseries(const CommonOpts& o, std::int64_t window_length,
                    std::int64_t step, const std::vector<std::string>& layers,
                    const GroupOpts& group) {
    EventStream events = load_events(o.file, o.parse_options());
    auto slices =
        time_series(events, group.load(),
                    layers.empty() ? events.layer_names() : layers,
                    window_length, step, group.group_filter());

    TextTable table({"begin", "end", "actors", "edges"},
                    {TextTable::Align::Right, TextTable::Align::Right,
                     TextTable::Align::Right, TextTable::Align::Right});
    for (const auto& slice : slices)
        table.add_row({std::to_string(slice.begin), std::to_string(slice.end),
                       std::to_string(slice.network.actor_count()),
                       std::to_string(slice.network.edge_count())});
    emit(table, o.format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-layered social network toolkit"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* stats = app.add_subcommand("stats", "network summary");
    add_common(stats, common);

    auto* project = app.add_subcommand("project", "single-layer projection");
    add_common(project, common);
    std::string project_layer;
    project->add_option("--layer", project_layer, "layer name")->required();

    auto* aggregate = app.add_subcommand("aggregate", "fold layers into one view");
    add_common(aggregate, common);
    std::vector<std::string> aggregate_layers_flag;
    std::string aggregate_policy;
    aggregate->add_option("--layers", aggregate_layers_flag, "layer subset")
        ->delimiter(',')
        ->required();
    aggregate->add_option("--policy", aggregate_policy, "union or count")
        ->required();

    auto* compare = app.add_subcommand("compare", "overlap of two aggregations");
    add_common(compare, common);
    std::vector<std::string> compare_a, compare_b;
    compare->add_option("--layers-a", compare_a, "first layer subset")
        ->delimiter(',')
        ->required();
    compare->add_option("--layers-b", compare_b, "second layer subset")
        ->delimiter(',')
        ->required();

    auto* degree = app.add_subcommand("degree", "per-actor degrees");
    add_common(degree, common);
    std::string degree_actor, degree_direction = "both", degree_policy;
    std::vector<std::string> degree_layers;
    degree->add_option("--actor", degree_actor, "one actor (all when omitted)");
    degree->add_option("--direction", degree_direction, "out, in or both")
        ->capture_default_str();
    degree->add_option("--layers", degree_layers, "layer subset (default all)")
        ->delimiter(',');
    degree->add_option("--policy", degree_policy, "union or count")->required();

    auto* density_cmd = app.add_subcommand("density", "per-layer density, ranked");
    add_common(density_cmd, common);
    std::string density_layer;
    density_cmd->add_option("--layer", density_layer, "one layer only");

    auto* neighbourhood = app.add_subcommand("neighbourhood",
                                             "per-layer neighbour sets");
    add_common(neighbourhood, common);
    std::string neighbourhood_actor;
    neighbourhood->add_option("--actor", neighbourhood_actor, "actor label")
        ->required();

    auto* convert = app.add_subcommand("convert", "change representation");
    add_common(convert, common);
    std::string convert_to, convert_out_dir;
    convert->add_option("--to", convert_to,
                        "multigraph, repeated, canonical or pillar")
        ->required();
    convert->add_option("--out-dir", convert_out_dir,
                        "output directory (pillar only)");

    auto* coarsen_cmd = app.add_subcommand("coarsen", "quotient under a mapping");
    add_common(coarsen_cmd, common);
    std::string coarsen_mapping, coarsen_layer;
    std::vector<std::string> coarsen_layers;
    coarsen_cmd->add_option("--mapping", coarsen_mapping, "fine,coarse CSV file")
        ->required();
    auto* coarsen_one = coarsen_cmd->add_option("--layer", coarsen_layer,
                                                "project this layer");
    coarsen_cmd
        ->add_option("--layers", coarsen_layers,
                     "union-aggregate these layers (default all)")
        ->delimiter(',')
        ->excludes(coarsen_one);

    auto* snapshot_cmd = app.add_subcommand("snapshot",
                                            "network at a dimension intersection");
    add_common(snapshot_cmd, common);
    std::int64_t snap_from = 0, snap_to = 0;
    std::vector<std::string> snap_layers;
    GroupOpts snap_group;
    snapshot_cmd->add_option("--from", snap_from, "window start (inclusive)")
        ->required();
    snapshot_cmd->add_option("--to", snap_to, "window end (exclusive)")
        ->required();
    snapshot_cmd->add_option("--layers", snap_layers, "layer subset (default all)")
        ->delimiter(',');
    snapshot_cmd->add_option("--group", snap_group.group, "group filter");
    snapshot_cmd->add_option("--membership", snap_group.membership_file,
                             "actor,group CSV file");

    auto* timeseries = app.add_subcommand("timeseries", "windowed snapshots");
    add_common(timeseries, common);
    std::int64_t series_window = 0, series_step = 0;
    std::vector<std::string> series_layers;
    GroupOpts series_group;
    timeseries->add_option("--window-length", series_window, "window length")
        ->required();
    timeseries->add_option("--step", series_step, "window step")->required();
    timeseries->add_option("--layers", series_layers, "layer subset (default all)")
        ->delimiter(',');
    timeseries->add_option("--group", series_group.group, "group filter");
    timeseries->add_option("--membership", series_group.membership_file,
                           "actor,group CSV file");

    try {
        app.parse(argc, argv);

        if (stats->parsed()) run_stats(common);
        if (project->parsed()) run_project(common, project_layer);
        if (aggregate->parsed())
            run_aggregate(common, aggregate_layers_flag, aggregate_policy);
        if (compare->parsed()) run_compare(common, compare_a, compare_b);
        if (degree->parsed())
            run_degree(common,
                       degree_actor.empty()
                           ? std::nullopt
                           : std::optional<std::string>(degree_actor),
                       degree_direction, degree_layers, degree_policy);
        if (density_cmd->parsed())
            run_density(common, density_layer.empty()
                                    ? std::nullopt
                                    : std::optional<std::string>(density_layer));
        if (neighbourhood->parsed())
            run_neighbourhood(common, neighbourhood_actor);
        if (convert->parsed()) run_convert(common, convert_to, convert_out_dir);
        if (coarsen_cmd->parsed())
            run_coarsen(common, coarsen_mapping,
                        coarsen_layer.empty()
                            ? std::nullopt
                            : std::optional<std::string>(coarsen_layer),
                        coarsen_layers);
        if (snapshot_cmd->parsed())
            run_snapshot(common, snap_from, snap_to, snap_layers, snap_group);
        if (timeseries->parsed())
            run_timeseries(common, series_window, series_step, series_layers,
                           series_group);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
