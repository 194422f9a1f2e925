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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msn/core.hpp"
#include "msn/dimensions.hpp"
#include "msn/models.hpp"
#include "msn/multigraph.hpp"

namespace msn {

// Edge-list files are UTF-8 CSV with header `source,target,layer` (static)
// or `source,target,layer,time` (event streams). `#`-prefixed lines are
// comments; labels carry no quoting since they exclude commas. Two comment
// directives may precede the header so that networks with isolated actors or
// empty layers survive a write/parse round trip:
//
//     # actors: x,y,z
//     # layers: l1,l2
//
// Duplicate (source,target,layer) records are an error in the static form
// and ordinary repeats in the event form. Parse errors carry the 1-based
// line number of the first offending record.

struct ParseOptions {
    /// Fixes the layer set up front; records on other layers fail with
    /// undeclared_layer. Overrides a `# layers:` directive. Without either,
    /// layers register in first-appearance order.
    std::optional<std::vector<std::string>> declared_layers;
};

std::variant<Msn, EventStream> parse_edge_list(std::istream& in,
                                               const ParseOptions& opts = {});

/// Like parse_edge_list but requires the static (3-column) header.
Msn read_msn(std::istream& in, const ParseOptions& opts = {});

/// Like parse_edge_list but requires the temporal (4-column) header.
EventStream read_events(std::istream& in, const ParseOptions& opts = {});

/// Canonical text: directives, header, then records sorted by layer
/// declaration order, source label, target label. parse(write(G)) == G and
/// write is a fixed point: write(parse(write(G))) is byte-identical.
std::string write_edge_list(const Msn& net);

/// `actor,group` CSV; duplicate pairs collapse silently.
GroupMembership read_membership(std::istream& in);

/// `fine,coarse` CSV; conflicting reassignments are rejected.
NodeMapping read_node_mapping(std::istream& in);

/// Writes `mapping.csv` (class_id,network_index,local_actor) plus one
/// `network_<k>.csv` edge list per network into dir, creating it when
/// needed. Returns the written paths.
std::vector<std::filesystem::path> write_pillar(
    const PillarNetwork& pillar, const std::filesystem::path& dir);

/// Inverse of write_pillar.
PillarNetwork read_pillar(const std::filesystem::path& dir);

// File-opening convenience wrappers; failure to open is io_failure.
Msn load_msn(const std::filesystem::path& path, const ParseOptions& opts = {});
EventStream load_events(const std::filesystem::path& path,
                        const ParseOptions& opts = {});
std::variant<Msn, EventStream> load_edge_list(const std::filesystem::path& path,
                                              const ParseOptions& opts = {});
GroupMembership load_membership(const std::filesystem::path& path);
NodeMapping load_node_mapping(const std::filesystem::path& path);

/// Exit-code category for the CLI: 2 for parse/I-O errors (anything tied to
/// an input line, unreadable files, malformed headers), 1 for domain errors.
int exit_code_for(const Error& error);

} // namespace msn
