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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msn {

/// Dense per-network actor handle. Ids are only meaningful for the network
/// that issued them.
struct ActorId {
    std::uint32_t value = UINT32_MAX;

    ActorId() = default;
    explicit constexpr ActorId(std::uint32_t v) : value(v) {}

    constexpr bool operator==(const ActorId&) const = default;
    constexpr bool operator<(const ActorId& o) const { return value < o.value; }
};

/// Dense per-network layer handle.
struct LayerId {
    std::uint32_t value = UINT32_MAX;

    LayerId() = default;
    explicit constexpr LayerId(std::uint32_t v) : value(v) {}

    constexpr bool operator==(const LayerId&) const = default;
    constexpr bool operator<(const LayerId& o) const { return value < o.value; }
};

enum class Direction { Out, In };

/// How several layers are folded into one view: Union keeps a pair if any
/// selected layer carries it, Count annotates each pair with the number of
/// selected layers carrying it.
enum class AggregationPolicy { Union, Count };

enum class errc {
    duplicate_layer,
    empty_name,
    invalid_label,
    self_loop,
    unknown_actor,
    unknown_layer,
    duplicate_edge,
    not_found,
    empty_layer_set,
    non_injective_mapping,
    unmapped_actor,
    partial_mapping,
    empty_window,
    unknown_group,
    too_few_actors,
    self_pair,
    bad_header,
    arity_mismatch,
    bad_timestamp,
    undeclared_layer,
    invalid_argument,
    io_failure,
};

const char* errc_name(errc code);

/// Library-wide exception. `line()` is the 1-based input line for errors
/// raised while parsing a file, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? message + " at line " + std::to_string(line)
                                  : message),
          code_(code),
          line_(line) {}

    errc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    errc code_;
    std::size_t line_;
};

/// Labels appear verbatim in CSV files: non-empty, no comma or newline, no
/// leading or trailing whitespace.
bool valid_label(std::string_view label);

/// Throws invalid_label (actors, groups) on a bad label.
void require_actor_label(std::string_view label);

/// Throws empty_name on "", invalid_label on other malformed names.
void require_layer_name(std::string_view name);

} // namespace msn

template <>
struct std::hash<msn::ActorId> {
    std::size_t operator()(const msn::ActorId& id) const noexcept {
        return std::hash<std::uint32_t>{}(id.value);
    }
};

template <>
struct std::hash<msn::LayerId> {
    std::size_t operator()(const msn::LayerId& id) const noexcept {
        return std::hash<std::uint32_t>{}(id.value);
    }
};
