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
#include "msn/format.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string_view>

namespace msn {

TextTable::TextTable(std::vector<std::string> header, std::vector<Align> aligns)
    : header_(std::move(header)), aligns_(std::move(aligns)) {
    aligns_.resize(header_.size(), Align::Left);
}

void TextTable::add_row(std::vector<std::string> cells) {
    cells.resize(header_.size());
    rows_.push_back(std::move(cells));
}

void TextTable::render(std::ostream& out, bool color) const {
    std::vector<std::size_t> widths(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) widths[c] = header_[c].size();
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::string cell = cells[c];
            if (aligns_[c] == Align::Right)
                cell.insert(0, widths[c] - cell.size(), ' ');
            else if (c + 1 < cells.size())
                cell.append(widths[c] - cell.size(), ' ');
            line += cell;
            if (c + 1 < cells.size()) line += "  ";
        }
        // trailing spaces from left-aligned last columns never appear
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };

    if (color) out << "\x1b[1m";
    emit(header_);
    if (color) out << "\x1b[0m";
    for (const auto& row : rows_) emit(row);
}

void TextTable::render_csv(std::ostream& out) const {
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << ',';
            out << cells[c];
        }
        out << '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
}

std::string format_double(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

bool color_from_env() {
    const char* value = std::getenv("MSN_COLOR");
    return value != nullptr && std::string_view(value) == "1";
}

} // namespace msn
