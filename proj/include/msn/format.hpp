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

#include <iosfwd>
#include <string>
#include <vector>

namespace msn {

/// Space-aligned text table with an optional ANSI-bold header. Output is
/// deterministic: same cells, same bytes.
class TextTable {
public:
    enum class Align { Left, Right };

    explicit TextTable(std::vector<std::string> header,
                       std::vector<Align> aligns = {});

    void add_row(std::vector<std::string> cells);

    void render(std::ostream& out, bool color) const;
    void render_csv(std::ostream& out) const;

private:
    std::vector<std::string> header_;
    std::vector<Align> aligns_;
    std::vector<std::vector<std::string>> rows_;
};

/// Fixed-point decimal ("0.266667"), locale-independent.
std::string format_double(double value, int decimals = 6);

/// True when the MSN_COLOR environment variable is exactly "1".
bool color_from_env();

} // namespace msn
