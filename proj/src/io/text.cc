// Copyright 2026 The rfx Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rfx/io/text.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace rfx::io {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

namespace {

bool is_bit(const std::string& s) { return s == "0" || s == "1"; }

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

InstanceTable read_instances(std::istream& in, int expected_width) {
  InstanceTable table;
  std::string line;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string> cells = split(body, ',');
    if (first) {
      first = false;
      bool header = false;
      for (const auto& c : cells) header = header || !is_bit(c);
      // A header is a row containing a token that is not a bit and does not
      // merely look like a malformed number.
      if (header && !parse_int(cells.front())) {
        table.header = std::move(cells);
        if (expected_width > 0 &&
            static_cast<int>(table.header.size()) != expected_width) {
          throw FormatError("line " + std::to_string(line_no) + ": header has " +
                            std::to_string(table.header.size()) +
                            " columns, expected " +
                            std::to_string(expected_width));
        }
        continue;
      }
    }
    const int width = expected_width > 0
                          ? expected_width
                          : !table.header.empty()
                                ? static_cast<int>(table.header.size())
                                : table.rows.empty()
                                      ? static_cast<int>(cells.size())
                                      : table.rows.front().size();
    const std::string where = "row " + std::to_string(table.rows.size() + 1) +
                              " (line " + std::to_string(line_no) + ")";
    if (static_cast<int>(cells.size()) != width) {
      throw FormatError(where + ": " + std::to_string(cells.size()) +
                        " columns, expected " + std::to_string(width));
    }
    std::vector<std::uint8_t> bits;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!is_bit(cells[c])) {
        throw FormatError(where + ", column " + std::to_string(c + 1) +
                          ": expected 0 or 1, got '" + cells[c] + "'");
      }
      bits.push_back(cells[c] == "1");
    }
    table.rows.emplace_back(std::move(bits));
  }
  return table;
}

InstanceTable load_instances(const std::filesystem::path& path,
                             int expected_width) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open instance file " + path.string());
  try {
    return read_instances(in, expected_width);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_instances(std::ostream& out, const InstanceTable& table) {
  auto join = [&](const auto& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  if (!table.header.empty()) join(table.header);
  for (const Instance& x : table.rows) {
    std::vector<int> cells(x.bits().begin(), x.bits().end());
    join(cells);
  }
}

Instance parse_instance(std::string_view text, int expected_width) {
  text = trim(text);
  std::vector<std::uint8_t> bits;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '0' && text[i] != '1') {
        throw FormatError("instance: position " + std::to_string(i + 1) +
                          ": expected 0 or 1, got '" + std::string(1, text[i]) +
                          "'");
      }
      bits.push_back(text[i] == '1');
    }
  } else {
    const auto cells = split(text, ',');
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!is_bit(cells[i])) {
        throw FormatError("instance: column " + std::to_string(i + 1) +
                          ": expected 0 or 1, got '" + cells[i] + "'");
      }
      bits.push_back(cells[i] == "1");
    }
  }
  if (expected_width > 0 && static_cast<int>(bits.size()) != expected_width) {
    throw FormatError("instance has " + std::to_string(bits.size()) +
                      " values, the model expects " +
                      std::to_string(expected_width));
  }
  return Instance(std::move(bits));
}

int parse_feature(std::string_view token, std::span<const std::string> names,
                  int var_count) {
  token = trim(token);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == token) return static_cast<int>(i) + 1;
  }
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == 'x' || digits.front() == 'X')) {
    digits.remove_prefix(1);
  }
  const auto v = parse_int(digits);
  if (!v) throw FormatError("unknown feature '" + std::string(token) + "'");
  if (*v < 1 || *v > var_count) {
    throw FormatError("feature '" + std::string(token) + "' outside x1..x" +
                      std::to_string(var_count));
  }
  return *v;
}

std::vector<int> parse_feature_list(std::string_view text,
                                    std::span<const std::string> names,
                                    int var_count) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& token : split(text, ',')) {
    out.push_back(parse_feature(token, names, var_count));
  }
  return out;
}

Prioritization parse_strata(std::string_view text,
                            std::span<const std::string> names,
                            int var_count) {
  std::vector<std::vector<int>> strata;
  for (const auto& part : split(text, ';')) {
    if (part.empty()) throw FormatError("strata: empty stratum in '" +
                                        std::string(text) + "'");
    strata.push_back(parse_feature_list(part, names, var_count));
  }
  try {
    return Prioritization(std::move(strata), var_count);
  } catch (const LogicError& e) {
    throw FormatError(std::string("strata: ") + e.what());
  }
}

WeightMap parse_weights(std::string_view text,
                        std::span<const std::string> names, int var_count) {
  std::vector<std::int64_t> w(var_count, 1);
  const auto parts = split(text, ',');
  const bool pairs = text.find(':') != std::string_view::npos;
  if (!pairs && static_cast<int>(parts.size()) != var_count) {
    throw FormatError("weights: expected " + std::to_string(var_count) +
                      " values, got " + std::to_string(parts.size()));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string_view value = parts[i];
    int var = static_cast<int>(i) + 1;
    if (pairs) {
      const auto colon = parts[i].find(':');
      if (colon == std::string::npos) {
        throw FormatError("weights: expected feature:weight, got '" + parts[i] +
                          "'");
      }
      var = parse_feature(std::string_view(parts[i]).substr(0, colon), names,
                          var_count);
      value = trim(std::string_view(parts[i]).substr(colon + 1));
    }
    std::int64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw FormatError("weights: '" + std::string(value) +
                        "' is not an integer");
    }
    w[var - 1] = v;
  }
  try {
    return WeightMap(std::move(w));
  } catch (const LogicError& e) {
    throw FormatError(std::string("weights: ") + e.what());
  }
}

LinearModel parse_linear_model(std::string_view text) {
  LinearModel model;
  for (const auto& token : split(text, ',')) {
    try {
      model.weights.push_back(parse_rational(token));
    } catch (const std::exception& e) {
      throw FormatError("linear weights: '" + token + "': " + e.what());
    }
  }
  return model;
}

}  // namespace rfx::io
