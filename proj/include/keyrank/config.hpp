// Copyright 2026 The Authors.
//
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

#ifndef KEYRANK_CONFIG_HPP_
#define KEYRANK_CONFIG_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace keyrank {

struct RankConfig {
  double alpha = 0.5;
  std::size_t top_n = 5;
  std::size_t dim = 512;
  bool clamp_similarity = true;
  std::size_t max_phrase_tokens = 5;

  friend bool operator==(const RankConfig&, const RankConfig&) = default;
};

// Returns cfg unchanged, or throws ConfigError when alpha is negative or
// non-finite, or when top_n, dim or max_phrase_tokens is zero.
RankConfig validate_config(const RankConfig& cfg);

// Everything the on-disk config file carries.
struct Settings {
  RankConfig rank;
  std::string provider = "hash";
  std::string endpoint;

  friend bool operator==(const Settings&, const Settings&) = default;
};

// Flat "key = value" format. Blank lines and lines starting with '#' are
// ignored; unknown keys and malformed values are ConfigErrors. Keys absent
// from the text keep the values already in `base`.
Settings parse_settings(std::string_view text, Settings base = {});
Settings load_settings(const std::string& path, Settings base = {});

// Canonical rendering: every key once, fixed order, shortest round-trip
// number formatting. parse_settings(format_settings(s)) == s.
std::string format_settings(const Settings& settings);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace keyrank

#endif  // KEYRANK_CONFIG_HPP_
