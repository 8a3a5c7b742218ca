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

#include "keyrank/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "keyrank/types.hpp"

namespace keyrank {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string where(std::size_t line) {
  return "config line " + std::to_string(line) + ": ";
}

double parse_real(std::string_view value, std::size_t line) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError(where(line) + "expected a real number, got '" +
                      std::string(value) + "'");
  }
  return out;
}

std::size_t parse_count(std::string_view value, std::size_t line) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(where(line) + "expected a non-negative integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view value, std::size_t line) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError(where(line) + "expected true or false, got '" +
                    std::string(value) + "'");
}

}  // namespace

RankConfig validate_config(const RankConfig& cfg) {
  if (!std::isfinite(cfg.alpha) || cfg.alpha < 0.0) {
    throw ConfigError("alpha must be a finite value >= 0, got " +
                      format_double(cfg.alpha));
  }
  if (cfg.top_n < 1) throw ConfigError("top_n must be >= 1");
  if (cfg.dim < 1) throw ConfigError("dim must be >= 1");
  if (cfg.max_phrase_tokens < 1) {
    throw ConfigError("max_phrase_tokens must be >= 1");
  }
  return cfg;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf.data(), ptr);
}

Settings parse_settings(std::string_view text, Settings base) {
  Settings out = std::move(base);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where(line_no) + "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "alpha") {
      out.rank.alpha = parse_real(value, line_no);
    } else if (key == "top_n") {
      out.rank.top_n = parse_count(value, line_no);
    } else if (key == "dim") {
      out.rank.dim = parse_count(value, line_no);
    } else if (key == "clamp_similarity") {
      out.rank.clamp_similarity = parse_bool(value, line_no);
    } else if (key == "max_phrase_tokens") {
      out.rank.max_phrase_tokens = parse_count(value, line_no);
    } else if (key == "provider") {
      out.provider = std::string(value);
    } else if (key == "endpoint") {
      out.endpoint = std::string(value);
    } else {
      throw ConfigError(where(line_no) + "unknown key '" + std::string(key) +
                        "'");
    }
  }
  out.rank = validate_config(out.rank);
  return out;
}

Settings load_settings(const std::string& path, Settings base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_settings(ss.str(), std::move(base));
}

std::string format_settings(const Settings& settings) {
  std::string out;
  out += "alpha = " + format_double(settings.rank.alpha) + "\n";
  out += "top_n = " + std::to_string(settings.rank.top_n) + "\n";
  out += "dim = " + std::to_string(settings.rank.dim) + "\n";
  out += std::string("clamp_similarity = ") +
         (settings.rank.clamp_similarity ? "true" : "false") + "\n";
  out += "max_phrase_tokens = " +
         std::to_string(settings.rank.max_phrase_tokens) + "\n";
  out += "provider = " + settings.provider + "\n";
  out += "endpoint = " + settings.endpoint + "\n";
  return out;
}

}  // namespace keyrank
