// Copyright 2026 The kcompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Search budgets. Loaded from a JSON object; the path comes from an explicit
// argument, else the KCOMPRESS_CONFIG environment variable, else defaults.

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>

#include <json.hpp>

#include "kcompress/errors.hpp"
#include "kcompress/io.hpp"

namespace kcompress {

struct BudgetConfig {
  std::size_t max_n_count = 12;      // count and tables
  std::size_t max_n_tour = 12;       // reduce/epsilon tour searches
  std::size_t max_n_partition = 7;   // partition gadget verification
  std::size_t max_n_knapsack = 3;    // knapsack gadget verification
  std::string source = "defaults";
};

inline constexpr const char *config_env_var = "KCOMPRESS_CONFIG";

inline BudgetConfig parse_budget_config(const std::string &text, const std::string &source) {
  io::Json j;
  try {
    j = io::Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!j.is_object())
    throw ParseError(source + ": config must be a JSON object");
  BudgetConfig c;
  c.source = source;
  for (const auto &[key, value] : j.items()) {
    std::size_t *slot = nullptr;
    if (key == "max_n_count")
      slot = &c.max_n_count;
    else if (key == "max_n_tour")
      slot = &c.max_n_tour;
    else if (key == "max_n_partition")
      slot = &c.max_n_partition;
    else if (key == "max_n_knapsack")
      slot = &c.max_n_knapsack;
    else
      throw ParseError(source + ": unknown key \"" + key + "\"");
    if (!value.is_number_unsigned())
      throw ParseError(source + ": \"" + key + "\" must be a non-negative integer");
    *slot = value.get<std::size_t>();
  }
  return c;
}

inline BudgetConfig load_budget_config(const std::optional<std::string> &path = std::nullopt) {
  std::optional<std::string> chosen = path;
  if (!chosen) {
    if (const char *env = std::getenv(config_env_var); env && *env)
      chosen = env;
  }
  if (!chosen)
    return {};
  return parse_budget_config(io::read_text_file(*chosen), *chosen);
}

} // namespace kcompress
