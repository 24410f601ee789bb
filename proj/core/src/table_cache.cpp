// Copyright 2026 The mdpart Authors
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

#include "mdpart/table_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "mdpart/error.hpp"

namespace mdpart {

TableCache::TableCache(std::filesystem::path dir, int algorithm_version)
    : dir_(std::move(dir)), version_(algorithm_version)
{
}

std::optional<TableCache> TableCache::from_environment(int algorithm_version)
{
  const char *dir = std::getenv(kEnvVar);
  if (dir == nullptr || *dir == '\0') {
    return std::nullopt;
  }
  return TableCache(dir, algorithm_version);
}

std::filesystem::path TableCache::path_for(const std::string &kind, int r, bool punctual) const
{
  return dir_ / (kind + "_r" + std::to_string(r) + (punctual ? "_punctual" : "_plain") + ".json");
}

std::vector<BigInt> TableCache::load(const std::string &kind, int r, bool punctual) const
{
  std::ifstream in(path_for(kind, r, punctual));
  if (!in) {
    return {};
  }
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("kind") != kind || j.at("r") != r || j.at("punctual") != punctual ||
        j.at("algorithm_version") != version_) {
      return {};
    }
    std::vector<BigInt> counts;
    for (const auto &c : j.at("counts")) {
      counts.emplace_back(c.get<std::string>(), 10);
    }
    if (counts.size() != j.at("n_max").get<std::size_t>() + 1) {
      return {};
    }
    return counts;
  } catch (const std::exception &) {
    // Corrupt or foreign files are treated as absent and later replaced.
    return {};
  }
}

void TableCache::store(const std::string &kind, int r, bool punctual, const std::vector<BigInt> &counts) const
{
  if (counts.empty()) {
    return;
  }
  const auto existing = load(kind, r, punctual);
  const std::size_t common = std::min(existing.size(), counts.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (existing[i] != counts[i]) {
      throw InvariantViolation("cached " + kind + " table for r=" + std::to_string(r) + " disagrees at n=" +
                               std::to_string(i) + ": " + existing[i].get_str() + " vs " + counts[i].get_str());
    }
  }
  if (existing.size() >= counts.size()) {
    return;
  }

  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["r"] = r;
  j["punctual"] = punctual;
  j["algorithm_version"] = version_;
  j["n_max"] = counts.size() - 1;
  auto arr = nlohmann::ordered_json::array();
  for (const auto &c : counts) {
    arr.push_back(c.get_str());
  }
  j["counts"] = arr;

  std::filesystem::create_directories(dir_);
  static std::atomic<unsigned> serial{0};
  std::ostringstream tmp_name;
  tmp_name << ".tmp-" << ::getpid() << "-" << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "-"
           << serial++;
  const auto target = path_for(kind, r, punctual);
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) {
      throw Error("cannot write cache file " + tmp.string());
    }
    out << j.dump(1) << '\n';
    if (!out) {
      throw Error("cannot write cache file " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot install cache file " + target.string());
  }
}

}  // namespace mdpart
