// Copyright 2026 The diagxyc Authors
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

// Scene files for the bundled corpus, compared byte for byte. Set
// DIAGXY_UPDATE_GOLDEN=1 to rewrite them after an intended change.

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "diagxy/compiler.hpp"

namespace diagxy {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, SceneMatches) {
  const fs::path src = fs::path(DIAGXY_CORPUS_DIR) / GetParam();
  const std::string stem = src.stem().string();
  auto result = compile(slurp(src), MetricsTable::builtin(), CompileOptions{});
  const bool update = std::getenv("DIAGXY_UPDATE_GOLDEN") != nullptr;
  for (std::size_t i = 0; i < result.outputs.size(); ++i) {
    std::string name = stem;
    if (result.outputs.size() > 1) name += "." + std::to_string(i + 1);
    const fs::path golden = fs::path(DIAGXY_GOLDEN_DIR) / (name + ".scene.json");
    if (update) {
      std::ofstream(golden, std::ios::binary) << result.outputs[i].scene_text;
      continue;
    }
    ASSERT_TRUE(fs::exists(golden)) << golden;
    EXPECT_EQ(result.outputs[i].scene_text, slurp(golden)) << golden;
  }
}

std::vector<std::string> corpus() {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(DIAGXY_CORPUS_DIR)) {
    if (e.path().extension() == ".dxy") names.push_back(e.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::string test_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string s = fs::path(info.param).stem().string();
  std::replace_if(s.begin(), s.end(), [](char c) { return !std::isalnum(c); }, '_');
  return "f" + s;
}

INSTANTIATE_TEST_SUITE_P(Corpus, Golden, ::testing::ValuesIn(corpus()), test_name);

}  // namespace
}  // namespace diagxy
