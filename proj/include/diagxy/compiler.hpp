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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diagxy/error.hpp"
#include "diagxy/geometry.hpp"
#include "diagxy/metrics.hpp"
#include "diagxy/scene.hpp"

namespace diagxy {

struct CompileOptions {
  RenderConfig cfg;
  bool strict = false;  // warnings become errors
};

// One figure or one standalone inline fragment.
struct Output {
  Scene scene;
  std::string scene_text;
  std::string svg;
};

struct CompileResult {
  std::vector<Output> outputs;
  Warnings warnings;  // duplicates removed, in first-seen order
};

// Splits a document into outputs: every \bfig...\efig block is one figure;
// a document without \bfig is a single figure. Outside figures only inline
// arrows and \iloop are allowed, each becoming its own output. Throws
// CompileError on the first error.
CompileResult compile(std::string_view source, const MetricsTable& metrics,
                      const CompileOptions& options);

}  // namespace diagxy
