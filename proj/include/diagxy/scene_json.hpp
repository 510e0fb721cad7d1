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

#include "json.hpp"

#include "diagxy/scene.hpp"

namespace diagxy {

// Scene file: keys nodes, arrows, inlines in that order; logical units as
// integers; two-space indentation; LF line endings; trailing newline.
nlohmann::ordered_json scene_to_json(const Scene& scene);
std::string emit_scene(const Scene& scene);

}  // namespace diagxy
