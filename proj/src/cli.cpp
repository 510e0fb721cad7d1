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

#include "diagxy/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "diagxy/compiler.hpp"

namespace diagxy {
namespace {

namespace fs = std::filesystem;

struct Flags {
  std::vector<std::string> inputs;
  std::string format = "both";
  std::string out_dir;
  double em_pt = 10.0;
  double margin_pt = 3.0;
  std::string metrics;
  double label_scale = 1.0;
  bool strict = false;
};

bool read_file(const fs::path& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bool write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

void report(std::ostream& err, const std::string& file, const Diagnostic& d,
            std::string_view severity) {
  err << file << ':';
  if (d.pos.line > 0) err << d.pos.line << ':' << d.pos.col << ':';
  err << ' ' << severity << ": [" << to_string(d.kind) << "] ";
  if (!d.constructor.empty()) err << d.constructor << ": ";
  err << d.message << '\n';
}

// Returns false after reporting a diagnostic.
bool compile_file(const std::string& input, const Flags& flags, const MetricsTable& metrics,
                  const CompileOptions& options, std::ostream& out, std::ostream& err) {
  std::string source;
  if (!read_file(input, source)) {
    err << input << ": error: cannot read file\n";
    return false;
  }
  CompileResult result;
  try {
    result = compile(source, metrics, options);
  } catch (const CompileError& e) {
    report(err, input, e.diagnostic(), "error");
    return false;
  }
  for (const auto& w : result.warnings) report(err, input, w, "warning");

  const fs::path in_path(input);
  const fs::path dir = flags.out_dir.empty() ? in_path.parent_path() : fs::path(flags.out_dir);
  const std::string stem = in_path.stem().string();
  const bool numbered = result.outputs.size() > 1;
  for (std::size_t i = 0; i < result.outputs.size(); ++i) {
    std::string base = stem;
    if (numbered) base += "." + std::to_string(i + 1);
    const Output& o = result.outputs[i];
    std::vector<std::pair<fs::path, const std::string*>> files;
    if (flags.format != "svg") files.push_back({dir / (base + ".scene.json"), &o.scene_text});
    if (flags.format != "scene") files.push_back({dir / (base + ".svg"), &o.svg});
    for (const auto& [path, text] : files) {
      if (!write_file(path, *text)) {
        err << path.string() << ": error: cannot write file\n";
        return false;
      }
      out << path.string() << '\n';
    }
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Compile diagxy commutative-diagram files to scene JSON and SVG", "diagxyc"};
  app.add_option("inputs", flags.inputs, "Input .dxy files")->required();
  app.add_option("--format", flags.format, "Outputs to write")
      ->check(CLI::IsMember({"scene", "svg", "both"}));
  app.add_option("-o,--output-dir", flags.out_dir,
                 "Output directory (default: next to each input)");
  app.add_option("--em-pt", flags.em_pt, "Points per em")->check(CLI::PositiveNumber);
  app.add_option("--margin-pt", flags.margin_pt, "Margin around node boxes in points")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--metrics", flags.metrics, "Metrics table file (default: $DIAGRAMC_METRICS)");
  app.add_option("--label-scale", flags.label_scale, "Label width scale for auto sizing")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", flags.strict, "Treat warnings as errors");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "diagxyc: " << e.what() << '\n' << "Run with --help for usage.\n";
    return 2;
  }

  if (flags.metrics.empty()) {
    if (const char* env = std::getenv("DIAGRAMC_METRICS"); env && *env) flags.metrics = env;
  }
  MetricsTable metrics = MetricsTable::builtin();
  if (!flags.metrics.empty()) {
    try {
      metrics = MetricsTable::load(flags.metrics);
    } catch (const CompileError& e) {
      report(err, flags.metrics, e.diagnostic(), "error");
      return 1;
    }
  }
  if (!flags.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(flags.out_dir, ec);
    if (ec) {
      err << flags.out_dir << ": error: cannot create directory\n";
      return 1;
    }
  }

  CompileOptions options;
  options.cfg = RenderConfig::for_em(flags.em_pt);
  options.cfg.object_margin_pt = flags.margin_pt;
  options.cfg.label_scale = flags.label_scale;
  options.strict = flags.strict;

  bool ok = true;
  for (const auto& input : flags.inputs) {
    ok = compile_file(input, flags, metrics, options, out, err) && ok;
  }
  return ok ? 0 : 1;
}

}  // namespace diagxy
