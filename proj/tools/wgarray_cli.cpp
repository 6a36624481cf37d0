// Copyright 2026 The wgarray Authors
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


// Command-line front end. Talks to the simulator exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wgarray/wgarray.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct ScenarioDeleter {
  void operator()(wga_scenario* s) const { wga_scenario_destroy(s); }
};
struct StringDeleter {
  void operator()(char* s) const { wga_string_free(s); }
};
using ScenarioHandle = std::unique_ptr<wga_scenario, ScenarioDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report(wga_status status) {
  std::cerr << "wgarray: " << wga_last_error() << "\n";
  switch (status) {
    case WGA_ERR_VALIDATION:
      return kExitValidation;
    case WGA_ERR_NUMERICAL:
      return kExitNumerical;
    default:
      return 1;
  }
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int write_output(const std::string& path, const char* data) {
  if (path.empty() || path == "-") {
    std::fwrite(data, 1, std::char_traits<char>::length(data), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << data;
  if (!out) {
    std::cerr << "wgarray: cannot write " << path << "\n";
    return 1;
  }
  return 0;
}

int load(const std::string& path, ScenarioHandle& scenario) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "wgarray: cannot read " << path << "\n";
    return kExitValidation;
  }
  wga_scenario* raw = nullptr;
  if (const auto status = wga_scenario_parse(text.c_str(), &raw); status != WGA_OK) {
    std::cerr << path << ": ";
    return report(status);
  }
  scenario.reset(raw);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum light in chi(2) waveguide arrays"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wga_version()));

  std::string out_path;
  std::string format = "default";
  double tol = 0.0;
  app.add_option("--out", out_path, "Write output here instead of stdout / the spec's path")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "default"}));
  app.add_option("--tol", tol, "Integrator tolerance per step (default 1e-10)")
      ->check(CLI::PositiveNumber);

  std::string spec_file;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("spec-file", spec_file)->required();

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "Reproduce a figure preset");
  figure->add_option("id", figure_id)->required()->check(
      CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));

  std::vector<std::string> axes;
  auto* sweep = app.add_subcommand("sweep", "Sweep a scenario over up to three axes");
  sweep->add_option("spec-file", spec_file)->required();
  sweep->add_option("--axis", axes, "name=start:stop:count; names: g_scale J_scale gamma t phi")
      ->required();

  auto* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
  validate->add_option("spec-file", spec_file)->required();

  // Global options may also follow the subcommand.
  for (auto* sub : {run, figure, sweep, validate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  wga_run_options options{WGA_FORMAT_DEFAULT, tol};
  if (format == "csv") options.format = WGA_FORMAT_CSV;
  if (format == "json") options.format = WGA_FORMAT_JSON;

  char* raw_output = nullptr;
  wga_status status = WGA_OK;
  std::string destination = out_path;

  if (*figure) {
    status = wga_figure_run(figure_id.c_str(), &options, &raw_output);
  } else {
    ScenarioHandle scenario;
    if (const int rc = load(spec_file, scenario); rc != 0) return rc;
    if (*validate) {
      std::cout << spec_file << ": ok\n";
      return 0;
    }
    if (destination.empty()) destination = wga_scenario_output_path(scenario.get());
    if (*run) {
      status = wga_scenario_run(scenario.get(), &options, &raw_output);
    } else {
      std::vector<const char*> axis_ptrs;
      for (const auto& a : axes) axis_ptrs.push_back(a.c_str());
      status = wga_sweep_run(scenario.get(), axis_ptrs.data(), axis_ptrs.size(), &options,
                             &raw_output);
    }
  }
  if (status != WGA_OK) return report(status);
  OwnedString output(raw_output);
  return write_output(destination, output.get());
}
