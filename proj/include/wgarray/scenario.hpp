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


#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgarray/kernels.hpp"
#include "wgarray/model.hpp"
#include "wgarray/moments.hpp"

namespace wga {

enum class InputKind { vacuum, coherent };

struct InputState {
  InputKind kind = InputKind::vacuum;
  int site = 1;
  std::complex<double> amplitude{0.0, 0.0};

  bool operator==(const InputState&) const = default;
};

/// Either a uniform grid 0, t_max/n_steps, ..., t_max (n_steps + 1 samples) or
/// an explicit ascending list.
struct TimeGrid {
  std::optional<double> t_max;
  int n_steps = 200;
  std::vector<double> explicit_times;

  std::vector<double> points() const;
  bool operator==(const TimeGrid&) const = default;
};

struct ObservableRequest {
  bool intensities = false;
  bool duan_all = false;
  std::vector<std::pair<int, int>> duan_pairs;
  bool duan_centered = false;
  std::vector<std::array<int, 3>> vlf_triples;
  bool covariance = false;
  bool symplectic_spectrum = false;

  bool any() const;
  bool operator==(const ObservableRequest&) const = default;
};

struct PhaseSetting {
  bool minimize = false;
  double value = 0.0;

  bool operator==(const PhaseSetting&) const = default;
};

enum class OutputFormat { csv, json };

struct ScenarioSpec {
  std::string id = "scenario";
  ArrayConfig config;
  InputState input;
  TimeGrid time;
  ObservableRequest observables;
  PhaseSetting phase;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
  std::vector<std::string> metadata;  // emitted as '#' lines ahead of CSV output

  bool operator==(const ScenarioSpec&) const = default;
};

/// Throws ValidationError naming the offending field.
void validate(const ScenarioSpec& spec);

/// Parses the sectioned key-value format documented in docs/scenario-format.md.
/// Syntax errors carry "line N:"; unknown or repeated keys are errors.
ScenarioSpec parse_scenario(std::string_view text);

/// Inverse of parse_scenario; numbers are written in shortest round-trip form.
std::string emit_scenario(const ScenarioSpec& spec);

/// One output row. Index fields are 1-based; 0 means unused (blank in CSV).
/// phi is absent for phase-independent observables.
struct Record {
  std::string scenario_id;
  double time = 0.0;
  std::string observable;
  int i = 0;
  int j = 0;
  int k = 0;
  std::optional<double> phi;
  double value = 0.0;
  std::vector<double> coordinates;  // sweep axis values, aligned with RecordTable::axis_names
};

struct RecordTable {
  std::vector<std::string> metadata;
  std::vector<std::string> axis_names;
  std::vector<Record> records;

  void append(RecordTable other);
};

inline constexpr std::array<std::string_view, 8> kCsvColumns = {
    "scenario_id", "time", "observable", "i", "j", "k", "phi", "value"};

std::string to_csv(const RecordTable& table);
std::string to_json(const RecordTable& table);
std::string render(const RecordTable& table, OutputFormat format);

/// Reads a number as accepted in scenario files: a decimal, a/b, or a multiple
/// or fraction of pi ("pi/2", "2*pi", "-pi"). Errors name `field`.
double parse_number(std::string_view field, std::string_view text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

struct RunOptions {
  double tol = kDefaultTolerance;
  // Always integrate the moment equations, even when the array is lossless.
  bool force_moment_path = false;
};

/// Moment state at every grid time. Lossless arrays go through the Bogoliubov
/// propagator (exact); lossy ones through the moment equations.
std::vector<MomentState> evolve_grid(const ScenarioSpec& spec, const RunOptions& options = {});

RecordTable records_for(const ScenarioSpec& spec, const std::vector<MomentState>& states);

/// Throws NumericalError naming the grid step on integrator failure.
RecordTable run_scenario(const ScenarioSpec& spec, const RunOptions& options = {});

inline constexpr std::array<std::string_view, 4> kFigureIds = {"fig2", "fig3", "fig4", "fig5"};

/// Hard-coded parameter sets behind each figure id. Throws ValidationError for
/// an unknown id.
std::vector<ScenarioSpec> figure_presets(std::string_view id);
RecordTable reproduce_figure(std::string_view id, const RunOptions& options = {});

struct SweepAxis {
  std::string name;  // g_scale | J_scale | gamma | t | phi
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> points() const;
};

inline constexpr std::size_t kMaxSweepAxes = 3;
inline constexpr std::size_t kMaxSweepPoints = 1000000;

/// Parses "name=start:stop:count".
SweepAxis parse_axis(std::string_view text);

/// Cartesian product over the axes, evaluated concurrently; output is sorted by
/// coordinate tuple regardless of scheduling.
RecordTable sweep(const ScenarioSpec& base, const std::vector<SweepAxis>& axes,
                  const RunOptions& options = {}, unsigned workers = 0);

}  // namespace wga
