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


#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "json.hpp"

#include "wgarray/error.hpp"
#include "wgarray/observables.hpp"
#include "wgarray/propagator.hpp"
#include "wgarray/scenario.hpp"

namespace wga {

namespace {

MomentState initial_state(const ScenarioSpec& spec) {
  const int n = spec.config.n_modes;
  if (spec.input.kind == InputKind::coherent) {
    return coherent_state(n, spec.input.site, spec.input.amplitude);
  }
  return vacuum_state(n);
}

std::vector<std::pair<int, int>> requested_pairs(const ScenarioSpec& spec) {
  if (!spec.observables.duan_all) return spec.observables.duan_pairs;
  std::vector<std::pair<int, int>> pairs;
  const int n = spec.config.n_modes;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) pairs.emplace_back(j, k);
  }
  return pairs;
}

void add_duan_records(const ScenarioSpec& spec, const MomentState& s, RecordTable& out,
                      bool centered) {
  const char* name = centered ? "duan_centered" : "duan";
  for (const auto& [j, k] : requested_pairs(spec)) {
    Record r{spec.id, s.time, name, j, k, 0, std::nullopt, 0.0, {}};
    if (spec.phase.minimize) {
      // Grid minimum over phi; the centered variant is minimized on its own.
      PhaseMinimum best{0.0, 0.0};
      for (int q = 0; q < kPhaseGridPoints; ++q) {
        const double phase = std::numbers::pi * q / kPhaseGridPoints;
        const double v = centered ? duan_correlation_centered(s, j, k, phase)
                                  : duan_correlation(s, j, k, phase);
        if (q == 0 || v < best.value) best = {phase, v};
      }
      r.phi = best.phase;
      r.value = best.value;
    } else {
      r.phi = spec.phase.value;
      r.value = centered ? duan_correlation_centered(s, j, k, spec.phase.value)
                         : duan_correlation(s, j, k, spec.phase.value);
    }
    out.records.push_back(std::move(r));
  }
}

// phi used by observables other than the Duan correlation.
double fixed_phase(const ScenarioSpec& spec) {
  return spec.phase.minimize ? 0.0 : spec.phase.value;
}

}  // namespace

void RecordTable::append(RecordTable other) {
  for (auto& m : other.metadata) metadata.push_back(std::move(m));
  for (auto& r : other.records) records.push_back(std::move(r));
}

std::vector<MomentState> evolve_grid(const ScenarioSpec& spec, const RunOptions& options) {
  validate(spec);
  const auto times = spec.time.points();
  const MomentState start = initial_state(spec);
  std::vector<MomentState> states;
  states.reserve(times.size());

  const bool lossless = spec.config.loss_rate == 0.0 && !options.force_moment_path;
  MomentState current = start;
  for (std::size_t step = 0; step < times.size(); ++step) {
    const double t = times[step];
    try {
      if (lossless) {
        current = apply(propagate(spec.config, t), start);
        current.time = t;
      } else {
        current = evolve(spec.config, current, t, options.tol);
      }
    } catch (const NumericalError& e) {
      throw NumericalError("scenario '" + spec.id + "', grid step " + std::to_string(step) +
                           " (t = " + format_double(t) + "): " + e.what());
    }
    states.push_back(current);
  }
  return states;
}

RecordTable records_for(const ScenarioSpec& spec, const std::vector<MomentState>& states) {
  RecordTable out;
  out.metadata = spec.metadata;
  const auto& obs = spec.observables;
  const double phase = fixed_phase(spec);
  const int n = spec.config.n_modes;
  for (const auto& s : states) {
    if (obs.intensities) {
      const auto profile = intensities(s);
      for (int j = 1; j <= n; ++j) {
        out.records.push_back({spec.id, s.time, "intensity", j, 0, 0, std::nullopt,
                               profile[j - 1], {}});
      }
    }
    if (obs.duan_all || !obs.duan_pairs.empty()) {
      add_duan_records(spec, s, out, false);
      if (obs.duan_centered) add_duan_records(spec, s, out, true);
    }
    for (const auto& t : obs.vlf_triples) {
      out.records.push_back(
          {spec.id, s.time, "vlf", t[0], t[1], t[2], phase, vlf_tripartite(s, t[0], t[1], t[2], phase), {}});
    }
    if (obs.covariance || obs.symplectic_spectrum) {
      const auto cov = quadrature_covariance(s, phase);
      if (obs.covariance) {
        for (int r = 0; r < 2 * n; ++r) {
          for (int c = 0; c < 2 * n; ++c) {
            out.records.push_back(
                {spec.id, s.time, "covariance", r + 1, c + 1, 0, phase, cov.matrix(r, c), {}});
          }
        }
      }
      if (obs.symplectic_spectrum) {
        const auto nu = symplectic_eigenvalues(cov);
        for (int q = 0; q < n; ++q) {
          out.records.push_back(
              {spec.id, s.time, "symplectic_eigenvalue", q + 1, 0, 0, std::nullopt, nu[q], {}});
        }
      }
    }
  }
  return out;
}

RecordTable run_scenario(const ScenarioSpec& spec, const RunOptions& options) {
  return records_for(spec, evolve_grid(spec, options));
}

// ---------------------------------------------------------------------------
// Output

std::string to_csv(const RecordTable& table) {
  std::string out;
  for (const auto& m : table.metadata) out += "# " + m + "\n";
  for (const auto& axis : table.axis_names) out += axis + ",";
  for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
    out += kCsvColumns[c];
    out += c + 1 < kCsvColumns.size() ? "," : "\n";
  }
  const auto index = [](int v) { return v == 0 ? std::string() : std::to_string(v); };
  for (const auto& r : table.records) {
    for (double x : r.coordinates) out += format_double(x) + ",";
    out += r.scenario_id + "," + format_double(r.time) + "," + r.observable + "," + index(r.i) +
           "," + index(r.j) + "," + index(r.k) + "," + (r.phi ? format_double(*r.phi) : "") +
           "," + format_double(r.value) + "\n";
  }
  return out;
}

std::string to_json(const RecordTable& table) {
  auto array = nlohmann::ordered_json::array();
  const auto index = [](int v) -> nlohmann::ordered_json {
    return v == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v);
  };
  for (const auto& r : table.records) {
    nlohmann::ordered_json obj;
    for (std::size_t a = 0; a < table.axis_names.size(); ++a) {
      obj[table.axis_names[a]] = r.coordinates[a];
    }
    obj["scenario_id"] = r.scenario_id;
    obj["time"] = r.time;
    obj["observable"] = r.observable;
    obj["i"] = index(r.i);
    obj["j"] = index(r.j);
    obj["k"] = index(r.k);
    obj["phi"] = r.phi ? nlohmann::ordered_json(*r.phi) : nlohmann::ordered_json(nullptr);
    obj["value"] = r.value;
    array.push_back(std::move(obj));
  }
  return array.dump(1) + "\n";
}

std::string render(const RecordTable& table, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(table) : to_json(table);
}

// ---------------------------------------------------------------------------
// Figure presets

namespace {

constexpr double kPi = std::numbers::pi;
// Pump phase under which the two-guide Duan curve reads 4g(2g - J) sin^2(Wt)/W^2 at phi = 0.
constexpr double kFigurePumpPhase = kPi;
const char* kPumpNote =
    "pump_phase = pi: the convention in which M(1,2) = 4g(2g-J)sin^2(Wt)/W^2 at phi = 0";

ScenarioSpec preset(std::string id, int n, double g, double loss) {
  ScenarioSpec s;
  s.id = std::move(id);
  s.config = ArrayConfig::uniform(n, g, 1.0, loss, kFigurePumpPhase);
  return s;
}

}  // namespace

std::vector<ScenarioSpec> figure_presets(std::string_view id) {
  std::vector<ScenarioSpec> out;
  if (id == "fig2") {
    for (const auto& [label, g] : {std::pair{"1/2", 0.5}, std::pair{"1/3", 1.0 / 3.0}}) {
      auto s = preset(std::string("fig2_gJ=") + label, 21, g, 0.0);
      s.input = {InputKind::coherent, 10, {5.0, 0.0}};
      s.time.explicit_times = {2.5};
      s.observables.intensities = true;
      out.push_back(std::move(s));
    }
    out.front().metadata = {
        "figure fig2: intensity profile, N = 21, J = 1, g/J in {1/2, 1/3}, t = 2.5",
        "coherent input alpha = 5 at site 10 (1-based, one site left of center)", kPumpNote};
  } else if (id == "fig3") {
    for (const auto& [label, g] :
         {std::pair{"1/5", 0.2}, std::pair{"1/7", 1.0 / 7.0}, std::pair{"1/9", 1.0 / 9.0}}) {
      auto s = preset(std::string("fig3_gJ=") + label, 5, g, 0.0);
      s.time.t_max = 2.0 * kPi;
      s.time.n_steps = 200;
      s.observables.duan_all = true;
      out.push_back(std::move(s));
    }
    out.front().metadata = {
        "figure fig3: Duan correlation M(j,k), N = 5, J = 1, g/J in {1/5, 1/7, 1/9}, vacuum input",
        "time column is t in units of 1/J; tau = J t / pi spans [0, 2]",
        "all pairs emitted at phi = 0 (the plotted pairs and phase are not identified)",
        kPumpNote};
  } else if (id == "fig4") {
    auto s = preset("fig4_gJ=2/3", 3, 2.0 / 3.0, 0.0);
    s.time.t_max = 3.0;
    s.time.n_steps = 200;
    s.observables.vlf_triples = {{2, 1, 3}};
    s.phase.value = kPi / 2.0;
    s.metadata = {"figure fig4: tripartite sum V(2,1,3), N = 3, J = 1, g/J = 2/3, phi = pi/2",
                  "time in units of 1/J, window [0, 3]; V < 4 witnesses full inseparability",
                  kPumpNote};
    out.push_back(std::move(s));
  } else if (id == "fig5") {
    for (const auto& [label, gamma] :
         {std::pair{"0", 0.0}, std::pair{"1/5", 0.2}, std::pair{"2/5", 0.4}}) {
      auto s = preset(std::string("fig5_gammaJ=") + label, 2, 0.4, gamma);
      s.time.t_max = 10.0;
      s.time.n_steps = 200;
      s.observables.duan_pairs = {{1, 2}};
      out.push_back(std::move(s));
    }
    out.front().metadata = {
        "figure fig5: lossy Duan correlation M(1,2), N = 2, J = 1, g/J = 2/5, phi = 0",
        "gamma/J in {0, 1/5, 2/5}, time in units of 1/J, window [0, 10]", kPumpNote};
  } else {
    throw ValidationError("unknown figure id '" + std::string(id) +
                          "' (expected fig2, fig3, fig4 or fig5)");
  }
  return out;
}

RecordTable reproduce_figure(std::string_view id, const RunOptions& options) {
  RecordTable out;
  for (const auto& spec : figure_presets(id)) out.append(run_scenario(spec, options));
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<double> SweepAxis::points() const {
  std::vector<double> out(count);
  for (int q = 0; q < count; ++q) {
    out[q] = count == 1 ? start : start + (stop - start) * q / (count - 1);
  }
  return out;
}

SweepAxis parse_axis(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ValidationError("axis '" + std::string(text) + "': expected name=start:stop:count");
  }
  SweepAxis axis;
  axis.name = std::string(text.substr(0, eq));
  static const std::array<std::string_view, 5> kNames = {"g_scale", "J_scale", "gamma", "t",
                                                         "phi"};
  if (std::find(kNames.begin(), kNames.end(), axis.name) == kNames.end()) {
    throw ValidationError("axis '" + axis.name +
                          "': unknown name (expected g_scale, J_scale, gamma, t or phi)");
  }
  const std::string rest(text.substr(eq + 1));
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : rest.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw ValidationError("axis '" + axis.name + "': expected start:stop:count");
  }
  const std::string field = "axis " + axis.name;
  axis.start = parse_number(field, rest.substr(0, c1));
  axis.stop = parse_number(field, rest.substr(c1 + 1, c2 - c1 - 1));
  const std::string count = rest.substr(c2 + 1);
  try {
    std::size_t used = 0;
    axis.count = std::stoi(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
  } catch (const std::exception&) {
    throw ValidationError("axis '" + axis.name + "': count must be an integer");
  }
  if (axis.count < 1) throw ValidationError("axis '" + axis.name + "': count must be >= 1");
  return axis;
}

RecordTable sweep(const ScenarioSpec& base, const std::vector<SweepAxis>& axes,
                  const RunOptions& options, unsigned workers) {
  validate(base);
  if (axes.empty()) throw ValidationError("sweep: at least one axis required");
  if (axes.size() > kMaxSweepAxes) throw ValidationError("sweep: at most 3 axes");
  std::size_t total = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (axes[a].count < 1) throw ValidationError("sweep: axis '" + axes[a].name + "' is empty");
    for (std::size_t b = 0; b < a; ++b) {
      if (axes[a].name == axes[b].name) {
        throw ValidationError("sweep: axis '" + axes[a].name + "' given twice");
      }
    }
    total *= static_cast<std::size_t>(axes[a].count);
    if (total > kMaxSweepPoints) {
      throw ValidationError("sweep: grid exceeds " + std::to_string(kMaxSweepPoints) + " points");
    }
  }

  // Enumerate the Cartesian product, then order by coordinate tuple.
  std::vector<std::vector<double>> grids;
  for (const auto& a : axes) grids.push_back(a.points());
  std::vector<std::vector<double>> points(total, std::vector<double>(axes.size()));
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rem = p;
    for (std::size_t a = axes.size(); a-- > 0;) {
      const auto count = grids[a].size();
      points[p][a] = grids[a][rem % count];
      rem /= count;
    }
  }
  std::stable_sort(points.begin(), points.end());

  const auto make_spec = [&](const std::vector<double>& coords) {
    ScenarioSpec s = base;
    s.metadata.clear();
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const double v = coords[a];
      const auto& name = axes[a].name;
      if (name == "g_scale") {
        for (auto& g : s.config.pump_gains) g *= v;
      } else if (name == "J_scale") {
        for (auto& J : s.config.link_couplings) J *= v;
      } else if (name == "gamma") {
        s.config.loss_rate = v;
      } else if (name == "t") {
        s.time.t_max.reset();
        s.time.explicit_times = {v};
      } else if (name == "phi") {
        s.phase = {false, v};
      }
    }
    return s;
  };

  std::vector<RecordTable> results(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t p = next++; p < total; p = next++) {
      try {
        auto spec = make_spec(points[p]);
        results[p] = run_scenario(spec, options);
        for (auto& r : results[p].records) r.coordinates = points[p];
      } catch (...) {
        errors[p] = std::current_exception();
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RecordTable out;
  out.metadata = base.metadata;
  for (const auto& a : axes) out.axis_names.push_back(a.name);
  for (auto& r : results) {
    for (auto& rec : r.records) out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace wga
