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


#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "wgarray/error.hpp"
#include "wgarray/observables.hpp"
#include "wgarray/oracles.hpp"
#include "wgarray/scenario.hpp"

using namespace wga;
using cd = std::complex<double>;

namespace {

const char* kMinimal = R"(# two guides, vacuum in
[array]
n_modes = 2
pump_gains = 0.4
link_couplings = 1

[time]
t_max = 2

[observables]
intensities = true
)";

const char* kFull = R"([scenario]
id = full-example

[array]
n_modes = 4
pump_gains = 0.1, 0.2, 1/3, 0
link_couplings = 1, 0.5, 2
loss_rate = 0.05
pump_phase = pi

[input]
kind = coherent
site = 3
amplitude = 1.5, -0.25

[time]
times = 0, 0.5, 1.25, 3

[observables]
intensities = false
duan_pairs = 1-2, 2-4
duan_centered = true
vlf_triples = 2-1-3
covariance = true
symplectic_spectrum = true
phase = minimize

[output]
format = json
path = out.json
)";

std::string error_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

std::string first_line_after_comments(const std::string& csv) {
  std::size_t pos = 0;
  while (csv.compare(pos, 1, "#") == 0) pos = csv.find('\n', pos) + 1;
  return csv.substr(pos, csv.find('\n', pos) - pos);
}

ScenarioSpec two_guide(double g, double gamma) {
  ScenarioSpec s;
  s.id = "two";
  s.config = ArrayConfig::uniform(2, g, 1.0, gamma, M_PI);
  s.time.t_max = 4.0;
  s.time.n_steps = 40;
  s.observables.duan_pairs = {{1, 2}};
  return s;
}

}  // namespace

TEST_SUITE("format") {
  TEST_CASE("minimal file picks up defaults") {
    const auto s = parse_scenario(kMinimal);
    CHECK(s.config == ArrayConfig::uniform(2, 0.4, 1.0));
    CHECK(s.input.kind == InputKind::vacuum);
    CHECK(s.phase.minimize == false);
    CHECK(s.phase.value == 0.0);
    CHECK(s.format == OutputFormat::csv);
    CHECK(s.output_path.empty());
    CHECK(s.time.n_steps == 200);
    CHECK(s.time.points().size() == 201);
    CHECK(s.time.points().back() == 2.0);
    CHECK(s.observables.intensities);
  }

  TEST_CASE("full file") {
    const auto s = parse_scenario(kFull);
    CHECK(s.id == "full-example");
    CHECK(s.config.pump_gains[2] == 1.0 / 3.0);
    CHECK(s.config.link_couplings == std::vector<double>{1, 0.5, 2});
    CHECK(s.config.pump_phase == M_PI);
    CHECK(s.input.kind == InputKind::coherent);
    CHECK(s.input.site == 3);
    CHECK(s.input.amplitude == cd(1.5, -0.25));
    CHECK(s.time.points() == std::vector<double>{0, 0.5, 1.25, 3});
    CHECK(s.observables.duan_pairs == std::vector<std::pair<int, int>>{{1, 2}, {2, 4}});
    CHECK(s.observables.vlf_triples.size() == 1);
    CHECK(s.observables.vlf_triples[0] == std::array<int, 3>{2, 1, 3});
    CHECK(s.phase.minimize);
    CHECK(s.format == OutputFormat::json);
    CHECK(s.output_path == "out.json");
  }

  TEST_CASE("round trip through the emitter") {
    for (const char* text : {kMinimal, kFull}) {
      const auto s = parse_scenario(text);
      const auto again = parse_scenario(emit_scenario(s));
      CHECK(again == s);
      CHECK(emit_scenario(again) == emit_scenario(s));
    }
    for (const auto id : kFigureIds) {
      for (auto s : figure_presets(id)) {
        s.metadata.clear();
        CHECK(parse_scenario(emit_scenario(s)) == s);
      }
    }
  }

  TEST_CASE("validation errors name the field") {
    std::string text = kMinimal;
    text.replace(text.find("n_modes = 2"), 11, "n_modes = 0");
    CHECK(error_of(text).find("n_modes") != std::string::npos);

    std::string bad_gain = kMinimal;
    bad_gain.replace(bad_gain.find("pump_gains = 0.4"), 16, "pump_gains = 1, 2, 3");
    CHECK(error_of(bad_gain).find("pump_gains") != std::string::npos);

    std::string no_time = kMinimal;
    no_time.replace(no_time.find("[time]\nt_max = 2"), 16, "");
    CHECK(error_of(no_time).find("time") != std::string::npos);

    std::string empty_times = kMinimal;
    empty_times.replace(empty_times.find("t_max = 2"), 9, "times =");
    CHECK(error_of(empty_times).find("time") != std::string::npos);

    std::string descending = kMinimal;
    descending.replace(descending.find("t_max = 2"), 9, "times = 1, 0.5");
    CHECK(error_of(descending).find("ascending") != std::string::npos);

    std::string no_obs = kMinimal;
    no_obs.replace(no_obs.find("intensities = true"), 18, "intensities = false");
    CHECK(error_of(no_obs).find("observables") != std::string::npos);

    std::string far_pair = kMinimal;
    far_pair += "duan_pairs = 1-3\n";
    CHECK(error_of(far_pair).find("duan_pairs") != std::string::npos);

    std::string bad_site = kFull;
    bad_site.replace(bad_site.find("site = 3"), 8, "site = 9");
    CHECK(error_of(bad_site).find("site") != std::string::npos);
  }

  TEST_CASE("syntax errors carry a line number") {
    CHECK(error_of("[array]\nn_modes = 2\nthis is not an assignment\n").find("line 3") !=
          std::string::npos);
    CHECK(error_of("[array\n").find("line 1") != std::string::npos);
    CHECK(error_of("n_modes = 2\n").find("line 1") != std::string::npos);
  }

  TEST_CASE("unknown and repeated keys are rejected") {
    std::string typo = kMinimal;
    typo += "intensitys = true\n";
    const auto e = error_of(typo);
    CHECK(e.find("unknown key") != std::string::npos);
    CHECK(e.find("line 12") != std::string::npos);

    std::string twice = kMinimal;
    twice += "intensities = false\n";
    CHECK(error_of(twice).find("duplicate") != std::string::npos);
  }

  TEST_CASE("numbers") {
    CHECK(parse_number("x", "0.25") == 0.25);
    CHECK(parse_number("x", "-3") == -3.0);
    CHECK(parse_number("x", "1/3") == 1.0 / 3.0);
    CHECK(parse_number("x", "pi") == M_PI);
    CHECK(parse_number("x", "pi/2") == M_PI / 2);
    CHECK(parse_number("x", "2*pi") == 2 * M_PI);
    CHECK(parse_number("x", "-pi") == -M_PI);
    CHECK(parse_number("x", "1e-3") == 1e-3);
    CHECK_THROWS_AS(parse_number("x", "abc"), ValidationError);
    CHECK_THROWS_AS(parse_number("x", "1/0"), ValidationError);
    CHECK_THROWS_AS(parse_number("x", ""), ValidationError);
    CHECK_THROWS_AS(parse_number("x", "nan"), ValidationError);
  }

  TEST_CASE("shortest round-trip formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(-0.0) == "-0");
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int trial = 0; trial < 1000; ++trial) {
      const double x = u(rng) * std::pow(10.0, trial % 40 - 20);
      const auto text = format_double(x);
      CHECK(std::stod(text) == x);
      std::string mantissa;
      for (char c : text.substr(0, text.find_first_of("eE")))
        if (c >= '0' && c <= '9') mantissa += c;
      const auto lead = mantissa.find_first_not_of('0');
      const auto trail = mantissa.find_last_not_of('0');
      CHECK(trail - lead + 1 <= 17);
    }
  }
}

TEST_SUITE("records") {
  TEST_CASE("CSV header is fixed") {
    auto spec = parse_scenario(kMinimal);
    spec.time.t_max = 0.5;
    spec.time.n_steps = 2;
    const auto csv = to_csv(run_scenario(spec));
    CHECK(first_line_after_comments(csv) == "scenario_id,time,observable,i,j,k,phi,value");
    CHECK(csv.find("scenario,0,intensity,1,,,,0\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
  }

  TEST_CASE("sweep CSV header prepends the axes") {
    auto spec = parse_scenario(kMinimal);
    const auto table = sweep(spec, {parse_axis("gamma=0:0.2:2"), parse_axis("t=0:1:2")});
    CHECK(first_line_after_comments(to_csv(table)) ==
          "gamma,t,scenario_id,time,observable,i,j,k,phi,value");
  }

  TEST_CASE("JSON mirrors the CSV records") {
    auto spec = parse_scenario(kFull);
    const auto table = run_scenario(spec);
    const auto doc = nlohmann::json::parse(to_json(table));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == table.records.size());
    const auto& first = doc.front();
    std::vector<std::string> keys;
    for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    std::vector<std::string> expected(kCsvColumns.begin(), kCsvColumns.end());
    std::sort(expected.begin(), expected.end());
    CHECK(keys == expected);
    for (std::size_t r = 0; r < table.records.size(); ++r) {
      CHECK(doc[r]["value"].get<double>() == table.records[r].value);
      CHECK(doc[r]["observable"].get<std::string>() == table.records[r].observable);
    }
  }

  TEST_CASE("observable rows and index conventions") {
    auto spec = parse_scenario(kFull);
    const auto table = run_scenario(spec);
    int duan = 0, centered = 0, vlf = 0, cov = 0, nu = 0;
    for (const auto& r : table.records) {
      if (r.observable == "duan") {
        ++duan;
        CHECK(r.phi.has_value());
        CHECK(*r.phi >= 0.0);
        CHECK(*r.phi < M_PI);
      }
      if (r.observable == "duan_centered") ++centered;
      if (r.observable == "vlf") {
        ++vlf;
        CHECK(r.i == 2);
        CHECK(r.k == 3);
      }
      if (r.observable == "covariance") ++cov;
      if (r.observable == "symplectic_eigenvalue") {
        ++nu;
        CHECK_FALSE(r.phi.has_value());
        CHECK(r.value >= 0.5 - 1e-9);
      }
    }
    CHECK(duan == 4 * 2);
    CHECK(centered == 4 * 2);
    CHECK(vlf == 4);
    CHECK(cov == 4 * 64);
    CHECK(nu == 4 * 4);
  }

  TEST_CASE("all pairs") {
    ScenarioSpec s;
    s.config = ArrayConfig::uniform(4, 0.1, 1.0);
    s.time.explicit_times = {1.0};
    s.observables.duan_all = true;
    const auto table = run_scenario(s);
    CHECK(table.records.size() == 6);
    CHECK(table.records.front().i == 1);
    CHECK(table.records.front().j == 2);
    CHECK(table.records.back().i == 3);
    CHECK(table.records.back().j == 4);
  }

  TEST_CASE("phase minimization lands on the analytic optimum") {
    ScenarioSpec s;
    s.config = ArrayConfig::uniform(2, 0.4, 1.0, 0.0, 0.9);
    s.time.explicit_times = {1.3};
    s.observables.duan_pairs = {{1, 2}};
    s.phase.minimize = true;
    const auto table = run_scenario(s);
    REQUIRE(table.records.size() == 1);
    const auto state = evolve_grid(s).back();
    double analytic = std::fmod((std::arg(state.anomalous(0, 1)) + M_PI) / 2.0, M_PI);
    if (analytic < 0) analytic += M_PI;
    double gap = std::abs(*table.records[0].phi - analytic);
    CHECK(std::min(gap, M_PI - gap) <= M_PI / 180.0);
  }

  TEST_CASE("integrator failure names the grid step") {
    ScenarioSpec s;
    s.config = ArrayConfig::uniform(1, 400.0, 0.0, 0.1);
    s.time.t_max = 10.0;
    s.time.n_steps = 4;
    s.observables.intensities = true;
    try {
      run_scenario(s);
      FAIL("expected a numerical failure");
    } catch (const NumericalError& e) {
      CHECK(std::string(e.what()).find("grid step") != std::string::npos);
    }
  }
}

TEST_SUITE("presets") {
  TEST_CASE("unknown figure") {
    CHECK_THROWS_AS(figure_presets("fig9"), ValidationError);
  }

  TEST_CASE("fig2 profiles") {
    const auto table = reproduce_figure("fig2");
    CHECK(table.records.size() == 42);
    CHECK(!table.metadata.empty());
    for (const auto& r : table.records) {
      CHECK(r.observable == "intensity");
      CHECK(r.time == 2.5);
    }
  }

  TEST_CASE("fig3 starts at zero") {
    const auto table = reproduce_figure("fig3");
    CHECK(table.records.size() == 3 * 201 * 10);
    for (const auto& r : table.records)
      if (r.time == 0.0) CHECK(r.value == 0.0);
    bool noted = false;
    for (const auto& m : table.metadata) noted |= m.find("phi = 0") != std::string::npos;
    CHECK(noted);
  }

  TEST_CASE("fig4 starts at four") {
    const auto table = reproduce_figure("fig4");
    CHECK(table.records.front().time == 0.0);
    CHECK(table.records.front().value == 4.0);
  }

  TEST_CASE("fig5 lossless curve follows the closed form") {
    const auto table = reproduce_figure("fig5");
    int checked = 0;
    for (const auto& r : table.records) {
      if (r.scenario_id != "fig5_gammaJ=0") continue;
      CHECK(std::abs(r.value - duan_closed_form(0.4, 1.0, r.time)) <= 1e-8);
      ++checked;
    }
    CHECK(checked == 201);
  }

  TEST_CASE("fig5 minima deepen as loss drops") {
    std::map<std::string, double> minima;
    for (const auto& r : reproduce_figure("fig5").records) {
      auto [it, fresh] = minima.emplace(r.scenario_id, r.value);
      if (!fresh) it->second = std::min(it->second, r.value);
    }
    CHECK(minima["fig5_gammaJ=0"] < minima["fig5_gammaJ=1/5"]);
    CHECK(minima["fig5_gammaJ=1/5"] < minima["fig5_gammaJ=2/5"]);
    CHECK(minima["fig5_gammaJ=2/5"] < 0.0);
  }

  TEST_CASE("lossless and moment paths agree on every preset") {
    RunOptions moment;
    moment.force_moment_path = true;
    moment.tol = 1e-12;
    for (const auto id : kFigureIds) {
      for (const auto& spec : figure_presets(id)) {
        const auto fast = run_scenario(spec);
        const auto slow = run_scenario(spec, moment);
        REQUIRE(fast.records.size() == slow.records.size());
        double worst = 0.0;
        for (std::size_t r = 0; r < fast.records.size(); ++r)
          worst = std::max(worst, std::abs(fast.records[r].value - slow.records[r].value));
        CAPTURE(spec.id);
        CHECK(worst <= 1e-8);
      }
    }
  }
}

TEST_SUITE("sweep") {
  TEST_CASE("axis parsing") {
    const auto a = parse_axis("g_scale=0.5:1.5:3");
    CHECK(a.name == "g_scale");
    CHECK(a.points() == std::vector<double>{0.5, 1.0, 1.5});
    CHECK(parse_axis("phi=0:pi/2:2").stop == M_PI / 2);
    CHECK(parse_axis("t=2:2:1").points() == std::vector<double>{2.0});
    CHECK_THROWS_AS(parse_axis("omega=0:1:2"), ValidationError);
    CHECK_THROWS_AS(parse_axis("t=0:1"), ValidationError);
    CHECK_THROWS_AS(parse_axis("t0:1:2"), ValidationError);
    CHECK_THROWS_AS(parse_axis("t=0:1:0"), ValidationError);
  }

  TEST_CASE("size limits are enforced up front") {
    const auto base = two_guide(0.2, 0.0);
    CHECK_THROWS_AS(sweep(base, {parse_axis("t=0:1:101"), parse_axis("phi=0:1:101"),
                                 parse_axis("gamma=0:1:101")}),
                    ValidationError);
    CHECK_THROWS_AS(sweep(base, {parse_axis("t=0:1:2"), parse_axis("phi=0:1:2"),
                                 parse_axis("gamma=0:1:2"), parse_axis("g_scale=0:1:2")}),
                    ValidationError);
    CHECK_THROWS_AS(sweep(base, {parse_axis("t=0:1:2"), parse_axis("t=0:2:2")}), ValidationError);
  }

  TEST_CASE("single-point sweep equals a plain run") {
    const auto base = two_guide(0.3, 0.1);
    const auto plain = run_scenario(base);
    const auto swept = sweep(base, {parse_axis("g_scale=1:1:1")});
    REQUIRE(plain.records.size() == swept.records.size());
    for (std::size_t r = 0; r < plain.records.size(); ++r) {
      CHECK(plain.records[r].value == swept.records[r].value);
      CHECK(swept.records[r].coordinates == std::vector<double>{1.0});
    }
  }

  TEST_CASE("output order and content do not depend on the worker count") {
    const auto base = two_guide(0.3, 0.0);
    const std::vector<SweepAxis> axes = {parse_axis("gamma=0.4:0:3"), parse_axis("phi=0:pi:4")};
    const auto serial = to_csv(sweep(base, axes, {}, 1));
    const auto parallel = to_csv(sweep(base, axes, {}, 8));
    CHECK(serial == parallel);
    const auto table = sweep(base, axes, {}, 8);
    for (std::size_t r = 1; r < table.records.size(); ++r)
      CHECK_FALSE(table.records[r].coordinates < table.records[r - 1].coordinates);
    CHECK(table.records.front().coordinates == std::vector<double>{0.0, 0.0});
  }

  TEST_CASE("curves stay continuous through the degeneracy") {
    auto base = two_guide(1.0, 0.0);
    base.time.t_max = 5.0;
    base.time.n_steps = 50;
    const auto table = sweep(base, {parse_axis("g_scale=0.49:0.51:3")});
    std::map<double, std::vector<double>> curves;
    for (const auto& r : table.records) curves[r.coordinates[0]].push_back(r.value);
    REQUIRE(curves.size() == 3);
    const auto& lo = curves.begin()->second;
    const auto& mid = std::next(curves.begin())->second;
    const auto& hi = curves.rbegin()->second;
    for (std::size_t q = 0; q < mid.size(); ++q) {
      CHECK(std::abs(mid[q]) <= 1e-10);  // 2g = J: M vanishes identically
      CHECK(lo[q] <= 1e-12);
      CHECK(hi[q] >= -1e-12);
      CHECK(hi[q] - lo[q] <= 3.0);
    }
  }
}
