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


// Reader and writer for the sectioned key-value scenario format.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "wgarray/error.hpp"
#include "wgarray/scenario.hpp"

namespace wga {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void field_error(std::string_view field, const std::string& what) {
  throw ValidationError(std::string(field) + ": " + what);
}

std::optional<double> plain_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

// number | a/b | [a*]pi[/b]
double parse_real(std::string_view field, std::string_view s) {
  s = trim(s);
  if (auto v = plain_number(s)) {
    if (!std::isfinite(*v)) field_error(field, "value is not finite");
    return *v;
  }
  double numerator = 1.0;
  double denominator = 1.0;
  std::string_view head = s;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    head = trim(s.substr(0, slash));
    auto d = plain_number(trim(s.substr(slash + 1)));
    if (!d) field_error(field, "cannot read number '" + std::string(s) + "'");
    denominator = *d;
  }
  bool has_pi = false;
  if (head.ends_with("pi")) {
    has_pi = true;
    head = trim(head.substr(0, head.size() - 2));
    if (head.ends_with('*')) head = trim(head.substr(0, head.size() - 1));
    if (head == "-") {
      numerator = -1.0;
    } else if (!head.empty()) {
      auto n = plain_number(head);
      if (!n) field_error(field, "cannot read number '" + std::string(s) + "'");
      numerator = *n;
    }
  } else {
    auto n = plain_number(head);
    if (!n) field_error(field, "cannot read number '" + std::string(s) + "'");
    numerator = *n;
  }
  const double value = (has_pi ? numerator * std::numbers::pi : numerator) / denominator;
  if (!std::isfinite(value)) field_error(field, "value is not finite");
  return value;
}

int parse_int(std::string_view field, std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    field_error(field, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view field, std::string_view s) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  field_error(field, "expected true or false, got '" + std::string(s) + "'");
}

std::vector<double> parse_reals(std::string_view field, std::string_view s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (auto part : split(s, ',')) out.push_back(parse_real(field, part));
  return out;
}

std::vector<int> parse_tuple(std::string_view field, std::string_view s) {
  std::vector<int> out;
  for (auto part : split(s, '-')) out.push_back(parse_int(field, part));
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
};

using Document = std::map<std::string, Entry>;  // "section.key" -> value

const std::set<std::string> kKnownKeys = {
    "scenario.id",
    "array.n_modes",      "array.pump_gains",         "array.link_couplings",
    "array.loss_rate",    "array.pump_phase",
    "input.kind",         "input.site",               "input.amplitude",
    "time.t_max",         "time.n_steps",             "time.times",
    "observables.intensities", "observables.duan_pairs", "observables.duan_centered",
    "observables.vlf_triples", "observables.covariance", "observables.symplectic_spectrum",
    "observables.phase",
    "output.format",      "output.path",
};

Document tokenize(std::string_view text) {
  Document doc;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(where + "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) throw ValidationError(where + "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ValidationError(where + "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ValidationError(where + "missing key before '='");
    if (section.empty()) throw ValidationError(where + "assignment outside of any [section]");
    const std::string full = section + "." + std::string(key);
    if (!kKnownKeys.contains(full)) throw ValidationError(where + "unknown key '" + full + "'");
    if (doc.contains(full)) throw ValidationError(where + "duplicate key '" + full + "'");
    doc[full] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
  }
  return doc;
}

std::vector<double> broadcast(std::vector<double> values, std::size_t n) {
  if (values.size() == 1 && n > 1) values.assign(n, values.front());
  return values;
}

std::string pair_list(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ", ";
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::string real_list(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ", ";
    out += format_double(v);
  }
  return out;
}

}  // namespace

double parse_number(std::string_view field, std::string_view text) {
  return parse_real(field, text);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string_view text(buf, ptr - buf);
  // Large integral values come out in fixed notation with every digit spelled
  // out; fall back to scientific there to stay within 17 significant digits.
  const auto first = text.find_first_of("123456789");
  if (first != std::string_view::npos && text.find_first_of("eE") == std::string_view::npos) {
    const auto span = text.substr(first, text.find_last_of("123456789") - first + 1);
    const auto digits = span.size() - (span.find('.') != std::string_view::npos ? 1 : 0);
    if (digits > 17) {
      ptr = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific).ptr;
    }
  }
  return std::string(buf, ptr);
}

std::vector<double> TimeGrid::points() const {
  if (!explicit_times.empty()) return explicit_times;
  if (!t_max || n_steps < 1) return {};
  std::vector<double> out(n_steps + 1);
  for (int s = 0; s <= n_steps; ++s) out[s] = *t_max * s / n_steps;
  return out;
}

bool ObservableRequest::any() const {
  return intensities || duan_all || !duan_pairs.empty() || duan_centered ||
         !vlf_triples.empty() || covariance || symplectic_spectrum;
}

void validate(const ScenarioSpec& spec) {
  if (spec.id.empty()) field_error("scenario.id", "must not be empty");
  if (spec.id.find_first_of("#\n\r,\"") != std::string::npos) {
    field_error("scenario.id", "must not contain '#', quotes, commas or line breaks");
  }
  if (spec.config.n_modes < 1) field_error("n_modes", "must be >= 1");
  try {
    validate(spec.config);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("array: ") + e.what());
  }
  const int n = spec.config.n_modes;
  if (spec.input.kind == InputKind::coherent) {
    if (spec.input.site < 1 || spec.input.site > n) {
      field_error("input.site", "must lie in 1.." + std::to_string(n));
    }
    if (!std::isfinite(spec.input.amplitude.real()) ||
        !std::isfinite(spec.input.amplitude.imag())) {
      field_error("input.amplitude", "is not finite");
    }
  }

  const auto& tg = spec.time;
  if (tg.explicit_times.empty()) {
    if (!tg.t_max) field_error("time", "empty time grid: give t_max or times");
    if (!std::isfinite(*tg.t_max) || *tg.t_max < 0.0) field_error("time.t_max", "must be >= 0");
    if (tg.n_steps < 1) field_error("time.n_steps", "must be >= 1");
  } else {
    if (tg.t_max) field_error("time", "t_max and times are mutually exclusive");
    double prev = 0.0;
    for (double t : tg.explicit_times) {
      if (!std::isfinite(t) || t < 0.0) field_error("time.times", "entries must be >= 0");
      if (t < prev) field_error("time.times", "entries must be ascending");
      prev = t;
    }
  }

  const auto& obs = spec.observables;
  if (!obs.any()) field_error("observables", "request at least one observable");
  const auto in_range = [n](int v) { return v >= 1 && v <= n; };
  for (const auto& [a, b] : obs.duan_pairs) {
    if (!in_range(a) || !in_range(b) || a == b) {
      field_error("observables.duan_pairs", "pair " + std::to_string(a) + "-" +
                                                std::to_string(b) +
                                                " must name two distinct modes in 1.." +
                                                std::to_string(n));
    }
  }
  if (obs.duan_all && n < 2) field_error("observables.duan_pairs", "needs n_modes >= 2");
  if (obs.duan_centered && !obs.duan_all && obs.duan_pairs.empty()) {
    field_error("observables.duan_centered", "requires duan_pairs");
  }
  for (const auto& t : obs.vlf_triples) {
    if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2]) || t[0] == t[1] ||
        t[1] == t[2] || t[0] == t[2]) {
      field_error("observables.vlf_triples", "triples must name three distinct modes in 1.." +
                                                 std::to_string(n));
    }
  }
  if (!spec.phase.minimize && !std::isfinite(spec.phase.value)) {
    field_error("observables.phase", "is not finite");
  }
}

ScenarioSpec parse_scenario(std::string_view text) {
  const Document doc = tokenize(text);
  const auto get = [&doc](const std::string& key) -> const Entry* {
    auto it = doc.find(key);
    return it == doc.end() ? nullptr : &it->second;
  };

  ScenarioSpec spec;
  if (auto e = get("scenario.id")) spec.id = e->value;

  auto& c = spec.config;
  const Entry* n_modes = get("array.n_modes");
  if (n_modes == nullptr) field_error("n_modes", "missing");
  c.n_modes = parse_int("n_modes", n_modes->value);
  if (c.n_modes < 1) field_error("n_modes", "must be >= 1, got " + n_modes->value);
  const auto n = static_cast<std::size_t>(c.n_modes);
  const Entry* gains = get("array.pump_gains");
  if (gains == nullptr) field_error("pump_gains", "missing");
  c.pump_gains = broadcast(parse_reals("pump_gains", gains->value), n);
  if (auto e = get("array.link_couplings")) {
    c.link_couplings = broadcast(parse_reals("link_couplings", e->value), n - 1);
  } else if (n > 1) {
    field_error("link_couplings", "missing");
  }
  if (auto e = get("array.loss_rate")) c.loss_rate = parse_real("loss_rate", e->value);
  if (auto e = get("array.pump_phase")) c.pump_phase = parse_real("pump_phase", e->value);

  if (auto e = get("input.kind")) {
    if (e->value == "vacuum") {
      spec.input.kind = InputKind::vacuum;
    } else if (e->value == "coherent") {
      spec.input.kind = InputKind::coherent;
    } else {
      field_error("input.kind", "expected vacuum or coherent, got '" + e->value + "'");
    }
  }
  if (spec.input.kind == InputKind::coherent) {
    const Entry* site = get("input.site");
    const Entry* amp = get("input.amplitude");
    if (site == nullptr) field_error("input.site", "missing for coherent input");
    if (amp == nullptr) field_error("input.amplitude", "missing for coherent input");
    spec.input.site = parse_int("input.site", site->value);
    const auto parts = parse_reals("input.amplitude", amp->value);
    if (parts.empty() || parts.size() > 2) {
      field_error("input.amplitude", "expected 're' or 're, im'");
    }
    spec.input.amplitude = {parts[0], parts.size() == 2 ? parts[1] : 0.0};
  } else if (get("input.site") != nullptr || get("input.amplitude") != nullptr) {
    field_error("input", "site/amplitude only apply to coherent input");
  }

  if (auto e = get("time.t_max")) spec.time.t_max = parse_real("time.t_max", e->value);
  if (auto e = get("time.n_steps")) spec.time.n_steps = parse_int("time.n_steps", e->value);
  if (auto e = get("time.times")) {
    spec.time.explicit_times = parse_reals("time.times", e->value);
    if (spec.time.explicit_times.empty()) field_error("time.times", "empty time grid");
  }

  auto& obs = spec.observables;
  if (auto e = get("observables.intensities")) {
    obs.intensities = parse_bool("observables.intensities", e->value);
  }
  if (auto e = get("observables.duan_pairs")) {
    if (e->value == "all") {
      obs.duan_all = true;
    } else if (e->value != "none" && !e->value.empty()) {
      for (auto part : split(e->value, ',')) {
        const auto t = parse_tuple("observables.duan_pairs", part);
        if (t.size() != 2) field_error("observables.duan_pairs", "pairs are written j-k");
        obs.duan_pairs.emplace_back(t[0], t[1]);
      }
    }
  }
  if (auto e = get("observables.duan_centered")) {
    obs.duan_centered = parse_bool("observables.duan_centered", e->value);
  }
  if (auto e = get("observables.vlf_triples")) {
    if (e->value != "none" && !e->value.empty()) {
      for (auto part : split(e->value, ',')) {
        const auto t = parse_tuple("observables.vlf_triples", part);
        if (t.size() != 3) field_error("observables.vlf_triples", "triples are written i-j-k");
        obs.vlf_triples.push_back({t[0], t[1], t[2]});
      }
    }
  }
  if (auto e = get("observables.covariance")) {
    obs.covariance = parse_bool("observables.covariance", e->value);
  }
  if (auto e = get("observables.symplectic_spectrum")) {
    obs.symplectic_spectrum = parse_bool("observables.symplectic_spectrum", e->value);
  }
  if (auto e = get("observables.phase")) {
    if (e->value == "minimize") {
      spec.phase.minimize = true;
    } else {
      spec.phase.value = parse_real("observables.phase", e->value);
    }
  }

  if (auto e = get("output.format")) {
    if (e->value == "csv") {
      spec.format = OutputFormat::csv;
    } else if (e->value == "json") {
      spec.format = OutputFormat::json;
    } else {
      field_error("output.format", "expected csv or json, got '" + e->value + "'");
    }
  }
  if (auto e = get("output.path")) spec.output_path = e->value == "-" ? "" : e->value;

  validate(spec);
  return spec;
}

std::string emit_scenario(const ScenarioSpec& spec) {
  std::ostringstream os;
  os << "[scenario]\n";
  os << "id = " << spec.id << "\n\n";

  const auto& c = spec.config;
  os << "[array]\n";
  os << "n_modes = " << c.n_modes << "\n";
  os << "pump_gains = " << real_list(c.pump_gains) << "\n";
  if (!c.link_couplings.empty()) os << "link_couplings = " << real_list(c.link_couplings) << "\n";
  os << "loss_rate = " << format_double(c.loss_rate) << "\n";
  os << "pump_phase = " << format_double(c.pump_phase) << "\n\n";

  os << "[input]\n";
  if (spec.input.kind == InputKind::vacuum) {
    os << "kind = vacuum\n\n";
  } else {
    os << "kind = coherent\n";
    os << "site = " << spec.input.site << "\n";
    os << "amplitude = " << format_double(spec.input.amplitude.real()) << ", "
       << format_double(spec.input.amplitude.imag()) << "\n\n";
  }

  os << "[time]\n";
  if (!spec.time.explicit_times.empty()) {
    os << "times = " << real_list(spec.time.explicit_times) << "\n";
  } else {
    if (spec.time.t_max) os << "t_max = " << format_double(*spec.time.t_max) << "\n";
    os << "n_steps = " << spec.time.n_steps << "\n";
  }
  os << "\n";

  const auto& obs = spec.observables;
  os << "[observables]\n";
  os << "intensities = " << (obs.intensities ? "true" : "false") << "\n";
  if (obs.duan_all) {
    os << "duan_pairs = all\n";
  } else if (!obs.duan_pairs.empty()) {
    os << "duan_pairs = " << pair_list(obs.duan_pairs) << "\n";
  }
  os << "duan_centered = " << (obs.duan_centered ? "true" : "false") << "\n";
  if (!obs.vlf_triples.empty()) {
    os << "vlf_triples = ";
    for (std::size_t q = 0; q < obs.vlf_triples.size(); ++q) {
      const auto& t = obs.vlf_triples[q];
      os << (q ? ", " : "") << t[0] << "-" << t[1] << "-" << t[2];
    }
    os << "\n";
  }
  os << "covariance = " << (obs.covariance ? "true" : "false") << "\n";
  os << "symplectic_spectrum = " << (obs.symplectic_spectrum ? "true" : "false") << "\n";
  os << "phase = " << (spec.phase.minimize ? "minimize" : format_double(spec.phase.value))
     << "\n\n";

  os << "[output]\n";
  os << "format = " << (spec.format == OutputFormat::csv ? "csv" : "json") << "\n";
  os << "path = " << (spec.output_path.empty() ? "-" : spec.output_path) << "\n";
  return os.str();
}

}  // namespace wga
