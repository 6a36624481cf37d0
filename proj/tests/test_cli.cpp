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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string command = std::string(WGA_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "wgarray_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string example(const char* name) { return std::string(WGA_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("run prints CSV") {
  const auto r = run("run " + example("two_guides_lossy.scn"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("scenario_id,time,observable,i,j,k,phi,value\n", 0) == 0);
  CHECK(r.out.find("two-guides-lossy,0,duan,1,2,,0,0\n") != std::string::npos);
}

TEST_CASE("format flag overrides the file, before or after the subcommand") {
  const auto a = run("--format json run " + example("two_guides_lossy.scn"));
  const auto b = run("run " + example("two_guides_lossy.scn") + " --format json");
  CHECK(a.code == 0);
  CHECK(a.out.front() == '[');
  CHECK(a.out == b.out);
  const auto c = run("run " + example("coherent_walk.scn"));
  CHECK(c.out.front() == '[');
  const auto d = run("run " + example("coherent_walk.scn") + " --format csv");
  CHECK(d.out.rfind("scenario_id", 0) == 0);
}

TEST_CASE("out flag writes a file") {
  const auto path = scratch() / "trimer.csv";
  fs::remove(path);
  const auto r = run("run " + example("trimer_vlf.scn") + " --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto text = read_file(path);
  CHECK(text.find("trimer,0,vlf,2,1,3,") != std::string::npos);
}

TEST_CASE("validate") {
  CHECK(run("validate " + example("trimer_vlf.scn")).code == 0);
  const auto bad = write_file("bad.scn", "[array]\nn_modes = 0\npump_gains = 1\n");
  CHECK(run("validate " + bad.string()).code == 2);
  const auto syntax = write_file("syntax.scn", "[array]\nn_modes 3\n");
  CHECK(run("validate " + syntax.string()).code == 2);
  CHECK(run("validate /nonexistent/file.scn").code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("figure fig9").code == 2);
  CHECK(run("run " + example("trimer_vlf.scn") + " --tol -1").code == 2);
  const auto blowup = write_file("blowup.scn",
                                 "[array]\nn_modes = 1\npump_gains = 400\nloss_rate = 0.1\n"
                                 "[time]\nt_max = 10\nn_steps = 4\n"
                                 "[observables]\nintensities = true\n");
  CHECK(run("run " + blowup.string()).code == 3);
}

TEST_CASE("figure fig3 is byte-for-byte reproducible") {
  const auto a = run("figure fig3");
  const auto b = run("figure fig3");
  CHECK(a.code == 0);
  CHECK(a.out.size() > 1000);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# figure fig3", 0) == 0);
}

TEST_CASE("sweep") {
  const auto r = run("sweep " + example("trimer_vlf.scn") + " --axis g_scale=0.5:1:2 --axis t=0:1:2");
  CHECK(r.code == 0);
  CHECK(r.out.find("g_scale,t,scenario_id,time,observable,i,j,k,phi,value\n") != std::string::npos);
  CHECK(run("sweep " + example("trimer_vlf.scn") + " --axis bogus=0:1:2").code == 2);
}
