// Copyright 2026 The hypscatter Authors
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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "hypscatter/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + HS_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = hs::io::read_text(log);
  return r;
}

fs::path scratch() {
  const auto p = fs::temp_directory_path() / "hs_cli_test";
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("argument errors") {
  const auto dir = scratch();
  CHECK(cli("lengths --lattice PSL3 --out " + (dir / "a").string(), dir / "log").code == 2);
  CHECK(cli("zeros --tmax 500 --out " + (dir / "a").string(), dir / "log").code == 2);
  CHECK(cli("", dir / "log").code != 0);
  const auto v = cli("--version", dir / "log");
  CHECK(v.code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("length output is deterministic") {
  const auto dir = scratch();
  const std::string common = "lengths --lattice 'Gamma0(2)' --compare SL2Z --lmax 6 --a-max 2 --out ";
  REQUIRE(cli(common + (dir / "one").string(), dir / "log1").code == 0);
  REQUIRE(cli(common + (dir / "two").string(), dir / "log2").code == 0);
  for (const char* f : {"spectrum.csv", "comparison.csv", "zeta_identity.csv", "poles.csv"}) {
    REQUIRE(fs::exists(dir / "one" / f));
    CHECK(hs::io::read_text(dir / "one" / f) == hs::io::read_text(dir / "two" / f));
  }
  CHECK(hs::io::read_text(dir / "one" / "spectrum.csv").find("length") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("scattering run without a series model warns") {
  const auto dir = scratch();
  const auto r = cli("scattering --lattice SL2Z --lambda-max 0 --out " + (dir / "s").string(), dir / "log");
  CHECK(r.code == 0);
  CHECK(r.out.find("warning: lambda-max is 0") != std::string::npos);
  CHECK(fs::exists(dir / "s" / "scattering.json"));
  CHECK(fs::exists(dir / "s" / "residuals.csv"));
  fs::remove_all(dir);
}

TEST_CASE("config file is applied before flags") {
  const auto dir = scratch();
  hs::io::write_text_atomic(dir / "run.cfg", "lattice = Gamma0(3)\nlmax = 9\n");
  const auto r = cli("lengths --config " + (dir / "run.cfg").string() + " --lmax 5 --out " + (dir / "c").string(),
                     dir / "log");
  REQUIRE(r.code == 0);
  const auto meta = hs::io::read_text(dir / "c" / "lengths.json");
  CHECK(meta.find("Gamma0(3)") != std::string::npos);
  const auto table = hs::io::parse_csv(hs::io::read_text(dir / "c" / "spectrum.csv"));
  for (const auto& row : table.rows) CHECK(hs::io::parse_double(row[0]) <= 5.0);
  fs::remove_all(dir);
}
