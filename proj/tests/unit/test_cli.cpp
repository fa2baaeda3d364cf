/*
   Copyright 2026 The Skyburst Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace skyburst::cli;

namespace {

RunConfig make(Subcommand s) {
    RunConfig c;
    c.subcommand = s;
    c.threads = 2;
    return c;
}

int exe(const std::string& args) {
    const std::string cmd = std::string(SKYBURST_EXE) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coeffs json") {
    auto c = make(Subcommand::Coeffs);
    c.n = 1;
    c.omega = "1/2";
    auto r = run(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.output == R"({"n":1,"omega":"1/2","coeffs":[{"pow":0,"num":"1","den":"3"},{"pow":1,"num":"1","den":"1"}]})" "\n");
    c.n = 0;
    CHECK(run(c).output == R"({"n":0,"omega":"1/2","coeffs":[{"pow":0,"num":"1","den":"1"}]})" "\n");
    c.n = 2;
    CHECK(run(c).output ==
          R"({"n":2,"omega":"1/2","coeffs":[{"pow":0,"num":"-1","den":"15"},{"pow":1,"num":"2","den":"5"},{"pow":2,"num":"1","den":"1"}]})"
          "\n");
}

TEST_CASE("coeffs round trip is byte identical") {
    for (const char* omega : {"1/2", "22/7", "0.3"}) {
        auto c = make(Subcommand::Coeffs);
        c.n = 6;
        c.omega = omega;
        const auto out = run(c).output;
        CHECK(serialize_coeffs(parse_coeffs(out)) == out);
    }
    CHECK_THROWS_AS(parse_coeffs("{\"n\":1}"), ConfigError);
}

TEST_CASE("coeffs float mode and csv") {
    auto c = make(Subcommand::Coeffs);
    c.n = 1;
    c.omega = "0.5";
    CHECK(run(c).output == R"({"n":1,"omega":"0.5","coeffs":[{"pow":0,"re":"0.33333333333333331","im":"0"},{"pow":1,"re":"1","im":"0"}]})" "\n");
    c.omega = "1/2";
    c.output_format = OutputFormat::Csv;
    CHECK(run(c).output == "pow,num,den\n0,1,3\n1,1,1\n");
}

TEST_CASE("config validation") {
    auto c = make(Subcommand::Coeffs);
    c.tolerance = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.tolerance = 1e-10;
    c.exact = true;
    c.omega = "0.5";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.omega = "-3/4";
    CHECK_NOTHROW(c.validate());
    auto v = make(Subcommand::Verify);
    v.omega_grid = {"1/2", "x"};
    CHECK_THROWS_AS(v.validate(), ConfigError);
    v.omega_grid.clear();
    v.use_printed = "lowering";
    CHECK_THROWS_AS(v.validate(), ConfigError);
}

TEST_CASE("verify default grid passes") {
    auto c = make(Subcommand::Verify);
    c.n_max = 8;
    const auto r = run(c);
    CHECK(r.exit_code == kExitOk);
    std::size_t pass_lines = 0;
    std::istringstream in(r.output);
    for (std::string line; std::getline(in, line);)
        if (line.rfind("PASS ", 0) == 0) ++pass_lines;
    CHECK(pass_lines == 11 + 2);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify with a printed variant fails") {
    auto c = make(Subcommand::Verify);
    c.use_printed = "omega-shift";
    auto r = run(c);
    CHECK(r.exit_code == kExitVerifyFailed);
    CHECK(r.output.find("FAIL omega_shift_printed") != std::string::npos);
    CHECK(r.output.find("residual 4/15 at n=1, omega=1/2") != std::string::npos);
    c.use_printed = "lifting";
    CHECK(run(c).exit_code == kExitVerifyFailed);
}

TEST_CASE("verify trivial and deterministic") {
    auto c = make(Subcommand::Verify);
    c.n_max = 0;
    CHECK(run(c).exit_code == kExitOk);
    c.n_max = 6;
    c.output_format = OutputFormat::Json;
    c.threads = 1;
    const auto a = run(c).output;
    c.threads = 8;
    CHECK(run(c).output == a);
}

TEST_CASE("zeros csv") {
    auto c = make(Subcommand::Zeros);
    c.n = 2;
    c.omega = "0.5";
    const auto out = run(c).output;
    CHECK(out.rfind("omega,index,re,im,tag,residual\n", 0) == 0);
    CHECK(out.find("PosReal") != std::string::npos);
    CHECK(out.find("NegUnitInterval") != std::string::npos);
    CHECK(std::count(out.begin(), out.end(), '\n') == 3);
    c.n = 1;
    c.omega = "0";
    CHECK(run(c).output == "omega,index,re,im,tag,residual\n0,0,0,0,Origin,0\n");
}

TEST_CASE("trajectory csv") {
    auto c = make(Subcommand::Trajectory);
    c.n = 9;
    const auto r = run(c);
    REQUIRE(r.exit_code == kExitOk);
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "omega,path_id,re,im,tag");
    std::vector<std::string> bursts;
    std::set<std::string> ids;
    double last = -1;
    while (std::getline(in, line)) {
        if (line[0] == '#') {
            bursts.push_back(line);
            continue;
        }
        const auto comma = line.find(',');
        const double omega = std::stod(line.substr(0, comma));
        CHECK(omega >= last);
        last = omega;
        ids.insert(line.substr(comma + 1, line.find(',', comma + 1) - comma - 1));
    }
    CHECK(ids.size() == 9);
    REQUIRE(bursts.size() == 8);
    for (int m = 1; m <= 8; ++m) CHECK(bursts[m - 1] == "# burst omega=" + std::to_string(m));
}

TEST_CASE("detn and genfun") {
    auto c = make(Subcommand::Detn);
    c.n = 2;
    c.omega = "1/2";
    CHECK(run(c).output == "direct: 16/3\nclosed: 16/3\nverdict: EQUAL\n");
    c.n = 1;
    c.omega = "1/3";
    CHECK(run(c).output == "direct: 3/1\nclosed: 3/1\nverdict: EQUAL\n");
    c.n = 4;
    c.omega = "0.3";
    CHECK(run(c).output.find("verdict: EQUAL") != std::string::npos);
    auto g = make(Subcommand::Genfun);
    g.omega = "1/2";
    g.terms = 5;
    CHECK(run(g).output == "residual: 0\n");
}

TEST_CASE("error classes map to exit codes") {
    auto c = make(Subcommand::Coeffs);
    c.n = 3;
    c.omega = "-2";
    auto r = run(c);
    CHECK(r.exit_code == kExitConfig);
    CHECK(r.diagnostics.find("hypergeometric") != std::string::npos);

    auto d = make(Subcommand::Detn);
    d.omega = "0";
    CHECK(run(d).exit_code == kExitConfig);

    auto g = make(Subcommand::Genfun);
    g.t = "1.5";
    CHECK(run(g).exit_code == kExitConfig);

    auto t = make(Subcommand::Trajectory);
    t.n = 4;
    t.omega_start = 0.1;
    t.omega_end = 3.9;
    t.step = 0.05;
    t.match_threshold = 1e-9;
    r = run(t);
    CHECK(r.exit_code == kExitTracking);
    CHECK(r.diagnostics.find("omega=") != std::string::npos);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "skyburst_cli_test.json";
    auto c = make(Subcommand::Coeffs);
    c.output_path = path.string();
    const auto r = run(c);
    CHECK(r.output.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("{\"n\":1,", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("executable exit codes") {
    CHECK(exe("coeffs --n 2 --omega 1/2") == 0);
    CHECK(exe("verify --n-max 4") == 0);
    CHECK(exe("verify --n-max 2 --use-printed lifting") == 1);
    CHECK(exe("coeffs --n 2 --omega -1") == 2);
    CHECK(exe("coeffs --tol -1") == 2);
    CHECK(exe("coeffs --format xml") == 2);
    CHECK(exe("nonsense") == 2);
    CHECK(exe("trajectory --n 4 --omega-start 0.1 --omega-end 3.9 --threshold 1e-9") == 3);
    CHECK(exe("--help") == 0);
}

TEST_CASE("SKYBURST_THREADS caps workers") {
    RunConfig c;
    c.threads = 16;
    ::setenv("SKYBURST_THREADS", "3", 1);
    CHECK(worker_count(c) == 3);
    ::setenv("SKYBURST_THREADS", "junk", 1);
    CHECK(worker_count(c) == 16);
    ::unsetenv("SKYBURST_THREADS");
    CHECK(worker_count(c) == 16);
}

}
