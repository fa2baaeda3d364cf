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

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

using skyburst::cli::OutputFormat;
using skyburst::cli::RunConfig;
using skyburst::cli::Subcommand;

namespace {

void add_common(CLI::App* app, RunConfig& config) {
    app->add_option_function<std::string>(
           "--format",
           [&config](const std::string& f) { config.output_format = f == "json" ? OutputFormat::Json : OutputFormat::Csv; },
           "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", config.output_path, "Write output to PATH instead of stdout");
    app->add_option("--tol", config.tolerance, "Tolerance for float checks")->capture_default_str();
    app->add_option("--threads", config.threads, "Worker threads (0: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skyburst polynomials: construction, identity checks and zero trajectories", "skyburst"};
    app.require_subcommand(1);
    RunConfig config;

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of S_n^omega");
    coeffs->add_option("--n", config.n, "Degree")->capture_default_str();
    coeffs->add_option("--omega", config.omega, "omega as p/q, integer or decimal")->capture_default_str();
    coeffs->add_flag("--exact", config.exact, "Require a rational omega");
    add_common(coeffs, config);

    auto* verify = app.add_subcommand("verify", "Exact identity sweep over a rational omega grid");
    verify->add_option("--n-max", config.n_max, "Largest degree")->capture_default_str();
    verify->add_option("--grid", config.omega_grid, "Override the omega grid (rationals)")->delimiter(',');
    verify->add_option("--use-printed", config.use_printed,
                       "Substitute a known-false variant: omega-shift or lifting");
    add_common(verify, config);

    auto* zeros = app.add_subcommand("zeros", "Classified zeros of S_n^omega");
    zeros->add_option("--n", config.n, "Degree")->capture_default_str();
    zeros->add_option("--omega", config.omega, "omega")->capture_default_str();
    add_common(zeros, config);

    auto* trajectory = app.add_subcommand("trajectory", "Zero paths of S_n^omega over an omega range");
    trajectory->add_option("--n", config.n, "Degree")->capture_default_str();
    trajectory->add_option("--omega-start", config.omega_start)->capture_default_str();
    trajectory->add_option("--omega-end", config.omega_end)->capture_default_str();
    trajectory->add_option("--step", config.step, "Base step in omega")->capture_default_str();
    trajectory->add_option("--threshold", config.match_threshold, "Largest zero displacement per step")
        ->capture_default_str();
    trajectory->add_option("--integer-offset", config.integer_offset, "Closest approach to an integer omega")
        ->capture_default_str();
    add_common(trajectory, config);

    auto* detn = app.add_subcommand("detn", "Toeplitz moment determinant, direct and closed form");
    detn->add_option("--n", config.n, "Order")->capture_default_str();
    detn->add_option("--omega", config.omega, "omega")->capture_default_str();
    detn->add_flag("--exact", config.exact, "Require a rational omega");
    add_common(detn, config);

    auto* genfun = app.add_subcommand("genfun", "Truncated generating function against its closed form");
    genfun->add_option("--omega", config.omega, "omega")->capture_default_str();
    genfun->add_option("--z", config.z, "z as re or re,im")->capture_default_str();
    genfun->add_option("--t", config.t, "T as re or re,im")->capture_default_str();
    genfun->add_option("--terms", config.terms, "Truncation N")->capture_default_str();
    add_common(genfun, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : skyburst::cli::kExitConfig;
    }

    const std::map<CLI::App*, Subcommand> which{{coeffs, Subcommand::Coeffs},     {verify, Subcommand::Verify},
                                                {zeros, Subcommand::Zeros},       {trajectory, Subcommand::Trajectory},
                                                {detn, Subcommand::Detn},         {genfun, Subcommand::Genfun}};
    config.subcommand = which.at(app.get_subcommands().front());

    const auto result = skyburst::cli::run(config);
    std::cout << result.output << std::flush;
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
    return result.exit_code;
}
