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

#pragma once

// Command implementations behind the skyburst executable. Every command
// renders into a string so output can be compared byte for byte; main.cpp
// only parses flags and writes the result.

#include <optional>
#include <string>
#include <vector>

#include "skyburst/errors.hpp"
#include "skyburst/scalar.hpp"

namespace skyburst::cli {

enum class Subcommand { Coeffs, Verify, Zeros, Trajectory, Detn, Genfun };
enum class OutputFormat { Default, Json, Csv };

/// Exit codes of the executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitTracking = 3;

class ConfigError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::Coeffs;
    unsigned n = 1;
    unsigned n_max = 8;
    std::string omega = "1/2";
    double omega_start = 0.05;
    double omega_end = 8.95;
    double step = 0.02;
    OutputFormat output_format = OutputFormat::Default;
    std::optional<std::string> output_path;
    bool exact = false;
    double tolerance = 1e-10;

    // verify
    std::vector<std::string> omega_grid;  // empty means the built-in grid
    std::optional<std::string> use_printed;  // "omega-shift" or "lifting"

    // trajectory
    double match_threshold = 0.1;
    double integer_offset = 1e-10;

    // genfun
    std::string z = "0";
    std::string t = "0";
    unsigned terms = 60;

    unsigned threads = 0;  // 0: hardware concurrency capped by SKYBURST_THREADS

    /// Throws ConfigError on an inconsistent configuration.
    void validate() const;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;       // stdout or --out payload
    std::string diagnostics;  // stderr
};

const std::vector<std::string>& default_verify_grid();

/// Worker count: config.threads if set, else hardware concurrency, capped by
/// SKYBURST_THREADS when that is a positive integer.
unsigned worker_count(const RunConfig& config);

CommandResult cmd_coeffs(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_zeros(const RunConfig& config);
CommandResult cmd_trajectory(const RunConfig& config);
CommandResult cmd_detn(const RunConfig& config);
CommandResult cmd_genfun(const RunConfig& config);

/// Validates, dispatches and maps library errors to exit codes.
CommandResult run(const RunConfig& config);

/// Coefficient document as written by cmd_coeffs.
struct CoeffEntry {
    unsigned pow = 0;
    std::string num;  // exact mode
    std::string den;
    std::string re;   // float mode
    std::string im;
};

struct CoeffsDocument {
    unsigned n = 0;
    std::string omega;
    bool exact = true;
    std::vector<CoeffEntry> coeffs;
};

std::string serialize_coeffs(const CoeffsDocument& doc);
CoeffsDocument parse_coeffs(const std::string& json_text);

/// "%.17g"
std::string format_double(double value);

/// "re" or "re,im"
Complex parse_complex(const std::string& text);

}  // namespace skyburst::cli
