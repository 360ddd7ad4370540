// Copyright 2026 The inverf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "inverf/evaluator.hpp"

namespace inverf::cli {

enum class Format { csv, json };

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One row of the reference table: reference values next to ours.
struct TableRow {
  double x = 0.0;
  double reference_inverf = 0.0;
  double oracle = 0.0;
  double oracle_deviation = 0.0;    // |oracle - reference_inverf|
  double reference_approx = 0.0;
  double approx = 0.0;              // T_9 + R_N, per-term tail, no polish
  double approx_deviation = 0.0;    // |approx - reference_approx|
  std::size_t tail_end = 0;
  double printed_form_approx = 0.0; // T_9 + R_N with the N-only tail weight
};

std::vector<TableRow> table_rows();

// Reference inverse used by the table and figure commands.
double oracle_inverf(double x);

// Figure grids.
std::vector<double> p10_grid();             // x in [-3, 3], step 0.05
std::vector<double> taylor_ratio_grid();    // x in [-0.99, 0.99], step 0.01
std::vector<double> taylor_ratio_zoom_grid();  // x in [0.9, 0.999], step 0.001

// Formats a binary64 value with 17 significant digits ("inf", "nan" as is).
std::string format_double(double v);

// Subcommand bodies. Each writes one complete document to `out`.
void cmd_coeffs(std::size_t max_n, Format format, std::ostream& out);
void cmd_poly(std::size_t n, Format format, std::ostream& out);
void cmd_table(Format format, std::ostream& out);
void cmd_figure(const std::string& which, Format format, std::ostream& out);
void cmd_eval(double x, const EvalConfig& config, Format format, std::ostream& out);

// Full command line: parses `args` (without the program name), dispatches,
// and maps failures onto the exit statuses above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inverf::cli
