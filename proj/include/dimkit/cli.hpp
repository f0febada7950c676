// Copyright 2026 The dimkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "dimkit/analysis.hpp"
#include "dimkit/pa.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dimkit::cli {

enum class OutputFormat { plain, csv, json };

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest n the table command runs without a warning.
inline constexpr long long kTableDeskLimit = 14;

/// JSON documents carry "schema": kJsonSchema.
inline constexpr int kJsonSchema = 1;

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Throws ValidationError for anything but plain, csv or json.
OutputFormat parse_format(std::string_view name);

std::string format_table(const DistanceExpansionTable& table, OutputFormat format);

/// One codeword per line; blank lines and lines starting with '#' are
/// skipped. Errors carry the 1-based line number.
BinaryCode parse_code(std::istream& in);

/// Reads DIMKIT_THREADS-style values: null, empty or "0" mean auto.
unsigned parse_worker_count(const char* value);

CommandResult cmd_map(std::string_view bits);
CommandResult cmd_table(long long n, OutputFormat format, unsigned workers = 0);
/// Renders a verification report: exit 0 with a summary, or exit 1 with the
/// first violation as "u=<bits> v=<bits> d_in=<i> d_out=<j>".
CommandResult verification_result(const VerificationReport& report, bool full_scan);

CommandResult cmd_verify(long long n, bool full_scan, unsigned workers = 0);
CommandResult cmd_pa(const std::filesystem::path& code_file, OutputFormat format, unsigned workers = 0);

/// Full command-line front end. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimkit::cli
