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

#include "dimkit/cli.hpp"

#include "dimkit/dims.hpp"
#include "dimkit/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace dimkit::cli {

namespace {

using nlohmann::ordered_json;

CommandResult usage_error(const std::string& message) {
    return {kExitUsage, {}, "error: " + message + "\n"};
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string join(std::span<const Permutation::value_type> values, char sep) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k != 0) {
            out += sep;
        }
        out += std::to_string(values[k]);
    }
    return out;
}

std::string format_pa(const BinaryCode& code, const PermutationArray& pa, std::size_t code_dmin,
                      bool certified, OutputFormat format) {
    std::string summary = "code_dmin=" + std::to_string(code_dmin) +
                          " pa_dmin=" + std::to_string(pa.min_distance()) +
                          " certified=" + (certified ? "true" : "false") + "\n";
    std::string out;
    switch (format) {
        case OutputFormat::plain:
            for (const auto& row : pa.rows()) {
                out += join(row.entries(), ' ') + "\n";
            }
            return out + summary;
        case OutputFormat::csv:
            out = "codeword";
            for (std::size_t j = 1; j <= pa.length(); ++j) {
                out += ",x" + std::to_string(j);
            }
            out += "\n";
            for (std::size_t k = 0; k < pa.size(); ++k) {
                out += code.codewords()[k].to_string() + "," + join(pa.rows()[k].entries(), ',') + "\n";
            }
            return out + summary;
        case OutputFormat::json: {
            ordered_json doc;
            doc["schema"] = kJsonSchema;
            doc["n"] = pa.length();
            auto codewords = ordered_json::array();
            auto rows = ordered_json::array();
            for (std::size_t k = 0; k < pa.size(); ++k) {
                codewords.push_back(code.codewords()[k].to_string());
                const auto e = pa.rows()[k].entries();
                rows.push_back(std::vector<Permutation::value_type>(e.begin(), e.end()));
            }
            doc["codewords"] = std::move(codewords);
            doc["rows"] = std::move(rows);
            doc["code_dmin"] = code_dmin;
            doc["pa_dmin"] = pa.min_distance();
            doc["certified"] = certified;
            return doc.dump() + "\n";
        }
    }
    return out;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ValidationError("unknown output format '" + std::string(name) + "' (plain, csv, json)");
}

std::string format_table(const DistanceExpansionTable& table, OutputFormat format) {
    const std::size_t n = table.n();
    std::string out;
    switch (format) {
        case OutputFormat::plain:
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 1; j <= n; ++j) {
                    if (j != 1) out += ' ';
                    out += std::to_string(table.at(i, j));
                }
                out += '\n';
            }
            break;
        case OutputFormat::csv:
            out = "i\\j";
            for (std::size_t j = 1; j <= n; ++j) {
                out += ',' + std::to_string(j);
            }
            out += '\n';
            for (std::size_t i = 1; i <= n; ++i) {
                out += std::to_string(i);
                for (std::size_t j = 1; j <= n; ++j) {
                    out += ',' + std::to_string(table.at(i, j));
                }
                out += '\n';
            }
            break;
        case OutputFormat::json: {
            ordered_json doc;
            doc["schema"] = kJsonSchema;
            doc["n"] = n;
            auto rows = ordered_json::array();
            for (std::size_t i = 1; i <= n; ++i) {
                auto row = ordered_json::array();
                for (std::size_t j = 1; j <= n; ++j) {
                    row.push_back(table.at(i, j));
                }
                rows.push_back(std::move(row));
            }
            doc["table"] = std::move(rows);
            out = doc.dump() + "\n";
            break;
        }
    }
    return out;
}

BinaryCode parse_code(std::istream& in) {
    std::vector<BinaryVector> words;
    std::map<BinaryVector, std::size_t> first_seen;
    std::string raw;
    std::size_t line_no = 0;
    std::size_t expected_length = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        BinaryVector w = [&] {
            try {
                return BinaryVector::parse(line);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no,
                                 e.position());
            }
        }();
        if (expected_length == 0) {
            expected_length = w.size();
        } else if (w.size() != expected_length) {
            throw ParseError("line " + std::to_string(line_no) + ": codeword has length " +
                                 std::to_string(w.size()) + ", expected " +
                                 std::to_string(expected_length),
                             line_no, 1);
        }
        const auto [it, inserted] = first_seen.emplace(w, line_no);
        if (!inserted) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate codeword " +
                                  w.to_string() + " (first seen on line " +
                                  std::to_string(it->second) + ")");
        }
        words.push_back(std::move(w));
    }
    if (in.bad()) {
        throw Error("I/O error while reading code");
    }
    if (words.empty()) {
        throw ValidationError("code file contains no codewords");
    }
    return BinaryCode(std::move(words));
}

unsigned parse_worker_count(const char* value) {
    if (value == nullptr || *value == '\0') {
        return 0;
    }
    const std::string_view s(value);
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ValidationError("DIMKIT_THREADS must be a non-negative integer, got '" +
                              std::string(s) + "'");
    }
    return n;
}

CommandResult cmd_map(std::string_view bits) {
    try {
        const BinaryVector u = BinaryVector::parse(bits);
        return {kExitOk, dim_map(u).to_string() + "\n", {}};
    } catch (const ParseError& e) {
        return usage_error(std::string("parse error: ") + e.what());
    } catch (const Error& e) {
        return usage_error(e.what());
    }
}

CommandResult cmd_table(long long n, OutputFormat format, unsigned workers) {
    if (n < 4 || n > static_cast<long long>(kEnumerationCeiling)) {
        return usage_error("table needs 4 <= n <= " + std::to_string(kEnumerationCeiling) +
                           ", got n=" + std::to_string(n) +
                           (n < 4 ? " (no distance-increasing map of length < 4 exists)" : ""));
    }
    CommandResult result;
    if (n > kTableDeskLimit) {
        result.err = "warning: n=" + std::to_string(n) + " enumerates " +
                     std::to_string(unordered_pair_count(static_cast<std::size_t>(n))) +
                     " pairs; expect a long run\n";
    }
    result.out = format_table(expansion_table(static_cast<std::size_t>(n), workers), format);
    return result;
}

CommandResult verification_result(const VerificationReport& report, bool full_scan) {
    const std::string n = std::to_string(report.n);
    if (report.is_dim) {
        return {kExitOk,
                "DIM verified: n=" + n + ", pairs=" + std::to_string(report.pairs_checked) + "\n",
                {}};
    }
    const Violation& v = *report.first_violation;
    CommandResult result;
    result.exit_code = kExitVerificationFailed;
    result.out = "u=" + v.u.to_string() + " v=" + v.v.to_string() + " d_in=" +
                 std::to_string(v.d_in) + " d_out=" + std::to_string(v.d_out) + "\n";
    result.err = "DIM verification failed: n=" + n +
                 ", pairs=" + std::to_string(report.pairs_checked) +
                 (full_scan ? ", violations=" + std::to_string(report.violation_count) : "") + "\n";
    return result;
}

CommandResult cmd_verify(long long n, bool full_scan, unsigned workers) {
    if (n < 4 || n > static_cast<long long>(kEnumerationCeiling)) {
        return usage_error("verify needs 4 <= n <= " + std::to_string(kEnumerationCeiling) +
                           ", got n=" + std::to_string(n));
    }
    return verification_result(
        verify_dim(static_cast<std::size_t>(n), ScanOptions{!full_scan, workers}), full_scan);
}

CommandResult cmd_pa(const std::filesystem::path& code_file, OutputFormat format, unsigned workers) {
    std::ifstream in(code_file);
    if (!in) {
        return usage_error("cannot read code file '" + code_file.string() + "'");
    }
    try {
        const BinaryCode code = parse_code(in);
        const std::size_t code_dmin = code_min_distance(code, workers);
        const PermutationArray pa = construct_pa(code, workers);
        const bool certified = certify(pa, code);
        return {certified ? kExitOk : kExitVerificationFailed,
                format_pa(code, pa, code_dmin, certified, format), {}};
    } catch (const ParseError& e) {
        return usage_error(std::string("parse error: ") + e.what());
    } catch (const Error& e) {
        return usage_error(e.what());
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Distance-increasing maps from binary vectors to permutations.\n"
        "Bit strings are read left to right: the leftmost character is u_1."};
    app.name("dimkit");
    app.require_subcommand(1);

    const std::vector<std::string> formats{"plain", "csv", "json"};

    std::string bits;
    auto* map = app.add_subcommand("map", "Print the image permutation of a bit string");
    map->add_option("bits", bits, "Bit string of length >= 4, e.g. 10001")->required();

    long long table_n = 0;
    std::string table_format = "plain";
    auto* table = app.add_subcommand("table", "Print the distance expansion table of z_n");
    table->add_option("n", table_n, "Length, 4..24 (practical up to 14)")->required();
    table->add_option("--format", table_format, "plain, csv or json")
        ->check(CLI::IsMember(formats));

    long long verify_n = 0;
    bool full_scan = false;
    auto* verify = app.add_subcommand("verify", "Exhaustively check that z_n is distance-increasing");
    verify->add_option("n", verify_n, "Length, 4..24")->required();
    verify->add_flag("--full-scan", full_scan, "Keep scanning after the first violation");

    std::string code_file;
    std::string pa_format = "plain";
    auto* pa = app.add_subcommand("pa", "Map a binary code to a permutation array");
    pa->add_option("file", code_file, "One codeword per line; '#' comments allowed")->required();
    pa->add_option("--format", pa_format, "plain, csv or json")->check(CLI::IsMember(formats));

    app.footer("Environment: DIMKIT_THREADS caps the worker count (0 or unset = auto).\n"
               "Exit status: 0 success, 1 verification failure, 2 usage or parse error.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CommandResult result;
    try {
        const unsigned workers = parse_worker_count(std::getenv("DIMKIT_THREADS"));
        if (map->parsed()) {
            result = cmd_map(bits);
        } else if (table->parsed()) {
            result = cmd_table(table_n, parse_format(table_format), workers);
        } else if (verify->parsed()) {
            result = cmd_verify(verify_n, full_scan, workers);
        } else {
            result = cmd_pa(code_file, parse_format(pa_format), workers);
        }
    } catch (const Error& e) {
        result = usage_error(e.what());
    } catch (const std::bad_alloc&) {
        result = {kExitUsage, {}, "error: out of memory\n"};
    }
    out << result.out;
    err << result.err;
    out.flush();
    return result.exit_code;
}

}  // namespace dimkit::cli
