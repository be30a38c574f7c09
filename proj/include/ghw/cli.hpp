#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghw/code.hpp"

namespace ghw::cli {

/// Reads the text code format:
///
///     field: p=<p> s=<s> [modulus=<c0,c1,...,cs>]
///     <row of space-separated integers in [0, q)>
///     ...
///
/// `#` starts a comment. Syntax problems raise SyntaxError with the line
/// number, bad field parameters raise FieldError.
LinearCode parse_code_file(std::string_view text);
LinearCode load_code_file(const std::string& path);

/// Inverse of parse_code_file. The modulus is always written for s > 1.
std::string format_code_file(const LinearCode& c);

struct BenchmarkRow {
    std::string id;
    std::size_t r = 0;
    std::size_t value = 0;
    double bz_ms = 0.0;
    double naive_ms = 0.0;
    double speedup = 0.0;
};

/// Times ghw against naive_ghw on each code. Differing answers raise
/// MismatchedResults.
std::vector<BenchmarkRow> benchmark(const std::vector<std::pair<std::string, LinearCode>>& codes,
                                    std::size_t r, bool low_mem, unsigned threads);

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghw::cli
