#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Subcommands: eval, classify, dini, maxset, scan. Every command except scan
 * prints one JSON object
 *
 *   {"input": ..., "command": ..., "exact": bool, "payload": {...}}
 *
 * where numeric values are exact "p/q" strings, integers, or decimal strings
 * rendered from exact values at a stated number of digits.
 *
 * Points are written either as "p/q" (decimal integers) or as a binary
 * expansion literal "k.pre(per)".
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "takagi/rational.hpp"

namespace takagi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

inline constexpr std::size_t kDefaultTerms = 64;
inline constexpr const char* kTermsEnvVar = "TAKAGI_DEFAULT_TERMS";

/// Parses "p/q", "p" or "k.pre(per)".
Rational parse_point(std::string_view text);

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace takagi::cli
