#pragma once

#include "symcoh/cohomology.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symcoh::cli {

inline constexpr const char* kDefaultAlgebra = "(0,0,0,12,14,15+23+24)";
inline constexpr const char* kDefaultOmega = "16+25-34";

enum class Format { Json, Markdown };

struct RunConfig {
    std::string algebra = kDefaultAlgebra;
    // JSON structure-constant file; replaces the Salamon string when set.
    std::optional<std::string> algebra_file;
    std::string omega = kDefaultOmega;
    // Empty means every group.
    std::vector<GroupName> groups;
    // Empty means every legal degree of each group.
    std::vector<int> degrees;
    // identities, symbol, hodge, lefschetz, ddlambda, index; empty means all.
    std::vector<std::string> suites;
    // Largest half-dimension for the symbol suite.
    int symbol_n = 3;
    std::size_t symbol_samples = 20;
    std::uint32_t seed = 20101;
    Format format = Format::Json;
    std::optional<std::string> out;
    // Worker cap; 0 means hardware concurrency.
    unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// "p+,p-,dR"; throws ParseError naming the offending position.
std::vector<GroupName> parse_groups(const std::string& text);
// "0,2-3"
std::vector<int> parse_degrees(const std::string& text);

// Serialized reports; identical configs give byte-identical text.
// *ok is cleared when a consistency check of the report fails.
std::string compute(const RunConfig& cfg, bool* ok = nullptr);
std::string check(const RunConfig& cfg, bool* ok = nullptr, std::string* first_failure = nullptr);

// Full command line without the program name; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symcoh::cli
