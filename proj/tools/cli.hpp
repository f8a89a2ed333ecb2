// Command-line front end. Kept as a library so tests can drive it without a
// subprocess.
//
// Exit codes: 0 ok, 1 verification failure or table mismatch, 2 usage or
// input error, 3 search budget exhausted.

#ifndef GENARCS_TOOLS_CLI_HPP
#define GENARCS_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace genarcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Default certificate directory when --certs is not given.
inline constexpr const char* kCertDirEnv = "GENARCS_CERT_DIR";

/// Expands "7", "2,3,4", "2..11" (and mixtures like "2..5,7") into prime
/// powers. An explicitly listed q that is not a prime power is an error;
/// ranges skip non prime powers. Throws std::invalid_argument.
std::vector<std::uint32_t> parse_q_list(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genarcs::cli

#endif  // GENARCS_TOOLS_CLI_HPP
