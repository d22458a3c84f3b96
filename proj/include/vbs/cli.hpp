#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbs {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidChain = 2;  // chain physics or block range rejected
inline constexpr int kExitParse = 3;         // unreadable file or malformed argument
inline constexpr int kExitMismatch = 4;      // the two computation routes disagree
inline constexpr int kExitUnsupported = 5;   // closed form on a one-site block, or over the size cap

struct RunConfig {
    std::string chain_path;
    std::string block;   // "K:L"
    std::string sweep;   // "LMIN:LMAX"
    int block_start = 1;
    std::string method = "closed-form";  // closed-form | brute-force | both
    std::vector<double> alphas;
    std::vector<std::string> coeffs;  // raw "link,J,value" overrides
    std::string csv_path;             // empty: stdout
    long max_dim = 1000000;           // brute-force block dimension cap
};

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_entropy(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace vbs
