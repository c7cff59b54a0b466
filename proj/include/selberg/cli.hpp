#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selberg::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct CheckRow {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// The identity battery behind `verify-identities`, exposed for reuse.
std::vector<CheckRow> verify_identities(unsigned long long seed);

std::vector<int> parse_int_range(const std::string& text);
/// "x", "x1,x2,...", "lo:hi:n" (linear) or "lo:hi:n:log" (geometric).
std::vector<double> parse_real_list(const std::string& text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selberg::cli
