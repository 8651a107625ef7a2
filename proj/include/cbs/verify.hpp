#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cbs {

/// One sub-check of a verification suite.
struct CheckResult {
    std::string suite;
    std::map<std::string, std::string> params;
    bool passed = false;
    /// "ok", or the first counterexample with both computed values.
    std::string detail;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 20040101;
inline constexpr double kDefaultTolerance = 1e-10;

struct SuiteOptions {
    int max_n = 15;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = kDefaultTolerance;
};

class UnknownSuiteError : public std::invalid_argument {
   public:
    explicit UnknownSuiteError(std::string_view name);
};

/// Every accepted suite name, "all" included.
const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);
/// 25 for sequence suites, 15 for polynomial identities, 7 or 8 for brute-force oracles.
int default_max_n(std::string_view name);

/// Runs the named suite. Brute-force suites clamp max_n to their enumeration
/// limit and record the effective bound in params. "all" runs every suite and
/// sorts the results by suite name. Throws UnknownSuiteError.
std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& options);

bool all_passed(std::span<const CheckResult> results);

/// One JSON object with keys suite, params, passed, detail, elapsed_ms.
std::string to_json_line(const CheckResult& result);
CheckResult check_result_from_json(std::string_view line);
/// JSON lines, one record per line, each terminated by '\n'.
std::string serialize_report(std::span<const CheckResult> results);
std::vector<CheckResult> parse_report(std::string_view text);

}  // namespace cbs
