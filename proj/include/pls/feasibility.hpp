#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pls/core.hpp"

namespace pls {

/// Condition identifiers used in reports.
namespace cond {
inline constexpr const char* kLineSums = "line-sums";       // sum(n) = sum(m)
inline constexpr const char* kGaleRyser = "gale-ryser";     // subset inequality
inline constexpr const char* kSymbolRange = "symbol-range"; // max line <= s <= v
inline constexpr const char* kVolumeRange = "volume-range"; // max(c,s) <= v <= c*s
inline constexpr const char* kRowCap = "row-cap";           // n_i <= min(c,s)
inline constexpr const char* kVolumeLower = "volume-lower"; // max(r,c,s) <= v
inline constexpr const char* kVolumeUpper = "volume-upper"; // v <= min(rc,cs,rs)
} // namespace cond

struct Condition {
    std::string id;
    std::string statement;
    bool satisfied = false;
    std::optional<std::string> witness;
};

struct FeasibilityReport {
    bool feasible = false;
    std::vector<Condition> conditions;

    const Condition* find(std::string_view id) const;
    std::vector<std::string> violated() const;
};

std::string format_report(const FeasibilityReport& report);

/// Thrown when a constructor is asked for something the matching predicate rejects.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(FeasibilityReport report);
    const FeasibilityReport& report() const noexcept { return report_; }

private:
    FeasibilityReport report_;
};

class SumMismatch : public Error {
public:
    using Error::Error;
};

struct DominanceResult {
    bool holds = true;
    // Violating prefix sizes (k largest rows, l largest columns) with both
    // sides of the inequality. Among violations the largest excess is
    // reported, ties broken by smaller k, then smaller l.
    int k = 0;
    int l = 0;
    long long lhs = 0;
    long long rhs = 0;
};

/// Checks sum_{i in I} n_i + sum_{j in J} m_j <= v + |I||J| for all I, J
/// by testing only sorted prefixes.
DominanceResult dominance_check(std::span<const int> n, std::span<const int> m);

FeasibilityReport check_construction(std::span<const int> n, std::span<const int> m, int s);
FeasibilityReport check_row_params(std::span<const int> n, int c, int s);
FeasibilityReport check_sizes(int r, int c, int s, int v);

} // namespace pls
