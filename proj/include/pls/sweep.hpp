#pragma once

#include <string>
#include <vector>

namespace pls {

/// Ranges for the predicate-versus-oracle sweeps.
struct SweepLimits {
    int max_lines = 3;    // longest row/column parameter list, and r, c
    int max_entry = 3;    // largest single parameter
    int max_symbols = 3;  // s range for the row-parameter and size sweeps
    int max_volume = 9;
};

struct SweepResult {
    long long tuples = 0;
    long long feasible = 0;
    long long built = 0;
    std::vector<std::string> mismatches;       // predicate and oracle disagree
    std::vector<std::string> builder_failures; // constructor output wrong or missing

    bool ok() const noexcept { return mismatches.empty() && builder_failures.empty(); }
};

/// (n, m, s) with equal line sums and v <= max_volume; s runs over 1..v+1,
/// which contains the range max line <= s <= v.
SweepResult sweep_theorem(const SweepLimits& limits, bool check_builders = true);

/// (n, c, s) with c, s <= max_symbols/max_lines.
SweepResult sweep_proposition(const SweepLimits& limits, bool check_builders = true);

/// (r, c, s, v) with r, c <= max_lines, s <= max_symbols, v <= max_volume.
SweepResult sweep_sizes(const SweepLimits& limits, bool check_builders = true);

/// Every nonempty sequence of length <= max_len with entries in 1..max_entry,
/// shorter sequences first, then lexicographic.
std::vector<std::vector<int>> parameter_sequences(int max_len, int max_entry);

} // namespace pls
