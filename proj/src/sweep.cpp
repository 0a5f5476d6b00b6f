#include "pls/sweep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "pls/builder.hpp"
#include "pls/feasibility.hpp"
#include "pls/oracle.hpp"

namespace pls {

namespace {

std::string list(const std::vector<int>& xs) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? "," : "") << xs[i];
    }
    os << ')';
    return os.str();
}

std::string verdict(bool b) { return b ? "feasible" : "infeasible"; }

// Runs the predicate against the oracle and, when asked, the constructor
// against its request. `build` returns an error description or "".
void record(SweepResult& res, const std::string& tuple, bool predicate, bool oracle, bool check_builders,
            const std::function<std::string()>& build) {
    ++res.tuples;
    if (predicate != oracle) {
        res.mismatches.push_back(tuple + ": predicate " + verdict(predicate) + ", oracle " + verdict(oracle));
    }
    if (predicate) {
        ++res.feasible;
    }
    if (!check_builders) {
        return;
    }
    if (predicate) {
        std::string problem;
        try {
            problem = build();
        } catch (const std::exception& e) {
            problem = std::string("threw: ") + e.what();
        }
        if (problem.empty()) {
            ++res.built;
        } else {
            res.builder_failures.push_back(tuple + ": " + problem);
        }
    } else {
        try {
            build();
            res.builder_failures.push_back(tuple + ": constructor accepted an infeasible request");
        } catch (const InfeasibleError&) {
        } catch (const std::exception& e) {
            res.builder_failures.push_back(tuple + ": expected InfeasibleError, got: " + e.what());
        }
    }
}

} // namespace

std::vector<std::vector<int>> parameter_sequences(int max_len, int max_entry) {
    std::vector<std::vector<int>> out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> seq(static_cast<std::size_t>(len), 1);
        while (true) {
            out.push_back(seq);
            int k = len - 1;
            while (k >= 0 && seq[static_cast<std::size_t>(k)] == max_entry) {
                seq[static_cast<std::size_t>(k)] = 1;
                --k;
            }
            if (k < 0) {
                break;
            }
            ++seq[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

SweepResult sweep_theorem(const SweepLimits& limits, bool check_builders) {
    SweepResult res;
    OracleBudget budget;
    budget.max_volume = std::max(budget.max_volume, limits.max_volume);
    budget.max_rows = std::max(budget.max_rows, limits.max_lines);
    budget.max_cols = std::max(budget.max_cols, limits.max_lines);
    budget.max_symbols = std::max(budget.max_symbols, limits.max_volume + 1);

    const auto seqs = parameter_sequences(limits.max_lines, limits.max_entry);
    for (const auto& n : seqs) {
        const int v = std::accumulate(n.begin(), n.end(), 0);
        if (v > limits.max_volume) {
            continue;
        }
        for (const auto& m : seqs) {
            if (std::accumulate(m.begin(), m.end(), 0) != v) {
                continue;
            }
            for (int s = 1; s <= v + 1; ++s) {
                const bool pred = check_construction(n, m, s).feasible;
                OracleQuery q;
                q.row_params = n;
                q.col_params = m;
                q.s = s;
                const bool orc = exists_full(q, budget).has_value();
                record(res, "n=" + list(n) + " m=" + list(m) + " s=" + std::to_string(s), pred, orc, check_builders,
                       [&]() -> std::string {
                           const auto p = build_theorem(n, m, s);
                           const auto prof = parameters_of(p);
                           if (prof.row_params != n || prof.col_params != m || prof.symbols != s) {
                               return "profile mismatch";
                           }
                           return "";
                       });
            }
        }
    }
    return res;
}

SweepResult sweep_proposition(const SweepLimits& limits, bool check_builders) {
    SweepResult res;
    OracleBudget budget;
    budget.max_volume = std::max(budget.max_volume, limits.max_lines * limits.max_entry);
    budget.max_rows = std::max(budget.max_rows, limits.max_lines);
    budget.max_cols = std::max(budget.max_cols, limits.max_lines);
    budget.max_symbols = std::max(budget.max_symbols, limits.max_symbols);

    for (const auto& n : parameter_sequences(limits.max_lines, limits.max_entry)) {
        for (int c = 1; c <= limits.max_lines; ++c) {
            for (int s = 1; s <= limits.max_symbols; ++s) {
                const bool pred = check_row_params(n, c, s).feasible;
                OracleQuery q;
                q.row_params = n;
                q.c = c;
                q.s = s;
                const bool orc = exists_full(q, budget).has_value();
                record(res, "n=" + list(n) + " c=" + std::to_string(c) + " s=" + std::to_string(s), pred, orc,
                       check_builders, [&]() -> std::string {
                           const auto prof = parameters_of(build_proposition(n, c, s));
                           if (prof.row_params != n || prof.cols != c || prof.symbols != s) {
                               return "profile mismatch";
                           }
                           return "";
                       });
            }
        }
    }
    return res;
}

SweepResult sweep_sizes(const SweepLimits& limits, bool check_builders) {
    SweepResult res;
    OracleBudget budget;
    budget.max_volume = std::max(budget.max_volume, limits.max_volume);
    budget.max_rows = std::max(budget.max_rows, limits.max_lines);
    budget.max_cols = std::max(budget.max_cols, limits.max_lines);
    budget.max_symbols = std::max(budget.max_symbols, limits.max_symbols);

    for (int r = 1; r <= limits.max_lines; ++r) {
        for (int c = 1; c <= limits.max_lines; ++c) {
            for (int s = 1; s <= limits.max_symbols; ++s) {
                for (int v = 1; v <= limits.max_volume; ++v) {
                    const bool pred = check_sizes(r, c, s, v).feasible;
                    OracleQuery q;
                    q.r = r;
                    q.c = c;
                    q.s = s;
                    q.v = v;
                    const bool orc = exists_full(q, budget).has_value();
                    std::ostringstream t;
                    t << "r=" << r << " c=" << c << " s=" << s << " v=" << v;
                    record(res, t.str(), pred, orc, check_builders, [&]() -> std::string {
                        const auto prof = parameters_of(build_corollary(r, c, s, v));
                        if (prof.rows != r || prof.cols != c || prof.symbols != s || prof.volume != v) {
                            return "profile mismatch";
                        }
                        return "";
                    });
                }
            }
        }
    }
    return res;
}

} // namespace pls
