#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pls/core.hpp"

namespace pls {

/// Limits on exhaustive search. Exceeding any of them is reported as
/// BudgetExceeded, never as "no such PLS".
struct OracleBudget {
    int max_volume = 12;
    int max_rows = 6;
    int max_cols = 6;
    int max_symbols = 6;
    long long max_nodes = 50'000'000;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A query names any subset of the constraints; parameter families are
/// matched as multisets.
struct OracleQuery {
    std::optional<std::vector<int>> row_params;
    std::optional<std::vector<int>> col_params;
    std::optional<std::vector<int>> sym_params;
    std::optional<int> r;
    std::optional<int> c;
    std::optional<int> s;
    std::optional<int> v;
};

/// Brute-force existence check. Returns a normalized witness when a PLS
/// satisfying every given constraint exists, std::nullopt when none does.
/// When row or column parameters are given the witness lists them in the
/// given order.
///
/// Throws PreconditionViolated for an empty query, nonpositive values or
/// parameter families implying different volumes.
std::optional<PartialLatinSquare> exists_full(const OracleQuery& query, const OracleBudget& budget = {});

struct EnumerationBounds {
    int max_rows = 1;
    int max_cols = 1;
    int max_symbols = 1;
    int max_volume = 1;
};

/// Emits every normalized PLS within the bounds exactly once, in
/// lexicographic order of the sorted triple lists.
void enumerate(const EnumerationBounds& bounds, const std::function<void(const PartialLatinSquare&)>& emit,
               const OracleBudget& budget = {});

std::vector<PartialLatinSquare> enumerate_all(const EnumerationBounds& bounds, const OracleBudget& budget = {});

} // namespace pls
