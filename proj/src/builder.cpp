#include "pls/builder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "pls/matching.hpp"
#include "pls/realization.hpp"

namespace pls {

namespace {

std::vector<int> lines_at(const std::vector<int>& counts, int p) {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == p) {
            out.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

} // namespace

PartialLatinSquare fill_symbols(const CellSet& cells, const LayerObserver& observer) {
    const int rows = cells.rows();
    const int cols = cells.cols();
    const auto rc = cells.row_counts();
    const auto cc = cells.col_counts();
    const int top = std::max(*std::max_element(rc.begin(), rc.end()), *std::max_element(cc.begin(), cc.end()));

    std::vector<Cell> remaining = cells.cells();
    std::vector<Triple> out;
    out.reserve(cells.size());

    for (int p = top; p >= 1; --p) {
        std::vector<int> row_count(static_cast<std::size_t>(rows), 0);
        std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
        std::vector<Edge> edges;
        edges.reserve(remaining.size());
        for (const auto& c : remaining) {
            ++row_count[static_cast<std::size_t>(c.row - 1)];
            ++col_count[static_cast<std::size_t>(c.col - 1)];
            edges.push_back({c.row, c.col});
        }
        const int line_max = std::max(*std::max_element(row_count.begin(), row_count.end()),
                                      *std::max_element(col_count.begin(), col_count.end()));
        if (line_max != p) {
            throw std::logic_error("symbol layer " + std::to_string(p) + " found maximum line count " +
                                   std::to_string(line_max));
        }

        const BipartiteGraph g(rows, cols, std::move(edges));
        const auto x1 = lines_at(row_count, p);
        const auto y1 = lines_at(col_count, p);
        const Matching m = saturating_matching(g, Side::Left, x1);
        const Matching n = saturating_matching(g, Side::Right, y1);
        const Matching k = merge_matchings(g, m, n, x1, y1);

        for (const auto& e : k) {
            out.push_back({e.left, e.right, p});
        }
        std::erase_if(remaining, [&](const Cell& c) { return k.contains(Edge{c.row, c.col}); });
        if (observer) {
            observer(p, remaining);
        }
    }
    if (!remaining.empty()) {
        throw std::logic_error("symbol layers left cells unfilled");
    }
    return validate(out);
}

PartialLatinSquare split_symbols(const PartialLatinSquare& p, int s) {
    const auto prof = parameters_of(p);
    if (s < prof.symbols || s > prof.volume) {
        throw PreconditionViolated("need s(P) <= s <= v(P), got s=" + std::to_string(s) + ", s(P)=" +
                                   std::to_string(prof.symbols) + ", v(P)=" + std::to_string(prof.volume));
    }
    std::vector<Triple> ts = p.triples();
    std::map<int, int> freq;
    int fresh = 0;
    for (const auto& t : ts) {
        ++freq[t.sym];
        fresh = std::max(fresh, t.sym);
    }

    for (int added = prof.symbols; added < s; ++added) {
        // Largest multiplicity, smallest label on ties. It is >= 2 because
        // v > current symbol count whenever a split is still needed.
        auto donor = std::max_element(freq.begin(), freq.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
        if (donor->second < 2) {
            throw std::logic_error("no symbol with multiplicity at least 2 to split");
        }
        // ts stays sorted by (row, col), so the first hit is the smallest cell.
        auto cell = std::find_if(ts.begin(), ts.end(), [&](const Triple& t) { return t.sym == donor->first; });
        cell->sym = ++fresh;
        --donor->second;
        freq[fresh] = 1;
    }
    return validate(ts);
}

PartialLatinSquare build_theorem(std::span<const int> n, std::span<const int> m, int s) {
    auto report = check_construction(n, m, s);
    if (!report.feasible) {
        throw InfeasibleError(std::move(report));
    }
    const CellSet cells = realize_degree_matrix(n, m);
    return normalize(split_symbols(fill_symbols(cells), s));
}

PartialLatinSquare build_proposition(std::span<const int> n, int c, int s) {
    auto report = check_row_params(n, c, s);
    if (!report.feasible) {
        throw InfeasibleError(std::move(report));
    }
    std::vector<Cell> leftmost;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (int j = 1; j <= n[i]; ++j) {
            leftmost.push_back({static_cast<int>(i) + 1, j});
        }
    }
    const CellSet balanced = rebalance_columns(CellSet(static_cast<int>(n.size()), c, std::move(leftmost)), s);
    const auto m = balanced.col_counts();
    return build_theorem(n, m, s);
}

PartialLatinSquare build_corollary(int r, int c, int s, int v) {
    auto report = check_sizes(r, c, s, v);
    if (!report.feasible) {
        throw InfeasibleError(std::move(report));
    }
    const auto n = distribute_rows(v, r, std::min(c, s));
    return build_proposition(n, c, s);
}

} // namespace pls
