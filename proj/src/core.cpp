#include "pls/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace pls {

std::string to_string(const Triple& t) {
    std::ostringstream os;
    os << '(' << t.row << ',' << t.col << ',' << t.sym << ')';
    return os.str();
}

const char* to_string(ValidationError::Kind kind) {
    switch (kind) {
    case ValidationError::Kind::EmptyInput: return "EmptyInput";
    case ValidationError::Kind::InvalidCoordinate: return "InvalidCoordinate";
    case ValidationError::Kind::DuplicateCell: return "DuplicateCell";
    case ValidationError::Kind::RowSymbolClash: return "RowSymbolClash";
    case ValidationError::Kind::ColSymbolClash: return "ColSymbolClash";
    }
    return "Unknown";
}

namespace {

std::string describe(ValidationError::Kind kind, const std::optional<Triple>& a,
                     const std::optional<Triple>& b) {
    std::string msg = to_string(kind);
    if (a) {
        msg += ": " + to_string(*a);
    }
    if (b) {
        msg += " and " + to_string(*b);
    }
    return msg;
}

// Finds two triples agreeing on the coordinate pair selected by `key`.
template <typename Key>
std::optional<std::pair<Triple, Triple>> find_clash(const std::vector<Triple>& ts, Key key) {
    std::map<std::pair<int, int>, Triple> seen;
    for (const auto& t : ts) {
        auto [it, inserted] = seen.emplace(key(t), t);
        if (!inserted) {
            return std::pair{it->second, t};
        }
    }
    return std::nullopt;
}

int coord(const Triple& t, Coord c) {
    switch (c) {
    case Coord::Row: return t.row;
    case Coord::Col: return t.col;
    case Coord::Sym: return t.sym;
    }
    return 0;
}

// Maps each used label to its rank (1-based).
std::map<int, int> ranks(const std::vector<Triple>& ts, Coord c) {
    std::map<int, int> r;
    for (const auto& t : ts) {
        r.emplace(coord(t, c), 0);
    }
    int next = 1;
    for (auto& [label, rank] : r) {
        rank = next++;
    }
    return r;
}

std::vector<int> counts_by_label(const std::vector<Triple>& ts, Coord c) {
    std::map<int, int> counts;
    for (const auto& t : ts) {
        ++counts[coord(t, c)];
    }
    std::vector<int> out;
    out.reserve(counts.size());
    for (const auto& [label, n] : counts) {
        out.push_back(n);
    }
    return out;
}

} // namespace

ValidationError::ValidationError(Kind kind, std::optional<Triple> first, std::optional<Triple> second)
    : Error(describe(kind, first, second)), kind_(kind), first_(first), second_(second) {}

PartialLatinSquare validate(std::span<const Triple> triples) {
    std::vector<Triple> ts(triples.begin(), triples.end());
    if (ts.empty()) {
        throw ValidationError(ValidationError::Kind::EmptyInput, std::nullopt, std::nullopt);
    }
    for (const auto& t : ts) {
        if (t.row < 1 || t.col < 1 || t.sym < 1) {
            throw ValidationError(ValidationError::Kind::InvalidCoordinate, t, std::nullopt);
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    using Kind = ValidationError::Kind;
    if (auto c = find_clash(ts, [](const Triple& t) { return std::pair{t.row, t.col}; })) {
        throw ValidationError(Kind::DuplicateCell, c->first, c->second);
    }
    if (auto c = find_clash(ts, [](const Triple& t) { return std::pair{t.row, t.sym}; })) {
        throw ValidationError(Kind::RowSymbolClash, c->first, c->second);
    }
    if (auto c = find_clash(ts, [](const Triple& t) { return std::pair{t.col, t.sym}; })) {
        throw ValidationError(Kind::ColSymbolClash, c->first, c->second);
    }
    return PartialLatinSquare(std::move(ts));
}

ParameterProfile parameters_of(const PartialLatinSquare& p) {
    ParameterProfile prof;
    prof.row_params = counts_by_label(p.triples(), Coord::Row);
    prof.col_params = counts_by_label(p.triples(), Coord::Col);
    prof.sym_params = counts_by_label(p.triples(), Coord::Sym);
    prof.volume = static_cast<int>(p.volume());
    prof.rows = static_cast<int>(prof.row_params.size());
    prof.cols = static_cast<int>(prof.col_params.size());
    prof.symbols = static_cast<int>(prof.sym_params.size());
    return prof;
}

bool is_permutation(const CoordPermutation& perm) {
    std::array<bool, 3> hit{};
    for (auto c : perm) {
        auto i = static_cast<std::size_t>(c);
        if (i > 2 || hit[i]) {
            return false;
        }
        hit[i] = true;
    }
    return true;
}

CoordPermutation inverse(const CoordPermutation& perm) {
    if (!is_permutation(perm)) {
        throw PreconditionViolated("coordinate permutation is not a bijection");
    }
    CoordPermutation inv{};
    for (std::size_t k = 0; k < 3; ++k) {
        inv[static_cast<std::size_t>(perm[k])] = static_cast<Coord>(k);
    }
    return inv;
}

PartialLatinSquare conjugate(const PartialLatinSquare& p, const CoordPermutation& perm) {
    if (!is_permutation(perm)) {
        throw PreconditionViolated("coordinate permutation is not a bijection");
    }
    std::vector<Triple> out;
    out.reserve(p.volume());
    for (const auto& t : p) {
        out.push_back({coord(t, perm[0]), coord(t, perm[1]), coord(t, perm[2])});
    }
    return validate(out);
}

PartialLatinSquare normalize(const PartialLatinSquare& p) {
    const auto rr = ranks(p.triples(), Coord::Row);
    const auto cr = ranks(p.triples(), Coord::Col);
    const auto sr = ranks(p.triples(), Coord::Sym);
    std::vector<Triple> out;
    out.reserve(p.volume());
    for (const auto& t : p) {
        out.push_back({rr.at(t.row), cr.at(t.col), sr.at(t.sym)});
    }
    return validate(out);
}

CellSet::CellSet(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ < 1 || cols_ < 1) {
        throw PreconditionViolated("cell set board dimensions must be positive");
    }
    if (cells_.empty()) {
        throw PreconditionViolated("cell set must be nonempty");
    }
    for (const auto& c : cells_) {
        if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_) {
            throw PreconditionViolated("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                       ") lies outside the board");
        }
    }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<int> CellSet::row_counts() const {
    std::vector<int> n(static_cast<std::size_t>(rows_), 0);
    for (const auto& c : cells_) {
        ++n[static_cast<std::size_t>(c.row - 1)];
    }
    return n;
}

std::vector<int> CellSet::col_counts() const {
    std::vector<int> m(static_cast<std::size_t>(cols_), 0);
    for (const auto& c : cells_) {
        ++m[static_cast<std::size_t>(c.col - 1)];
    }
    return m;
}

CellSet support(const PartialLatinSquare& p) {
    int rows = 0;
    int cols = 0;
    std::vector<Cell> cells;
    cells.reserve(p.volume());
    for (const auto& t : p) {
        rows = std::max(rows, t.row);
        cols = std::max(cols, t.col);
        cells.push_back({t.row, t.col});
    }
    return CellSet(rows, cols, std::move(cells));
}

} // namespace pls
