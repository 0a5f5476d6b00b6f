#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pls {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violated an operation's documented precondition.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

struct Triple {
    int row = 0;
    int col = 0;
    int sym = 0;

    auto operator<=>(const Triple&) const = default;
};

std::string to_string(const Triple& t);

struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

class ValidationError : public Error {
public:
    enum class Kind { EmptyInput, InvalidCoordinate, DuplicateCell, RowSymbolClash, ColSymbolClash };

    ValidationError(Kind kind, std::optional<Triple> first, std::optional<Triple> second);

    Kind kind() const noexcept { return kind_; }
    // The offending triples; `second` is empty for EmptyInput and InvalidCoordinate.
    const std::optional<Triple>& first() const noexcept { return first_; }
    const std::optional<Triple>& second() const noexcept { return second_; }

private:
    Kind kind_;
    std::optional<Triple> first_;
    std::optional<Triple> second_;
};

const char* to_string(ValidationError::Kind kind);

/// A finite nonempty set of (row, col, sym) triples in which any two
/// coordinates determine the third at most once. Triples are kept sorted.
/// Instances are only obtainable through validate().
class PartialLatinSquare {
public:
    const std::vector<Triple>& triples() const noexcept { return triples_; }
    std::size_t volume() const noexcept { return triples_.size(); }

    auto begin() const noexcept { return triples_.begin(); }
    auto end() const noexcept { return triples_.end(); }

    bool operator==(const PartialLatinSquare&) const = default;
    auto operator<=>(const PartialLatinSquare&) const = default;

private:
    friend PartialLatinSquare validate(std::span<const Triple> triples);
    explicit PartialLatinSquare(std::vector<Triple> sorted) : triples_(std::move(sorted)) {}

    std::vector<Triple> triples_;
};

/// Checks the three pairwise-injectivity conditions. The input is treated
/// as a set: repeated identical triples collapse to one.
PartialLatinSquare validate(std::span<const Triple> triples);

inline PartialLatinSquare validate(std::initializer_list<Triple> triples) {
    return validate(std::span<const Triple>(triples.begin(), triples.size()));
}

struct ParameterProfile {
    // Counts per occupied line, in increasing index order (not sorted by value).
    std::vector<int> row_params;
    std::vector<int> col_params;
    std::vector<int> sym_params;
    int volume = 0;
    int rows = 0;
    int cols = 0;
    int symbols = 0;

    bool operator==(const ParameterProfile&) const = default;
};

ParameterProfile parameters_of(const PartialLatinSquare& p);

enum class Coord { Row = 0, Col = 1, Sym = 2 };

/// perm[k] names the source coordinate that lands in slot k of the result.
using CoordPermutation = std::array<Coord, 3>;

inline constexpr CoordPermutation kIdentityPerm{Coord::Row, Coord::Col, Coord::Sym};

CoordPermutation inverse(const CoordPermutation& perm);
bool is_permutation(const CoordPermutation& perm);

PartialLatinSquare conjugate(const PartialLatinSquare& p, const CoordPermutation& perm);

/// Order-preserving relabel of rows, columns and symbols onto 1..r, 1..c, 1..s.
PartialLatinSquare normalize(const PartialLatinSquare& p);

/// Cells of an r x c board; nonempty, every cell within bounds, kept sorted.
class CellSet {
public:
    CellSet(int rows, int cols, std::vector<Cell> cells);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool contains(Cell c) const;

    // Index 0 holds row/column 1.
    std::vector<int> row_counts() const;
    std::vector<int> col_counts() const;

    bool operator==(const CellSet&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Cell> cells_;
};

/// Cells occupied by a PLS on the board spanned by its largest labels.
CellSet support(const PartialLatinSquare& p);

} // namespace pls
