#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pls/core.hpp"

namespace pls {

inline constexpr const char* kSchemaVersion = "1";

/// Malformed document text or schema.
class FormatError : public Error {
public:
    using Error::Error;
};

/// {"schema": "1", "triples": [[row, col, sym], ...]}
std::string to_document(const PartialLatinSquare& p);

/// Parses a PLS document; malformed text raises FormatError, a well-formed
/// document whose triples clash raises ValidationError.
PartialLatinSquare parse_document(std::string_view text);

/// Row-major grid, "." for empty cells, space separated. Display only.
std::string to_grid(const PartialLatinSquare& p);

/// Requested parameters for a check, build or oracle query.
struct SpecDocument {
    std::optional<std::vector<int>> rows;
    std::optional<std::vector<int>> cols;
    std::optional<std::vector<int>> symbols;
    std::optional<int> r;
    std::optional<int> c;
    std::optional<int> s;
    std::optional<int> v;

    bool empty() const noexcept { return !rows && !cols && !symbols && !r && !c && !s && !v; }
    bool operator==(const SpecDocument&) const = default;
};

/// {"schema": "1", "rows": [...], "cols": [...], "symbols": [...], "r": .., "c": .., "s": .., "v": ..}
/// with every field but "schema" optional. At least one must be present and
/// all given parameter lists and "v" must agree on the volume.
SpecDocument parse_spec(std::string_view text);
std::string to_document(const SpecDocument& spec);

std::string format_profile(const ParameterProfile& prof);
std::string profile_document(const ParameterProfile& prof);

} // namespace pls
