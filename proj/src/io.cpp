#include "pls/io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace pls {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed document: ") + e.what());
    }
}

void check_schema(const json& doc) {
    if (!doc.is_object()) {
        throw FormatError("document must be an object");
    }
    auto it = doc.find("schema");
    if (it == doc.end()) {
        throw FormatError("document lacks a \"schema\" field");
    }
    const bool ok = (it->is_string() && it->get<std::string>() == kSchemaVersion) ||
                    (it->is_number_integer() && it->get<long long>() == 1);
    if (!ok) {
        throw FormatError("unsupported schema version " + it->dump());
    }
}

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw FormatError(what + " must be an integer");
    }
    const auto x = j.get<long long>();
    if (x < 1 || x > std::numeric_limits<int>::max()) {
        throw FormatError(what + " must be a positive integer");
    }
    return static_cast<int>(x);
}

std::optional<std::vector<int>> int_list(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
        return std::nullopt;
    }
    if (!it->is_array() || it->empty()) {
        throw FormatError(std::string("\"") + key + "\" must be a nonempty array");
    }
    std::vector<int> out;
    for (const auto& x : *it) {
        out.push_back(as_int(x, std::string("entries of \"") + key + "\""));
    }
    return out;
}

std::optional<int> int_field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
        return std::nullopt;
    }
    return as_int(*it, std::string("\"") + key + "\"");
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(xs[i]);
    }
    return s;
}

} // namespace

std::string to_document(const PartialLatinSquare& p) {
    json triples = json::array();
    for (const auto& t : p) {
        triples.push_back({t.row, t.col, t.sym});
    }
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["triples"] = std::move(triples);
    return doc.dump() + "\n";
}

PartialLatinSquare parse_document(std::string_view text) {
    const json doc = parse_json(text);
    check_schema(doc);
    auto it = doc.find("triples");
    if (it == doc.end() || !it->is_array()) {
        throw FormatError("document lacks a \"triples\" array");
    }
    std::vector<Triple> ts;
    for (const auto& t : *it) {
        if (!t.is_array() || t.size() != 3) {
            throw FormatError("each triple must be an array [row, col, sym]");
        }
        ts.push_back({as_int(t[0], "row"), as_int(t[1], "col"), as_int(t[2], "sym")});
    }
    return validate(ts);
}

std::string to_grid(const PartialLatinSquare& p) {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, int> at;
    for (const auto& t : p) {
        rows = std::max(rows, t.row);
        cols = std::max(cols, t.col);
        at[{t.row, t.col}] = t.sym;
    }
    std::size_t width = 1;
    for (const auto& [cell, sym] : at) {
        width = std::max(width, std::to_string(sym).size());
    }
    std::ostringstream os;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            auto it = at.find({i, j});
            std::string cell = it == at.end() ? "." : std::to_string(it->second);
            if (j > 1) {
                os << ' ';
            }
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

SpecDocument parse_spec(std::string_view text) {
    const json doc = parse_json(text);
    check_schema(doc);
    SpecDocument spec;
    spec.rows = int_list(doc, "rows");
    spec.cols = int_list(doc, "cols");
    spec.symbols = int_list(doc, "symbols");
    spec.r = int_field(doc, "r");
    spec.c = int_field(doc, "c");
    spec.s = int_field(doc, "s");
    spec.v = int_field(doc, "v");
    if (spec.empty()) {
        throw FormatError("spec document names no parameter");
    }
    std::optional<long long> volume;
    for (const auto* list : {&spec.rows, &spec.cols, &spec.symbols}) {
        if (*list) {
            const long long sum = std::accumulate((*list)->begin(), (*list)->end(), 0LL);
            if (volume && *volume != sum) {
                throw FormatError("parameter lists imply different volumes");
            }
            volume = sum;
        }
    }
    if (volume && spec.v && *spec.v != *volume) {
        throw FormatError("\"v\" disagrees with the parameter lists");
    }
    return spec;
}

std::string to_document(const SpecDocument& spec) {
    json doc;
    doc["schema"] = kSchemaVersion;
    if (spec.rows) doc["rows"] = *spec.rows;
    if (spec.cols) doc["cols"] = *spec.cols;
    if (spec.symbols) doc["symbols"] = *spec.symbols;
    if (spec.r) doc["r"] = *spec.r;
    if (spec.c) doc["c"] = *spec.c;
    if (spec.s) doc["s"] = *spec.s;
    if (spec.v) doc["v"] = *spec.v;
    return doc.dump() + "\n";
}

std::string format_profile(const ParameterProfile& prof) {
    std::ostringstream os;
    os << "v=" << prof.volume << " r=" << prof.rows << " c=" << prof.cols << " s=" << prof.symbols << '\n'
       << "row-params: " << join(prof.row_params) << '\n'
       << "col-params: " << join(prof.col_params) << '\n'
       << "sym-params: " << join(prof.sym_params) << '\n';
    return os.str();
}

std::string profile_document(const ParameterProfile& prof) {
    json doc;
    doc["volume"] = prof.volume;
    doc["r"] = prof.rows;
    doc["c"] = prof.cols;
    doc["s"] = prof.symbols;
    doc["row_params"] = prof.row_params;
    doc["col_params"] = prof.col_params;
    doc["sym_params"] = prof.sym_params;
    return doc.dump() + "\n";
}

} // namespace pls
