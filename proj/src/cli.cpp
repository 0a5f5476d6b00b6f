#include "pls/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pls/builder.hpp"
#include "pls/feasibility.hpp"
#include "pls/io.hpp"
#include "pls/oracle.hpp"
#include "pls/sweep.hpp"

namespace pls::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::vector<int> parse_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || x < 1) {
            throw UsageError(std::string(flag) + " expects comma-separated positive integers, got \"" + text + "\"");
        }
        out.push_back(x);
    }
    if (out.empty()) {
        throw UsageError(std::string(flag) + " needs at least one value");
    }
    return out;
}

struct SpecFlags {
    std::string rows, cols, sym_params, spec_file;
    int r = 0, c = 0, s = 0, v = 0;
    CLI::Option* rows_opt = nullptr;
    CLI::Option* cols_opt = nullptr;
    CLI::Option* sym_opt = nullptr;
    CLI::Option* spec_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* c_opt = nullptr;
    CLI::Option* s_opt = nullptr;
    CLI::Option* v_opt = nullptr;
};

void add_spec_flags(CLI::App* sub, SpecFlags& f, bool with_sym_params) {
    f.rows_opt = sub->add_option("--rows", f.rows, "row parameters, comma separated");
    f.cols_opt = sub->add_option("--cols", f.cols, "column parameters, comma separated");
    if (with_sym_params) {
        f.sym_opt = sub->add_option("--sym-params", f.sym_params, "symbol parameters, comma separated");
    }
    f.r_opt = sub->add_option("--r", f.r, "number of rows")->check(CLI::PositiveNumber);
    f.c_opt = sub->add_option("--c", f.c, "number of columns")->check(CLI::PositiveNumber);
    f.s_opt = sub->add_option("--s,--symbols", f.s, "number of symbols")->check(CLI::PositiveNumber);
    f.v_opt = sub->add_option("--v", f.v, "volume")->check(CLI::PositiveNumber);
    f.spec_opt = sub->add_option("--spec", f.spec_file, "spec document (\"-\" for stdin)");
}

SpecDocument gather(const SpecFlags& f, std::istream& in) {
    SpecDocument spec;
    if (f.spec_opt->count()) {
        spec = parse_spec(read_input(f.spec_file, in));
    }
    if (f.rows_opt->count()) spec.rows = parse_list(f.rows, "--rows");
    if (f.cols_opt->count()) spec.cols = parse_list(f.cols, "--cols");
    if (f.sym_opt && f.sym_opt->count()) spec.symbols = parse_list(f.sym_params, "--sym-params");
    if (f.r_opt->count()) spec.r = f.r;
    if (f.c_opt->count()) spec.c = f.c;
    if (f.s_opt->count()) spec.s = f.s;
    if (f.v_opt->count()) spec.v = f.v;
    return spec;
}

enum class Kind { Theorem, Proposition, Sizes };

Kind resolve_kind(const std::string& name, const SpecDocument& spec) {
    if (name == "theorem") return Kind::Theorem;
    if (name == "proposition") return Kind::Proposition;
    if (name == "sizes") return Kind::Sizes;
    if (!name.empty()) {
        throw UsageError("unknown kind \"" + name + "\" (expected theorem, proposition or sizes)");
    }
    if (spec.rows && spec.cols && spec.s) return Kind::Theorem;
    if (spec.rows && spec.c && spec.s) return Kind::Proposition;
    if (spec.r && spec.c && spec.s && spec.v) return Kind::Sizes;
    throw UsageError("cannot infer the kind from the given parameters");
}

template <typename T>
const T& need(const std::optional<T>& x, const char* flag) {
    if (!x) {
        throw UsageError(std::string("missing ") + flag);
    }
    return *x;
}

FeasibilityReport check_spec(Kind kind, const SpecDocument& spec) {
    switch (kind) {
    case Kind::Theorem: return check_construction(need(spec.rows, "--rows"), need(spec.cols, "--cols"), need(spec.s, "--s"));
    case Kind::Proposition: return check_row_params(need(spec.rows, "--rows"), need(spec.c, "--c"), need(spec.s, "--s"));
    case Kind::Sizes:
        return check_sizes(need(spec.r, "--r"), need(spec.c, "--c"), need(spec.s, "--s"), need(spec.v, "--v"));
    }
    throw UsageError("unknown kind");
}

PartialLatinSquare build_spec(Kind kind, const SpecDocument& spec) {
    switch (kind) {
    case Kind::Theorem: return build_theorem(*spec.rows, *spec.cols, *spec.s);
    case Kind::Proposition: return build_proposition(*spec.rows, *spec.c, *spec.s);
    case Kind::Sizes: return build_corollary(*spec.r, *spec.c, *spec.s, *spec.v);
    }
    throw UsageError("unknown kind");
}

std::string report_document(const FeasibilityReport& report) {
    nlohmann::json doc;
    doc["feasible"] = report.feasible;
    doc["conditions"] = nlohmann::json::array();
    for (const auto& c : report.conditions) {
        nlohmann::json jc{{"id", c.id}, {"statement", c.statement}, {"satisfied", c.satisfied}};
        if (c.witness) {
            jc["witness"] = *c.witness;
        }
        doc["conditions"].push_back(std::move(jc));
    }
    return doc.dump() + "\n";
}

struct BudgetFlags {
    OracleBudget budget;
};

void add_budget_flags(CLI::App* sub, BudgetFlags& b) {
    sub->add_option("--max-volume", b.budget.max_volume, "largest volume searched")->capture_default_str();
    sub->add_option("--max-rows", b.budget.max_rows, "largest row count searched")->capture_default_str();
    sub->add_option("--max-cols", b.budget.max_cols, "largest column count searched")->capture_default_str();
    sub->add_option("--max-symbols", b.budget.max_symbols, "largest symbol count searched")->capture_default_str();
    sub->add_option("--max-nodes", b.budget.max_nodes, "search node limit")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partial Latin squares with prescribed parameters: feasibility, construction, exhaustive search"};
    app.require_subcommand(1);

    // check / build
    std::string check_kind;
    bool check_json = false;
    SpecFlags check_flags;
    auto* check = app.add_subcommand("check", "decide feasibility and print the condition report");
    check->add_option("kind", check_kind, "theorem | proposition | sizes (inferred when omitted)");
    add_spec_flags(check, check_flags, false);
    check->add_flag("--json", check_json, "print the report as JSON");

    std::string build_kind;
    bool build_grid = false;
    SpecFlags build_flags;
    auto* build = app.add_subcommand("build", "construct a PLS and print it as a document");
    build->add_option("kind", build_kind, "theorem | proposition | sizes (inferred when omitted)");
    add_spec_flags(build, build_flags, false);
    build->add_flag("--grid", build_grid, "print the grid view instead of the document");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive search");
    oracle->require_subcommand(1);
    SpecFlags exists_flags;
    BudgetFlags exists_budget;
    auto* exists = oracle->add_subcommand("exists", "search for a PLS meeting every given constraint");
    add_spec_flags(exists, exists_flags, true);
    add_budget_flags(exists, exists_budget);

    EnumerationBounds bounds;
    BudgetFlags enum_budget;
    bool enum_list = false;
    auto* enumerate_cmd = oracle->add_subcommand("enumerate", "list every normalized PLS within bounds");
    enumerate_cmd->add_option("--r", bounds.max_rows, "row bound")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--c", bounds.max_cols, "column bound")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--s", bounds.max_symbols, "symbol bound")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--v", bounds.max_volume, "volume bound")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--list", enum_list, "print each PLS as a document line");
    add_budget_flags(enumerate_cmd, enum_budget);

    // verify
    std::string verify_path;
    bool verify_json = false;
    bool verify_grid = false;
    auto* verify = app.add_subcommand("verify", "validate a PLS document and print its parameters");
    verify->add_option("file", verify_path, "document path or - for stdin")->required();
    verify->add_flag("--json", verify_json, "print the profile as JSON");
    verify->add_flag("--grid", verify_grid, "also print the grid view");

    // sweep
    std::string sweep_kind;
    SweepLimits limits;
    bool sweep_no_build = false;
    auto* sweep = app.add_subcommand("sweep", "compare a predicate with the oracle over a bounded range");
    sweep->add_option("kind", sweep_kind, "theorem | proposition | sizes")->required();
    sweep->add_option("--max-lines", limits.max_lines, "longest parameter list / largest r, c")->capture_default_str();
    sweep->add_option("--max-entry", limits.max_entry, "largest parameter entry")->capture_default_str();
    sweep->add_option("--max-symbols", limits.max_symbols, "largest s (proposition, sizes)")->capture_default_str();
    sweep->add_option("--max-volume", limits.max_volume, "largest volume (theorem, sizes)")->capture_default_str();
    sweep->add_flag("--no-build", sweep_no_build, "skip running the constructors");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed()) {
            const auto spec = gather(check_flags, in);
            const auto report = check_spec(resolve_kind(check_kind, spec), spec);
            out << (check_json ? report_document(report) : format_report(report));
            return report.feasible ? kOk : kNegative;
        }
        if (build->parsed()) {
            const auto spec = gather(build_flags, in);
            const Kind kind = resolve_kind(build_kind, spec);
            const auto report = check_spec(kind, spec);
            if (!report.feasible) {
                err << format_report(report);
                return kNegative;
            }
            const auto p = build_spec(kind, spec);
            out << (build_grid ? to_grid(p) : to_document(p));
            return kOk;
        }
        if (exists->parsed()) {
            const auto spec = gather(exists_flags, in);
            OracleQuery q{spec.rows, spec.cols, spec.symbols, spec.r, spec.c, spec.s, spec.v};
            if (auto w = exists_full(q, exists_budget.budget)) {
                out << to_document(*w);
                return kOk;
            }
            out << "none\n";
            return kNegative;
        }
        if (enumerate_cmd->parsed()) {
            long long count = 0;
            enumerate(
                bounds,
                [&](const PartialLatinSquare& p) {
                    ++count;
                    if (enum_list) {
                        out << to_document(p);
                    }
                },
                enum_budget.budget);
            out << "count: " << count << '\n';
            return kOk;
        }
        if (verify->parsed()) {
            const std::string text = read_input(verify_path, in);
            try {
                const auto p = parse_document(text);
                const auto prof = parameters_of(p);
                if (verify_json) {
                    out << profile_document(prof);
                } else {
                    out << "valid\n" << format_profile(prof);
                }
                if (verify_grid) {
                    out << to_grid(p);
                }
                return kOk;
            } catch (const ValidationError& e) {
                out << "invalid: " << e.what() << '\n';
                return kNegative;
            }
        }
        if (sweep->parsed()) {
            SweepResult res;
            if (sweep_kind == "theorem") {
                res = sweep_theorem(limits, !sweep_no_build);
            } else if (sweep_kind == "proposition") {
                res = sweep_proposition(limits, !sweep_no_build);
            } else if (sweep_kind == "sizes") {
                res = sweep_sizes(limits, !sweep_no_build);
            } else {
                throw UsageError("unknown kind \"" + sweep_kind + "\" (expected theorem, proposition or sizes)");
            }
            out << "tuples: " << res.tuples << " feasible: " << res.feasible << " built: " << res.built
                << " mismatches: " << res.mismatches.size() << " builder-failures: " << res.builder_failures.size()
                << '\n';
            for (const auto& m : res.mismatches) {
                out << "mismatch " << m << '\n';
            }
            for (const auto& f : res.builder_failures) {
                out << "builder " << f << '\n';
            }
            return res.ok() ? kOk : kNegative;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace pls::cli
