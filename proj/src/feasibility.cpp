#include "pls/feasibility.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace pls {

namespace {

void require_positive(std::span<const int> xs, const char* what) {
    if (xs.empty()) {
        throw PreconditionViolated(std::string(what) + " must be nonempty");
    }
    for (int x : xs) {
        if (x < 1) {
            throw PreconditionViolated(std::string(what) + " entries must be positive");
        }
    }
}

void require_positive(int x, const char* what) {
    if (x < 1) {
        throw PreconditionViolated(std::string(what) + " must be positive");
    }
}

long long total(std::span<const int> xs) { return std::accumulate(xs.begin(), xs.end(), 0LL); }

int max_of(std::span<const int> xs) { return xs.empty() ? 0 : *std::max_element(xs.begin(), xs.end()); }

std::vector<long long> sorted_prefix_sums(std::span<const int> xs) {
    std::vector<int> s(xs.begin(), xs.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    std::vector<long long> pre(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        pre[i + 1] = pre[i] + s[i];
    }
    return pre;
}

FeasibilityReport finish(std::vector<Condition> conds) {
    FeasibilityReport r;
    r.feasible = std::all_of(conds.begin(), conds.end(), [](const Condition& c) { return c.satisfied; });
    r.conditions = std::move(conds);
    return r;
}

} // namespace

const Condition* FeasibilityReport::find(std::string_view id) const {
    auto it = std::find_if(conditions.begin(), conditions.end(), [&](const Condition& c) { return c.id == id; });
    return it == conditions.end() ? nullptr : &*it;
}

std::vector<std::string> FeasibilityReport::violated() const {
    std::vector<std::string> out;
    for (const auto& c : conditions) {
        if (!c.satisfied) {
            out.push_back(c.id);
        }
    }
    return out;
}

std::string format_report(const FeasibilityReport& report) {
    std::ostringstream os;
    os << (report.feasible ? "feasible" : "infeasible") << '\n';
    for (const auto& c : report.conditions) {
        os << "  [" << (c.satisfied ? "ok" : "FAIL") << "] " << c.id << ": " << c.statement;
        if (c.witness) {
            os << " (" << *c.witness << ')';
        }
        os << '\n';
    }
    return os.str();
}

InfeasibleError::InfeasibleError(FeasibilityReport report)
    : Error([&] {
          std::string msg = "infeasible:";
          for (const auto& id : report.violated()) {
              msg += " " + id;
              if (const auto* c = report.find(id); c && c->witness) {
                  msg += " (" + *c->witness + ")";
              }
          }
          return msg;
      }()),
      report_(std::move(report)) {}

DominanceResult dominance_check(std::span<const int> n, std::span<const int> m) {
    require_positive(n, "row parameters");
    require_positive(m, "column parameters");
    const long long v = total(n);
    if (v != total(m)) {
        throw SumMismatch("row parameters sum to " + std::to_string(v) + " but column parameters sum to " +
                          std::to_string(total(m)));
    }
    // For fixed |I| = k and |J| = l the left side is largest on the k
    // largest rows and l largest columns, so prefixes suffice.
    const auto np = sorted_prefix_sums(n);
    const auto mp = sorted_prefix_sums(m);
    DominanceResult res;
    long long worst = 0;
    for (std::size_t k = 0; k < np.size(); ++k) {
        for (std::size_t l = 0; l < mp.size(); ++l) {
            const long long lhs = np[k] + mp[l];
            const long long rhs = v + static_cast<long long>(k * l);
            if (lhs - rhs > worst) {
                worst = lhs - rhs;
                res = {false, static_cast<int>(k), static_cast<int>(l), lhs, rhs};
            }
        }
    }
    return res;
}

FeasibilityReport check_construction(std::span<const int> n, std::span<const int> m, int s) {
    require_positive(n, "row parameters");
    require_positive(m, "column parameters");
    require_positive(s, "symbol count");
    std::vector<Condition> conds;

    const long long vn = total(n);
    const long long vm = total(m);
    Condition sums{cond::kLineSums, "sum of row parameters equals sum of column parameters", vn == vm, {}};
    if (!sums.satisfied) {
        sums.witness = std::to_string(vn) + " != " + std::to_string(vm);
    }
    conds.push_back(sums);

    Condition gr{cond::kGaleRyser, "sum_I n_i + sum_J m_j <= v + |I||J| for all row sets I and column sets J",
                 false, {}};
    if (sums.satisfied) {
        const auto d = dominance_check(n, m);
        gr.satisfied = d.holds;
        if (!d.holds) {
            gr.witness = "k=" + std::to_string(d.k) + ", l=" + std::to_string(d.l) + ": " + std::to_string(d.lhs) +
                         " > " + std::to_string(d.rhs);
        }
    } else {
        gr.witness = "undefined without equal line sums";
    }
    conds.push_back(gr);

    const long long line_max = std::max(max_of(n), max_of(m));
    const long long v = vn;
    Condition range{cond::kSymbolRange, "max(n_1..n_r, m_1..m_c) <= s <= v", line_max <= s && s <= v, {}};
    if (s < line_max) {
        range.witness = "s=" + std::to_string(s) + " < max line " + std::to_string(line_max);
    } else if (s > v) {
        range.witness = "s=" + std::to_string(s) + " > v=" + std::to_string(v);
    }
    conds.push_back(range);
    return finish(std::move(conds));
}

FeasibilityReport check_row_params(std::span<const int> n, int c, int s) {
    require_positive(n, "row parameters");
    require_positive(c, "column count");
    require_positive(s, "symbol count");
    const long long v = total(n);
    const long long lo = std::max(c, s);
    const long long hi = static_cast<long long>(c) * s;

    Condition vol{cond::kVolumeRange, "max(c,s) <= n_1+...+n_r <= c*s", lo <= v && v <= hi, {}};
    if (v < lo) {
        vol.witness = "v=" + std::to_string(v) + " < max(c,s)=" + std::to_string(lo);
    } else if (v > hi) {
        vol.witness = "v=" + std::to_string(v) + " > c*s=" + std::to_string(hi);
    }

    const int cap = std::min(c, s);
    Condition rows{cond::kRowCap, "n_i <= min(c,s) for every row", true, {}};
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] > cap) {
            rows.satisfied = false;
            rows.witness = "n_" + std::to_string(i + 1) + "=" + std::to_string(n[i]) + " > min(c,s)=" +
                           std::to_string(cap);
            break;
        }
    }
    return finish({vol, rows});
}

FeasibilityReport check_sizes(int r, int c, int s, int v) {
    require_positive(r, "row count");
    require_positive(c, "column count");
    require_positive(s, "symbol count");
    require_positive(v, "volume");
    const int lo = std::max({r, c, s});
    Condition lower{cond::kVolumeLower, "max(r,c,s) <= v", lo <= v, {}};
    if (!lower.satisfied) {
        lower.witness = "v=" + std::to_string(v) + " < max(r,c,s)=" + std::to_string(lo);
    }

    Condition upper{cond::kVolumeUpper, "v <= min(rc,cs,rs)", true, {}};
    const std::pair<const char*, long long> bounds[] = {
        {"rc", static_cast<long long>(r) * c},
        {"cs", static_cast<long long>(c) * s},
        {"rs", static_cast<long long>(r) * s},
    };
    for (const auto& [name, bound] : bounds) {
        if (v > bound) {
            upper.satisfied = false;
            upper.witness = "v=" + std::to_string(v) + " > " + name + "=" + std::to_string(bound);
            break;
        }
    }
    return finish({lower, upper});
}

} // namespace pls
