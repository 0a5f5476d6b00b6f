#include "pls/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace pls {

namespace {

std::string join(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

int endpoint(const Edge& e, Side s) { return s == Side::Left ? e.left : e.right; }

std::vector<int> checked_targets(const BipartiteGraph& g, Side side, std::span<const int> targets) {
    std::vector<int> t(targets.begin(), targets.end());
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
        throw PreconditionViolated("duplicate target vertex");
    }
    for (int v : t) {
        if (v < 1 || v > g.size(side)) {
            throw PreconditionViolated(std::string("target ") + std::to_string(v) + " is not a " +
                                       side_name(side) + " vertex");
        }
    }
    return t;
}

} // namespace

BipartiteGraph::BipartiteGraph(int left_size, int right_size, std::vector<Edge> edges)
    : left_size_(left_size), right_size_(right_size), edges_(std::move(edges)) {
    if (left_size_ < 0 || right_size_ < 0) {
        throw PreconditionViolated("negative vertex count");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw PreconditionViolated("duplicate edge");
    }
    left_adj_.resize(static_cast<std::size_t>(left_size_) + 1);
    right_adj_.resize(static_cast<std::size_t>(right_size_) + 1);
    for (const auto& e : edges_) {
        if (e.left < 1 || e.left > left_size_ || e.right < 1 || e.right > right_size_) {
            throw PreconditionViolated("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                                       ") out of bounds");
        }
        left_adj_[static_cast<std::size_t>(e.left)].push_back(e.right);
        right_adj_[static_cast<std::size_t>(e.right)].push_back(e.left);
    }
    for (auto& a : right_adj_) {
        std::sort(a.begin(), a.end());
    }
}

const std::vector<int>& BipartiteGraph::neighbors(Side side, int v) const {
    if (v < 1 || v > size(side)) {
        throw PreconditionViolated("vertex out of range");
    }
    return side == Side::Left ? left_adj_[static_cast<std::size_t>(v)] : right_adj_[static_cast<std::size_t>(v)];
}

bool BipartiteGraph::has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    std::set<int> lefts;
    std::set<int> rights;
    for (const auto& e : edges_) {
        if (!lefts.insert(e.left).second || !rights.insert(e.right).second) {
            throw PreconditionViolated("edges (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                                       ") and another share an endpoint; not a matching");
        }
    }
}

bool Matching::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Matching::covers(Side side, int v) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return endpoint(e, side) == v; });
}

NoSaturation::NoSaturation(Side side, std::vector<int> witness, std::vector<int> neighborhood)
    : Error(std::string("Hall's condition fails on the ") + side_name(side) + " side: Z=" + join(witness) +
            " has only " + std::to_string(neighborhood.size()) + " neighbors " + join(neighborhood)),
      side_(side), witness_(std::move(witness)), neighborhood_(std::move(neighborhood)) {}

BipartiteGraph occupancy_graph(const CellSet& cells) {
    std::vector<Edge> edges;
    edges.reserve(cells.size());
    for (const auto& c : cells.cells()) {
        edges.push_back({c.row, c.col});
    }
    return BipartiteGraph(cells.rows(), cells.cols(), std::move(edges));
}

Matching saturating_matching(const BipartiteGraph& g, Side side, std::span<const int> targets) {
    const auto sorted = checked_targets(g, side, targets);
    const Side far = other(side);
    std::vector<int> mate_near(static_cast<std::size_t>(g.size(side)) + 1, 0);
    std::vector<int> mate_far(static_cast<std::size_t>(g.size(far)) + 1, 0);

    for (int root : sorted) {
        std::vector<char> seen_near(mate_near.size(), 0);
        std::vector<char> seen_far(mate_far.size(), 0);

        std::function<bool(int)> augment = [&](int u) -> bool {
            seen_near[static_cast<std::size_t>(u)] = 1;
            const auto& nbrs = g.neighbors(side, u);
            for (int w : nbrs) {
                if (mate_far[static_cast<std::size_t>(w)] == 0 && !seen_far[static_cast<std::size_t>(w)]) {
                    seen_far[static_cast<std::size_t>(w)] = 1;
                    mate_far[static_cast<std::size_t>(w)] = u;
                    mate_near[static_cast<std::size_t>(u)] = w;
                    return true;
                }
            }
            for (int w : nbrs) {
                if (seen_far[static_cast<std::size_t>(w)]) {
                    continue;
                }
                seen_far[static_cast<std::size_t>(w)] = 1;
                if (augment(mate_far[static_cast<std::size_t>(w)])) {
                    mate_far[static_cast<std::size_t>(w)] = u;
                    mate_near[static_cast<std::size_t>(u)] = w;
                    return true;
                }
            }
            return false;
        };

        if (!augment(root)) {
            // Every neighbor of a reached vertex was reached and is matched
            // back into the reached set, so |N(Z)| = |Z| - 1.
            std::vector<int> z;
            std::vector<int> nz;
            for (std::size_t v = 1; v < seen_near.size(); ++v) {
                if (seen_near[v]) {
                    z.push_back(static_cast<int>(v));
                }
            }
            for (std::size_t w = 1; w < seen_far.size(); ++w) {
                if (seen_far[w]) {
                    nz.push_back(static_cast<int>(w));
                }
            }
            throw NoSaturation(side, std::move(z), std::move(nz));
        }
    }

    std::vector<Edge> edges;
    edges.reserve(sorted.size());
    for (int v : sorted) {
        const int w = mate_near[static_cast<std::size_t>(v)];
        edges.push_back(side == Side::Left ? Edge{v, w} : Edge{w, v});
    }
    return Matching(std::move(edges));
}

std::vector<AlternatingComponent> symmetric_difference_components(const Matching& m, const Matching& n) {
    // Each vertex has at most one M-only and one N-only edge.
    std::map<Vertex, Edge> m_at;
    std::map<Vertex, Edge> n_at;
    std::set<Vertex> vertices;
    for (const auto& e : m) {
        if (!n.contains(e)) {
            m_at[{Side::Left, e.left}] = e;
            m_at[{Side::Right, e.right}] = e;
            vertices.insert({Side::Left, e.left});
            vertices.insert({Side::Right, e.right});
        }
    }
    for (const auto& e : n) {
        if (!m.contains(e)) {
            n_at[{Side::Left, e.left}] = e;
            n_at[{Side::Right, e.right}] = e;
            vertices.insert({Side::Left, e.left});
            vertices.insert({Side::Right, e.right});
        }
    }

    auto far_end = [](const Edge& e, const Vertex& from) {
        return from.side == Side::Left ? Vertex{Side::Right, e.right} : Vertex{Side::Left, e.left};
    };

    std::set<Vertex> visited;
    std::vector<AlternatingComponent> out;

    // Walks from `start`, leaving along `first` (M or N), alternating.
    auto walk = [&](Vertex start, Origin first) {
        AlternatingComponent comp;
        comp.vertices.push_back(start);
        visited.insert(start);
        Vertex at = start;
        Origin next = first;
        while (true) {
            const auto& table = next == Origin::M ? m_at : n_at;
            auto it = table.find(at);
            if (it == table.end()) {
                break;
            }
            const Edge e = it->second;
            if (!comp.edges.empty() && comp.edges.back().edge == e) {
                break;
            }
            comp.edges.push_back({e, next});
            at = far_end(e, at);
            comp.vertices.push_back(at);
            if (at == start) {
                comp.is_cycle = true;
                break;
            }
            visited.insert(at);
            next = next == Origin::M ? Origin::N : Origin::M;
        }
        out.push_back(std::move(comp));
    };

    // Paths: ordered scan finds the smaller endpoint of each path first.
    for (const auto& v : vertices) {
        if (visited.count(v)) {
            continue;
        }
        const bool has_m = m_at.count(v) > 0;
        const bool has_n = n_at.count(v) > 0;
        if (has_m != has_n) {
            walk(v, has_m ? Origin::M : Origin::N);
        }
    }
    // What remains lies on cycles; the ordered scan reaches a cycle's
    // smallest left vertex first.
    for (const auto& v : vertices) {
        if (!visited.count(v)) {
            walk(v, Origin::M);
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

Matching merge_matchings(const BipartiteGraph& g, const Matching& m, const Matching& n,
                         std::span<const int> x1_in, std::span<const int> y1_in) {
    const auto x1v = checked_targets(g, Side::Left, x1_in);
    const auto y1v = checked_targets(g, Side::Right, y1_in);
    const std::set<int> x1(x1v.begin(), x1v.end());
    const std::set<int> y1(y1v.begin(), y1v.end());

    for (const auto* mm : {&m, &n}) {
        for (const auto& e : *mm) {
            if (!g.has_edge(e)) {
                throw PreconditionViolated("matching edge (" + std::to_string(e.left) + "," +
                                           std::to_string(e.right) + ") is not in the graph");
            }
        }
    }
    if (m.size() != x1.size() || !std::all_of(x1.begin(), x1.end(), [&](int v) { return m.covers(Side::Left, v); })) {
        throw PreconditionViolated("M must have exactly |X1| edges and cover X1");
    }
    if (n.size() != y1.size() || !std::all_of(y1.begin(), y1.end(), [&](int v) { return n.covers(Side::Right, v); })) {
        throw PreconditionViolated("N must have exactly |Y1| edges and cover Y1");
    }

    auto in_target = [&](const Vertex& v) {
        return v.side == Side::Left ? x1.count(v.index) > 0 : y1.count(v.index) > 0;
    };
    auto require = [](bool cond, const char* what) {
        if (!cond) {
            throw PreconditionViolated(std::string("matching merge: ") + what);
        }
    };

    std::vector<Edge> k;
    for (const auto& e : m) {
        if (n.contains(e)) {
            k.push_back(e);
        }
    }

    for (const auto& comp : symmetric_difference_components(m, n)) {
        if (comp.is_cycle) {
            for (const auto& te : comp.edges) {
                if (te.origin == Origin::M) {
                    k.push_back(te.edge);
                }
            }
            continue;
        }
        const auto& vs = comp.vertices;
        for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
            require(in_target(vs[i]), "interior path vertex outside X1 u Y1");
        }
        // `lead` is the matching of the first edge; its targets live on
        // `lead_side` (M covers X1 from the left, N covers Y1 from the right).
        const Origin lead = comp.edges.front().origin;
        const Side lead_side = lead == Origin::M ? Side::Left : Side::Right;
        const Origin trail = lead == Origin::M ? Origin::N : Origin::M;
        Origin take = lead;
        if (vs.front().side == lead_side) {
            // v2 belongs to the other matching's target set, so v1 must be a lead target.
            require(in_target(vs.front()), "path start is not covered by its leading matching's targets");
            take = lead;
        } else {
            // v2 is a lead target; v1 cannot be a target of the trailing matching.
            require(!in_target(vs.front()), "path start lies in the trailing matching's targets");
            const Vertex& last = vs.back();
            require(in_target(last), "path end lies outside X1 u Y1");
            take = last.side == lead_side ? lead : trail;
        }
        for (const auto& te : comp.edges) {
            if (te.origin == take) {
                k.push_back(te.edge);
            }
        }
    }

    Matching result(std::move(k));
    require(std::all_of(x1.begin(), x1.end(), [&](int v) { return result.covers(Side::Left, v); }),
            "result misses a vertex of X1");
    require(std::all_of(y1.begin(), y1.end(), [&](int v) { return result.covers(Side::Right, v); }),
            "result misses a vertex of Y1");
    return result;
}

} // namespace pls
