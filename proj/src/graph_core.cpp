#include "sbx/graph_core.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sbx {

std::string to_string(const Vertex& v) {
    return (v.side == Side::X ? "x" : "y") + std::to_string(v.label);
}

static void check_sorted_unique(const std::vector<int>& labels, const char* what) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] <= 0)
            throw std::invalid_argument(std::string(what) + " labels must be positive");
        if (i > 0 && labels[i] <= labels[i - 1])
            throw std::invalid_argument(std::string(what) + " labels must be strictly increasing");
    }
}

BipartiteGraph BipartiteGraph::make(std::vector<int> xs, std::vector<int> ys,
                                    std::vector<std::pair<int, int>> edges) {
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    check_sorted_unique(xs, "x");
    check_sorted_unique(ys, "y");
    BipartiteGraph g;
    g.xs = std::move(xs);
    g.ys = std::move(ys);
    for (int x : g.xs) g.adj[x];  // ensure an entry per x
    for (auto [x, y] : edges) {
        if (!std::binary_search(g.xs.begin(), g.xs.end(), x))
            throw std::invalid_argument("edge references unknown x" + std::to_string(x));
        if (!std::binary_search(g.ys.begin(), g.ys.end(), y))
            throw std::invalid_argument("edge references unknown y" + std::to_string(y));
        g.adj[x].push_back(y);
    }
    for (auto& [x, ns] : g.adj) {
        std::sort(ns.begin(), ns.end());
        if (std::adjacent_find(ns.begin(), ns.end()) != ns.end())
            throw std::invalid_argument("duplicate edge at x" + std::to_string(x));
    }
    return g;
}

bool BipartiteGraph::has_x(int x) const {
    return std::binary_search(xs.begin(), xs.end(), x);
}

bool BipartiteGraph::has_y(int y) const {
    return std::binary_search(ys.begin(), ys.end(), y);
}

bool BipartiteGraph::has_edge(int x, int y) const {
    auto it = adj.find(x);
    if (it == adj.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), y);
}

const std::vector<int>& BipartiteGraph::neighbors_of_x(int x) const {
    auto it = adj.find(x);
    if (it == adj.end()) throw std::invalid_argument("unknown x" + std::to_string(x));
    return it->second;
}

std::vector<int> BipartiteGraph::neighbors_of_y(int y) const {
    if (!has_y(y)) throw std::invalid_argument("unknown y" + std::to_string(y));
    std::vector<int> out;
    for (const auto& [x, ns] : adj)
        if (std::binary_search(ns.begin(), ns.end(), y)) out.push_back(x);
    return out;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [x, ns] : adj)
        for (int y : ns) out.emplace_back(x, y);
    return out;
}

std::size_t BipartiteGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& [x, ns] : adj) c += ns.size();
    return c;
}

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    SimpleGraph g;
    g.n = n;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loops are not allowed");
        auto e = std::minmax(a, b);
        if (!g.edges.insert({e.first, e.second}).second)
            throw std::invalid_argument("duplicate edge");
    }
    return g;
}

bool SimpleGraph::has_edge(int i, int j) const {
    auto e = std::minmax(i, j);
    return edges.count({e.first, e.second}) > 0;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n; ++u)
        if (u != v && has_edge(u, v)) out.push_back(u);
    return out;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::set<Vertex>& keep) {
    std::vector<int> xs, ys;
    for (const auto& v : keep) {
        if (v.side == Side::X) {
            if (!g.has_x(v.label)) throw std::invalid_argument("unknown " + to_string(v));
            xs.push_back(v.label);
        } else {
            if (!g.has_y(v.label)) throw std::invalid_argument("unknown " + to_string(v));
            ys.push_back(v.label);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int x : xs)
        for (int y : g.neighbors_of_x(x))
            if (keep.count(vy(y))) edges.emplace_back(x, y);
    return BipartiteGraph::make(std::move(xs), std::move(ys), std::move(edges));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::set<int>& keep) {
    // keeps original labels by building on n and dropping edges that leave the set
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges)
        if (keep.count(a) && keep.count(b)) edges.emplace_back(a, b);
    SimpleGraph h = SimpleGraph::make(g.n, std::move(edges));
    return h;
}

bool is_induced_matching(const BipartiteGraph& g, const Matching& m) {
    std::set<int> used_x, used_y;
    for (auto [x, y] : m.edges) {
        if (!g.has_edge(x, y))
            throw std::invalid_argument("matching pair (x" + std::to_string(x) + ", y" +
                                        std::to_string(y) + ") is not an edge");
        if (!used_x.insert(x).second || !used_y.insert(y).second) return false;
    }
    for (std::size_t a = 0; a < m.edges.size(); ++a)
        for (std::size_t b = a + 1; b < m.edges.size(); ++b) {
            auto [xa, ya] = m.edges[a];
            auto [xb, yb] = m.edges[b];
            if (g.has_edge(xa, yb) || g.has_edge(xb, ya)) return false;
        }
    return true;
}

bool is_induced_matching(const SimpleGraph& g, const Matching& m) {
    std::set<int> used;
    for (auto [a, b] : m.edges) {
        if (!g.has_edge(a, b))
            throw std::invalid_argument("matching pair (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ") is not an edge");
        if (!used.insert(a).second || !used.insert(b).second) return false;
    }
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
            auto [a, b] = m.edges[i];
            auto [c, d] = m.edges[j];
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
                return false;
        }
    return true;
}

namespace {

// Shared branch-and-bound core over an edge conflict structure. conflicts[e]
// holds the edges that cannot coexist with e in an induced matching (shares a
// vertex, or some edge of the graph joins their endpoints). Edges are assumed
// ordered by increasing conflict degree for better pruning.
struct InmSolver {
    int ne;
    std::vector<std::vector<std::uint64_t>> conflicts;  // bitset rows
    std::vector<int> best_set, cur_set;
    int best = 0;

    int words() const { return (ne + 63) / 64; }

    static int popcount_masked(const std::vector<std::uint64_t>& mask) {
        int c = 0;
        for (auto w : mask) c += __builtin_popcountll(w);
        return c;
    }

    void run() {
        std::vector<std::uint64_t> all(words(), ~0ull);
        if (ne % 64) all.back() = (~0ull) >> (64 - ne % 64);
        if (ne == 0) return;
        // greedy seed gives an initial lower bound
        {
            std::vector<std::uint64_t> cand = all;
            std::vector<int> chosen;
            for (int e = 0; e < ne; ++e) {
                if (!(cand[e / 64] >> (e % 64) & 1)) continue;
                chosen.push_back(e);
                for (int w = 0; w < words(); ++w) cand[w] &= ~conflicts[e][w];
                cand[e / 64] &= ~(1ull << (e % 64));
            }
            best = static_cast<int>(chosen.size());
            best_set = chosen;
        }
        dfs(all);
    }

    void dfs(std::vector<std::uint64_t> cand) {
        int bound = static_cast<int>(cur_set.size()) + popcount_masked(cand);
        if (bound <= best) return;
        int e = -1;
        for (int w = 0; w < words(); ++w)
            if (cand[w]) {
                e = w * 64 + __builtin_ctzll(cand[w]);
                break;
            }
        if (e < 0) {
            if (static_cast<int>(cur_set.size()) > best) {
                best = static_cast<int>(cur_set.size());
                best_set = cur_set;
            }
            return;
        }
        // include e
        auto with = cand;
        with[e / 64] &= ~(1ull << (e % 64));
        for (int w = 0; w < words(); ++w) with[w] &= ~conflicts[e][w];
        cur_set.push_back(e);
        dfs(std::move(with));
        cur_set.pop_back();
        // exclude e
        cand[e / 64] &= ~(1ull << (e % 64));
        dfs(std::move(cand));
    }
};

std::pair<int, Matching> solve_inm(const std::vector<std::pair<int, int>>& edge_list,
                                   const std::vector<std::vector<int>>& raw_conflicts) {
    int ne = static_cast<int>(edge_list.size());
    // order edges by conflict degree (fewest conflicts first explores likely
    // members early, most conflicts first prunes harder; the latter wins here)
    std::vector<int> order(ne);
    for (int i = 0; i < ne; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return raw_conflicts[a].size() > raw_conflicts[b].size();
    });
    std::vector<int> pos(ne);
    for (int i = 0; i < ne; ++i) pos[order[i]] = i;

    InmSolver solver;
    solver.ne = ne;
    solver.conflicts.assign(ne, std::vector<std::uint64_t>(solver.words(), 0));
    for (int e = 0; e < ne; ++e)
        for (int f : raw_conflicts[e]) {
            int a = pos[e], b = pos[f];
            solver.conflicts[a][b / 64] |= 1ull << (b % 64);
        }
    solver.run();

    Matching m;
    for (int e : solver.best_set) m.edges.push_back(edge_list[order[e]]);
    std::sort(m.edges.begin(), m.edges.end());
    return {solver.best, m};
}

}  // namespace

std::pair<int, Matching> brute_force_inm(const BipartiteGraph& g) {
    auto edge_list = g.edges();
    int ne = static_cast<int>(edge_list.size());
    std::vector<std::vector<int>> conflicts(ne);
    for (int a = 0; a < ne; ++a)
        for (int b = a + 1; b < ne; ++b) {
            auto [xa, ya] = edge_list[a];
            auto [xb, yb] = edge_list[b];
            bool clash = xa == xb || ya == yb || g.has_edge(xa, yb) || g.has_edge(xb, ya);
            if (clash) {
                conflicts[a].push_back(b);
                conflicts[b].push_back(a);
            }
        }
    return solve_inm(edge_list, conflicts);
}

std::pair<int, Matching> brute_force_inm(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> edge_list(g.edges.begin(), g.edges.end());
    int ne = static_cast<int>(edge_list.size());
    std::vector<std::vector<int>> conflicts(ne);
    for (int a = 0; a < ne; ++a)
        for (int b = a + 1; b < ne; ++b) {
            auto [u1, v1] = edge_list[a];
            auto [u2, v2] = edge_list[b];
            bool clash = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 ||
                         g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) ||
                         g.has_edge(v1, v2);
            if (clash) {
                conflicts[a].push_back(b);
                conflicts[b].push_back(a);
            }
        }
    return solve_inm(edge_list, conflicts);
}

SimpleGraph complement(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b)
            if (!g.has_edge(a, b)) edges.emplace_back(a, b);
    return SimpleGraph::make(g.n, std::move(edges));
}

namespace {

// Detects an induced cycle of length >= 5 in a graph given as bitmask rows.
// Paths are anchored at their minimum vertex v; each extension w must see only
// the last path vertex among the path, and a closing edge back to v is only
// accepted when w sees exactly {last, v} and the path is long enough.
bool has_long_induced_cycle(const std::vector<std::uint64_t>& adj, int n) {
    std::vector<int> path;
    std::vector<std::uint64_t> stack_masks;
    // iterative DFS over (path, mask) via explicit recursion
    struct Frame {
        std::uint64_t candidates;
    };
    for (int v = 0; v < n; ++v) {
        // path starts v -> u with u > v
        std::uint64_t starts = adj[v] & ~((1ull << (v + 1)) - 1);
        while (starts) {
            int u = __builtin_ctzll(starts);
            starts &= starts - 1;
            // DFS with explicit stack of candidate sets
            std::vector<int> p{v, u};
            std::uint64_t mask = (1ull << v) | (1ull << u);
            std::vector<std::uint64_t> frames;
            auto extensions = [&](int last) {
                // vertices > v adjacent to last, not on path, seeing only last among path
                std::uint64_t cand = adj[last] & ~mask & ~((1ull << v) - 1) & ~(1ull << v);
                std::uint64_t ok = 0;
                while (cand) {
                    int w = __builtin_ctzll(cand);
                    cand &= cand - 1;
                    std::uint64_t seen = adj[w] & mask;
                    if (seen == (1ull << last)) ok |= 1ull << w;
                }
                return ok;
            };
            auto closes_cycle = [&](int last) {
                if (p.size() < 4) return false;  // need >= 5 total with the closer
                std::uint64_t cand = adj[last] & adj[v] & ~mask & ~((1ull << (v + 1)) - 1);
                while (cand) {
                    int w = __builtin_ctzll(cand);
                    cand &= cand - 1;
                    std::uint64_t seen = adj[w] & mask;
                    if (seen == ((1ull << last) | (1ull << v))) return true;
                }
                return false;
            };
            frames.push_back(extensions(u));
            while (!frames.empty()) {
                if (closes_cycle(p.back())) return true;
                if (frames.back() == 0) {
                    frames.pop_back();
                    mask &= ~(1ull << p.back());
                    p.pop_back();
                    continue;
                }
                int w = __builtin_ctzll(frames.back());
                frames.back() &= frames.back() - 1;
                p.push_back(w);
                mask |= 1ull << w;
                frames.push_back(extensions(w));
            }
        }
    }
    return false;
}

std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& g) {
    std::vector<std::uint64_t> adj(g.n, 0);
    for (auto [a, b] : g.edges) {
        adj[a - 1] |= 1ull << (b - 1);
        adj[b - 1] |= 1ull << (a - 1);
    }
    return adj;
}

}  // namespace

bool is_weakly_chordal(const SimpleGraph& g) {
    if (g.n > 64) throw std::invalid_argument("weak chordality check limited to 64 vertices");
    if (has_long_induced_cycle(adjacency_masks(g), g.n)) return false;
    SimpleGraph co = complement(g);
    return !has_long_induced_cycle(adjacency_masks(co), co.n);
}

std::vector<std::set<Vertex>> connected_components(const BipartiteGraph& g) {
    std::set<Vertex> unseen;
    for (int x : g.xs) unseen.insert(vx(x));
    for (int y : g.ys) unseen.insert(vy(y));
    std::vector<std::set<Vertex>> out;
    while (!unseen.empty()) {
        std::set<Vertex> comp;
        std::deque<Vertex> queue{*unseen.begin()};
        unseen.erase(unseen.begin());
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.insert(v);
            std::vector<Vertex> nbrs;
            if (v.side == Side::X)
                for (int y : g.neighbors_of_x(v.label)) nbrs.push_back(vy(y));
            else
                for (int x : g.neighbors_of_y(v.label)) nbrs.push_back(vx(x));
            for (const auto& u : nbrs)
                if (unseen.erase(u)) queue.push_back(u);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::set<int>> connected_components(const SimpleGraph& g) {
    std::set<int> unseen;
    for (int v = 1; v <= g.n; ++v) unseen.insert(v);
    std::vector<std::set<int>> out;
    while (!unseen.empty()) {
        std::set<int> comp;
        std::deque<int> queue{*unseen.begin()};
        unseen.erase(unseen.begin());
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (int u : g.neighbors(v))
                if (unseen.erase(u)) queue.push_back(u);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

SimpleGraph simple_from_bipartite(const BipartiteGraph& g, std::map<Vertex, int>* label_map) {
    std::map<Vertex, int> ids;
    int next = 1;
    for (int x : g.xs) ids[vx(x)] = next++;
    for (int y : g.ys) ids[vy(y)] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : g.edges()) edges.emplace_back(ids[vx(x)], ids[vy(y)]);
    if (label_map) *label_map = ids;
    return SimpleGraph::make(next - 1, std::move(edges));
}

}  // namespace sbx
