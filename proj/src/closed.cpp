#include "sbx/closed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "sbx/families.hpp"

namespace sbx {

ClosedGraph ClosedGraph::make(int n, std::vector<std::pair<int, int>> cliques) {
    if (n < 2) throw std::invalid_argument("closed graph with at least two vertices");
    if (cliques.empty()) throw std::invalid_argument("closed graph needs at least one clique");
    for (auto& [a, b] : cliques) {
        if (a < 1 || b > n || a >= b)
            throw std::invalid_argument("clique interval [" + std::to_string(a) + "," +
                                        std::to_string(b) + "] is out of range or degenerate");
    }
    for (std::size_t k = 1; k < cliques.size(); ++k) {
        if (cliques[k].first <= cliques[k - 1].first || cliques[k].second <= cliques[k - 1].second)
            throw std::invalid_argument("clique intervals must increase strictly in both endpoints");
        if (cliques[k].first > cliques[k - 1].second)
            throw std::invalid_argument("consecutive clique intervals must overlap");
    }
    if (cliques.front().first != 1 || cliques.back().second != n)
        throw std::invalid_argument("clique intervals must cover [1, n]");
    ClosedGraph c;
    c.n = n;
    c.cliques = std::move(cliques);
    return c;
}

SimpleGraph closed_to_simple(const ClosedGraph& c) {
    std::set<std::pair<int, int>> edges;
    for (auto& [a, b] : c.cliques)
        for (int i = a; i < b; ++i)
            for (int j = i + 1; j <= b; ++j) edges.insert({i, j});
    return SimpleGraph::make(c.n, {edges.begin(), edges.end()});
}

ClosedCheck is_closed_labeling(const SimpleGraph& g) {
    // Neighbor lists once; everything below is label arithmetic.
    std::vector<std::vector<int>> nbr(g.n + 1);
    for (auto& [i, j] : g.edges) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }

    // Exchange condition: two edges sharing their smaller endpoint force an
    // edge between the larger ones, and symmetrically for the larger end.
    for (int v = 1; v <= g.n; ++v) {
        std::vector<int> lo, hi;
        for (int u : nbr[v]) (u < v ? lo : hi).push_back(u);
        for (std::size_t s = 0; s < hi.size(); ++s)
            for (std::size_t t = s + 1; t < hi.size(); ++t)
                if (!g.has_edge(hi[s], hi[t])) return {};
        for (std::size_t s = 0; s < lo.size(); ++s)
            for (std::size_t t = s + 1; t < lo.size(); ++t)
                if (!g.has_edge(lo[s], lo[t])) return {};
    }

    // Maximal cliques are intervals exactly when every edge {i, j} spans a
    // clique on [i, j]: any maximal clique then equals the interval between
    // its least and greatest vertex.
    auto interval_clique = [&](int a, int b) {
        for (int i = a; i < b; ++i)
            for (int j = i + 1; j <= b; ++j)
                if (!g.has_edge(i, j)) return false;
        return true;
    };
    for (auto& [i, j] : g.edges)
        if (!interval_clique(i, j)) return {};

    // Extract the maximal interval cliques: extend each left endpoint as far
    // right as the clique property holds, then drop contained intervals.
    ClosedCheck res;
    res.ok = true;
    int best_right = 0;
    for (int a = 1; a <= g.n; ++a) {
        int b = a;
        while (b + 1 <= g.n) {
            bool all = true;
            for (int k = a; k <= b && all; ++k) all = g.has_edge(k, b + 1);
            if (!all) break;
            ++b;
        }
        if (b > a && b > best_right) res.cliques.push_back({a, b});
        if (b == a && a > best_right) res.cliques.push_back({a, a});  // isolated vertex
        best_right = std::max(best_right, b);
    }
    return res;
}

InitialGraph initial_graph(const ClosedGraph& c) {
    std::set<std::pair<int, int>> edges;
    for (auto& [a, b] : c.cliques)
        for (int i = a; i < b; ++i)
            for (int j = i + 1; j <= b; ++j) edges.insert({i, j});
    std::vector<int> xs, ys;
    for (int i = 1; i < c.n; ++i) xs.push_back(i);
    for (int j = 2; j <= c.n; ++j) ys.push_back(j);
    auto g = BipartiteGraph::make(xs, ys, {edges.begin(), edges.end()});
    auto check = check_strongly_biconvex(g);
    if (!check.ok())
        throw std::logic_error("initial graph of a closed graph failed the biconvexity check: " +
                               check.violation->condition);
    return {std::move(g), *check.profile};
}

ClosedGraph glue(const ClosedGraph& c1, const ClosedGraph& c2) {
    int shift = c1.n - 1;
    std::vector<std::pair<int, int>> cl = c1.cliques;
    for (auto& [a, b] : c2.cliques) cl.push_back({a + shift, b + shift});
    return ClosedGraph::make(c1.n + c2.n - 1, std::move(cl));
}

BinomialReport binomial_invariants(const ClosedGraph& c) {
    BinomialReport rep;
    rep.initial = betti_support_profile(initial_graph(c).profile);
    rep.reg = rep.initial.reg;
    rep.projdim = rep.initial.projdim;
    for (int i = 1; i <= rep.projdim; ++i) {
        for (int j = i; j <= i + rep.reg; ++j) {
            if (rep.initial.positions.count({i, j})) continue;
            bool dominates = false;
            for (auto& [pi, pj] : rep.initial.positions)
                if (pi <= i && pj <= j) {
                    dominates = true;
                    break;
                }
            if (dominates) rep.vanishing_certificates.insert({i, j});
        }
    }
    rep.unique_extremal_verdict =
        rep.vanishing_certificates.count({rep.projdim, rep.projdim + rep.reg}) ? "not_unique"
                                                                               : "not_determined";
    return rep;
}

}  // namespace sbx
