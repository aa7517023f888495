#include "sbx/sbc.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbx {

SbcProfile SbcProfile::make(int q, int qprime, std::vector<int> M) {
    if (M.empty()) throw std::invalid_argument("profile needs at least one x vertex");
    SbcProfile p;
    p.q = q;
    p.qprime = qprime;
    p.f = q + static_cast<int>(M.size()) - 1;
    p.g = M.back();
    p.M = std::move(M);
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (!(q < qprime)) throw std::invalid_argument("q < q' required");
    if (!(p.f < p.g)) throw std::invalid_argument("f < g required");
    for (int i = p.q; i <= p.f; ++i) {
        if (i > p.q && p.M_at(i) < p.M_at(i - 1))
            throw std::invalid_argument("M must be nondecreasing at i=" + std::to_string(i));
        if (p.M_at(i) < p.m(i))
            throw std::invalid_argument("empty neighborhood interval at x" + std::to_string(i));
    }
    return p;
}

BipartiteGraph SbcProfile::to_graph() const {
    std::vector<int> xs, ys;
    std::vector<std::pair<int, int>> edges;
    for (int i = q; i <= f; ++i) xs.push_back(i);
    for (int j = qprime; j <= g; ++j) ys.push_back(j);
    for (int i = q; i <= f; ++i)
        for (int j = m(i); j <= M_at(i); ++j) edges.emplace_back(i, j);
    return BipartiteGraph::make(std::move(xs), std::move(ys), std::move(edges));
}

SbcCheckResult check_strongly_biconvex(const BipartiteGraph& g) {
    auto fail = [](std::string cond, std::string wit) {
        return SbcCheckResult{std::nullopt, SbcViolation{std::move(cond), std::move(wit)}};
    };
    if (g.xs.empty() || g.ys.empty())
        return fail("isolated_vertex", "graph has an empty side");
    for (int x : g.xs)
        if (g.neighbors_of_x(x).empty())
            return fail("isolated_vertex", "x" + std::to_string(x) + " has no neighbors");
    {
        std::set<int> covered;
        for (const auto& [x, ns] : g.adj)
            for (int y : ns) covered.insert(y);
        for (int y : g.ys)
            if (!covered.count(y))
                return fail("isolated_vertex", "y" + std::to_string(y) + " has no neighbors");
    }
    for (std::size_t i = 1; i < g.xs.size(); ++i)
        if (g.xs[i] != g.xs[i - 1] + 1)
            return fail("x_labels_not_contiguous",
                        "gap between x" + std::to_string(g.xs[i - 1]) + " and x" +
                            std::to_string(g.xs[i]));
    for (std::size_t i = 1; i < g.ys.size(); ++i)
        if (g.ys[i] != g.ys[i - 1] + 1)
            return fail("y_labels_not_contiguous",
                        "gap between y" + std::to_string(g.ys[i - 1]) + " and y" +
                            std::to_string(g.ys[i]));
    int q = g.xs.front(), f = g.xs.back();
    int qprime = g.ys.front(), gg = g.ys.back();
    if (!(q < qprime))
        return fail("label_offsets", "requires min x label < min y label, got x" +
                                         std::to_string(q) + ", y" + std::to_string(qprime));
    if (!(f < gg))
        return fail("label_offsets", "requires max x label < max y label, got x" +
                                         std::to_string(f) + ", y" + std::to_string(gg));
    std::vector<int> M;
    for (int i = q; i <= f; ++i) {
        const auto& ns = g.neighbors_of_x(i);
        int lo = ns.front(), hi = ns.back();
        if (static_cast<int>(ns.size()) != hi - lo + 1)
            return fail("neighborhood_not_interval",
                        "x" + std::to_string(i) + " has a gap in its neighborhood");
        int want_lo = std::max(qprime, i + 1);
        if (lo != want_lo)
            return fail("neighborhood_left_end",
                        "x" + std::to_string(i) + " starts at y" + std::to_string(lo) +
                            ", expected y" + std::to_string(want_lo));
        M.push_back(hi);
    }
    for (std::size_t i = 1; i < M.size(); ++i)
        if (M[i] < M[i - 1])
            return fail("right_ends_decrease",
                        "M(x" + std::to_string(q + static_cast<int>(i)) + ") < M(x" +
                            std::to_string(q + static_cast<int>(i) - 1) + ")");
    if (M.back() != gg)
        return fail("right_ends_decrease",
                    "last x stops at y" + std::to_string(M.back()) + " but max y is y" +
                        std::to_string(gg));
    return SbcCheckResult{SbcProfile::make(q, qprime, std::move(M)), std::nullopt};
}

GreedyTrace greedy_induced_matching(const SbcProfile& p) {
    GreedyTrace t;
    if (p.empty()) return t;
    int i = p.q, j = p.qprime;
    t.pairs.emplace_back(i, j);
    while (true) {
        int bar = p.M_at(i);
        // least t in [j, f] with M(t) > M(i); M nondecreasing, scan forward
        int next = std::max(j, i + 1);
        while (next <= p.f && p.M_at(next) <= bar) ++next;
        if (next > p.f) break;
        i = next;
        j = bar + 1;
        t.pairs.emplace_back(i, j);
    }
    return t;
}

SbcProfile prefix_delete(const SbcProfile& p, int a, int b) {
    if (p.empty()) return p;
    if (a < p.q - 1 || b < p.qprime - 1)
        throw std::invalid_argument("prefix_delete cut below the label range");
    if (a >= p.f) return SbcProfile::none();
    // least surviving x with a nonempty neighborhood above y_b
    int first = -1;
    for (int i = std::max(p.q, a + 1); i <= p.f; ++i)
        if (p.M_at(i) > b) {
            first = i;
            break;
        }
    if (first < 0) return SbcProfile::none();
    int new_q = first;
    int new_qprime = std::max({b + 1, p.qprime, new_q + 1});
    std::vector<int> M(p.M.begin() + (new_q - p.q), p.M.end());
    return SbcProfile::make(new_q, new_qprime, std::move(M));
}

Block corner_block(const SbcProfile& p) {
    if (p.empty()) throw std::invalid_argument("corner block of an empty profile");
    Block b;
    for (int i = p.q; i <= std::min(p.f, p.qprime - 1); ++i) b.x_labels.push_back(i);
    for (int j = p.qprime; j <= p.M_at(p.q); ++j) b.y_labels.push_back(j);
    b.witness = {p.q, p.qprime};
    return b;
}

int max_y_neighbor(const SbcProfile& p, int j) {
    if (p.empty() || j < p.qprime || j > p.g)
        throw std::invalid_argument("y" + std::to_string(j) + " not in the profile");
    return std::min(p.f, j - 1);
}

SbcProfile shift_profile(const SbcProfile& p, int delta) {
    if (p.empty()) return p;
    std::vector<int> M = p.M;
    for (int& v : M) v += delta;
    return SbcProfile::make(p.q + delta, p.qprime + delta, M);
}

}  // namespace sbx
