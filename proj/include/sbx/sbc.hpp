#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbx/graph_core.hpp"

namespace sbx {

// Interval profile of a strongly biconvex bipartite graph.
//
// Vertices are x_q..x_f and y_q'..y_g with q < q' and f < g. Each x_i is
// adjacent to exactly the interval y_{m(i)}..y_{M(i)} where
// m(i) = max(q', i + 1), M is stored as M[i - q], M is nondecreasing,
// m(i) <= M(i) for all i, and M(f) = g.
struct SbcProfile {
    int q = 0;
    int f = 0;
    int qprime = 0;
    int g = 0;
    std::vector<int> M;  // M[i - q] = M(i), size f - q + 1

    bool empty() const { return M.empty(); }
    int m(int i) const { return std::max(qprime, i + 1); }
    int M_at(int i) const { return M[i - q]; }
    int x_count() const { return f - q + 1; }
    int y_count() const { return g - qprime + 1; }

    // Validates the shape conditions above; throws std::invalid_argument.
    // f and g are derived as q + M.size() - 1 and M.back().
    static SbcProfile make(int q, int qprime, std::vector<int> M);

    // The empty profile (zero vertices).
    static SbcProfile none() { return SbcProfile{}; }

    BipartiteGraph to_graph() const;

    friend bool operator==(const SbcProfile&, const SbcProfile&) = default;
};

struct SbcViolation {
    std::string condition;  // short machine-readable tag
    std::string witness;    // human-readable detail
};

struct SbcCheckResult {
    std::optional<SbcProfile> profile;     // set iff the graph qualifies
    std::optional<SbcViolation> violation; // set otherwise
    bool ok() const { return profile.has_value(); }
};

// Decides whether g is a strongly biconvex graph under its given labeling and
// extracts the interval profile if so. Violations are reported in a fixed
// order: isolated vertex, then x-contiguity, then per-x interval shape, then
// monotonicity of the interval right ends.
SbcCheckResult check_strongly_biconvex(const BipartiteGraph& g);

struct GreedyTrace {
    std::vector<std::pair<int, int>> pairs;  // (i, j) = (x label, y label)
    int size() const { return static_cast<int>(pairs.size()); }
};

// Maximum induced matching of a profile in one forward scan:
// the first pair is (q, q'), and after a pair (i, j) the next pair is
// (i', M(i) + 1) where i' is the least t in [j, f] with M(t) > M(i).
GreedyTrace greedy_induced_matching(const SbcProfile& p);

// Deletes x_{<=a} and y_{<=b}, drops any y left without neighbors, and
// re-normalizes to a (possibly empty) profile. Requires a >= q - 1 and
// b >= q' - 1 (the -1 cases delete nothing on that side).
SbcProfile prefix_delete(const SbcProfile& p, int a, int b);

// A complete bipartite block inside a bipartite host, given by its x and y
// label sets together with a designated witness edge inside the block.
struct Block {
    std::vector<int> x_labels;  // sorted
    std::vector<int> y_labels;  // sorted
    std::pair<int, int> witness;

    int min_x() const { return x_labels.front(); }
    int max_x() const { return x_labels.back(); }
    int min_y() const { return y_labels.front(); }
    int max_y() const { return y_labels.back(); }
    int size() const { return static_cast<int>(x_labels.size() + y_labels.size()); }

    friend bool operator==(const Block&, const Block&) = default;
};

// The block induced on N(x_q) ∪ N(y_q'): X = [q, min(f, q'-1)],
// Y = [q', M(q)], witness (q, q'). Every edge meeting x_q or y_q' has both
// endpoints in it.
Block corner_block(const SbcProfile& p);

// Largest x label adjacent to y_j: min(f, j - 1). Requires q' <= j <= g.
int max_y_neighbor(const SbcProfile& p, int j);

// The same shape with every label raised by delta (q + delta must stay >= 1).
SbcProfile shift_profile(const SbcProfile& p, int delta);

}  // namespace sbx
