#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sbx {

enum class Side { X, Y };

// A vertex is a (side, label) pair so that x_i and y_i with the same integer
// label can coexist in one bipartite graph.
struct Vertex {
    Side side;
    int label;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex vx(int label) { return Vertex{Side::X, label}; }
inline Vertex vy(int label) { return Vertex{Side::Y, label}; }

std::string to_string(const Vertex& v);  // "x5", "y7"

// Bipartite graph with explicit vertex lists. Labels are positive integers,
// not required to be contiguous; adjacency lists are sorted and duplicate-free.
struct BipartiteGraph {
    std::vector<int> xs;                  // sorted
    std::vector<int> ys;                  // sorted
    std::map<int, std::vector<int>> adj;  // x label -> sorted y labels (entry per x)

    // Validates: sorted unique vertex lists, edges reference known labels,
    // no duplicate edges.
    static BipartiteGraph make(std::vector<int> xs, std::vector<int> ys,
                               std::vector<std::pair<int, int>> edges);

    bool has_x(int x) const;
    bool has_y(int y) const;
    bool has_edge(int x, int y) const;
    const std::vector<int>& neighbors_of_x(int x) const;
    std::vector<int> neighbors_of_y(int y) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (x, y) pairs
    std::size_t edge_count() const;
    std::size_t vertex_count() const { return xs.size() + ys.size(); }

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

// Simple graph on vertices {1..n}.
struct SimpleGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // normalized (i, j) with i < j

    // Validates: endpoints in range, no loops, no duplicate pairs.
    static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);

    bool has_edge(int i, int j) const;
    std::vector<int> neighbors(int v) const;
    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// A matching is a list of edges: (x label, y label) pairs for bipartite
// graphs, plain endpoint pairs for simple graphs.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::set<Vertex>& keep);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::set<int>& keep);

// True iff the pairs are pairwise vertex-disjoint and no edge of g joins the
// endpoints of two distinct pairs. Pairs that are not edges of g, or that
// mention unknown vertices, are rejected with std::invalid_argument.
bool is_induced_matching(const BipartiteGraph& g, const Matching& m);
bool is_induced_matching(const SimpleGraph& g, const Matching& m);

// Exact maximum induced matching by branch and bound over the edge list.
std::pair<int, Matching> brute_force_inm(const BipartiteGraph& g);
std::pair<int, Matching> brute_force_inm(const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);

// True iff neither g nor its complement has an induced cycle of length >= 5.
bool is_weakly_chordal(const SimpleGraph& g);

std::vector<std::set<Vertex>> connected_components(const BipartiteGraph& g);
std::vector<std::set<int>> connected_components(const SimpleGraph& g);

// Relabels x vertices then y vertices as 1..|X|+|Y|, preserving order within
// each side. Optionally reports the label map.
SimpleGraph simple_from_bipartite(const BipartiteGraph& g,
                                  std::map<Vertex, int>* label_map = nullptr);

}  // namespace sbx
