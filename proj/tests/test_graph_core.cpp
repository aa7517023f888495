#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sbx/graph_core.hpp"

using namespace sbx;

TEST_CASE("bipartite graph basics") {
    auto g = BipartiteGraph::make({1, 2}, {3, 4}, {{1, 3}, {2, 3}, {2, 4}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 3));
    CHECK(!g.has_edge(1, 4));
    CHECK(g.neighbors_of_x(2) == std::vector<int>{3, 4});
    CHECK(g.neighbors_of_y(3) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(BipartiteGraph::make({1}, {2}, {{1, 9}}), std::invalid_argument);
}

TEST_CASE("simple graph normalizes edges") {
    auto g = SimpleGraph::make(4, {{3, 1}, {2, 4}});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(4, 2));
    CHECK(g.edges.size() == 2);
    CHECK_THROWS_AS(SimpleGraph::make(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("induced subgraphs keep only internal edges") {
    auto g = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}});
    auto h = induced_subgraph(g, {1, 2, 4});
    CHECK(h.edges.size() == 1);
    CHECK(h.has_edge(1, 2));

    auto b = BipartiteGraph::make({1, 2}, {3, 4}, {{1, 3}, {2, 3}, {2, 4}});
    auto hb = induced_subgraph(b, {vx(1), vy(3), vy(4)});
    CHECK(hb.edge_count() == 1);
}

TEST_CASE("induced matching predicate") {
    auto g = SimpleGraph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(is_induced_matching(g, Matching{{{1, 2}, {4, 5}}}));
    CHECK(!is_induced_matching(g, Matching{{{1, 2}, {3, 4}}}));  // 2-3 joins them
    CHECK_THROWS_AS(is_induced_matching(g, Matching{{{1, 3}}}), std::invalid_argument);
}

TEST_CASE("brute force induced matching sizes") {
    auto p4 = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(brute_force_inm(p4).first == 1);
    auto p5 = SimpleGraph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(brute_force_inm(p5).first == 2);
    auto c4 = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(brute_force_inm(c4).first == 1);

    // the matching itself must verify
    auto [sz, m] = brute_force_inm(p5);
    CHECK(is_induced_matching(p5, m));
    CHECK(static_cast<int>(m.edges.size()) == sz);

    auto fig1 = BipartiteGraph::make(
        {1, 2, 3, 4, 5}, {3, 4, 5, 6},
        {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(brute_force_inm(fig1).first == 3);
}

TEST_CASE("weak chordality detects long holes on both sides") {
    auto c4 = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(is_weakly_chordal(c4));
    auto c5 = SimpleGraph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(!is_weakly_chordal(c5));
    auto c6 = SimpleGraph::make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK(!is_weakly_chordal(c6));
    CHECK(!is_weakly_chordal(complement(c6)));  // complement side of the definition
    auto p5 = SimpleGraph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(is_weakly_chordal(p5));
}

TEST_CASE("connected components") {
    auto g = SimpleGraph::make(5, {{1, 2}, {3, 4}});
    CHECK(connected_components(g).size() == 3);
    auto full = SimpleGraph::make(3, {{1, 2}, {2, 3}});
    CHECK(connected_components(full).size() == 1);

    auto b = BipartiteGraph::make({1, 2}, {3, 4}, {{1, 3}});
    CHECK(connected_components(b).size() == 3);
}

TEST_CASE("bipartite to simple relabeling keeps adjacency") {
    auto b = BipartiteGraph::make({1, 2}, {3, 4}, {{1, 3}, {2, 3}, {2, 4}});
    std::map<Vertex, int> labels;
    auto s = simple_from_bipartite(b, &labels);
    CHECK(s.n == 4);
    CHECK(s.edges.size() == 3);
    CHECK(s.has_edge(labels[vx(1)], labels[vy(3)]));
    CHECK(!s.has_edge(labels[vx(1)], labels[vx(2)]));
}
