#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "sbx/constructions.hpp"
#include "sbx/families.hpp"

using namespace sbx;

static SbcProfile fig1() { return SbcProfile::make(1, 3, {4, 5, 5, 6, 6}); }

static Block block(std::vector<int> xs, std::vector<int> ys, std::pair<int, int> w) {
    Block b;
    b.x_labels = std::move(xs);
    b.y_labels = std::move(ys);
    b.witness = w;
    return b;
}

static DisjointFamily h0_three_block_family() {
    DisjointFamily fam;
    fam.blocks.push_back(block({2}, {3, 4, 5, 6, 7, 8}, {2, 3}));
    fam.blocks.push_back(block({3, 4, 5, 6, 7, 8}, {9, 10, 11, 12, 13}, {3, 9}));
    fam.blocks.push_back(block({9, 10, 11, 12, 13}, {14, 15, 16}, {9, 14}));
    return fam;
}

TEST_CASE("d_value is vertices minus block count") {
    DisjointFamily single;
    single.blocks.push_back(block({1}, {3}, {1, 3}));
    CHECK(d_value(single) == 1);
    CHECK(d_value(h0_three_block_family()) == 23);
    CHECK(d_value(DisjointFamily{}) == 0);
}

TEST_CASE("family validation finds the first broken condition") {
    auto g = fig1().to_graph();

    DisjointFamily ok;
    ok.blocks.push_back(block({1, 2}, {3, 4}, {1, 3}));
    CHECK(validate_family(g, ok).ok);
    CHECK(validate_family(fig1(), ok).ok);

    DisjointFamily incomplete;
    incomplete.blocks.push_back(block({1, 2}, {3, 4, 5}, {1, 3}));  // x1 y5 missing
    CHECK(validate_family(g, incomplete).condition == "block_not_complete");

    DisjointFamily outside;
    outside.blocks.push_back(block({1, 2}, {3, 4}, {1, 4}));
    outside.blocks.front().witness = {2, 5};  // not inside the block
    CHECK(validate_family(g, outside).condition == "witness_outside_block");

    DisjointFamily overlap;
    overlap.blocks.push_back(block({1}, {3, 4}, {1, 3}));
    overlap.blocks.push_back(block({2}, {4, 5}, {2, 5}));
    CHECK(validate_family(g, overlap).condition == "blocks_overlap");

    DisjointFamily touching;  // witnesses x1 y3 and x2 y5 joined by edge x2 y3
    touching.blocks.push_back(block({1}, {3}, {1, 3}));
    touching.blocks.push_back(block({2}, {5}, {2, 5}));
    CHECK(validate_family(g, touching).condition == "witnesses_not_induced");

    // blocks that mention labels absent from the host are rejected outright
    CHECK_THROWS_AS(validate_family(fig1(), h0_three_block_family()), std::invalid_argument);
}

TEST_CASE("the three block example validates on its own profile") {
    CHECK(validate_family(build_h0(), h0_three_block_family()).ok);
}

TEST_CASE("brute force d on tiny graphs") {
    auto edge = BipartiteGraph::make({1}, {2}, {{1, 2}});
    auto [d1, f1] = brute_force_d(edge);
    CHECK(d1 == 1);
    CHECK(f1.blocks.size() == 1);

    auto path = BipartiteGraph::make({1, 2}, {3, 4}, {{1, 3}, {2, 3}, {2, 4}});
    CHECK(brute_force_d(path).first == 2);

    auto k22 = BipartiteGraph::make({1, 2}, {3, 4}, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(brute_force_d(k22).first == 3);
    CHECK(!brute_force_d(k22, 2).has_value());  // no two 3-disjoint blocks inside K22

    CHECK(brute_force_d(fig1().to_graph()).first == 6);
}

TEST_CASE("d recursion pins") {
    CHECK(d_recursive(SbcProfile::make(1, 2, {2})) == 1);
    CHECK(d_recursive(fig1()) == 6);
    CHECK(d_recursive(build_h0()) == 23);
    CHECK(d_recursive(build_h0_doubleprime()) == 25);
    CHECK(d_recursive(SbcProfile::none()) == 0);
}

TEST_CASE("stratified d pins") {
    auto h0 = build_h0();
    auto at = [&](const SbcProfile& p, int r) {
        auto res = d_stratified(p, r);
        REQUIRE(res.has_value());
        auto chk = validate_family(p, res->second);
        REQUIRE(chk.ok);
        CHECK(static_cast<int>(res->second.blocks.size()) == r);
        CHECK(d_value(res->second) == res->first);
        return res->first;
    };
    CHECK(at(h0, 1) == 10);
    CHECK(at(h0, 2) == 17);
    CHECK(at(h0, 3) == 23);
    CHECK(at(h0, 4) == 21);
    CHECK(!d_stratified(h0, 5).has_value());
    CHECK(!d_stratified(h0, 0).has_value());

    auto p = fig1();
    CHECK(at(p, 1) == 3);
    CHECK(at(p, 2) == 5);
    CHECK(at(p, 3) == 6);
    CHECK(!d_stratified(p, 4).has_value());

    auto single = SbcProfile::make(1, 2, {2});
    CHECK(at(single, 1) == 1);
    CHECK(!d_stratified(single, 2).has_value());
}

TEST_CASE("stratified maxima against the oracle on random profiles") {
    int checked = 0;
    for (std::uint64_t seed = 100; seed < 5000 && checked < 60; ++seed) {
        auto p = random_sbc(seed, 1 + static_cast<int>(seed % 5));
        auto g = p.to_graph();
        if (g.vertex_count() > 10) continue;
        ++checked;
        auto [bd, bfam] = brute_force_d(g);
        CHECK(d_recursive(p) == bd);
        long long best = -1;
        for (int r = 1; r <= p.x_count() + 1; ++r) {
            auto fast = d_stratified(p, r);
            auto slow = brute_force_d(g, r);
            CHECK(fast.has_value() == slow.has_value());
            if (fast && slow) {
                CHECK(fast->first == slow->first);
                best = std::max(best, fast->first);
            }
        }
        CHECK(best == bd);
    }
    CHECK(checked == 60);
}

TEST_CASE("d bounds relative to matching size and vertex count") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto p = random_sbc(seed, 1 + static_cast<int>(seed % 8));
        long long d = d_recursive(p);
        CHECK(d >= greedy_induced_matching(p).size());
        CHECK(d <= p.x_count() + p.y_count() - 1);
    }
}

TEST_CASE("ordered family predicate") {
    auto p = fig1();
    DisjointFamily fam;
    fam.blocks.push_back(block({1, 2}, {3, 4}, {1, 3}));
    fam.blocks.push_back(block({4, 5}, {6}, {4, 6}));
    CHECK(is_ordered(p, fam));

    // swap breaks the label progression
    std::swap(fam.blocks[0], fam.blocks[1]);
    CHECK(!is_ordered(p, fam));
    std::swap(fam.blocks[0], fam.blocks[1]);

    // gap in a side breaks the interval requirement
    DisjointFamily gap;
    gap.blocks.push_back(block({1}, {3}, {1, 3}));
    gap.blocks.push_back(block({3, 5}, {6}, {3, 6}));  // x4 missing and x3 y6 not an edge
    CHECK(!is_ordered(p, gap));
}

TEST_CASE("normalization produces ordered families without losing value") {
    auto p = fig1();
    DisjointFamily fam;
    fam.blocks.push_back(block({1}, {3}, {1, 3}));
    fam.blocks.push_back(block({4}, {6}, {4, 6}));
    auto norm = normalize_ordered(p, fam);
    CHECK(norm.blocks.size() == 2);
    CHECK(is_ordered(p, norm));
    CHECK(d_value(norm) >= 2);
    CHECK(validate_family(p, norm).ok);

    // an already ordered family is a fixed point up to value
    auto again = normalize_ordered(p, norm);
    CHECK(d_value(again) == d_value(norm));
    CHECK(again.blocks.size() == norm.blocks.size());

    // single blocks become their interval hulls
    DisjointFamily single;
    single.blocks.push_back(block({2}, {4}, {2, 4}));
    auto hull = normalize_ordered(p, single);
    CHECK(hull.blocks.size() == 1);
    CHECK(is_ordered(p, hull));
    CHECK(d_value(hull) >= 1);

    DisjointFamily bogus;
    bogus.blocks.push_back(block({1}, {6}, {1, 6}));  // x1 y6 is not an edge
    CHECK_THROWS_AS(normalize_ordered(p, bogus), std::invalid_argument);
}

TEST_CASE("normalization over random brute force families") {
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 2000 && runs < 40; ++seed) {
        auto p = random_sbc(seed, 1 + static_cast<int>(seed % 4));
        auto g = p.to_graph();
        if (g.vertex_count() > 10) continue;
        int inm = greedy_induced_matching(p).size();
        for (int r = 1; r <= inm; ++r) {
            auto res = brute_force_d(g, r);
            if (!res) continue;
            ++runs;
            auto norm = normalize_ordered(p, res->second);
            CHECK(validate_family(p, norm).ok);
            CHECK(is_ordered(p, norm));
            CHECK(norm.blocks.size() == res->second.blocks.size());
            CHECK(d_value(norm) >= d_value(res->second));
        }
    }
    CHECK(runs >= 40);
}

TEST_CASE("replacing the first block by the corner block") {
    auto p = fig1();
    auto best = d_stratified(p, 3);
    REQUIRE(best.has_value());
    REQUIRE(best->first == d_recursive(p));
    auto rep = replace_first_with_corner_block(p, best->second);
    CHECK(rep.blocks.front() == corner_block(p));
    CHECK(is_ordered(p, rep));
    CHECK(d_value(rep) == best->first);

    // a 1-block family on a complete bipartite profile maps to itself
    auto k22 = SbcProfile::make(1, 3, {4, 4});
    DisjointFamily full;
    full.blocks.push_back(block({1, 2}, {3, 4}, {1, 3}));
    auto same = replace_first_with_corner_block(k22, full);
    CHECK(same.blocks.front() == full.blocks.front());

    // value below the maximum violates the hypothesis
    DisjointFamily small;
    small.blocks.push_back(block({1, 2}, {3, 4}, {1, 3}));
    CHECK(d_value(small) < d_recursive(p));
    CHECK_THROWS_AS(replace_first_with_corner_block(p, small), std::invalid_argument);

    // so does a first block that misses the least x-label
    auto strat2 = d_stratified(prefix_delete(p, 1, 2), 1);
    REQUIRE(strat2.has_value());
    CHECK_THROWS_AS(replace_first_with_corner_block(p, strat2->second), std::invalid_argument);
}

TEST_CASE("random block shrink keeps families valid") {
    std::mt19937_64 rng(7);
    int shrunk = 0;
    for (std::uint64_t seed = 0; seed < 400 && shrunk < 150; ++seed) {
        auto p = random_sbc(seed, 2 + static_cast<int>(seed % 5));
        auto g = p.to_graph();
        if (g.vertex_count() > 12) continue;
        auto res = brute_force_d(g);
        DisjointFamily fam = res.second;
        for (int step = 0; step < 20; ++step) {
            std::vector<std::pair<int, bool>> options;  // block index, shrink x side?
            for (std::size_t b = 0; b < fam.blocks.size(); ++b) {
                if (fam.blocks[b].x_labels.size() >= 2) options.push_back({(int)b, true});
                if (fam.blocks[b].y_labels.size() >= 2) options.push_back({(int)b, false});
            }
            if (options.empty()) break;
            auto [bi, on_x] = options[rng() % options.size()];
            Block& blk = fam.blocks[bi];
            auto& side = on_x ? blk.x_labels : blk.y_labels;
            int keep = on_x ? blk.witness.first : blk.witness.second;
            std::vector<int> removable;
            for (int v : side)
                if (v != keep) removable.push_back(v);
            int gone = removable[rng() % removable.size()];
            side.erase(std::find(side.begin(), side.end(), gone));
            CHECK(validate_family(g, fam).ok);
            ++shrunk;
        }
    }
    CHECK(shrunk > 100);
}
