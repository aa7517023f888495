#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbx/graph_core.hpp"
#include "sbx/sbc.hpp"

namespace sbx {

// A set of pairwise vertex-disjoint complete bipartite blocks whose witness
// edges form an induced matching of the host graph.
struct DisjointFamily {
    std::vector<Block> blocks;
    friend bool operator==(const DisjointFamily&, const DisjointFamily&) = default;
};

struct FamilyCheck {
    bool ok = true;
    std::string condition;  // set when !ok
    int block = -1;         // index of the offending block
    int other_block = -1;   // second index for pairwise conditions, else -1
};

// Checks, in this order: each block is complete bipartite in the host and
// contains its witness; blocks are pairwise vertex-disjoint; the witness
// edges form an induced matching. First violation is reported. Malformed
// blocks (empty/unsorted/duplicated sides, labels missing from the host)
// throw std::invalid_argument.
FamilyCheck validate_family(const BipartiteGraph& host, const DisjointFamily& fam);
FamilyCheck validate_family(const SbcProfile& p, const DisjointFamily& fam);

// d of a family: total vertex count minus the number of blocks.
long long d_value(const DisjointFamily& fam);

// Exact maximum of d over all valid families, with a witness family, by
// enumerating complete bipartite blocks and backtracking over disjoint
// selections and witness choices. Desk scale only. The r-restricted variant
// maximizes over families with exactly r blocks (nullopt if none exist).
std::pair<long long, DisjointFamily> brute_force_d(const BipartiteGraph& g);
std::optional<std::pair<long long, DisjointFamily>> brute_force_d(const BipartiteGraph& g,
                                                                  int r);

// d of the profile by the corner-block recursion
//   d(p) = max( d(p - corner block) + |corner block| - 1, d(p - x_q) ),
// both branches being prefix deletions; memoized on the (q, q') of the
// subprofile, evaluated iteratively. d(empty) = 0.
long long d_recursive(const SbcProfile& p);

// Best d over families with exactly r blocks, plus an optimal witness family,
// by dynamic programming over block corners (a, c) with m(a) <= c <= M(a):
// a corner's block extends maximally to [a, min(c-1, f)] x [c, M(a)], and
// consecutive corners need c_i <= a_{i+1} and c_{i+1} > M(a_i). Returns
// nullopt when no r-block family exists (r outside [1, matching size]).
// The witness is the lexicographically least optimal corner sequence; it is
// re-validated before returning (std::logic_error on internal mismatch).
std::optional<std::pair<long long, DisjointFamily>> d_stratified(const SbcProfile& p, int r);

// True iff the family is ordered over p: blocks strictly increase on both
// sides (max labels of an earlier block below min labels of a later one),
// every side is a label interval, and the corner edges (min x, min y) of the
// blocks form an induced matching.
bool is_ordered(const SbcProfile& p, const DisjointFamily& fam);

// Rebuilds a valid family into an ordered one with the same number of blocks
// and d not smaller: repeatedly hull-fills the block holding the least x
// label and strips it off, then migrates vertices adjacent to each corner
// from the following block and re-fills. Output is re-validated
// (std::logic_error on internal mismatch); invalid input families are
// rejected with std::invalid_argument.
DisjointFamily normalize_ordered(const SbcProfile& p, const DisjointFamily& fam);

// For an ordered family attaining d_value = d_recursive(p) whose first block
// contains x_q, swaps the first block for corner_block(p). Preconditions are
// enforced with std::invalid_argument; the result is re-validated as ordered
// with d unchanged (std::logic_error on mismatch).
DisjointFamily replace_first_with_corner_block(const SbcProfile& p, const DisjointFamily& fam);

}  // namespace sbx
