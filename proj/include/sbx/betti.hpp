#pragma once

#include <set>
#include <utility>
#include <vector>

#include "sbx/families.hpp"
#include "sbx/graph_core.hpp"
#include "sbx/sbc.hpp"

namespace sbx {

// Support of the graded Betti table of R/I for an edge ideal: the set of
// (homological degree i, internal degree j) with a non-vanishing entry,
// i >= 1, plus the derived corner data.
struct BettiSupport {
    std::set<std::pair<int, int>> positions;
    int projdim = 0;  // max i over positions
    int reg = 0;      // max j - i over positions
    std::vector<std::pair<int, int>> extremal;  // corners, i descending
    bool unique_extremal = false;  // (projdim, projdim + reg) present

    friend bool operator==(const BettiSupport&, const BettiSupport&) = default;
};

// Builds the derived fields from a position set.
BettiSupport finalize_support(std::set<std::pair<int, int>> positions);

// Corners of the support: positions (i, j) such that no other position (k, l)
// has k >= i and l - k >= j - i, sorted by i descending. In Betti-table
// coordinates (column i, row j - i) these are the positions with nothing
// weakly to the lower right.
std::vector<std::pair<int, int>> extremal_corners(const BettiSupport& s);

// True iff sigma is exactly coverable by |sigma| - i pairwise disjoint
// complete bipartite subgraphs whose witness edges form an induced matching
// (which decides non-vanishing of the multigraded entry at (i, sigma) for
// weakly chordal g). Rejects non-weakly-chordal hosts.
bool family_nonvanishing(const SimpleGraph& g, const std::vector<int>& sigma, int i);

// Full support by exhaustive family enumeration over a weakly chordal graph.
// Desk scale; cross-checks reg against the exact maximum induced matching.
BettiSupport betti_support_weakly_chordal(const SimpleGraph& g);

// Fast-path support of a profile: for each block count r' up to the greedy
// matching size, the column is {(j - r', j) : 2 r' <= j <= d_r' + r'} with
// d_r' from d_stratified; projdim cross-checked against d_recursive.
BettiSupport betti_support_profile(const SbcProfile& p);

// dims[k] = dim of the reduced homology in degree k - 1 (over the prime
// field of the given characteristic) of the complex of independent sets of
// g restricted to sigma, for k = 0..|sigma|. Exact modular elimination.
std::vector<int> reduced_homology_dims(const SimpleGraph& g, const std::vector<int>& sigma,
                                       int field_char);

// Multigraded Betti number at (i, sigma) of R/I(g) as a homology dimension:
// the reduced homology in degree |sigma| - i - 1 of the independence complex
// of g[sigma]. Non-prime characteristics are rejected.
int hochster_betti(const SimpleGraph& g, int i, const std::vector<int>& sigma,
                   int field_char);

// Full support assembled from the homology formula alone, one vertex subset
// at a time — independent of the family machinery, so the two can
// cross-check each other. Exhaustive over subsets; capped at 16 vertices.
BettiSupport betti_support_hochster(const SimpleGraph& g, int field_char);

// Support of a disjoint union from the parts' supports: Minkowski sum of the
// position sets, each augmented with (0, 0); projdim and reg add.
BettiSupport support_of_disjoint_union(const std::vector<BettiSupport>& parts);

}  // namespace sbx
