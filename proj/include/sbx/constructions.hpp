#pragma once

#include <cstdint>

#include "sbx/closed.hpp"
#include "sbx/sbc.hpp"

namespace sbx {

// 15 x-vertices, y-labels 3..16; the running example whose greedy matching
// has size 4 and whose top two stratified d-values differ.
SbcProfile build_h0();

// 16 x-vertices, y-labels 2..17; equals the initial graph of build_g0().
SbcProfile build_h0_doubleprime();

// Closed graph on 17 vertices with six interval cliques.
ClosedGraph build_g0();

// t-fold gluing of build_g0(); 16t + 1 vertices. t < 1 is rejected.
ClosedGraph build_g0t(int t);

// Knobs for the random profile generator. qprime_spread bounds how far the
// first y-label can sit above 2; max_jump bounds the per-step growth of the
// right-end sequence M (larger jumps make wider, shallower neighborhoods).
struct GenParams {
    int qprime_spread = 4;
    int max_jump = 3;
};

// Deterministic valid profile with nx x-vertices drawn from the seed.
SbcProfile random_sbc(std::uint64_t seed, int nx, const GenParams& params = {});

}  // namespace sbx
