#include "sbx/constructions.hpp"

#include <random>
#include <stdexcept>

namespace sbx {

SbcProfile build_h0() {
    return SbcProfile::make(1, 3, {4, 8, 13, 13, 13, 13, 13, 14, 16, 16, 16, 16, 16, 16, 16});
}

SbcProfile build_h0_doubleprime() {
    return SbcProfile::make(1, 2, {3, 5, 9, 14, 14, 14, 14, 14, 15, 17, 17, 17, 17, 17, 17, 17});
}

ClosedGraph build_g0() {
    return ClosedGraph::make(17, {{1, 3}, {2, 5}, {3, 9}, {4, 14}, {9, 15}, {10, 17}});
}

ClosedGraph build_g0t(int t) {
    if (t < 1) throw std::invalid_argument("gluing count must be at least 1");
    ClosedGraph c = build_g0();
    for (int k = 1; k < t; ++k) c = glue(c, build_g0());
    return c;
}

SbcProfile random_sbc(std::uint64_t seed, int nx, const GenParams& params) {
    if (nx < 1) throw std::invalid_argument("need at least one x-vertex");
    if (params.qprime_spread < 0 || params.max_jump < 0)
        throw std::invalid_argument("generator knobs must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> spread(0, params.qprime_spread);
    std::uniform_int_distribution<int> jump(0, params.max_jump);
    for (int attempt = 0; attempt < 64; ++attempt) {
        int qprime = 2 + spread(rng);
        std::vector<int> M(nx);
        int prev = 0;
        for (int i = 0; i < nx; ++i) {
            int floor_i = std::max(qprime, (1 + i) + 1);  // m(q + i) with q = 1
            prev = std::max(floor_i, prev + jump(rng));
            M[i] = prev;
        }
        try {
            return SbcProfile::make(1, qprime, M);
        } catch (const std::invalid_argument&) {
            continue;  // resample; the construction above should never land here
        }
    }
    throw std::runtime_error("profile generator failed to produce a valid instance");
}

}  // namespace sbx
