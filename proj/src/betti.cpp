#include "sbx/betti.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace sbx {

BettiSupport finalize_support(std::set<std::pair<int, int>> positions) {
    for (auto [i, j] : positions)
        if (i < 1 || j < i) throw std::invalid_argument("position outside i >= 1, j >= i");
    BettiSupport s;
    s.positions = std::move(positions);
    if (s.positions.empty()) {
        // zero ideal: only the implicit unit in degree (0, 0) remains
        s.unique_extremal = true;
        return s;
    }
    for (auto [i, j] : s.positions) {
        s.projdim = std::max(s.projdim, i);
        s.reg = std::max(s.reg, j - i);
    }
    s.extremal = extremal_corners(s);
    s.unique_extremal = s.positions.count({s.projdim, s.projdim + s.reg}) > 0;
    return s;
}

std::vector<std::pair<int, int>> extremal_corners(const BettiSupport& s) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : s.positions) {
        bool dominated = false;
        for (auto [k, l] : s.positions) {
            if (std::make_pair(k, l) == std::make_pair(i, j)) continue;
            if (k >= i && l - k >= j - i) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.emplace_back(i, j);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// family machinery on general (weakly chordal) graphs, bitmask based
// ---------------------------------------------------------------------------

namespace {

struct GBlock {
    std::uint32_t s, t;  // the two sides; min vertex of s u t lies in s
    int size;
};

std::vector<std::uint32_t> mask_adjacency(const SimpleGraph& g) {
    if (g.n > 30) throw std::invalid_argument("family search limited to 30 vertices");
    std::vector<std::uint32_t> adj(g.n, 0);
    for (auto [a, b] : g.edges) {
        adj[a - 1] |= 1u << (b - 1);
        adj[b - 1] |= 1u << (a - 1);
    }
    return adj;
}

// All complete bipartite subgraphs inside `allowed`: vertex-disjoint side
// pairs (S, T) with every S-T pair an edge, canonicalized by putting the
// least vertex into S. Sorted by (least vertex, masks) for determinism.
std::vector<GBlock> complete_bipartite_blocks(const std::vector<std::uint32_t>& adj,
                                              std::uint32_t allowed) {
    std::vector<GBlock> out;
    // iterate nonempty S below; common = allowed ∩ ∩_{v in S} adj[v]
    for (std::uint32_t s = allowed; s; s = (s - 1) & allowed) {
        std::uint32_t common = allowed & ~s;
        for (std::uint32_t w = s; w; w &= w - 1) common &= adj[__builtin_ctz(w)];
        // T keeps every vertex above min(S) so the least vertex stays in S
        common &= ~((2u << __builtin_ctz(s)) - 1);
        for (std::uint32_t t = common; t; t = (t - 1) & common)
            out.push_back({s, t, __builtin_popcount(s) + __builtin_popcount(t)});
    }
    std::sort(out.begin(), out.end(), [](const GBlock& a, const GBlock& b) {
        int ma = __builtin_ctz(a.s), mb = __builtin_ctz(b.s);
        return std::tie(ma, a.s, a.t) < std::tie(mb, b.s, b.t);
    });
    return out;
}

// Witness edges of an induced matching may not see each other at all.
bool witness_compatible(const std::vector<std::uint32_t>& adj, int ws, int wt,
                        const std::vector<std::pair<int, int>>& chosen) {
    for (auto [a, b] : chosen) {
        std::uint32_t pair_mask = (1u << a) | (1u << b);
        if ((adj[ws] & pair_mask) || (adj[wt] & pair_mask)) return false;
    }
    return true;
}

// Collects every achievable (block count, total vertex count) over valid
// families of the graph (all vertex sets, not exact covers).
void collect_family_shapes(const std::vector<std::uint32_t>& adj,
                           const std::vector<GBlock>& blocks, std::size_t from,
                           std::uint32_t used, std::vector<std::pair<int, int>>& witnesses,
                           int total, std::set<std::pair<int, int>>& shapes) {
    for (std::size_t i = from; i < blocks.size(); ++i) {
        const GBlock& b = blocks[i];
        if ((b.s | b.t) & used) continue;
        for (std::uint32_t sm = b.s; sm; sm &= sm - 1) {
            int ws = __builtin_ctz(sm);
            for (std::uint32_t tm = b.t; tm; tm &= tm - 1) {
                int wt = __builtin_ctz(tm);
                if (!witness_compatible(adj, ws, wt, witnesses)) continue;
                witnesses.emplace_back(ws, wt);
                shapes.emplace(static_cast<int>(witnesses.size()), total + b.size);
                collect_family_shapes(adj, blocks, i + 1, used | b.s | b.t, witnesses,
                                      total + b.size, shapes);
                witnesses.pop_back();
            }
        }
    }
}

// Exact cover of `target` by exactly r disjoint blocks with an induced
// witness matching.
bool exact_cover_family(const std::vector<std::uint32_t>& adj,
                        const std::vector<GBlock>& blocks, std::uint32_t target,
                        std::uint32_t covered, std::vector<std::pair<int, int>>& witnesses,
                        int r) {
    if (covered == target) return static_cast<int>(witnesses.size()) == r;
    if (static_cast<int>(witnesses.size()) >= r) return false;
    int blocks_left = r - static_cast<int>(witnesses.size());
    int rest = __builtin_popcount(target & ~covered);
    if (rest < 2 * blocks_left) return false;
    int v = __builtin_ctz(target & ~covered);  // lowest uncovered vertex
    for (const GBlock& b : blocks) {
        if (!((b.s | b.t) & (1u << v))) continue;
        if ((b.s | b.t) & covered) continue;
        for (std::uint32_t sm = b.s; sm; sm &= sm - 1) {
            int ws = __builtin_ctz(sm);
            for (std::uint32_t tm = b.t; tm; tm &= tm - 1) {
                int wt = __builtin_ctz(tm);
                if (!witness_compatible(adj, ws, wt, witnesses)) continue;
                witnesses.emplace_back(ws, wt);
                if (exact_cover_family(adj, blocks, target, covered | b.s | b.t, witnesses,
                                       r))
                    return true;
                witnesses.pop_back();
            }
        }
    }
    return false;
}

std::uint32_t sigma_mask(const SimpleGraph& g, const std::vector<int>& sigma) {
    std::uint32_t mask = 0;
    for (int v : sigma) {
        if (v < 1 || v > g.n) throw std::invalid_argument("sigma vertex out of range");
        std::uint32_t bit = 1u << (v - 1);
        if (mask & bit) throw std::invalid_argument("sigma vertex repeated");
        mask |= bit;
    }
    return mask;
}

}  // namespace

bool family_nonvanishing(const SimpleGraph& g, const std::vector<int>& sigma, int i) {
    if (!is_weakly_chordal(g))
        throw std::invalid_argument("family characterization requires a weakly chordal graph");
    std::uint32_t target = sigma_mask(g, sigma);
    int r = static_cast<int>(sigma.size()) - i;
    if (target == 0) return r == 0;
    if (r < 1 || 2 * r > static_cast<int>(sigma.size())) return false;
    auto adj = mask_adjacency(g);
    auto blocks = complete_bipartite_blocks(adj, target);
    std::vector<std::pair<int, int>> witnesses;
    return exact_cover_family(adj, blocks, target, 0, witnesses, r);
}

BettiSupport betti_support_weakly_chordal(const SimpleGraph& g) {
    if (g.n > 16)
        throw std::invalid_argument("exhaustive support search limited to 16 vertices");
    if (!is_weakly_chordal(g))
        throw std::invalid_argument("family characterization requires a weakly chordal graph");
    auto adj = mask_adjacency(g);
    std::uint32_t all = g.n == 0 ? 0 : (g.n == 32 ? ~0u : (1u << g.n) - 1);
    auto blocks = complete_bipartite_blocks(adj, all);
    std::set<std::pair<int, int>> shapes;  // (r, total vertices)
    std::vector<std::pair<int, int>> witnesses;
    collect_family_shapes(adj, blocks, 0, 0, witnesses, 0, shapes);
    std::set<std::pair<int, int>> positions;
    for (auto [r, total] : shapes) positions.emplace(total - r, total);
    BettiSupport s = finalize_support(std::move(positions));
    if (s.reg != brute_force_inm(g).first)
        throw std::logic_error("support width disagrees with the maximum induced matching");
    return s;
}

BettiSupport betti_support_profile(const SbcProfile& p) {
    std::set<std::pair<int, int>> positions;
    int inm = greedy_induced_matching(p).size();
    long long dmax = 0;
    for (int r = 1; r <= inm; ++r) {
        auto dr = d_stratified(p, r);
        if (!dr)
            throw std::logic_error("no " + std::to_string(r) +
                                   "-block family below the matching size");
        dmax = std::max(dmax, dr->first);
        for (long long j = 2 * r; j <= dr->first + r; ++j)
            positions.emplace(static_cast<int>(j) - r, static_cast<int>(j));
    }
    BettiSupport s = finalize_support(std::move(positions));
    if (!p.empty() && s.projdim != d_recursive(p))
        throw std::logic_error("column table contradicts the depth recursion");
    if (s.reg != inm) throw std::logic_error("support width disagrees with the matching size");
    return s;
}

// ---------------------------------------------------------------------------
// independence-complex homology
// ---------------------------------------------------------------------------

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int matrix_rank_mod_p(std::vector<std::vector<int>>& m, int p) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        // normalize the pivot row
        int inv = 1;
        for (int e = ((m[rank][c] % p) + p) % p, k = p - 2; k; k >>= 1) {
            if (k & 1) inv = inv * e % p;
            e = e * e % p;
        }
        for (int cc = c; cc < cols; ++cc)
            m[rank][cc] = (((m[rank][cc] % p) * inv) % p + p) % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int factor = ((m[r][c] % p) + p) % p;
            if (!factor) continue;
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - factor * m[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<int> reduced_homology_dims(const SimpleGraph& g, const std::vector<int>& sigma,
                                       int field_char) {
    if (!is_prime(field_char))
        throw std::invalid_argument("homology coefficients need a prime characteristic");
    if (field_char > 46337)  // keeps p*p inside int during elimination
        throw std::invalid_argument("characteristic too large for exact elimination");
    std::vector<int> verts = sigma;
    std::sort(verts.begin(), verts.end());
    sigma_mask(g, verts);  // validates range and duplicates
    int n = static_cast<int>(verts.size());
    if (n > 16) throw std::invalid_argument("homology computation limited to 16 vertices");

    // independent subsets of g[sigma], grouped by cardinality
    std::vector<std::uint32_t> adj(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.has_edge(verts[a], verts[b])) {
                adj[a] |= 1u << b;
                adj[b] |= 1u << a;
            }
    std::vector<std::vector<std::uint32_t>> faces(n + 1);
    std::vector<std::map<std::uint32_t, int>> index(n + 1);
    for (std::uint32_t f = 0; f < (1u << n); ++f) {
        bool ok = true;
        for (std::uint32_t w = f; ok && w; w &= w - 1)
            if (adj[__builtin_ctz(w)] & f) ok = false;
        if (!ok) continue;
        int k = __builtin_popcount(f);
        index[k][f] = static_cast<int>(faces[k].size());
        faces[k].push_back(f);
    }

    // rank of each boundary map C_k -> C_{k-1}; C_0 is spanned by the empty face
    std::vector<int> rank(n + 2, 0);
    for (int k = 1; k <= n; ++k) {
        if (faces[k].empty()) break;
        std::vector<std::vector<int>> m(faces[k - 1].size(),
                                        std::vector<int>(faces[k].size(), 0));
        for (std::size_t col = 0; col < faces[k].size(); ++col) {
            std::uint32_t f = faces[k][col];
            int sign = 1, t = 0;
            for (std::uint32_t w = f; w; w &= w - 1, ++t) {
                std::uint32_t sub = f & ~(w & -w);
                m[index[k - 1].at(sub)][col] = sign;
                sign = -sign;
            }
        }
        rank[k] = matrix_rank_mod_p(m, field_char);
    }

    std::vector<int> dims(n + 1, 0);
    for (int k = 0; k <= n; ++k)
        dims[k] = static_cast<int>(faces[k].size()) - rank[k] - rank[k + 1];
    return dims;
}

int hochster_betti(const SimpleGraph& g, int i, const std::vector<int>& sigma,
                   int field_char) {
    int k = static_cast<int>(sigma.size()) - i;
    if (k < 0 || k > static_cast<int>(sigma.size())) return 0;
    return reduced_homology_dims(g, sigma, field_char)[k];
}

BettiSupport betti_support_hochster(const SimpleGraph& g, int field_char) {
    if (g.n > 16)
        throw std::invalid_argument("homology support sweep is capped at 16 vertices");
    std::set<std::pair<int, int>> positions;
    std::vector<int> sigma;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        sigma.clear();
        for (int v = 1; v <= g.n; ++v)
            if (mask & (1u << (v - 1))) sigma.push_back(v);
        int sz = static_cast<int>(sigma.size());
        auto dims = reduced_homology_dims(g, sigma, field_char);
        for (int k = 0; k < sz; ++k)  // k = sz gives i = 0, impossible off the unit
            if (dims[k] > 0) positions.insert({sz - k, sz});
    }
    return finalize_support(std::move(positions));
}

BettiSupport support_of_disjoint_union(const std::vector<BettiSupport>& parts) {
    std::set<std::pair<int, int>> acc{{0, 0}};
    for (const BettiSupport& part : parts) {
        std::set<std::pair<int, int>> next;
        for (auto [ai, aj] : acc) {
            next.emplace(ai, aj);  // this factor contributes (0, 0)
            for (auto [bi, bj] : part.positions) next.emplace(ai + bi, aj + bj);
        }
        acc = std::move(next);
    }
    acc.erase({0, 0});
    return finalize_support(std::move(acc));
}

}  // namespace sbx
