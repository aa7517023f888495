#include "sbx/families.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace sbx {

namespace {

bool pedge(const SbcProfile& p, int x, int y) {
    return x >= p.q && x <= p.f && y >= p.m(x) && y <= p.M_at(x);
}

void check_side(const std::vector<int>& side, const char* what) {
    if (side.empty()) throw std::invalid_argument(std::string(what) + " side is empty");
    for (std::size_t i = 1; i < side.size(); ++i)
        if (side[i] <= side[i - 1])
            throw std::invalid_argument(std::string(what) +
                                        " side must be strictly increasing");
}

}  // namespace

FamilyCheck validate_family(const BipartiteGraph& host, const DisjointFamily& fam) {
    int n = static_cast<int>(fam.blocks.size());
    for (int i = 0; i < n; ++i) {
        const Block& b = fam.blocks[i];
        check_side(b.x_labels, "x");
        check_side(b.y_labels, "y");
        for (int x : b.x_labels)
            if (!host.has_x(x))
                throw std::invalid_argument("block references unknown x" + std::to_string(x));
        for (int y : b.y_labels)
            if (!host.has_y(y))
                throw std::invalid_argument("block references unknown y" + std::to_string(y));
        for (int x : b.x_labels)
            for (int y : b.y_labels)
                if (!host.has_edge(x, y)) return {false, "block_not_complete", i, -1};
        bool wx = std::binary_search(b.x_labels.begin(), b.x_labels.end(), b.witness.first);
        bool wy = std::binary_search(b.y_labels.begin(), b.y_labels.end(), b.witness.second);
        if (!wx || !wy) return {false, "witness_outside_block", i, -1};
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Block &a = fam.blocks[i], &b = fam.blocks[j];
            bool clash = false;
            for (int x : a.x_labels)
                clash |= std::binary_search(b.x_labels.begin(), b.x_labels.end(), x);
            for (int y : a.y_labels)
                clash |= std::binary_search(b.y_labels.begin(), b.y_labels.end(), y);
            if (clash) return {false, "blocks_overlap", i, j};
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto [xi, yi] = fam.blocks[i].witness;
            auto [xj, yj] = fam.blocks[j].witness;
            if (host.has_edge(xi, yj) || host.has_edge(xj, yi))
                return {false, "witnesses_not_induced", i, j};
        }
    return {};
}

FamilyCheck validate_family(const SbcProfile& p, const DisjointFamily& fam) {
    return validate_family(p.to_graph(), fam);
}

long long d_value(const DisjointFamily& fam) {
    long long total = 0;
    for (const Block& b : fam.blocks) total += b.size();
    return total - static_cast<long long>(fam.blocks.size());
}

// ---------------------------------------------------------------------------
// brute force
// ---------------------------------------------------------------------------

namespace {

struct BfBlock {
    std::uint32_t xmask, ymask;
    int size;
    int min_bit;
};

struct BfSolver {
    const std::vector<BfBlock>& blocks;
    const std::vector<std::uint32_t>& xadj;  // x bit -> y adjacency mask
    int nx, ny;
    int want_r;  // -1 for unrestricted
    long long best = -1;
    std::vector<int> best_sel, best_wit;  // block indices; witness packed wx*32+wy
    std::vector<int> cur_sel, cur_wit;
    long long cur_d = 0;

    void dfs(std::size_t from, std::uint32_t usedx, std::uint32_t usedy) {
        if (want_r < 0 || static_cast<int>(cur_sel.size()) == want_r) {
            if (cur_d > best && (want_r < 0 || static_cast<int>(cur_sel.size()) == want_r)) {
                best = cur_d;
                best_sel = cur_sel;
                best_wit = cur_wit;
            }
            if (want_r >= 0 && static_cast<int>(cur_sel.size()) == want_r) return;
        }
        int fx = nx - __builtin_popcount(usedx), fy = ny - __builtin_popcount(usedy);
        if (fx == 0 || fy == 0) return;
        long long need = want_r < 0 ? 1 : want_r - static_cast<long long>(cur_sel.size());
        if (cur_d + fx + fy - need <= best) return;
        for (std::size_t i = from; i < blocks.size(); ++i) {
            const BfBlock& b = blocks[i];
            if ((b.xmask & usedx) || (b.ymask & usedy)) continue;
            if (!cur_sel.empty() && b.min_bit <= blocks[cur_sel.back()].min_bit) continue;
            // try every witness compatible with the chosen ones
            for (std::uint32_t xs = b.xmask; xs; xs &= xs - 1) {
                int wx = __builtin_ctz(xs);
                for (std::uint32_t ys = b.ymask; ys; ys &= ys - 1) {
                    int wy = __builtin_ctz(ys);
                    bool ok = true;
                    for (int w : cur_wit) {
                        int px = w / 32, py = w % 32;
                        if ((xadj[wx] >> py & 1) || (xadj[px] >> wy & 1)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    cur_sel.push_back(static_cast<int>(i));
                    cur_wit.push_back(wx * 32 + wy);
                    cur_d += b.size - 1;
                    dfs(i + 1, usedx | b.xmask, usedy | b.ymask);
                    cur_d -= b.size - 1;
                    cur_wit.pop_back();
                    cur_sel.pop_back();
                }
            }
        }
    }
};

std::optional<std::pair<long long, DisjointFamily>> brute_force_core(const BipartiteGraph& g,
                                                                     int want_r) {
    if (g.vertex_count() > 20)
        throw std::invalid_argument("exhaustive d search limited to 20 vertices");
    int nx = static_cast<int>(g.xs.size()), ny = static_cast<int>(g.ys.size());
    std::vector<std::uint32_t> xadj(nx, 0);
    for (int i = 0; i < nx; ++i)
        for (int y : g.neighbors_of_x(g.xs[i])) {
            int j = static_cast<int>(std::lower_bound(g.ys.begin(), g.ys.end(), y) -
                                     g.ys.begin());
            xadj[i] |= 1u << j;
        }
    std::vector<BfBlock> blocks;
    for (std::uint32_t s = 1; s < (1u << nx); ++s) {
        std::uint32_t common = ~0u;
        for (std::uint32_t t = s; t; t &= t - 1) common &= xadj[__builtin_ctz(t)];
        common &= (ny == 32 ? ~0u : (1u << ny) - 1);
        if (!common) continue;
        // all nonempty subsets of the common neighborhood
        for (std::uint32_t t = common; t; t = (t - 1) & common)
            blocks.push_back({s, t, __builtin_popcount(s) + __builtin_popcount(t),
                              __builtin_ctz(s)});
    }
    std::sort(blocks.begin(), blocks.end(), [](const BfBlock& a, const BfBlock& b) {
        return std::tie(a.min_bit, a.xmask, a.ymask) < std::tie(b.min_bit, b.xmask, b.ymask);
    });
    BfSolver solver{blocks, xadj, nx, ny, want_r, -1, {}, {}, {}, {}, 0};
    solver.dfs(0, 0, 0);
    if (want_r >= 0 &&
        (solver.best < 0 || static_cast<int>(solver.best_sel.size()) != want_r))
        return std::nullopt;
    DisjointFamily fam;
    for (std::size_t k = 0; k < solver.best_sel.size(); ++k) {
        const BfBlock& b = blocks[solver.best_sel[k]];
        Block out;
        for (std::uint32_t t = b.xmask; t; t &= t - 1) out.x_labels.push_back(g.xs[__builtin_ctz(t)]);
        for (std::uint32_t t = b.ymask; t; t &= t - 1) out.y_labels.push_back(g.ys[__builtin_ctz(t)]);
        out.witness = {g.xs[solver.best_wit[k] / 32], g.ys[solver.best_wit[k] % 32]};
        fam.blocks.push_back(std::move(out));
    }
    return std::make_pair(solver.best < 0 ? 0LL : solver.best, fam);
}

}  // namespace

std::pair<long long, DisjointFamily> brute_force_d(const BipartiteGraph& g) {
    return *brute_force_core(g, -1);
}

std::optional<std::pair<long long, DisjointFamily>> brute_force_d(const BipartiteGraph& g,
                                                                  int r) {
    if (r < 1) return std::nullopt;
    return brute_force_core(g, r);
}

// ---------------------------------------------------------------------------
// corner-block recursion
// ---------------------------------------------------------------------------

long long d_recursive(const SbcProfile& p0) {
    if (p0.empty()) return 0;
    std::map<std::pair<int, int>, long long> memo;
    auto value_of = [&](const SbcProfile& s, bool& ready) -> long long {
        if (s.empty()) return 0;
        auto it = memo.find({s.q, s.qprime});
        if (it == memo.end()) {
            ready = false;
            return 0;
        }
        return it->second;
    };
    std::vector<SbcProfile> stack{p0};
    while (!stack.empty()) {
        const SbcProfile p = stack.back();
        std::pair<int, int> key{p.q, p.qprime};
        if (memo.count(key)) {
            stack.pop_back();
            continue;
        }
        SbcProfile with_corner = prefix_delete(p, std::min(p.f, p.qprime - 1), p.M_at(p.q));
        SbcProfile without_xq = prefix_delete(p, p.q, p.qprime - 1);
        bool ready = true;
        long long va = value_of(with_corner, ready);
        long long vb = value_of(without_xq, ready);
        if (!ready) {
            if (!with_corner.empty() && !memo.count({with_corner.q, with_corner.qprime}))
                stack.push_back(with_corner);
            if (!without_xq.empty() && !memo.count({without_xq.q, without_xq.qprime}))
                stack.push_back(without_xq);
            continue;  // revisit once the children are memoized
        }
        memo[key] = std::max(va + corner_block(p).size() - 1, vb);
        stack.pop_back();
    }
    return memo.at({p0.q, p0.qprime});
}

// ---------------------------------------------------------------------------
// stratified DP over corners
// ---------------------------------------------------------------------------

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

// maximal block hanging off corner (a, c): [a, min(c-1, f)] x [c, M(a)]
long long corner_value(const SbcProfile& p, int a, int c) {
    return (std::min(c - 1, p.f) - a + 1) + (p.M_at(a) - c + 1) - 1;
}

Block corner_extent(const SbcProfile& p, int a, int c) {
    Block b;
    for (int x = a; x <= std::min(c - 1, p.f); ++x) b.x_labels.push_back(x);
    for (int y = c; y <= p.M_at(a); ++y) b.y_labels.push_back(y);
    b.witness = {a, c};
    return b;
}

}  // namespace

std::optional<std::pair<long long, DisjointFamily>> d_stratified(const SbcProfile& p, int r) {
    if (p.empty() || r < 1) return std::nullopt;
    if (r > p.x_count()) return std::nullopt;  // corners strictly increase in x
    int nx = p.x_count(), ny = p.y_count();
    auto idx = [&](int a, int c) { return (a - p.q) * ny + (c - p.qprime); };

    // level[k][cell] = best total over chains of k blocks starting at that corner
    std::vector<std::vector<long long>> level(r + 1,
                                              std::vector<long long>(nx * ny, kNegInf));
    for (int a = p.q; a <= p.f; ++a)
        for (int c = p.m(a); c <= p.M_at(a); ++c)
            level[1][idx(a, c)] = corner_value(p, a, c);
    std::vector<long long> suffix(nx * ny);
    for (int k = 2; k <= r; ++k) {
        // suffix[a][c] = max level[k-1] over corners (a', c') with a' >= a, c' >= c
        for (int a = p.f; a >= p.q; --a)
            for (int c = p.g; c >= p.qprime; --c) {
                long long v = level[k - 1][idx(a, c)];
                if (a < p.f) v = std::max(v, suffix[idx(a + 1, c)]);
                if (c < p.g) v = std::max(v, suffix[idx(a, c + 1)]);
                suffix[idx(a, c)] = v;
            }
        for (int a = p.q; a <= p.f; ++a)
            for (int c = p.m(a); c <= p.M_at(a); ++c) {
                int na = std::max(c, p.q), nc = p.M_at(a) + 1;
                if (na > p.f || nc > p.g) continue;
                long long rest = suffix[idx(na, nc)];
                if (rest <= kNegInf) continue;
                level[k][idx(a, c)] = corner_value(p, a, c) + rest;
            }
    }

    long long best = kNegInf;
    for (int a = p.q; a <= p.f; ++a)
        for (int c = p.m(a); c <= p.M_at(a); ++c)
            best = std::max(best, level[r][idx(a, c)]);
    if (best <= kNegInf) return std::nullopt;

    // lexicographically least optimal corner sequence
    DisjointFamily fam;
    long long target = best;
    int lo_a = p.q, lo_c = p.qprime;
    for (int k = r; k >= 1; --k) {
        bool found = false;
        for (int a = lo_a; a <= p.f && !found; ++a)
            for (int c = std::max(lo_c, p.m(a)); c <= p.M_at(a) && !found; ++c) {
                if (level[k][idx(a, c)] != target) continue;
                fam.blocks.push_back(corner_extent(p, a, c));
                target -= corner_value(p, a, c);
                lo_a = c;  // next corner: a' >= c, c' > M(a)
                lo_c = p.M_at(a) + 1;
                found = true;
            }
        if (!found) throw std::logic_error("corner chain reconstruction lost its target");
    }

    if (d_value(fam) != best) throw std::logic_error("stratified witness value mismatch");
    FamilyCheck fc = validate_family(p, fam);
    if (!fc.ok)
        throw std::logic_error("stratified witness family invalid: " + fc.condition);
    if (!is_ordered(p, fam)) throw std::logic_error("stratified witness family not ordered");
    return std::make_pair(best, fam);
}

// ---------------------------------------------------------------------------
// ordering predicate and normalization
// ---------------------------------------------------------------------------

bool is_ordered(const SbcProfile& p, const DisjointFamily& fam) {
    for (const Block& b : fam.blocks) {
        check_side(b.x_labels, "x");
        check_side(b.y_labels, "y");
        if (b.max_x() - b.min_x() + 1 != static_cast<int>(b.x_labels.size())) return false;
        if (b.max_y() - b.min_y() + 1 != static_cast<int>(b.y_labels.size())) return false;
        if (!pedge(p, b.min_x(), b.min_y())) return false;
    }
    int n = static_cast<int>(fam.blocks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Block &a = fam.blocks[i], &b = fam.blocks[j];
            if (!(a.max_x() < b.min_x() && a.max_y() < b.min_y())) return false;
            if (pedge(p, a.min_x(), b.min_y()) || pedge(p, b.min_x(), a.min_y()))
                return false;
        }
    return true;
}

namespace {

struct MutBlock {
    std::set<int> xs, ys;
    std::pair<int, int> witness;
};

[[noreturn]] void bad_state(const std::string& what) {
    throw std::logic_error("family normalization reached an impossible state: " + what);
}

// Absorb every label strictly inside the current hull of B1, taking vertices
// away from later blocks where necessary. Interior vertices are adjacent to
// the whole opposite side by monotonicity of the neighborhood ends.
void hull_fill(const SbcProfile& p, MutBlock& b1, std::vector<MutBlock>* donors,
               bool free_only) {
    for (int k = *b1.xs.begin() + 1; k < *b1.xs.rbegin(); ++k) {
        if (b1.xs.count(k)) continue;
        if (donors)
            for (MutBlock& other : *donors)
                if (other.xs.erase(k)) {
                    if (free_only) bad_state("gap fill touched another block");
                    if (other.witness.first == k) bad_state("gap fill stole a witness");
                }
        b1.xs.insert(k);
    }
    for (int k = *b1.ys.begin() + 1; k < *b1.ys.rbegin(); ++k) {
        if (b1.ys.count(k)) continue;
        if (donors)
            for (MutBlock& other : *donors)
                if (other.ys.erase(k)) {
                    if (free_only) bad_state("gap fill touched another block");
                    if (other.witness.second == k) bad_state("gap fill stole a witness");
                }
        b1.ys.insert(k);
    }
    // the filled block must stay complete
    for (int x : b1.xs)
        for (int y : b1.ys)
            if (!pedge(p, x, y)) bad_state("filled block is not complete");
}

}  // namespace

DisjointFamily normalize_ordered(const SbcProfile& p, const DisjointFamily& fam) {
    FamilyCheck fc = validate_family(p, fam);
    if (!fc.ok)
        throw std::invalid_argument("family is invalid (" + fc.condition +
                                    "), cannot normalize");
    long long d_in = d_value(fam);
    std::vector<MutBlock> pending;
    for (const Block& b : fam.blocks) {
        MutBlock m;
        m.xs.insert(b.x_labels.begin(), b.x_labels.end());
        m.ys.insert(b.y_labels.begin(), b.y_labels.end());
        m.witness = b.witness;
        pending.push_back(std::move(m));
    }

    // Pass 1: emit blocks by least x label, absorbing everything inside each
    // emitted block's hull so that both sides become intervals.
    std::vector<MutBlock> chain;
    while (!pending.empty()) {
        std::size_t pick = 0;
        for (std::size_t i = 1; i < pending.size(); ++i)
            if (*pending[i].xs.begin() < *pending[pick].xs.begin()) pick = i;
        MutBlock b1 = std::move(pending[pick]);
        pending.erase(pending.begin() + static_cast<long>(pick));
        hull_fill(p, b1, &pending, false);
        for (const MutBlock& other : pending) {
            if (*other.xs.begin() <= *b1.xs.rbegin()) bad_state("x ranges interleave");
            if (*other.ys.begin() <= *b1.ys.rbegin()) bad_state("y ranges interleave");
        }
        chain.push_back(std::move(b1));
    }

    // Pass 2: left to right, pull the next block's vertices that are adjacent
    // to this block's corner across, re-fill the gaps (now free vertices
    // only), and fix the witness at the corner.
    for (std::size_t i = 0; i < chain.size(); ++i) {
        MutBlock& b1 = chain[i];
        int a = *b1.xs.begin(), c = *b1.ys.begin();
        if (i + 1 < chain.size()) {
            MutBlock& b2 = chain[i + 1];
            std::vector<int> mx, my;
            for (int x : b2.xs)
                if (pedge(p, x, c)) mx.push_back(x);
            for (int y : b2.ys)
                if (pedge(p, a, y)) my.push_back(y);
            if (mx.size() == b2.xs.size()) bad_state("corner pull drained a block's x side");
            if (my.size() == b2.ys.size()) bad_state("corner pull drained a block's y side");
            for (int x : mx) {
                if (b2.witness.first == x) bad_state("corner pull stole a witness");
                b2.xs.erase(x);
                b1.xs.insert(x);
            }
            for (int y : my) {
                if (b2.witness.second == y) bad_state("corner pull stole a witness");
                b2.ys.erase(y);
                b1.ys.insert(y);
            }
            for (std::size_t j = i + 2; j < chain.size(); ++j)
                for (int x : chain[j].xs)
                    if (pedge(p, x, c)) bad_state("corner reaches past the next block");
            for (std::size_t j = i + 2; j < chain.size(); ++j)
                for (int y : chain[j].ys)
                    if (pedge(p, a, y)) bad_state("corner reaches past the next block");
        }
        hull_fill(p, b1, &chain, true);
        b1.witness = {a, c};
    }

    DisjointFamily out;
    for (const MutBlock& m : chain) {
        Block b;
        b.x_labels.assign(m.xs.begin(), m.xs.end());
        b.y_labels.assign(m.ys.begin(), m.ys.end());
        b.witness = m.witness;
        out.blocks.push_back(std::move(b));
    }
    FamilyCheck out_fc = validate_family(p, out);
    if (!out_fc.ok) bad_state("normalized family invalid: " + out_fc.condition);
    if (!is_ordered(p, out)) bad_state("normalized family is not ordered");
    if (out.blocks.size() != fam.blocks.size()) bad_state("block count changed");
    if (d_value(out) < d_in) bad_state("d decreased");
    return out;
}

DisjointFamily replace_first_with_corner_block(const SbcProfile& p,
                                               const DisjointFamily& fam) {
    if (fam.blocks.empty()) throw std::invalid_argument("family is empty");
    FamilyCheck fc = validate_family(p, fam);
    if (!fc.ok) throw std::invalid_argument("family is invalid (" + fc.condition + ")");
    if (!is_ordered(p, fam)) throw std::invalid_argument("family is not ordered");
    const Block& first = fam.blocks.front();
    if (!std::binary_search(first.x_labels.begin(), first.x_labels.end(), p.q))
        throw std::invalid_argument("first block does not contain the least x vertex");
    long long d_in = d_value(fam);
    if (d_in != d_recursive(p))
        throw std::invalid_argument("family does not attain the maximum d");
    DisjointFamily out = fam;
    out.blocks.front() = corner_block(p);
    FamilyCheck out_fc = validate_family(p, out);
    if (!out_fc.ok)
        throw std::logic_error("corner-block replacement broke the family: " +
                               out_fc.condition);
    if (!is_ordered(p, out))
        throw std::logic_error("corner-block replacement broke the ordering");
    if (d_value(out) != d_in)
        throw std::logic_error("corner-block replacement changed d");
    return out;
}

}  // namespace sbx
