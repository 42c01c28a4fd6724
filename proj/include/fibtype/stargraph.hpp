#pragma once

#include "fibtype/params.hpp"
#include "fibtype/words.hpp"

#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <set>

namespace fibtype {

/// Edge types of the star graph of P_n(m,k): X joins x_i to x_{i+m}^{-1},
/// Y joins x_i to x_{i+B}, Z joins x_i^{-1} to x_{i+A}^{-1}.
enum class EdgeType { X, Y, Z, Untyped };

inline char edge_type_char(EdgeType t) {
    switch (t) {
        case EdgeType::X: return 'X';
        case EdgeType::Y: return 'Y';
        case EdgeType::Z: return 'Z';
        default: return '?';
    }
}

/// Star graph on the 2n letters x_i^{+1}, x_i^{-1}. Vertex v encodes x_v for
/// v < n and x_{v-n}^{-1} for v >= n. Edges form a multiset; each occurrence
/// is its own edge id.
struct StarGraph {
    struct Edge {
        int u, v;
        EdgeType type;
    };

    int n = 0;
    std::vector<Edge> edges;

    int vertex_count() const { return 2 * n; }
    static int vertex_of(const Letter& l, int n) { return l.sign > 0 ? l.gen : n + l.gen; }

    std::vector<std::vector<int>> incidence() const {  // vertex -> edge ids
        std::vector<std::vector<int>> inc(vertex_count());
        for (size_t e = 0; e < edges.size(); ++e) {
            inc[edges[e].u].push_back(static_cast<int>(e));
            inc[edges[e].v].push_back(static_cast<int>(e));
        }
        return inc;
    }
};

namespace detail {
inline EdgeType corner_type(const Letter& a, const Letter& b) {
    // corner between consecutive letters a.b of a relator; star edge {a, b^-1}
    if (a.sign > 0 && b.sign > 0) return EdgeType::X;
    if (a.sign > 0 && b.sign < 0) return EdgeType::Y;
    if (a.sign < 0 && b.sign > 0) return EdgeType::Z;
    return EdgeType::X;  // {x^-1, x^+}: the mixed-sign (X) shape
}
}  // namespace detail

/// Star graph of a cyclic presentation: one edge {a, b^{-1}} per cyclic
/// length-2 subword a.b of each relator. Typed X/Y/Z only for the
/// Fibonacci-type words x_0 x_m x_k^{-1}.
inline StarGraph build_star_graph(const CyclicPresentation& p) {
    StarGraph g;
    g.n = p.n;
    const bool typed = p.w.size() == 3 && p.w[0].sign > 0 && p.w[1].sign > 0 &&
                       p.w[2].sign < 0 && p.w[0].gen == 0;
    for (const Word& r : p.relators()) {
        if (!r.is_cyclically_reduced())
            throw std::invalid_argument("build_star_graph: relator not cyclically reduced");
        const size_t len = r.size();
        for (size_t i = 0; i < len; ++i) {
            const Letter& a = r[i];
            const Letter b = r[(i + 1) % len];
            int u = StarGraph::vertex_of(a, g.n);
            int v = StarGraph::vertex_of(b.inverse(), g.n);
            g.edges.push_back({u, v, typed ? detail::corner_type(a, b) : EdgeType::Untyped});
        }
    }
    return g;
}

inline StarGraph build_star_graph(int n, int m, int k) {
    return build_star_graph(fib_presentation(n, m, k));
}

constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of a shortest backtrack-free closed walk (parallel edge occurrences
/// count as distinct), or kInfiniteGirth for a forest.
inline int girth(const StarGraph& g) {
    const auto inc = g.incidence();
    int best = kInfiniteGirth;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        // BFS from u to v avoiding edge occurrence e itself
        const int u = g.edges[e].u, v = g.edges[e].v;
        std::vector<int> dist(g.vertex_count(), -1);
        std::deque<int> q{u};
        dist[u] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == v) break;
            for (int ei : inc[x]) {
                if (ei == static_cast<int>(e)) continue;
                int y = g.edges[ei].u == x ? g.edges[ei].v : g.edges[ei].u;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
    }
    return best;
}

/// Pieces of a presentation: common prefixes between distinct positions in the
/// set of cyclic permutations of the relators and their inverses.
struct PieceReport {
    std::set<std::vector<Letter>> pieces;
    size_t max_length = 0;
};

inline PieceReport pieces(const CyclicPresentation& p) {
    std::vector<Word> places;
    for (const Word& r : p.relators()) {
        for (size_t t = 0; t < r.size(); ++t) places.push_back(r.rotated(t));
        Word ri = r.inverse();
        for (size_t t = 0; t < ri.size(); ++t) places.push_back(ri.rotated(t));
    }
    PieceReport rep;
    for (size_t i = 0; i < places.size(); ++i)
        for (size_t j = i + 1; j < places.size(); ++j) {
            const auto& a = places[i].letters();
            const auto& b = places[j].letters();
            size_t l = 0;
            while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
            for (size_t len = 1; len <= l; ++len)
                rep.pieces.insert(std::vector<Letter>(a.begin(), a.begin() + len));
            rep.max_length = std::max(rep.max_length, l);
        }
    return rep;
}

/// Largest verified C(p) and T(q). C(p) holds iff no relator is a product of
/// fewer than p pieces; T(q) iff the star graph has girth >= q.
struct SmallCancellationProfile {
    int c = 0;             // largest p with C(p); meaningless if c_infinite
    bool c_infinite = false;  // some relator is not a product of pieces at all
    int t = 0;             // girth; T(q) holds for all q <= t
    bool t_infinite = false;
};

inline SmallCancellationProfile small_cancellation_profile(const CyclicPresentation& p) {
    SmallCancellationProfile prof;
    const PieceReport pr = pieces(p);
    auto min_pieces = [&](const Word& w) -> std::optional<int> {
        // min pieces concatenating to w, over all rotations of the cyclic word
        std::optional<int> best;
        for (size_t t = 0; t < w.size(); ++t) {
            const Word rot = w.rotated(t);
            const auto& ls = rot.letters();
            std::vector<int> dp(ls.size() + 1, -1);
            dp[0] = 0;
            for (size_t i = 0; i < ls.size(); ++i) {
                if (dp[i] < 0) continue;
                std::vector<Letter> seg;
                for (size_t j = i; j < ls.size(); ++j) {
                    seg.push_back(ls[j]);
                    if (pr.pieces.count(seg) && (dp[j + 1] < 0 || dp[j + 1] > dp[i] + 1))
                        dp[j + 1] = dp[i] + 1;
                }
            }
            if (dp.back() >= 0 && (!best || dp.back() < *best)) best = dp.back();
        }
        return best;
    };
    // a relator that is no product of pieces at all never violates C(p);
    // the bound comes from the decomposable relators only
    std::optional<int> worst;
    for (const Word& r : p.relators()) {
        auto mp = min_pieces(r);
        if (!mp) continue;
        if (!worst || *mp < *worst) worst = mp;
    }
    if (worst) prof.c = *worst;
    else prof.c_infinite = true;
    int gi = girth(build_star_graph(p));
    if (gi == kInfiniteGirth) prof.t_infinite = true;
    else prof.t = gi;
    return prof;
}

/// One closed backtrack-free cycle of the star graph, up to rotation,
/// reflection and basepoint.
struct CycleRecord {
    std::vector<int> edge_ids;
    std::vector<int> vertices;  // visited vertices, aligned with edge_ids
    std::string type_word;      // over {X,Y,Z}, empty for untyped graphs
    int length = 0;
    int alpha = 0;  // Z edges
    int beta = 0;   // Y edges
    bool has_xx = false;  // flagged for review, never silently dropped
};

/// All backtrack-free closed cycles of length <= maxlen, deduplicated up to
/// rotation/reflection/basepoint, sorted by (length, edge ids).
inline std::vector<CycleRecord> short_cycles(const StarGraph& g, int maxlen) {
    if (maxlen > 12) throw std::invalid_argument("short_cycles: maxlen budget is 12");
    const auto inc = g.incidence();
    std::set<std::vector<int>> seen;  // canonical edge-id sequences
    std::vector<CycleRecord> out;

    auto canonical = [](std::vector<int> ids) {
        std::vector<int> best;
        for (int rev = 0; rev < 2; ++rev) {
            for (size_t r = 0; r < ids.size(); ++r) {
                std::vector<int> rot(ids.begin() + r, ids.end());
                rot.insert(rot.end(), ids.begin(), ids.begin() + r);
                if (best.empty() || rot < best) best = rot;
            }
            std::reverse(ids.begin(), ids.end());
        }
        return best;
    };

    std::vector<int> path_edges;
    std::vector<int> path_verts;
    auto record = [&](int start) {
        std::vector<int> key = canonical(path_edges);
        if (!seen.insert(key).second) return;
        CycleRecord rec;
        rec.edge_ids = path_edges;
        rec.vertices = path_verts;
        rec.vertices.insert(rec.vertices.begin(), start);
        rec.vertices.pop_back();
        rec.length = static_cast<int>(path_edges.size());
        for (int e : path_edges) {
            EdgeType t = g.edges[e].type;
            if (t != EdgeType::Untyped) rec.type_word += edge_type_char(t);
            if (t == EdgeType::Z) ++rec.alpha;
            if (t == EdgeType::Y) ++rec.beta;
        }
        for (size_t i = 0; i < rec.type_word.size() && !rec.has_xx; ++i)
            if (rec.type_word[i] == 'X' && rec.type_word[(i + 1) % rec.type_word.size()] == 'X')
                rec.has_xx = true;
        out.push_back(std::move(rec));
    };

    std::function<void(int, int, int)> dfs = [&](int start, int at, int last_edge) {
        for (int e : inc[at]) {
            if (e == last_edge) continue;  // no immediate backtrack
            int to = g.edges[e].u == at ? g.edges[e].v : g.edges[e].u;
            path_edges.push_back(e);
            path_verts.push_back(to);
            if (to == start && path_edges.size() >= 2) {
                // closing step must not reverse the first edge either
                if (path_edges.front() != e) record(start);
            }
            if (static_cast<int>(path_edges.size()) < maxlen) dfs(start, to, e);
            path_edges.pop_back();
            path_verts.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) dfs(s, s, -1);
    // parallel edges: a pair of distinct occurrences of the same vertex pair
    // is a length-2 cycle; the DFS above finds those (first != closing edge).
    std::sort(out.begin(), out.end(), [](const CycleRecord& a, const CycleRecord& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.edge_ids < b.edge_ids;
    });
    return out;
}

/// Checks the interior-vertex label restriction: with k of additive order p
/// and n > 7p, every star-graph cycle of length <= 7 must be pure Z of length
/// divisible by p.
struct CensusReport {
    bool pass = false;
    std::vector<CycleRecord> cycles;
    std::vector<CycleRecord> violations;
};

inline CensusReport interior_vertex_census(int n, int m, int k, int p) {
    if (p != 3 && p != 4 && p != 5)
        throw std::invalid_argument("interior_vertex_census: p must be 3, 4 or 5");
    if (additive_order(k, n) != p)
        throw std::invalid_argument("interior_vertex_census: additive order of k is not p");
    if (n <= 7 * p) throw std::invalid_argument("interior_vertex_census: requires n > 7p");
    if (gcd3(n, m, k) != 1)
        throw std::invalid_argument("interior_vertex_census: gcd(n,m,k) must be 1");
    CensusReport rep;
    rep.cycles = short_cycles(build_star_graph(n, m, k), 7);
    for (const auto& c : rep.cycles) {
        bool pure_z = c.alpha == c.length && c.beta == 0;
        if (!pure_z || c.length % p != 0) rep.violations.push_back(c);
    }
    rep.pass = rep.violations.empty();
    return rep;
}

/// The congruence form of T(5) for P_n(m,k): A +- B != 0 and tA != 0,
/// tB != 0 mod n for 1 <= t <= 4.
inline bool is_T5(int n, int m, int k) {
    if (n < 2 || m <= 0 || m >= n || k <= 0 || k >= n || m == k)
        throw std::invalid_argument("is_T5: requires 0 < m,k < n and m != k");
    const FibParams p = derive(n, m, k);
    if (mod(p.A + p.B, n) == 0 || mod(p.A - p.B, n) == 0) return false;
    for (int t = 1; t <= 4; ++t)
        if (mod(1LL * t * p.A, n) == 0 || mod(1LL * t * p.B, n) == 0) return false;
    return true;
}

/// The T(6) girth profile: the star graph has no cycle shorter than 6 iff
/// none of these congruences hold ("X = sn/q" tested as "q*X = 0 and the
/// smaller multiples stay nonzero"). Each listed congruence pins a cycle of
/// length < 6: pure Z or Y cycles for the single-parameter rows, mixed
/// cycles with two X edges for the rest.
inline bool is_T6_profile(int n, int A, int B) {
    auto half = [&](int X) { return mod(2LL * X, n) == 0 && X != 0; };
    auto third = [&](int X) { return mod(3LL * X, n) == 0 && X != 0; };
    auto quarter = [&](int X) { return mod(4LL * X, n) == 0 && mod(2LL * X, n) != 0; };
    auto fifth = [&](int X) { return mod(5LL * X, n) == 0 && X != 0; };
    for (int X : {A, B})
        if (half(X) || third(X) || quarter(X) || fifth(X)) return false;
    if (mod(A + B, n) == 0 || mod(A - B, n) == 0) return false;
    if (mod(A + 2LL * B, n) == 0 || mod(A - 2LL * B, n) == 0) return false;
    if (mod(B + 2LL * A, n) == 0 || mod(B - 2LL * A, n) == 0) return false;
    return true;
}

/// The full congruence test for non-elementary hyperbolicity of the generic
/// T(6) case: the girth profile plus A+B != n/2. The extra congruence does
/// not shorten the girth; it removes the T(6) but non-hyperbolic half-shift
/// family.
inline bool is_T6_generic(int n, int m, int k) {
    const FibParams p = derive(n, m, k);
    if (!is_T6_profile(n, p.A, p.B)) return false;
    return !(mod(2LL * (p.A + p.B), n) == 0 && mod(p.A + p.B, n) != 0);
}

}  // namespace fibtype
