#pragma once

// Brute-force references used by the tests.  Nothing here calls into the
// library's algorithms; only the plain data types are shared.

#include <ramsey_pods/core.hpp>
#include <ramsey_pods/tournament.hpp>

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using rpods::ColoredTournament;
using rpods::OrderedColoring;

inline auto less(const std::vector<int> & x, const std::vector<int> & y, int r) -> bool
{
    int up = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        up += x[i] < y[i];
    return up >= r;
}

inline auto grid(int q, int n) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> pts{{}};
    for (int i = 0; i < q; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto & p : pts)
            for (int v = 1; v <= n; ++v) {
                auto e = p;
                e.push_back(v);
                next.push_back(e);
            }
        pts = std::move(next);
    }
    return pts;
}

using Row = std::bitset<256>;

// Longest sequence in which every element is <_r every later one: extend by
// any point that all chosen points precede.
inline auto F(int q, int r, int n) -> int
{
    auto pts = grid(q, n);
    const int m = static_cast<int>(pts.size());
    std::vector<Row> succ(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && less(pts[a], pts[b], r))
                succ[a].set(b);
    int best = 0;
    std::function<void(int, const Row &)> go = [&](int depth, const Row & cand) {
        best = std::max(best, depth);
        if (depth + static_cast<int>(cand.count()) <= best)
            return;
        for (int b = 0; b < m; ++b)
            if (cand[b])
                go(depth + 1, cand & succ[b]);
    };
    Row all;
    for (int a = 0; a < m; ++a)
        all.set(a);
    go(0, all);
    return best;
}

// Largest set of pairwise comparable points (plain Bron-Kerbosch, no pivot).
inline auto G(int q, int r, int n) -> int
{
    auto pts = grid(q, n);
    const int m = static_cast<int>(pts.size());
    std::vector<Row> adj(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && (less(pts[a], pts[b], r) || less(pts[b], pts[a], r)))
                adj[a].set(b);
    int best = 0;
    std::function<void(int, Row)> go = [&](int depth, Row cand) {
        best = std::max(best, depth);
        for (int b = 0; b < m; ++b)
            if (cand[b]) {
                if (depth + static_cast<int>(cand.count()) <= best)
                    return;
                go(depth + 1, cand & adj[b]);
                cand.reset(b);
            }
    };
    Row all;
    for (int a = 0; a < m; ++a)
        all.set(a);
    go(0, all);
    return best;
}

// Longest monotone path with all edge colors in `allowed` (bit c = color c),
// by checking every vertex subset.  N <= 16.
inline auto monotone(const OrderedColoring & k, std::uint64_t allowed) -> int
{
    const int n = k.size();
    if (n > 24)
        throw std::invalid_argument("subset oracle is for n <= 24");
    int best = std::min(n, 1);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int prev = -1, len = 0;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (s >> v & 1) {
                if (prev >= 0 && ! (allowed >> k.color(prev, v) & 1))
                    ok = false;
                prev = v;
                ++len;
            }
        if (ok)
            best = std::max(best, len);
    }
    return best;
}

// Same value by the textbook quadratic recurrence over last vertices; for
// instances too large to enumerate.
inline auto monotone_dp(const OrderedColoring & k, std::uint64_t allowed) -> int
{
    const int n = k.size();
    std::vector<int> end(n, 1);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (allowed >> k.color(u, v) & 1)
                end[v] = std::max(end[v], end[u] + 1);
    return n ? *std::max_element(end.begin(), end.end()) : 0;
}

// Longest directed path using arcs whose colors lie in `allowed`, by DFS over
// every simple path.
inline auto directed(const ColoredTournament & t, std::uint64_t allowed) -> int
{
    const int n = t.size();
    int best = std::min(n, 1);
    std::vector<char> used(n, 0);
    std::function<void(int, int)> go = [&](int v, int len) {
        best = std::max(best, len);
        for (int w = 0; w < n; ++w)
            if (! used[w] && t.beats(v, w) && (allowed >> t.arc_color(v, w) & 1)) {
                used[w] = 1;
                go(w, len + 1);
                used[w] = 0;
            }
    };
    for (int v = 0; v < n; ++v) {
        used[v] = 1;
        go(v, 1);
        used[v] = 0;
    }
    return best;
}

inline auto r_subsets(int q, int r) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s)
        if (std::popcount(s) == r)
            out.push_back(s << 1);
    return out;
}

inline auto avoid(int q, int i) -> std::uint64_t
{
    return ((std::uint64_t{1} << (q + 1)) - 2) & ~(std::uint64_t{1} << i);
}

// f: every coloring of the ordered N-clique.
inline auto f(int q, int r, int n) -> int
{
    const int e = n * (n - 1) / 2;
    std::vector<int> digits(e, 0);
    auto subsets = r_subsets(q, r);
    int best = n;
    while (true) {
        OrderedColoring k(n, q);
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                k.set_color(u, v, digits[idx++] + 1);
        int worst = 0;
        for (auto s : subsets) {
            worst = std::max(worst, monotone(k, s));
            if (worst >= best)
                break;
        }
        best = std::min(best, worst);
        int i = 0;
        while (i < e && digits[i] == q - 1)
            digits[i++] = 0;
        if (i == e)
            break;
        ++digits[i];
    }
    return best;
}

// g: every orientation and coloring of K_N.
inline auto g(int q, int r, int n) -> int
{
    const int e = n * (n - 1) / 2;
    std::vector<int> digits(e, 0);
    auto subsets = r_subsets(q, r);
    int best = n;
    while (true) {
        ColoredTournament t(n, q);
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int d = digits[idx++];
                if (d % 2)
                    t.set_arc(v, u, d / 2 + 1);
                else
                    t.set_arc(u, v, d / 2 + 1);
            }
        int worst = 0;
        for (auto s : subsets) {
            worst = std::max(worst, directed(t, s));
            if (worst >= best)
                break;
        }
        best = std::min(best, worst);
        int i = 0;
        while (i < e && digits[i] == 2 * q - 1)
            digits[i++] = 0;
        if (i == e)
            break;
        ++digits[i];
    }
    return best;
}

inline auto cyclic_triangles(const ColoredTournament & t) -> std::uint64_t
{
    std::uint64_t count = 0;
    const int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                count += (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) || (t.beats(b, a) && t.beats(c, b) && t.beats(a, c));
    return count;
}

// Voxels of a pod as the union of its (r-1)-dimensional corner faces.
inline auto pod_voxels(const std::vector<int> & apex, int r, int n) -> std::set<std::vector<int>>
{
    const int q = static_cast<int>(apex.size());
    std::set<std::vector<int>> out;
    for (std::uint32_t face = 0; face < (1u << q); ++face) {
        if (std::popcount(face) != r - 1)
            continue;
        std::vector<int> dims;
        for (int i = 0; i < q; ++i)
            if (face >> i & 1)
                dims.push_back(i);
        std::vector<int> off(dims.size(), 0);
        while (true) {
            auto v = apex;
            for (std::size_t j = 0; j < dims.size(); ++j)
                v[dims[j]] += off[j];
            out.insert(v);
            std::size_t j = 0;
            while (j < off.size() && off[j] == n - 1)
                off[j++] = 0;
            if (j == off.size())
                break;
            ++off[j];
        }
    }
    return out;
}

inline auto random_tournament(int n, int q, std::mt19937_64 & rng) -> ColoredTournament
{
    ColoredTournament t(n, q);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = static_cast<int>(rng() % q) + 1;
            if (rng() & 1)
                t.set_arc(v, u, c);
            else
                t.set_arc(u, v, c);
        }
    return t;
}

inline auto random_coloring(int n, int q, std::mt19937_64 & rng) -> OrderedColoring
{
    OrderedColoring k(n, q);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            k.set_color(u, v, static_cast<int>(rng() % q) + 1);
    return k;
}

// Transitive along a random permutation, then `flips` random pairs reversed.
inline auto near_transitive(int n, int q, int flips, std::mt19937_64 & rng) -> ColoredTournament
{
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ColoredTournament t(n, q);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            t.set_arc(perm[a], perm[b], static_cast<int>(rng() % q) + 1);
    for (int k = 0; k < flips; ++k) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a == b)
            continue;
        int u = t.beats(a, b) ? a : b, v = u == a ? b : a;
        t.set_arc(v, u, t.arc_color(u, v));
    }
    return t;
}

} // namespace oracle
