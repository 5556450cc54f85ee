#include "oracles.hpp"

#include <ramsey_pods/kernels.hpp>
#include <ramsey_pods/paths.hpp>

#include <doctest.h>

using namespace rpods;

TEST_CASE("path_start_table: serial and parallel agree, and match DFS")
{
    std::mt19937_64 rng(81);
    for (int n : {1, 3, 8, 12}) {
        auto t = oracle::random_tournament(n, 1, rng);
        std::vector<std::uint32_t> masks(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && t.beats(u, v))
                    masks[u] |= 1u << v;
        auto s = kernels::serial::path_start_table(masks);
        auto p = kernels::parallel::path_start_table(masks);
        CHECK(s == p);
        // full-set bit means a Hamiltonian path; the longest path over all masks is the DFS value
        int best = 0;
        for (std::uint32_t m = 1; m < s.size(); ++m)
            if (s[m])
                best = std::max(best, std::popcount(m));
        CHECK(best == oracle::directed(t, ColorMask{2}));
    }
}

TEST_CASE("cyclic_triangle_count: serial and parallel agree with the oracle")
{
    std::mt19937_64 rng(82);
    for (int n : {3, 10, 40, 90}) {
        auto t = oracle::random_tournament(n, 3, rng);
        auto s = kernels::serial::cyclic_triangle_count(t);
        CHECK(s == kernels::parallel::cyclic_triangle_count(t));
        CHECK(s == oracle::cyclic_triangles(t));
    }
}

TEST_CASE("relation_rows: serial and parallel agree with the relation")
{
    for (auto [q, r, n] : {std::tuple{3, 2, 3}, {4, 3, 2}, {2, 1, 4}, {4, 2, 3}}) {
        auto pts = oracle::grid(q, n);
        std::vector<int> coords;
        for (const auto & x : pts)
            coords.insert(coords.end(), x.begin(), x.end());
        auto s = kernels::serial::relation_rows(coords, q, r);
        auto p = kernels::parallel::relation_rows(coords, q, r);
        REQUIRE(s.size() == pts.size());
        CHECK(s == p);
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                CHECK(s[a][b] == oracle::less(pts[a], pts[b], r));
    }
}
