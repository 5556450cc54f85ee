#include "oracles.hpp"

#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/pods.hpp>
#include <ramsey_pods/search.hpp>

#include <doctest.h>

using namespace rpods;

namespace {

auto pod(int r, std::vector<int> apex, int n) -> Pod { return Pod{r, GridVector(std::move(apex), n)}; }

}

TEST_CASE("voxels are the union of the corner faces")
{
    for (auto [q, r, n] : {std::tuple{3, 2, 4}, {3, 3, 2}, {3, 1, 3}, {4, 3, 2}, {4, 2, 3}, {2, 2, 3}, {3, 3, 3}})
        for (const auto & apex : oracle::grid(q, n)) {
            auto got = pod_voxels(pod(r, apex, n));
            auto expect = oracle::pod_voxels(apex, r, n);
            CHECK(std::set<Voxel>(got.begin(), got.end()) == expect);
            CHECK(static_cast<long long>(got.size()) == pod_volume(q, r, n));
        }
}

TEST_CASE("pod sizes")
{
    CHECK(pod_voxels(pod(2, {1, 1, 1}, 4)).size() == 10);
    CHECK(pod_voxels(pod(1, {2, 1, 3}, 3)) == std::vector<Voxel>{{2, 1, 3}});
    CHECK(pod_voxels(pod(3, {1, 1, 1}, 2)).size() == 7);
    CHECK_THROWS_AS(pod_voxels(pod(4, {1, 1, 1}, 2)), InvalidArgument);
}

TEST_CASE("pods are disjoint exactly when their apices are comparable")
{
    for (auto [q, r, n] : {std::tuple{3, 2, 1}, {3, 2, 2}, {3, 2, 3}, {4, 3, 2}, {3, 3, 2}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3}}) {
        auto pts = oracle::grid(q, n);
        for (const auto & a : pts)
            for (const auto & b : pts) {
                auto pa = pod(r, a, n), pb = pod(r, b, n);
                bool comparable = oracle::less(a, b, r) || oracle::less(b, a, r);
                CHECK(pods_disjoint_voxel(pa, pb) == comparable);
                CHECK(pods_disjoint_fast(pa, pb) == comparable);
            }
    }
}

TEST_CASE("overlapping pods share the coordinatewise max")
{
    CHECK(pods_disjoint_voxel(pod(2, {1, 1, 1}, 3), pod(2, {2, 2, 1}, 3)));
    CHECK_FALSE(pods_disjoint_voxel(pod(2, {1, 1, 1}, 3), pod(2, {2, 1, 1}, 3)));
    CHECK(shared_voxel(pod(2, {1, 1, 1}, 3), pod(2, {2, 1, 1}, 3)) == Voxel{2, 1, 1});
    CHECK_FALSE(shared_voxel(pod(2, {1, 1, 1}, 3), pod(2, {2, 2, 1}, 3)));
    auto a = pod(2, {1, 3, 2}, 3);
    CHECK_FALSE(pods_disjoint_voxel(a, a));
    auto pts = oracle::grid(3, 3);
    for (const auto & x : pts)
        for (const auto & y : pts) {
            auto s = shared_voxel(pod(2, x, 3), pod(2, y, 3));
            if (! s)
                continue;
            auto vx = oracle::pod_voxels(x, 2, 3), vy = oracle::pod_voxels(y, 2, 3);
            CHECK(vx.count(*s));
            CHECK(vy.count(*s));
        }
    CHECK_THROWS_AS(pods_disjoint_fast(pod(2, {1, 1, 1}, 3), pod(3, {1, 1, 1}, 3)), InvalidArgument);
}

TEST_CASE("a packing is valid iff its apices are r-comparable")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 3, r = 2, n = 3;
        int m = 1 + static_cast<int>(rng() % 5);
        std::vector<GridVector> apices;
        std::vector<std::vector<int>> rows;
        for (int k = 0; k < m; ++k) {
            std::vector<int> v(q);
            for (auto & c : v)
                c = 1 + static_cast<int>(rng() % n);
            rows.push_back(v);
            apices.emplace_back(v, n);
        }
        Packing p(q, r, n, apices);
        auto fam = VectorFamily::from_rows(q, n, r, rows);
        CHECK(p.valid() == std::holds_alternative<Comparable>(validate_comparable(fam)));
        if (! p.valid()) {
            auto fail = *p.first_overlap();
            CHECK_FALSE(pods_disjoint_voxel(p.pod(fail.a), p.pod(fail.b)));
        }
    }
}

TEST_CASE("largest packing with apices in [n]^q is G(q,r,n)")
{
    for (auto [q, r, n] : {std::tuple{3, 2, 2}, {2, 1, 2}, {3, 3, 2}}) {
        auto pts = oracle::grid(q, n);
        int best = 0;
        for (std::uint32_t s = 1; s < (1u << pts.size()); ++s) {
            if (std::popcount(s) <= best)
                continue;
            std::vector<GridVector> apices;
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (s >> k & 1)
                    apices.emplace_back(pts[k], n);
            if (Packing(q, r, n, apices).valid())
                best = std::popcount(s);
        }
        CHECK(best == exact_G(q, r, n).value);
    }
}

TEST_CASE("packing density")
{
    Packing single(3, 2, 4, {GridVector({1, 1, 1}, 4)});
    CHECK(packing_density(single) == Rational(10, 343));
    Packing two(3, 2, 2, {GridVector({1, 1, 1}, 2), GridVector({2, 2, 1}, 2)});
    CHECK(packing_density(two) == Rational(8, 27));
    Packing bad(3, 2, 2, {GridVector({1, 1, 1}, 2), GridVector({2, 1, 1}, 2)});
    CHECK_THROWS_AS(packing_density(bad), InvalidArgument);
}
