#include "oracles.hpp"

#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/paths.hpp>
#include <ramsey_pods/reductions.hpp>

#include <doctest.h>

using namespace rpods;

namespace {

auto at_most(const OrderedColoring & k, int r) -> int
{
    int best = 0;
    for (auto s : oracle::r_subsets(k.q(), r))
        best = std::max(best, oracle::monotone(k, s));
    return best;
}

}

TEST_CASE("colorings map to (q-1)-increasing families on [f-value]^q")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        int q = 2 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 9);
        auto k = oracle::random_coloring(n, q, rng);
        auto fam = coloring_to_vectors(k);
        CHECK(fam.size() == static_cast<std::size_t>(n));
        CHECK(fam.r() == q - 1);
        CHECK(fam.n() == at_most(k, q - 1));
        CHECK(std::holds_alternative<Increasing>(validate_increasing(fam)));
    }
}

TEST_CASE("families map back to colorings without long (q-1)-colored paths")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 80; ++trial) {
        int q = 2 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 9);
        auto fam = coloring_to_vectors(oracle::random_coloring(n, q, rng));
        auto k = vectors_to_coloring(fam);
        CHECK(k.size() == n);
        CHECK(at_most(k, q - 1) <= fam.n());
    }
    auto bad = VectorFamily::from_rows(3, 2, 2, {{2, 2, 2}, {1, 1, 1}});
    CHECK_THROWS_AS(vectors_to_coloring(bad), InvalidArgument);
    CHECK_THROWS_AS(coloring_to_vectors(OrderedColoring(3, 1)), InvalidArgument);
}

TEST_CASE("color partitions validate their blocks")
{
    ColorPartition p(4, {{3, 1}, {2}, {4}});
    CHECK(p.size() == 3);
    CHECK(p.block_of(1) == p.block_of(3));
    CHECK(p.block_size(p.block_of(1)) == 2);
    CHECK_THROWS_AS(ColorPartition(3, {{1}, {2}}), InvalidArgument);
    CHECK_THROWS_AS(ColorPartition(3, {{1, 2}, {2, 3}}), InvalidArgument);
    CHECK_THROWS_AS(ColorPartition(3, {{1, 2, 3}, {}}), InvalidArgument);
    CHECK(ColorPartition::from_map({1, 2, 1}) == ColorPartition(3, {{1, 3}, {2}}));
    CHECK(ColorPartition::identity(3).size() == 3);
}

TEST_CASE("merging colors preserves paths through block unions")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const int q = 4, n = 2 + static_cast<int>(rng() % 8);
        auto k = oracle::random_coloring(n, q, rng);
        std::vector<int> map{1, 1, 2, 3};
        std::shuffle(map.begin(), map.end(), rng);
        auto part = ColorPartition::from_map(map);
        auto merged = merge_colors(k, part);
        CHECK(merged.q() == part.size());
        for (ColorMask blocks = 2; blocks < (ColorMask{1} << (part.size() + 1)); blocks += 2) {
            ColorMask original = 0;
            for (int c = 1; c <= q; ++c)
                if (blocks >> part.block_of(c) & 1)
                    original |= ColorMask{1} << c;
            CHECK(oracle::monotone(merged, blocks) == oracle::monotone(k, original));
            auto cert = longest_restricted_monotone(merged, AllowedSet{colors_of(blocks)});
            auto back = pull_back(cert, part);
            CHECK(back.vertices == cert.vertices);
            CHECK(std::get<AllowedSet>(back.constraint).colors == colors_of(original));
            CHECK_FALSE(validate_path(k, back));
        }
    }
}

TEST_CASE("merged tournaments keep orientation")
{
    std::mt19937_64 rng(34);
    auto t = oracle::random_tournament(10, 3, rng);
    auto part = ColorPartition(3, {{1, 3}, {2}});
    auto m = merge_colors(t, part);
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v)
            if (u != v) {
                CHECK(m.beats(u, v) == t.beats(u, v));
                if (t.beats(u, v))
                    CHECK(m.arc_color(u, v) == part.block_of(t.arc_color(u, v)));
            }
    for (int b = 1; b <= 2; ++b) {
        ColorMask original = 0;
        for (int c : part.blocks()[b - 1])
            original |= ColorMask{1} << c;
        CHECK(oracle::directed(m, ColorMask{1} << b) == oracle::directed(t, original));
    }
}

TEST_CASE("floor reduction blocks")
{
    auto fr = floor_reduction(7, 5);
    CHECK(fr.p == 3);
    CHECK(fr.t == 1);
    CHECK(fr.partition.size() == 3);
    CHECK(fr.partition.block_size(1) == 2);
    CHECK(fr.partition.block_size(2) == 2);
    CHECK(fr.partition.block_size(3) == 3);
    CHECK(max_colors_in_blocks(fr.partition, 1) == 3);
    CHECK(max_colors_in_blocks(fr.partition, 2) == 5);
    // r' = p - 1 blocks never see more than r colors.
    for (int q = 2; q <= 9; ++q)
        for (int r = 1; r < q; ++r) {
            if (q / (q - r) < 2) {
                CHECK_THROWS_AS(floor_reduction(q, r), InvalidArgument);
                continue;
            }
            auto f = floor_reduction(q, r);
            CHECK(f.partition.size() == f.p);
            CHECK(max_colors_in_blocks(f.partition, f.p - 1) <= r);
        }
}
