#include "oracles.hpp"

#include <ramsey_pods/constructions.hpp>
#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/paths.hpp>

#include <doctest.h>

using namespace rpods;

TEST_CASE("lexicographic products multiply restricted path lengths")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int q = 1 + static_cast<int>(rng() % 3);
        auto inner = oracle::random_coloring(1 + static_cast<int>(rng() % 6), q, rng);
        auto outer = oracle::random_coloring(1 + static_cast<int>(rng() % 6), q, rng);
        auto k = lex_product(inner, outer);
        REQUIRE(k.size() == inner.size() * outer.size());
        for (ColorMask s = 2; s < (ColorMask{1} << (q + 1)); s += 2) {
            CHECK(longest_restricted_monotone_length(k, s) == oracle::monotone(inner, s) * oracle::monotone(outer, s));
            CHECK(oracle::monotone_dp(k, s) == oracle::monotone(inner, s) * oracle::monotone(outer, s));
        }
    }
}

TEST_CASE("lex product layout")
{
    OrderedColoring inner(2, 2), outer(3, 2, 2);
    auto k = lex_product(inner, outer);
    CHECK(k.color(0, 1) == 1);
    CHECK(k.color(2, 3) == 1);
    CHECK(k.color(1, 2) == 2);
    CHECK(k.color(0, 5) == 2);
    CHECK_THROWS_AS(lex_product(OrderedColoring(2, 2), OrderedColoring(2, 3)), InvalidArgument);
    CHECK_THROWS_AS(lex_product(OrderedColoring(100, 1), OrderedColoring(100, 1)), InvalidArgument);
}

TEST_CASE("canonical colorings have S-colored paths of length m^|S|")
{
    for (auto [q, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {4, 2}}) {
        auto k = canonical_coloring(q, m);
        int n = 1;
        for (int i = 0; i < q; ++i)
            n *= m;
        REQUIRE(k.size() == n);
        for (ColorMask s = 2; s < (ColorMask{1} << (q + 1)); s += 2) {
            int expect = 1;
            for (int i = 0; i < std::popcount(s); ++i)
                expect *= m;
            if (n <= 16)
                CHECK(oracle::monotone(k, s) == expect);
            CHECK(longest_restricted_monotone_length(k, s) == expect);
        }
    }
    CHECK(canonical_color(2, 2, 0, 1) == 1);
    CHECK(canonical_color(2, 2, 0, 2) == 2);
    CHECK(canonical_color(2, 2, 1, 2) == 2);
}

TEST_CASE("balanced colorings equalize every ell_i at the product")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        int q = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % (q == 2 ? 6 : 3));
        auto k = oracle::random_coloring(n, q, rng);
        long long pi = 1;
        for (int i = 1; i <= q; ++i)
            pi *= oracle::monotone(k, oracle::avoid(q, i));
        auto b = balance_coloring(k);
        for (int i = 1; i <= q; ++i)
            CHECK(ell_avoid_monotone(b, i).length() == pi);
    }
}

TEST_CASE("shift_colors permutes cyclically")
{
    OrderedColoring k(3, 3);
    k.set_color(0, 2, 3);
    auto s = shift_colors(k, 2);
    CHECK(s.color(0, 1) == 2);
    CHECK(s.color(0, 2) == 1);
    CHECK(shift_colors(k, 1).color(0, 2) == 3);
}

TEST_CASE("the vector boost multiplies sizes and stays increasing")
{
    auto a = VectorFamily::from_rows(2, 2, 1, {{1, 2}, {2, 1}});
    auto b = VectorFamily::from_rows(2, 3, 1, {{1, 3}, {2, 2}, {3, 1}});
    REQUIRE(std::holds_alternative<Increasing>(validate_increasing(a)));
    REQUIRE(std::holds_alternative<Increasing>(validate_increasing(b)));
    auto c = product_boost_vectors(a, b);
    CHECK(c.size() == 6);
    CHECK(c.n() == 6);
    for (std::size_t x = 0; x < c.size(); ++x)
        for (std::size_t y = x + 1; y < c.size(); ++y)
            CHECK(oracle::less(c[x].coords(), c[y].coords(), 1));
    CHECK_THROWS_AS(product_boost_vectors(a, VectorFamily::from_rows(2, 2, 1, {{2, 2}, {1, 1}})), InvalidArgument);
}
