#include "oracles.hpp"

#include <ramsey_pods/core.hpp>
#include <ramsey_pods/errors.hpp>

#include <doctest.h>

using namespace rpods;

namespace {

auto fam(int q, int n, int r, std::vector<std::vector<int>> rows) -> VectorFamily
{
    return VectorFamily::from_rows(q, n, r, rows);
}

// Every clique of the comparability graph on [n]^q, passed to visit.
void for_each_comparable_family(int q, int r, int n, const std::function<void(const VectorFamily &)> & visit)
{
    auto pts = oracle::grid(q, n);
    std::vector<std::vector<int>> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        if (! chosen.empty())
            visit(fam(q, n, r, chosen));
        for (std::size_t b = from; b < pts.size(); ++b) {
            bool ok = true;
            for (const auto & x : chosen)
                ok = ok && (oracle::less(x, pts[b], r) || oracle::less(pts[b], x, r));
            if (! ok)
                continue;
            chosen.push_back(pts[b]);
            go(b + 1);
            chosen.pop_back();
        }
    };
    go(0);
}

}

TEST_CASE("less_r matches a coordinate count")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        int q = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 4), r = 1 + static_cast<int>(rng() % q);
        std::vector<int> x(q), y(q);
        for (int i = 0; i < q; ++i) {
            x[i] = 1 + static_cast<int>(rng() % n);
            y[i] = 1 + static_cast<int>(rng() % n);
        }
        GridVector gx(x, n), gy(y, n);
        CHECK(less_r(gx, gy, r) == oracle::less(x, y, r));
        auto rel = compare_r(gx, gy, r);
        bool fw = oracle::less(x, y, r), bw = oracle::less(y, x, r);
        CHECK(rel == (fw && bw ? Relation::Both : fw ? Relation::Forward : bw ? Relation::Backward : Relation::Incomparable));
    }
}

TEST_CASE("grid vectors reject coordinates outside [1, n]")
{
    CHECK_THROWS_AS(GridVector({0, 1}, 2), InvalidArgument);
    CHECK_THROWS_AS(GridVector({3, 1}, 2), InvalidArgument);
}

TEST_CASE("validate_increasing reports the first failing pair")
{
    CHECK(std::holds_alternative<Increasing>(validate_increasing(fam(2, 3, 1, {{1, 1}, {2, 1}, {3, 2}}))));
    auto v = validate_increasing(fam(2, 3, 2, {{1, 1}, {2, 2}, {3, 2}}));
    REQUIRE(std::holds_alternative<FailPair>(v));
    CHECK(std::get<FailPair>(v) == FailPair{1, 2});

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        int q = 3, n = 3, r = 1 + static_cast<int>(rng() % 3), m = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<int>> rows(m, std::vector<int>(q));
        for (auto & row : rows)
            for (auto & c : row)
                c = 1 + static_cast<int>(rng() % n);
        std::optional<FailPair> expect;
        for (int a = 0; a < m && ! expect; ++a)
            for (int b = a + 1; b < m && ! expect; ++b)
                if (! oracle::less(rows[a], rows[b], r))
                    expect = FailPair{a, b};
        auto got = validate_increasing(fam(q, n, r, rows));
        if (expect)
            CHECK(std::get<FailPair>(got) == *expect);
        else
            CHECK(std::holds_alternative<Increasing>(got));
    }
}

TEST_CASE("duplicates are never comparable")
{
    auto v = validate_comparable(fam(2, 2, 1, {{1, 2}, {1, 2}}));
    CHECK(std::holds_alternative<FailPair>(v));
}

TEST_CASE("the three cyclic shifts of (1,2,3) form a cyclic triple")
{
    auto f = fam(3, 3, 2, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    auto triple = find_cyclic_triple(f);
    REQUIRE(triple);
    CHECK(triple->witness_a == std::vector<int>{0, 1});
    CHECK(triple->witness_b == std::vector<int>{0, 2});
    CHECK(triple->witness_c == std::vector<int>{1, 2});
    CHECK(audit_cyclic_triple(f, *triple));
    CHECK(std::holds_alternative<CyclicTriple>(transitive_order(f)));
}

TEST_CASE("no cyclic triple once r > 2q/3 (exhaustive, n = 2)")
{
    for (int q = 1; q <= 5; ++q)
        for (int r = 1; r <= q; ++r) {
            if (3 * r <= 2 * q)
                continue;
            int families = 0;
            for_each_comparable_family(q, r, 2, [&](const VectorFamily & f) {
                ++families;
                CHECK_FALSE(find_cyclic_triple(f));
                auto order = transitive_order(f);
                REQUIRE(std::holds_alternative<std::vector<int>>(order));
                CHECK(std::holds_alternative<Increasing>(validate_increasing(f.reordered(std::get<std::vector<int>>(order)))));
            });
            CHECK(families > 0);
        }
}

TEST_CASE("returned cyclic triples re-validate")
{
    int found = 0;
    for_each_comparable_family(3, 2, 3, [&](const VectorFamily & f) {
        if (f.size() > 5)
            return;
        if (auto t = find_cyclic_triple(f)) {
            ++found;
            const auto & x = f[t->x].coords();
            const auto & y = f[t->y].coords();
            const auto & z = f[t->z].coords();
            CHECK(oracle::less(x, y, 2));
            CHECK(oracle::less(y, z, 2));
            CHECK(oracle::less(z, x, 2));
            CHECK(t->witness_a.size() >= 2);
            CHECK(t->witness_b.size() >= 2);
            CHECK(t->witness_c.size() >= 2);
            CHECK(audit_cyclic_triple(f, *t));
        }
        else
            CHECK(std::holds_alternative<std::vector<int>>(transitive_order(f)));
    });
    CHECK(found > 0);
}

TEST_CASE("find_cyclic_triple needs a comparable family")
{
    CHECK_THROWS_AS(find_cyclic_triple(fam(2, 2, 2, {{1, 2}, {2, 1}})), InvalidArgument);
}

TEST_CASE("deleting t coordinates keeps an (r - t)-increasing sequence")
{
    auto f = fam(4, 3, 3, {{1, 1, 1, 3}, {2, 2, 2, 1}, {3, 3, 3, 2}});
    REQUIRE(std::holds_alternative<Increasing>(validate_increasing(f)));
    auto g = f.delete_last_coordinates(1);
    CHECK(g.q() == 3);
    CHECK(g.r() == 2);
    CHECK(std::holds_alternative<Increasing>(validate_increasing(g)));
    CHECK_THROWS_AS(f.delete_last_coordinates(3), InvalidArgument);
}
