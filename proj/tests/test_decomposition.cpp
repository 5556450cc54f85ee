#include "oracles.hpp"

#include <ramsey_pods/decomposition.hpp>

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace rpods;

namespace {

// Period-3 square-of-path audit written against the raw arc table.
auto three_color_ok(const ColoredTournament & t, const std::vector<int> & v, const TrianglePattern & p) -> bool
{
    std::set<int> seen(v.begin(), v.end()), colors;
    if (seen.size() != v.size())
        return false;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        if (! t.beats(v[j], v[j + 1]) || t.arc_color(v[j], v[j + 1]) != p[j % 3])
            return false;
        colors.insert(t.arc_color(v[j], v[j + 1]));
    }
    for (std::size_t j = 0; j + 2 < v.size(); ++j)
        if (! t.beats(v[j + 2], v[j]) || t.arc_color(v[j + 2], v[j]) != p[(j + 2) % 3])
            return false;
    return colors.size() <= 3;
}

auto transitive(int n, int q, int color) -> ColoredTournament
{
    ColoredTournament t(n, q);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            t.set_arc(u, v, color);
    return t;
}

}

TEST_CASE("three-color paths on transitive tournaments")
{
    CHECK_THROWS_AS(three_color_path(transitive(20, 3, 2)), NoCyclicTriangles);
}

TEST_CASE("a single 3-cycle")
{
    ColoredTournament t(3, 3);
    t.set_arc(0, 1, 2);
    t.set_arc(1, 2, 3);
    t.set_arc(2, 0, 1);
    auto p = three_color_path(t);
    CHECK(p.cert.length() == 3);
    CHECK(p.pattern == TrianglePattern{1, 2, 3});
    CHECK(three_color_ok(t, p.cert.vertices, p.pattern));
    CHECK_FALSE(audit_three_color_path(t, p));
    CHECK_THROWS_AS(three_color_path(t, 2), SupportTooHigh);
}

TEST_CASE("three-color paths pass both audits on random tournaments")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = oracle::random_tournament(20 + static_cast<int>(rng() % 40), 2 + static_cast<int>(rng() % 4), rng);
        auto p = three_color_path(t);
        CHECK(p.cert.length() >= 3);
        CHECK(three_color_ok(t, p.cert.vertices, p.pattern));
        CHECK_FALSE(audit_three_color_path(t, p));
        auto low = three_color_path(t, 1);
        CHECK(three_color_ok(t, low.cert.vertices, low.pattern));
        CHECK(low.min_support == 1);
        CHECK(p.min_support >= 1);
    }
}

TEST_CASE("tampered three-color certificates fail the audit")
{
    std::mt19937_64 rng(52);
    auto t = oracle::random_tournament(30, 3, rng);
    auto p = three_color_path(t);
    REQUIRE(p.cert.length() >= 3);
    auto bad = p;
    std::reverse(bad.cert.vertices.begin(), bad.cert.vertices.end());
    CHECK(audit_three_color_path(t, bad));
    bad = p;
    bad.pattern = {p.pattern[1], p.pattern[2], p.pattern[0]};
    if (bad.pattern != p.pattern)
        CHECK(audit_three_color_path(t, bad));
}

TEST_CASE("classification flags and audit")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 32 + static_cast<int>(rng() % 20), q = 3;
        auto t = oracle::random_tournament(n, q, rng);
        auto order = heuristic_transitive_order(t);
        auto params = proof_parameters(q, n);
        params.s = std::max(1, n / 16);
        auto cls = classify_colors(t, order, params);
        CHECK_FALSE(audit_classification(t, cls));
        CHECK(cls.b.size() == 4 * params.s);
        CHECK(cls.c.begin == n / 2);
        for (int i = 1; i <= q; ++i) {
            const auto & c = cls.color(i);
            CHECK(c.x.size() == static_cast<std::size_t>(params.s));
            CHECK(c.is_long == (c.ell >= params.gamma * n));
        }
        auto tampered = cls;
        tampered.colors[0].left_condensed = ! tampered.colors[0].left_condensed;
        CHECK(audit_classification(t, tampered));
    }
    auto t = oracle::random_tournament(10, 3, rng);
    std::vector<int> order(10);
    std::iota(order.begin(), order.end(), 0);
    auto params = proof_parameters(3, 10);
    params.s = 1;
    CHECK_THROWS_AS(classify_colors(t, order, params), DegenerateScale);
    CHECK_THROWS_AS(classify_colors(oracle::random_tournament(16, 3, rng), std::vector<int>(16, 0), params), InvalidArgument);
}

TEST_CASE("gluing structures satisfy their invariants")
{
    std::mt19937_64 rng(54);
    int built = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 48 + static_cast<int>(rng() % 40), q = 3;
        auto t = oracle::random_tournament(n, q, rng);
        auto order = heuristic_transitive_order(t);
        auto params = proof_parameters(q, n);
        params.s = std::max(1, n / 48);
        auto cls = classify_colors(t, order, params);
        // gamma N is a handful of vertices here, so every color is long.
        CHECK(cls.left_diffuse.empty());
        CHECK_THROWS_AS(build_gluing(t, cls), NotDiffuse);
        // Treat the colors with X_i away from B as if they were short.
        cls.left_diffuse.clear();
        for (int i = 1; i <= q; ++i)
            if (! cls.color(i).left_condensed)
                cls.left_diffuse.push_back(i);
        if (cls.left_diffuse.empty())
            continue;
        cls.params.p = static_cast<double>(cls.left_diffuse.size());
        cls.delta_l = cls.left_diffuse;
        auto g = build_gluing(t, cls, GluingMode::Repair);
        ++built;
        CHECK_FALSE(audit_gluing(t, cls, g, 1));
        for (int a = 0; a < g.t(); ++a)
            for (int v : g.blocks[a]) {
                int from = cls.order[g.anchors[a]], mid = cls.order[v], to = cls.order[g.anchors[a + 1]];
                CHECK(t.beats(from, mid));
                CHECK(t.beats(mid, to));
            }
        try {
            auto strict = build_gluing(t, cls, GluingMode::Strict);
            CHECK_FALSE(audit_gluing(t, cls, strict, cls.params.s));
        }
        catch (const AuditFailed &) {
            // the stated construction need not hold at this scale
        }
        if (g.t() > 0) {
            auto broken = g;
            std::swap(broken.anchors.front(), broken.anchors.back());
            CHECK(audit_gluing(t, cls, broken, 1));
        }
    }
    CHECK(built > 0);
}

TEST_CASE("baseline floor")
{
    CHECK(baseline_floor(8, 2) == 3);
    CHECK(baseline_floor(9, 2) == 3);
    CHECK(baseline_floor(27, 4) == 3);
    CHECK(baseline_floor(28, 4) == 4);
    CHECK(baseline_floor(12, 3) == 4);
    CHECK(baseline_floor(5, 1) == 1);
    CHECK(baseline_floor(1, 5) == 1);
}

TEST_CASE("constructive baseline reaches the floor")
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + static_cast<int>(rng() % 60), q = 2 + static_cast<int>(rng() % 4);
        auto t = oracle::random_tournament(n, q, rng);
        auto certs = constructive_baseline(t, trial);
        REQUIRE(certs.size() == static_cast<std::size_t>(q));
        int best = 0;
        for (int i = 1; i <= q; ++i) {
            CHECK(std::get<AvoidColor>(certs[i - 1].constraint).color == i);
            CHECK_FALSE(validate_path(t, certs[i - 1]));
            best = std::max(best, certs[i - 1].length());
        }
        CHECK(best >= baseline_floor(n, q));
    }
}

TEST_CASE("recursive finder: exact on small inputs, valid and above the floor on larger ones")
{
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8), q = 2 + static_cast<int>(rng() % 3);
        auto t = oracle::random_tournament(n, q, rng);
        auto res = recursive_color_avoiding(t);
        int exact = 0;
        for (int i = 1; i <= q; ++i)
            exact = std::max(exact, oracle::directed(t, oracle::avoid(q, i)));
        CHECK(res.cert.length() == exact);
        CHECK_FALSE(validate_path(t, res.cert));
    }
    for (int trial = 0; trial < 6; ++trial) {
        int n = 30 + static_cast<int>(rng() % 50), q = 3 + static_cast<int>(rng() % 3);
        auto t = trial % 2 ? oracle::random_tournament(n, q, rng) : oracle::near_transitive(n, q, n / 2, rng);
        RecursiveOptions opts;
        opts.trace = true;
        auto res = recursive_color_avoiding(t, opts);
        CHECK_FALSE(validate_path(t, res.cert));
        CHECK(std::get<AvoidColor>(res.cert.constraint).color == res.color);
        CHECK(res.cert.length() >= baseline_floor(n, q));
        REQUIRE_FALSE(res.trace.empty());
        CHECK(res.trace.back()["N"] == n);
        for (const auto & cert : res.per_color)
            CHECK_FALSE(validate_path(t, cert));
    }
}

TEST_CASE("monochromatic transitive tournaments give Hamiltonian paths")
{
    for (int n : {8, 23, 40}) {
        auto res = recursive_color_avoiding(transitive(n, 2, 1));
        CHECK(res.cert.length() == n);
        CHECK(res.color == 2);
    }
}
