#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/kernels.hpp>
#include <ramsey_pods/tournament.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace rpods {

namespace
{
    auto check_palette(int n, int q) -> void
    {
        if (n < 0)
            throw InvalidArgument("vertex count must be non-negative");
        if (q < 1 || q > max_palette)
            throw InvalidArgument("palette size q = " + std::to_string(q) + " outside [1, " + std::to_string(max_palette) + "]");
    }

    auto check_permutation(std::span<const int> order, int n) -> void
    {
        if (static_cast<int>(order.size()) != n)
            throw InvalidArgument("order has " + std::to_string(order.size()) + " entries for " + std::to_string(n) + " vertices");
        std::vector<bool> seen(n, false);
        for (int v : order) {
            if (v < 0 || v >= n || seen[v])
                throw InvalidArgument("order is not a permutation of the vertices");
            seen[v] = true;
        }
    }
}

OrderedColoring::OrderedColoring(int n, int q, int fill) :
    n_(n), q_(q), colors_(static_cast<std::size_t>(n) * n, 0)
{
    check_palette(n, q);
    if (fill < 1 || fill > q)
        throw InvalidArgument("fill color outside the palette");
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                colors_[u * n + v] = static_cast<std::uint8_t>(fill);
}

auto OrderedColoring::set_color(int u, int v, int c) -> void
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw InvalidArgument("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
    if (c < 1 || c > q_)
        throw InvalidArgument("color " + std::to_string(c) + " outside [1, " + std::to_string(q_) + "]");
    colors_[u * n_ + v] = colors_[v * n_ + u] = static_cast<std::uint8_t>(c);
}

ColoredTournament::ColoredTournament(int n, int q) :
    n_(n), q_(q), arcs_(static_cast<std::size_t>(n) * n, 0)
{
    check_palette(n, q);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            arcs_[u * n + v] = 1;
}

auto ColoredTournament::transitive(const OrderedColoring & k) -> ColoredTournament
{
    ColoredTournament t(k.size(), k.q());
    for (int u = 0; u < k.size(); ++u)
        for (int v = u + 1; v < k.size(); ++v)
            t.set_arc(u, v, k.color(u, v));
    return t;
}

auto ColoredTournament::out_degree(int u) const -> int
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d += arcs_[u * n_ + v] != 0;
    return d;
}

auto ColoredTournament::set_arc(int u, int v, int c) -> void
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw InvalidArgument("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
    if (c < 1 || c > q_)
        throw InvalidArgument("color " + std::to_string(c) + " outside [1, " + std::to_string(q_) + "]");
    arcs_[u * n_ + v] = static_cast<std::uint8_t>(c);
    arcs_[v * n_ + u] = 0;
}

auto ColoredTournament::induced(std::span<const int> vertices) const -> ColoredTournament
{
    const int k = static_cast<int>(vertices.size());
    for (int v : vertices)
        if (v < 0 || v >= n_)
            throw InvalidArgument("induced: vertex out of range");
    ColoredTournament sub(k, q_);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b)
                sub.arcs_[a * k + b] = arcs_[vertices[a] * n_ + vertices[b]];
    return sub;
}

auto ColoredTournament::reversed() const -> ColoredTournament
{
    ColoredTournament rev(n_, q_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            rev.arcs_[u * n_ + v] = arcs_[v * n_ + u];
    return rev;
}

auto ConsistentOrderedGraph::non_neighbours(int a) const -> int
{
    int count = 0;
    for (int b = 0; b < size(); ++b)
        if (b != a && ! adjacent[a * size() + b])
            ++count;
    return count;
}

auto consistent_graph(const ColoredTournament & t, std::span<const int> order) -> ConsistentOrderedGraph
{
    check_permutation(order, t.size());
    const int n = t.size();
    ConsistentOrderedGraph g{{order.begin(), order.end()}, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t.beats(order[a], order[b]))
                g.adjacent[a * n + b] = g.adjacent[b * n + a] = 1;
    return g;
}

auto is_consistent_with(const ConsistentOrderedGraph & g, const ColoredTournament & t) -> bool
{
    const int n = g.size();
    if (n != t.size() || g.adjacent.size() != static_cast<std::size_t>(n) * n)
        return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool edge = g.adjacent[a * n + b] != 0;
            if (edge != (g.adjacent[b * n + a] != 0))
                return false;
            if (edge != t.beats(g.order[a], g.order[b]))
                return false;
        }
    return true;
}

auto backward_edge_count(const ColoredTournament & t, std::span<const int> order) -> std::int64_t
{
    check_permutation(order, t.size());
    std::int64_t count = 0;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (t.beats(order[b], order[a]))
                ++count;
    return count;
}

auto heuristic_transitive_order(const ColoredTournament & t, std::uint64_t seed) -> std::vector<int>
{
    const int n = t.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v)
        degree[v] = t.out_degree(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });

    for (bool improved = true; improved;) {
        improved = false;
        for (int i = 0; i + 1 < n; ++i)
            if (t.beats(order[i + 1], order[i])) {
                std::swap(order[i], order[i + 1]);
                improved = true;
            }
    }
    return order;
}

auto exact_min_backward_order(const ColoredTournament & t) -> OrderWithCost
{
    const int n = t.size();
    if (n > exact_order_limit)
        throw InvalidArgument("exact ordering is limited to N <= " + std::to_string(exact_order_limit));
    std::vector<std::uint32_t> out(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.beats(u, v))
                out[u] |= 1u << v;

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::int64_t> best(std::size_t{full} + 1, std::numeric_limits<std::int64_t>::max());
    std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
    best[0] = 0;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (best[mask] == std::numeric_limits<std::int64_t>::max())
            continue;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v))
                continue;
            // v goes after everything in mask; arcs from v back into mask are backward.
            std::int64_t cost = best[mask] + std::popcount(out[v] & mask);
            std::uint32_t next = mask | (1u << v);
            if (cost < best[next]) {
                best[next] = cost;
                last[next] = static_cast<std::int8_t>(v);
            }
        }
    }
    OrderWithCost result;
    result.backward = best[full];
    for (std::uint32_t mask = full; mask; mask &= ~(1u << last[mask]))
        result.order.push_back(last[mask]);
    std::reverse(result.order.begin(), result.order.end());
    return result;
}

auto canonical_pattern(const TrianglePattern & colors) -> TrianglePattern
{
    TrianglePattern best = colors;
    for (int shift = 1; shift < 3; ++shift) {
        TrianglePattern rotated{colors[shift % 3], colors[(shift + 1) % 3], colors[(shift + 2) % 3]};
        best = std::min(best, rotated);
    }
    return best;
}

auto triangle_colors(const ColoredTournament & t, const Triangle & tri) -> TrianglePattern
{
    return {t.arc_color(tri.a, tri.b), t.arc_color(tri.b, tri.c), t.arc_color(tri.c, tri.a)};
}

auto count_cyclic_triangles(const ColoredTournament & t) -> std::uint64_t
{
    return kernels::parallel::cyclic_triangle_count(t);
}

auto for_each_cyclic_triangle(const ColoredTournament & t, const std::function<void(const Triangle &)> & visit) -> void
{
    const int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                bool ab = t.beats(a, b), bc = t.beats(b, c), ca = t.beats(c, a);
                if (ab && bc && ca)
                    visit(Triangle{a, b, c});
                else if (! ab && ! bc && ! ca)
                    visit(Triangle{a, c, b});
            }
}

auto cyclic_triangles(const ColoredTournament & t) -> std::vector<Triangle>
{
    std::vector<Triangle> result;
    for_each_cyclic_triangle(t, [&](const Triangle & tri) { result.push_back(tri); });
    return result;
}

auto pattern_buckets(const ColoredTournament & t) -> std::map<TrianglePattern, std::vector<Triangle>>
{
    std::map<TrianglePattern, std::vector<Triangle>> buckets;
    for_each_cyclic_triangle(t, [&](const Triangle & tri) {
        buckets[canonical_pattern(triangle_colors(t, tri))].push_back(tri);
    });
    return buckets;
}

auto clean_degrees(const ColoredTournament & t, std::span<const int> order, const Rational & delta) -> CleanedTournament
{
    if (delta <= Rational(0) || delta >= Rational(1, 2))
        throw InvalidArgument("delta must lie strictly between 0 and 1/2");
    const std::int64_t n0 = t.size();
    const std::int64_t backward = backward_edge_count(t, order);
    if (Rational(backward) > delta * delta * Rational(n0 * n0))
        throw InvalidArgument("order has " + std::to_string(backward) + " backward edges, more than delta^2 N0^2 = "
            + std::to_string(boost::rational_cast<double>(delta * delta * Rational(n0 * n0))));

    // H0: the backward edges, indexed by position in `order`.
    std::vector<std::int64_t> degree(n0, 0);
    for (std::int64_t a = 0; a < n0; ++a)
        for (std::int64_t b = a + 1; b < n0; ++b)
            if (t.beats(order[b], order[a])) {
                ++degree[a];
                ++degree[b];
            }

    const Rational threshold = Rational(2) * delta * Rational(n0);
    CleanedTournament result{{}, ColoredTournament(0, t.q()), {}};
    for (std::int64_t a = 0; a < n0; ++a)
        if (Rational(degree[a]) <= threshold)
            result.kept.push_back(order[a]);
    result.sub = t.induced(result.kept);
    std::vector<int> identity(result.kept.size());
    std::iota(identity.begin(), identity.end(), 0);
    result.graph = consistent_graph(result.sub, identity);
    return result;
}

} // namespace rpods
