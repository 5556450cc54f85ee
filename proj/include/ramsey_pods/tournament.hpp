#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace rpods {

/// Colors are 1..q with q <= max_palette; vertices are 0..N-1.
inline constexpr int max_palette = 63;

using Rational = boost::rational<std::int64_t>;

/// A q-edge-colored ordered complete graph: every pair u < v carries a color.
class OrderedColoring
{
public:
    OrderedColoring(int n, int q, int fill = 1);

    auto size() const -> int { return n_; }
    auto q() const -> int { return q_; }

    /// Color of the pair {u, v}, in either argument order.
    auto color(int u, int v) const -> int { return colors_[u * n_ + v]; }
    auto set_color(int u, int v, int c) -> void;

    friend auto operator==(const OrderedColoring &, const OrderedColoring &) -> bool = default;

private:
    int n_;
    int q_;
    std::vector<std::uint8_t> colors_;
};

/// A q-edge-colored tournament.  Every pair carries exactly one arc by
/// construction; the default is the transitive tournament u -> v for u < v
/// in color 1.
class ColoredTournament
{
public:
    ColoredTournament(int n, int q);

    /// The transitive tournament carrying K's colors.
    static auto transitive(const OrderedColoring & k) -> ColoredTournament;

    auto size() const -> int { return n_; }
    auto q() const -> int { return q_; }

    auto beats(int u, int v) const -> bool { return arcs_[u * n_ + v] != 0; }
    /// Color of the arc u -> v, or 0 when the arc points the other way.
    auto arc_color(int u, int v) const -> int { return arcs_[u * n_ + v]; }
    /// Color of the pair {u, v}, whatever its orientation.
    auto color(int u, int v) const -> int { return arcs_[u * n_ + v] | arcs_[v * n_ + u]; }
    auto out_degree(int u) const -> int;

    /// Orients {u, v} as u -> v with color c.
    auto set_arc(int u, int v, int c) -> void;

    /// Subtournament on the listed vertices, relabelled 0..k-1 in list order.
    auto induced(std::span<const int> vertices) const -> ColoredTournament;

    /// All arcs reversed, colors kept.
    auto reversed() const -> ColoredTournament;

    friend auto operator==(const ColoredTournament &, const ColoredTournament &) -> bool = default;

private:
    int n_;
    int q_;
    std::vector<std::uint8_t> arcs_;
};

/// An ordered graph on the positions 0..k-1 of `order`; position a < b are
/// adjacent iff order[a] -> order[b] in the associated tournament.
struct ConsistentOrderedGraph
{
    std::vector<int> order;
    std::vector<std::uint8_t> adjacent;

    auto size() const -> int { return static_cast<int>(order.size()); }
    auto is_edge(int a, int b) const -> bool { return adjacent[a * size() + b] != 0; }
    auto non_neighbours(int a) const -> int;
};

auto consistent_graph(const ColoredTournament & t, std::span<const int> order) -> ConsistentOrderedGraph;
auto is_consistent_with(const ConsistentOrderedGraph & g, const ColoredTournament & t) -> bool;

/// Pairs placed a-before-b whose arc points b -> a.  Throws on a malformed permutation.
auto backward_edge_count(const ColoredTournament & t, std::span<const int> order) -> std::int64_t;

/// Out-degree sort (ties by index, or seeded shuffle when seed != 0) followed
/// by adjacent-swap descent to a local optimum of backward_edge_count.
auto heuristic_transitive_order(const ColoredTournament & t, std::uint64_t seed = 0) -> std::vector<int>;

struct OrderWithCost
{
    std::vector<int> order;
    std::int64_t backward = 0;
};

/// Minimum feedback-arc ordering by subset DP; only for N <= exact_order_limit.
inline constexpr int exact_order_limit = 12;
auto exact_min_backward_order(const ColoredTournament & t) -> OrderWithCost;

/// A cyclic triangle listed along its cycle, a -> b -> c -> a, starting at its smallest vertex.
struct Triangle
{
    int a;
    int b;
    int c;

    friend auto operator<=>(const Triangle &, const Triangle &) = default;
};

/// Colors of (a->b, b->c, c->a) rotated to their lexicographically least rotation.
using TrianglePattern = std::array<int, 3>;

auto canonical_pattern(const TrianglePattern & colors) -> TrianglePattern;
auto triangle_colors(const ColoredTournament & t, const Triangle & tri) -> TrianglePattern;

auto count_cyclic_triangles(const ColoredTournament & t) -> std::uint64_t;
auto for_each_cyclic_triangle(const ColoredTournament & t, const std::function<void(const Triangle &)> & visit) -> void;
auto cyclic_triangles(const ColoredTournament & t) -> std::vector<Triangle>;

auto pattern_buckets(const ColoredTournament & t) -> std::map<TrianglePattern, std::vector<Triangle>>;

struct CleanedTournament
{
    /// Surviving vertices of the input, in the cleaning order.
    std::vector<int> kept;
    /// Induced on `kept`, relabelled so that the identity order is the cleaning order.
    ColoredTournament sub;
    ConsistentOrderedGraph graph;
};

/// Deletes every vertex whose backward-edge degree exceeds 2 delta N0.
/// Requires backward_edge_count(t, order) <= delta^2 N0^2 and 0 < delta < 1/2.
auto clean_degrees(const ColoredTournament & t, std::span<const int> order, const Rational & delta) -> CleanedTournament;

} // namespace rpods
