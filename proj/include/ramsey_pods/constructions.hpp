#pragma once

// Lower-bound constructions: lexicographic products of ordered colorings,
// the base-n2 product of increasing vector families, the canonical
// N^{r/q} coloring and the color-balancing product.

#include <ramsey_pods/core.hpp>
#include <ramsey_pods/tournament.hpp>

namespace rpods {

/// Largest vertex count a materialized product may have.
inline constexpr int max_product_vertices = 8192;

/// Each vertex of `outer` becomes an interval carrying a copy of `inner`;
/// edges between intervals take the outer color.  Vertex (b, a) of the
/// product is b * |inner| + a.
auto lex_product(const OrderedColoring & inner, const OrderedColoring & outer) -> OrderedColoring;

/// z_i = (x_i - 1) n2 + y_i over pairs (x, y) in A x B, listed lexicographically.
/// Both inputs must be r-increasing with the same q and r; the output is
/// re-validated before it is returned.
auto product_boost_vectors(const VectorFamily & a, const VectorFamily & b) -> VectorFamily;

/// Color of {u, v} in canonical_coloring(q, m) without building it: one plus
/// the index of the highest base-m digit where u and v differ.
auto canonical_color(int q, int m, long long u, long long v) -> int;

/// The q-fold lexicographic product of monochromatic m-cliques, colors 1..q.
auto canonical_coloring(int q, int m) -> OrderedColoring;

/// K with every color c replaced by ((c + t - 2) mod q) + 1.
auto shift_colors(const OrderedColoring & k, int t) -> OrderedColoring;

/// K_1 (x) K_2 (x) ... (x) K_q with K_t = shift_colors(K, t).
auto balance_coloring(const OrderedColoring & k) -> OrderedColoring;

} // namespace rpods
