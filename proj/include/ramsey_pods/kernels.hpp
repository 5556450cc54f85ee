#pragma once

// Data-parallel inner loops.  Every kernel has a serial reference that the
// tests compare against and the benchmark target times side by side.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace rpods {
class ColoredTournament;
}

namespace rpods::kernels {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Largest vertex count the 32-bit subset tables accept.
inline constexpr int max_subset_vertices = 22;

/// table[mask] has bit v set iff some path visiting exactly the vertices of
/// `mask` starts at v, moving only along arcs in out_masks[v].
namespace serial {
    auto path_start_table(std::span<const std::uint32_t> out_masks) -> std::vector<std::uint32_t>;
}
namespace parallel {
    auto path_start_table(std::span<const std::uint32_t> out_masks) -> std::vector<std::uint32_t>;
}

namespace serial {
    auto cyclic_triangle_count(const ColoredTournament & t) -> std::uint64_t;
}
namespace parallel {
    auto cyclic_triangle_count(const ColoredTournament & t) -> std::uint64_t;
}

/// rows[a] has bit b set iff point a <_r point b; points are `q` consecutive
/// entries of `coords`.
namespace serial {
    auto relation_rows(std::span<const int> coords, int q, int r) -> std::vector<Bits>;
}
namespace parallel {
    auto relation_rows(std::span<const int> coords, int q, int r) -> std::vector<Bits>;
}

} // namespace rpods::kernels
