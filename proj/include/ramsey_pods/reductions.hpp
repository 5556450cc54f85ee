#pragma once

// Vector families <-> ordered colorings (r = q - 1), and color merging.

#include <ramsey_pods/core.hpp>
#include <ramsey_pods/paths.hpp>
#include <ramsey_pods/tournament.hpp>

#include <vector>

namespace rpods {

/// x_a[i] = longest monotone path ending at a that avoids color i + 1.
/// The result is (q-1)-increasing in [n]^q with n the largest entry.
auto coloring_to_vectors(const OrderedColoring & k) -> VectorFamily;

/// Edge a < b gets the unique coordinate (1-based) where x_a does not grow,
/// or color 1 when every coordinate grows.  Requires a (q-1)-increasing family.
auto vectors_to_coloring(const VectorFamily & fam) -> OrderedColoring;

/// A partition of the palette [q] into blocks labelled 1..q' in list order.
class ColorPartition
{
public:
    /// Throws unless the blocks cover 1..q exactly once with no empty block.
    ColorPartition(int q, std::vector<std::vector<int>> blocks);

    /// block_of[c - 1] is the block label of color c; labels must cover 1..q'.
    static auto from_map(const std::vector<int> & block_of) -> ColorPartition;
    static auto identity(int q) -> ColorPartition;

    auto q() const -> int { return q_; }
    auto size() const -> int { return static_cast<int>(blocks_.size()); }
    auto blocks() const -> const std::vector<std::vector<int>> & { return blocks_; }
    auto block_of(int color) const -> int { return block_of_[color - 1]; }
    auto block_size(int label) const -> int { return static_cast<int>(blocks_[label - 1].size()); }

    friend auto operator==(const ColorPartition &, const ColorPartition &) -> bool = default;

private:
    int q_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

auto merge_colors(const OrderedColoring & k, const ColorPartition & partition) -> OrderedColoring;
auto merge_colors(const ColoredTournament & t, const ColorPartition & partition) -> ColoredTournament;

/// Rewrites a certificate on the merged instance as one on the original:
/// the constraint becomes the union of the allowed blocks.
auto pull_back(const PathCertificate & cert, const ColorPartition & partition) -> PathCertificate;

/// Largest number of original colors a path confined to r' blocks can see.
auto max_colors_in_blocks(const ColorPartition & partition, int r_blocks) -> int;

struct FloorReduction
{
    int p = 0;
    int t = 0;
    ColorPartition partition;
};

/// p = floor(q / (q - r)), t = q - p (q - r): the last t + 1 colors merge
/// into one, then the q - t remaining classes form p blocks of q - r.
auto floor_reduction(int q, int r) -> FloorReduction;

} // namespace rpods
