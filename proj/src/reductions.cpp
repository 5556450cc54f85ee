#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/reductions.hpp>

#include <algorithm>
#include <functional>
#include <string>

namespace rpods {

auto coloring_to_vectors(const OrderedColoring & k) -> VectorFamily
{
    const int q = k.q(), n = k.size();
    if (q < 2)
        throw InvalidArgument("coloring_to_vectors needs q >= 2");
    if (n == 0)
        throw InvalidArgument("coloring_to_vectors needs at least one vertex");
    std::vector<std::vector<int>> rows(n, std::vector<int>(q));
    int side = 1;
    for (int i = 1; i <= q; ++i) {
        auto ends = monotone_ending_lengths(k, full_mask(q) & ~(ColorMask{1} << i));
        for (int a = 0; a < n; ++a) {
            rows[a][i - 1] = ends[a];
            side = std::max(side, ends[a]);
        }
    }
    return VectorFamily::from_rows(q, side, q - 1, rows);
}

auto vectors_to_coloring(const VectorFamily & fam) -> OrderedColoring
{
    const int q = fam.q();
    if (q < 2 || fam.r() != q - 1)
        throw InvalidArgument("vectors_to_coloring needs r = q - 1 with q >= 2");
    if (fam.empty())
        throw InvalidArgument("vectors_to_coloring needs a non-empty family");
    if (auto cert = validate_increasing(fam); ! std::holds_alternative<Increasing>(cert)) {
        auto fail = std::get<FailPair>(cert);
        throw InvalidArgument("family is not (q-1)-increasing at pair (" + std::to_string(fail.a + 1) + ", "
            + std::to_string(fail.b + 1) + ")");
    }
    const int n = static_cast<int>(fam.size());
    OrderedColoring k(n, q);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int color = 1;
            for (int i = 0; i < q; ++i)
                if (fam[a][i] >= fam[b][i]) {
                    color = i + 1;
                    break;
                }
            k.set_color(a, b, color);
        }
    return k;
}

ColorPartition::ColorPartition(int q, std::vector<std::vector<int>> blocks) :
    q_(q), blocks_(std::move(blocks)), block_of_(q, 0)
{
    if (q < 1 || q > max_palette)
        throw InvalidArgument("palette size outside [1, 63]");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty())
            throw InvalidArgument("partition block " + std::to_string(b + 1) + " is empty");
        std::sort(blocks_[b].begin(), blocks_[b].end());
        for (int c : blocks_[b]) {
            if (c < 1 || c > q)
                throw InvalidArgument("partition mentions color " + std::to_string(c) + " outside [1, " + std::to_string(q) + "]");
            if (block_of_[c - 1])
                throw InvalidArgument("color " + std::to_string(c) + " appears in two blocks");
            block_of_[c - 1] = static_cast<int>(b) + 1;
        }
    }
    for (int c = 1; c <= q; ++c)
        if (! block_of_[c - 1])
            throw InvalidArgument("color " + std::to_string(c) + " is in no block");
}

auto ColorPartition::from_map(const std::vector<int> & block_of) -> ColorPartition
{
    int blocks = 0;
    for (int b : block_of) {
        if (b < 1)
            throw InvalidArgument("block labels start at 1");
        blocks = std::max(blocks, b);
    }
    std::vector<std::vector<int>> list(blocks);
    for (std::size_t c = 0; c < block_of.size(); ++c)
        list[block_of[c] - 1].push_back(static_cast<int>(c) + 1);
    for (int b = 0; b < blocks; ++b)
        if (list[b].empty())
            throw InvalidArgument("partition is not surjective: block " + std::to_string(b + 1) + " is empty");
    return ColorPartition(static_cast<int>(block_of.size()), std::move(list));
}

auto ColorPartition::identity(int q) -> ColorPartition
{
    std::vector<std::vector<int>> blocks;
    for (int c = 1; c <= q; ++c)
        blocks.push_back({c});
    return ColorPartition(q, std::move(blocks));
}

namespace
{
    auto check_palette_match(int q, const ColorPartition & partition) -> void
    {
        if (q != partition.q())
            throw InvalidArgument("partition is over q = " + std::to_string(partition.q()) + " but the instance has q = " + std::to_string(q));
    }
}

auto merge_colors(const OrderedColoring & k, const ColorPartition & partition) -> OrderedColoring
{
    check_palette_match(k.q(), partition);
    OrderedColoring out(k.size(), partition.size());
    for (int u = 0; u < k.size(); ++u)
        for (int v = u + 1; v < k.size(); ++v)
            out.set_color(u, v, partition.block_of(k.color(u, v)));
    return out;
}

auto merge_colors(const ColoredTournament & t, const ColorPartition & partition) -> ColoredTournament
{
    check_palette_match(t.q(), partition);
    ColoredTournament out(t.size(), partition.size());
    for (int u = 0; u < t.size(); ++u)
        for (int v = 0; v < t.size(); ++v)
            if (u != v && t.beats(u, v))
                out.set_arc(u, v, partition.block_of(t.arc_color(u, v)));
    return out;
}

auto pull_back(const PathCertificate & cert, const ColorPartition & partition) -> PathCertificate
{
    ColorMask blocks = allowed_mask(cert.constraint, partition.size());
    std::vector<int> colors;
    for (int c = 1; c <= partition.q(); ++c)
        if ((blocks >> partition.block_of(c)) & 1)
            colors.push_back(c);
    return PathCertificate{cert.mode, AllowedSet{colors}, cert.vertices};
}

auto max_colors_in_blocks(const ColorPartition & partition, int r_blocks) -> int
{
    std::vector<int> sizes;
    for (const auto & b : partition.blocks())
        sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    int total = 0;
    for (int j = 0; j < r_blocks && j < static_cast<int>(sizes.size()); ++j)
        total += sizes[j];
    return total;
}

auto floor_reduction(int q, int r) -> FloorReduction
{
    if (r < 1 || r >= q)
        throw InvalidArgument("floor reduction needs q > r >= 1");
    const int width = q - r;
    const int p = q / width;
    if (p < 2)
        throw InvalidArgument("floor(q / (q - r)) = " + std::to_string(p) + " < 2; the reduction does not apply");
    const int t = q - p * width;
    // After merging the last t + 1 colors, blocks are consecutive runs of
    // `width` classes; the final run absorbs the merged colors.
    std::vector<int> block_of(q);
    for (int c = 1; c <= q; ++c)
        block_of[c - 1] = std::min((c - 1) / width + 1, p);
    return FloorReduction{p, t, ColorPartition::from_map(block_of)};
}

} // namespace rpods
