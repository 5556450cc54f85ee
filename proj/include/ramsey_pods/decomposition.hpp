#pragma once

// Path builders that follow the structure of the avoiding-path proofs:
// a period-3 path through cyclic triangles of one color pattern, the
// interval/ranking classification of colors, the anchor-and-block gluing
// structure, and a recursive color-avoiding path finder built on them.
// At desk scale none of the asymptotic guarantees apply, so every output is
// a certificate that is re-audited, never a claim.

#include <ramsey_pods/budget.hpp>
#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/io.hpp>
#include <ramsey_pods/paths.hpp>
#include <ramsey_pods/tournament.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rpods {

class NoCyclicTriangles : public Error
{
public:
    NoCyclicTriangles() : Error("tournament has no cyclic triangles") {}
};

class SupportTooHigh : public Error
{
public:
    explicit SupportTooHigh(int support) :
        Error("no triangle slot survives pruning at support " + std::to_string(support))
    {
    }
};

class DegenerateScale : public Error
{
public:
    using Error::Error;
};

class NotDiffuse : public Error
{
public:
    using Error::Error;
};

class AuditFailed : public Error
{
public:
    using Error::Error;
};

// ---------------------------------------------------------------- three colors

struct ThreeColorPath
{
    PathCertificate cert;
    /// Colors of (v0 -> v1, v1 -> v2, v2 -> v0); the path repeats them with period 3.
    TrianglePattern pattern{};
    int min_support = 1;
};

/// Largest canonical pattern bucket; slots (arc, position in pattern) lying
/// in fewer than min_support surviving triangles are pruned until stable,
/// then a path is grown greedily so that every three consecutive vertices
/// span a surviving triangle.  nullopt support means the largest threshold
/// that leaves a triangle.
auto three_color_path(const ColoredTournament & t, std::optional<int> min_support = std::nullopt) -> ThreeColorPath;

/// Checks: at most three colors, arcs v_j -> v_{j+1}, arcs v_{j+2} -> v_j,
/// and every color given by the pattern at position j mod 3.
auto audit_three_color_path(const ColoredTournament & t, const ThreeColorPath & p) -> std::optional<std::string>;

// ---------------------------------------------------------------- classification

/// Half-open position range [begin, end).
struct Interval
{
    int begin = 0;
    int end = 0;

    auto contains(int x) const -> bool { return begin <= x && x < end; }
    auto size() const -> int { return end - begin; }
};

struct ColorClass
{
    int ell = 0;
    bool ell_exact = true;
    bool is_long = false;
    bool left_condensed = false;
    bool right_condensed = false;
    /// ell_i(-> v) for v in A u B and ell_i(v ->) for v in C u D, indexed by position.
    std::vector<int> into;
    std::vector<int> out_of;
    /// Witness paths (positions) for `into` and `out_of`.
    std::vector<std::vector<int>> into_path;
    std::vector<std::vector<int>> out_path;
    /// Top-s positions; sorted ascending.
    std::vector<int> x;
    std::vector<int> y;

    auto condensed() const -> bool { return ! is_long && left_condensed && right_condensed; }
    auto left_diffuse() const -> bool { return ! is_long && ! left_condensed; }
    auto right_diffuse() const -> bool { return ! is_long && ! right_condensed; }
};

struct ColorClassification
{
    ProofParameters params;
    /// order[pos] is the tournament vertex at position pos.
    std::vector<int> order;
    Interval a, b, c, d;
    bool tables_exact = true;
    /// Indexed by color - 1.
    std::vector<ColorClass> colors;
    std::vector<int> long_colors;
    std::vector<int> condensed_colors;
    std::vector<int> left_diffuse;
    std::vector<int> right_diffuse;
    /// The first min(floor(p), |left_diffuse|) left-diffuse colors.
    std::vector<int> delta_l;

    auto color(int i) const -> const ColorClass & { return colors[i - 1]; }
};

/// Throws DegenerateScale when N < 16 s.  ell_i is exact for N <= 22 and a
/// budgeted search result beyond; the endpoint tables are exact for halves
/// of at most 22 vertices and forward-edge estimates otherwise.
auto classify_colors(const ColoredTournament & t, std::span<const int> order, const ProofParameters & params,
    const Budget & budget = Budget::nodes(20000)) -> ColorClassification;

/// Recomputes every flag and set from the stored ell values and rankings.
auto audit_classification(const ColoredTournament & t, const ColorClassification & cls) -> std::optional<std::string>;

// ---------------------------------------------------------------- gluing

struct GluingStructure
{
    /// Positions (in cls.order) of v_1 .. v_{t+1}.
    std::vector<int> anchors;
    /// Positions of S_1 .. S_t, each sorted.
    std::vector<std::vector<int>> blocks;
    std::vector<int> glue_colors;

    auto t() const -> int { return static_cast<int>(blocks.size()); }
};

enum class GluingMode
{
    /// The construction exactly as stated; AuditFailed if an invariant breaks.
    Strict,
    /// Drops block members whose anchor arcs break an invariant and stops at
    /// the first block that empties.
    Repair
};

/// Needs at least floor(p) left-diffuse colors (NotDiffuse otherwise).
auto build_gluing(const ColoredTournament & t, const ColorClassification & cls, GluingMode mode = GluingMode::Strict) -> GluingStructure;

/// Order v_1 < S_1 < v_2 < ..., arcs v_a -> S_a -> v_{a+1} in glue colors,
/// disjoint blocks, and |S_a| >= min_block.
auto audit_gluing(const ColoredTournament & t, const ColorClassification & cls, const GluingStructure & g, int min_block)
    -> std::optional<std::string>;

// ---------------------------------------------------------------- baseline and recursion

/// Smallest m with m^(q-1) >= N (m^2 >= N when q = 2; 1 when q = 1).
auto baseline_floor(int n, int q) -> int;

/// For each color i, the longest path found inside a maximal acyclic
/// subgraph of one color class or of one merged pair of classes that
/// excludes i.  Some color reaches baseline_floor(N, q).
auto constructive_baseline(const ColoredTournament & t, std::uint64_t seed = 0) -> std::vector<PathCertificate>;

struct RecursiveOptions
{
    Budget exact_budget = Budget::nodes(20000);
    int exact_floor = exact_path_limit;
    bool trace = false;
    std::uint64_t seed = 0;
};

struct AvoidingPath
{
    int color = 1;
    PathCertificate cert;
    /// Best path found for each color (index color - 1).
    std::vector<PathCertificate> per_color;
    /// One object per recursion node when tracing.
    std::vector<Json> trace;
};

auto recursive_color_avoiding(const ColoredTournament & t, const RecursiveOptions & options = {}) -> AvoidingPath;

} // namespace rpods
