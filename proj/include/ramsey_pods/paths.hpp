#pragma once

// Longest color-restricted paths.  Monotone paths in an ordered coloring go
// through an O(N^2) DAG DP; directed paths in a general tournament use the
// subset DP for N <= 22 and a budgeted DFS beyond.
//
// Path length is always the number of vertices.

#include <ramsey_pods/budget.hpp>
#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/tournament.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rpods {

using BigRational = boost::multiprecision::cpp_rational;

/// Bit c is set when color c (1..63) may be used.
using ColorMask = std::uint64_t;

auto full_mask(int q) -> ColorMask;
auto mask_of(const std::vector<int> & colors) -> ColorMask;
auto colors_of(ColorMask mask) -> std::vector<int>;

enum class PathMode
{
    Monotone,
    Directed
};

struct AvoidColor
{
    int color;

    friend auto operator==(const AvoidColor &, const AvoidColor &) -> bool = default;
};

struct AllowedSet
{
    std::vector<int> colors;

    friend auto operator==(const AllowedSet &, const AllowedSet &) -> bool = default;
};

using PathConstraint = std::variant<AvoidColor, AllowedSet>;

auto allowed_mask(const PathConstraint & c, int q) -> ColorMask;

struct PathCertificate
{
    PathMode mode = PathMode::Directed;
    PathConstraint constraint = AllowedSet{};
    std::vector<int> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }

    friend auto operator==(const PathCertificate &, const PathCertificate &) -> bool = default;
};

/// Thrown by the budgeted directed search; carries the longest path seen so far.
class PathBudgetExceeded : public BudgetExceeded
{
public:
    PathBudgetExceeded(PathCertificate best, std::uint64_t nodes) :
        BudgetExceeded("path search budget exhausted with a path of length " + std::to_string(best.length()), nodes),
        best_(std::move(best))
    {
    }

    auto best() const -> const PathCertificate & { return best_; }

private:
    PathCertificate best_;
};

// Monotone (ordered coloring) paths.

/// Longest monotone path whose edges all have colors in `allowed`; the
/// lexicographically least vertex sequence among optima.
auto longest_restricted_monotone(const OrderedColoring & k, const AllowedSet & allowed) -> PathCertificate;
auto longest_restricted_monotone_length(const OrderedColoring & k, ColorMask allowed) -> int;
auto ell_avoid_monotone(const OrderedColoring & k, int color) -> PathCertificate;

/// ends[v] = longest allowed monotone path ending at v.
auto monotone_ending_lengths(const OrderedColoring & k, ColorMask allowed) -> std::vector<int>;

/// Longest monotone path using at most r distinct colors (the f-value of K).
auto longest_at_most_r_monotone(const OrderedColoring & k, int r) -> PathCertificate;

// Directed paths.

inline constexpr int exact_path_limit = 22;

/// Exact longest directed path with colors in `allowed`.  Subset DP when
/// N <= exact_path_limit, otherwise DFS bounded by `budget`; on exhaustion
/// throws PathBudgetExceeded.
auto longest_restricted_directed_exact(const ColoredTournament & t, const AllowedSet & allowed, const Budget & budget = Budget::unlimited())
    -> PathCertificate;
auto longest_avoiding_directed_exact(const ColoredTournament & t, int color, const Budget & budget = Budget::unlimited())
    -> PathCertificate;

/// Longest directed path using at most r distinct colors (the g-value of T).
auto longest_at_most_r_directed(const ColoredTournament & t, int r, const Budget & budget = Budget::unlimited()) -> PathCertificate;

/// Per-vertex longest allowed paths ending at (or starting at) each vertex,
/// with a witness path for each.  Exact when N <= exact_path_limit; beyond
/// that only edges pointing forward in vertex-index order are used, which
/// gives valid paths and lower bounds.
struct EndpointTable
{
    std::vector<int> length;
    std::vector<std::vector<int>> witness;
    bool exact = true;
};

auto paths_ending_at(const ColoredTournament & t, ColorMask allowed) -> EndpointTable;
auto paths_starting_at(const ColoredTournament & t, ColorMask allowed) -> EndpointTable;

// Avoidance accounting.

struct AvoidanceProfile
{
    std::vector<int> ell;
    BigRational gamma;
    std::vector<BigRational> m;
    BigRational pi;
    /// Witness for each ell_i.
    std::vector<PathCertificate> paths;
};

auto avoidance_profile(const OrderedColoring & k, const BigRational & gamma) -> AvoidanceProfile;
auto avoidance_profile(const ColoredTournament & t, const BigRational & gamma, const Budget & budget = Budget::unlimited())
    -> AvoidanceProfile;

/// 1 / (2q 2^sqrt(log2 q)).
auto gamma_for(int q) -> double;

struct ProofParameters
{
    int q = 0;
    int n = 0;
    double gamma = 0;
    double p = 0;
    double raw_s = 0;
    int s = 1;
    double delta = 0;
};

/// s = floor(2 gamma N) (with a 1e-12 guard against representation error), clamped to >= 1.
auto proof_parameters(int q, int n) -> ProofParameters;

/// First violation, or nullopt when the certificate is valid for the instance.
auto validate_path(const OrderedColoring & k, const PathCertificate & cert) -> std::optional<std::string>;
auto validate_path(const ColoredTournament & t, const PathCertificate & cert) -> std::optional<std::string>;

} // namespace rpods
