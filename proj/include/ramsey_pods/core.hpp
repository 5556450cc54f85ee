#pragma once

// Grid vectors in [n]^q, the relation <_r, and certificates for r-increasing
// sequences and r-comparable sets.
//
// Indices (vector positions, coordinates) are 0-based in this API; the JSON
// and CSV formats in io.hpp shift them to 1-based.

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace rpods {

struct Ambient
{
    int q = 0;
    int n = 0;

    friend auto operator==(const Ambient &, const Ambient &) -> bool = default;
};

class GridVector
{
public:
    /// Throws InvalidArgument unless every coordinate lies in [1, n].
    GridVector(std::vector<int> coords, int n);

    auto coords() const -> const std::vector<int> & { return coords_; }
    auto q() const -> int { return static_cast<int>(coords_.size()); }
    auto n() const -> int { return n_; }
    auto ambient() const -> Ambient { return {q(), n_}; }
    auto operator[](std::size_t i) const -> int { return coords_[i]; }

    friend auto operator==(const GridVector &, const GridVector &) -> bool = default;

private:
    std::vector<int> coords_;
    int n_;
};

class VectorFamily
{
public:
    VectorFamily(Ambient ambient, int r, std::vector<GridVector> vectors);

    static auto from_rows(int q, int n, int r, const std::vector<std::vector<int>> & rows) -> VectorFamily;

    auto ambient() const -> Ambient { return ambient_; }
    auto q() const -> int { return ambient_.q; }
    auto n() const -> int { return ambient_.n; }
    auto r() const -> int { return r_; }
    auto size() const -> std::size_t { return vectors_.size(); }
    auto empty() const -> bool { return vectors_.empty(); }
    auto operator[](std::size_t i) const -> const GridVector & { return vectors_[i]; }
    auto vectors() const -> const std::vector<GridVector> & { return vectors_; }
    auto rows() const -> std::vector<std::vector<int>>;

    /// The family listed in the order perm[0], perm[1], ...
    auto reordered(std::span<const int> perm) const -> VectorFamily;

    /// Drops the last t coordinates and lowers the threshold to r - t.
    auto delete_last_coordinates(int t) const -> VectorFamily;

private:
    Ambient ambient_;
    int r_;
    std::vector<GridVector> vectors_;
};

enum class Relation
{
    Forward,
    Backward,
    Both,
    Incomparable
};

/// |{i : x_i < y_i}| >= r.
auto less_r(const GridVector & x, const GridVector & y, int r) -> bool;

auto compare_r(const GridVector & x, const GridVector & y, int r) -> Relation;

/// Coordinates where x is strictly below y.
auto strict_coordinates(const GridVector & x, const GridVector & y) -> std::vector<int>;

struct Increasing
{
};

struct Comparable
{
};

struct FailPair
{
    int a;
    int b;

    friend auto operator==(const FailPair &, const FailPair &) -> bool = default;
};

/// x <_r y <_r z <_r x, with witness_a = {i : x_i < y_i} and so on.
struct CyclicTriple
{
    int x;
    int y;
    int z;
    std::vector<int> witness_a;
    std::vector<int> witness_b;
    std::vector<int> witness_c;

    friend auto operator==(const CyclicTriple &, const CyclicTriple &) -> bool = default;
};

using ComparabilityCertificate = std::variant<Increasing, Comparable, FailPair, CyclicTriple>;

/// Increasing, or the lexicographically first failing pair a < b.
auto validate_increasing(const VectorFamily & fam) -> ComparabilityCertificate;

/// Comparable, or the lexicographically first pair comparable in neither
/// direction.  Duplicates always fail.
auto validate_comparable(const VectorFamily & fam) -> ComparabilityCertificate;

/// The lexicographically first index triple forming a cycle under <_r.
/// Throws InvalidArgument if fam is not r-comparable.
auto find_cyclic_triple(const VectorFamily & fam) -> std::optional<CyclicTriple>;

/// Re-derives the witness sets and checks |A|,|B|,|C| >= r and the three relations.
auto audit_cyclic_triple(const VectorFamily & fam, const CyclicTriple & triple) -> bool;

using OrderOrCycle = std::variant<std::vector<int>, CyclicTriple>;

/// Repeated smallest-index source selection on the comparability tournament
/// (antiparallel pairs oriented toward the higher index).  Returns a
/// permutation making the family r-increasing, or the first cyclic triangle
/// of that tournament.
auto transitive_order(const VectorFamily & fam) -> OrderOrCycle;

} // namespace rpods
