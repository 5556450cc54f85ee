#pragma once

// Aligned (q,r)-pods: the (r-1)-dimensional faces of a side-n cube that meet
// at its minimal corner (the apex).

#include <ramsey_pods/core.hpp>
#include <ramsey_pods/tournament.hpp>

#include <optional>
#include <vector>

namespace rpods {

struct Pod
{
    int r;
    GridVector apex;

    auto q() const -> int { return apex.q(); }
    auto n() const -> int { return apex.n(); }
};

using Voxel = std::vector<int>;

/// Sorted list of voxels apex + offset, offset in [0, n-1]^q with at most r-1 non-zero entries.
auto pod_voxels(const Pod & pod) -> std::vector<Voxel>;

/// sum_{k < r} C(q, k) (n - 1)^k.
auto pod_volume(int q, int r, int n) -> long long;

/// Voxel-set intersection test.
auto pods_disjoint_voxel(const Pod & a, const Pod & b) -> bool;

/// Apex comparability test.
auto pods_disjoint_fast(const Pod & a, const Pod & b) -> bool;

/// Coordinatewise maximum of the apices; lies in both pods whenever they meet.
auto shared_voxel(const Pod & a, const Pod & b) -> std::optional<Voxel>;

class Packing
{
public:
    Packing(int q, int r, int n, std::vector<GridVector> apices);

    auto q() const -> int { return q_; }
    auto r() const -> int { return r_; }
    auto n() const -> int { return n_; }
    auto apices() const -> const std::vector<GridVector> & { return apices_; }
    auto size() const -> std::size_t { return apices_.size(); }
    auto pod(std::size_t i) const -> Pod { return Pod{r_, apices_[i]}; }

    auto valid() const -> bool { return ! first_overlap_; }
    /// First overlapping pair (0-based), if any.
    auto first_overlap() const -> std::optional<FailPair> { return first_overlap_; }

private:
    int q_;
    int r_;
    int n_;
    std::vector<GridVector> apices_;
    std::optional<FailPair> first_overlap_;
};

/// |pods| * |voxels per pod| / (2n - 1)^q.  Throws on an invalid packing.
auto packing_density(const Packing & packing) -> Rational;

} // namespace rpods
