#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/pods.hpp>

#include <algorithm>
#include <string>

namespace rpods {

namespace
{
    auto check_pod(const Pod & p) -> void
    {
        if (p.r < 1 || p.r > p.q())
            throw InvalidArgument("pod needs 1 <= r <= q");
    }

    auto check_pair(const Pod & a, const Pod & b) -> void
    {
        check_pod(a);
        check_pod(b);
        if (a.r != b.r || a.apex.ambient() != b.apex.ambient())
            throw InvalidArgument("pods have different (q, r, n)");
    }
}

auto pod_voxels(const Pod & pod) -> std::vector<Voxel>
{
    check_pod(pod);
    const int q = pod.q(), n = pod.n();
    std::vector<Voxel> voxels;
    // Odometer over [0, n-1]^q, skipping offsets with r or more non-zero entries.
    std::vector<int> offset(q, 0);
    while (true) {
        int support = static_cast<int>(std::count_if(offset.begin(), offset.end(), [](int o) { return o != 0; }));
        if (support < pod.r) {
            Voxel v(q);
            for (int i = 0; i < q; ++i)
                v[i] = pod.apex[i] + offset[i];
            voxels.push_back(std::move(v));
        }
        int i = q - 1;
        while (i >= 0 && offset[i] == n - 1)
            offset[i--] = 0;
        if (i < 0)
            break;
        ++offset[i];
    }
    std::sort(voxels.begin(), voxels.end());
    return voxels;
}

auto pod_volume(int q, int r, int n) -> long long
{
    long long total = 0, binom = 1, power = 1;
    for (int k = 0; k < r; ++k) {
        total += binom * power;
        binom = binom * (q - k) / (k + 1);
        power *= n - 1;
    }
    return total;
}

auto pods_disjoint_voxel(const Pod & a, const Pod & b) -> bool
{
    check_pair(a, b);
    auto va = pod_voxels(a), vb = pod_voxels(b);
    std::vector<Voxel> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    return common.empty();
}

auto pods_disjoint_fast(const Pod & a, const Pod & b) -> bool
{
    check_pair(a, b);
    return compare_r(a.apex, b.apex, a.r) != Relation::Incomparable;
}

auto shared_voxel(const Pod & a, const Pod & b) -> std::optional<Voxel>
{
    check_pair(a, b);
    if (pods_disjoint_fast(a, b))
        return std::nullopt;
    Voxel z(a.q());
    for (int i = 0; i < a.q(); ++i)
        z[i] = std::max(a.apex[i], b.apex[i]);
    return z;
}

Packing::Packing(int q, int r, int n, std::vector<GridVector> apices) :
    q_(q), r_(r), n_(n), apices_(std::move(apices))
{
    if (q < 1 || n < 1 || r < 1 || r > q)
        throw InvalidArgument("packing needs q, n >= 1 and 1 <= r <= q");
    for (const auto & a : apices_)
        if (a.ambient() != Ambient{q, n})
            throw InvalidArgument("apex outside [n]^q");
    for (std::size_t a = 0; a < apices_.size() && ! first_overlap_; ++a)
        for (std::size_t b = a + 1; b < apices_.size(); ++b)
            if (compare_r(apices_[a], apices_[b], r_) == Relation::Incomparable) {
                first_overlap_ = FailPair{static_cast<int>(a), static_cast<int>(b)};
                break;
            }
}

auto packing_density(const Packing & packing) -> Rational
{
    if (! packing.valid())
        throw InvalidArgument("packing has overlapping pods");
    std::int64_t box = 1;
    for (int i = 0; i < packing.q(); ++i)
        box *= 2 * packing.n() - 1;
    return Rational(static_cast<std::int64_t>(packing.size()) * pod_volume(packing.q(), packing.r(), packing.n()), box);
}

} // namespace rpods
