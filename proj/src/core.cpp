#include <ramsey_pods/core.hpp>
#include <ramsey_pods/errors.hpp>

#include <algorithm>
#include <string>

namespace rpods {

namespace
{
    auto check_pair(const GridVector & x, const GridVector & y, int r) -> void
    {
        if (x.ambient() != y.ambient())
            throw InvalidArgument("vectors live in different ambients");
        if (r < 1 || r > x.q())
            throw InvalidArgument("threshold r = " + std::to_string(r) + " outside [1, " + std::to_string(x.q()) + "]");
    }

    auto count_strict(const GridVector & x, const GridVector & y) -> int
    {
        int count = 0;
        for (int i = 0; i < x.q(); ++i)
            count += x[i] < y[i];
        return count;
    }
}

GridVector::GridVector(std::vector<int> coords, int n) :
    coords_(std::move(coords)), n_(n)
{
    if (n_ < 1)
        throw InvalidArgument("grid side n must be positive");
    if (coords_.empty())
        throw InvalidArgument("grid vector needs at least one coordinate");
    for (int c : coords_)
        if (c < 1 || c > n_)
            throw InvalidArgument("coordinate " + std::to_string(c) + " outside [1, " + std::to_string(n_) + "]");
}

VectorFamily::VectorFamily(Ambient ambient, int r, std::vector<GridVector> vectors) :
    ambient_(ambient), r_(r), vectors_(std::move(vectors))
{
    if (ambient_.q < 1 || ambient_.n < 1)
        throw InvalidArgument("ambient needs q >= 1 and n >= 1");
    if (r_ < 1 || r_ > ambient_.q)
        throw InvalidArgument("threshold r = " + std::to_string(r_) + " outside [1, " + std::to_string(ambient_.q) + "]");
    for (const auto & v : vectors_)
        if (v.ambient() != ambient_)
            throw InvalidArgument("family member does not share the family ambient");
}

auto VectorFamily::from_rows(int q, int n, int r, const std::vector<std::vector<int>> & rows) -> VectorFamily
{
    std::vector<GridVector> vectors;
    vectors.reserve(rows.size());
    for (const auto & row : rows) {
        if (static_cast<int>(row.size()) != q)
            throw InvalidArgument("row has " + std::to_string(row.size()) + " coordinates, expected " + std::to_string(q));
        vectors.emplace_back(row, n);
    }
    return VectorFamily{{q, n}, r, std::move(vectors)};
}

auto VectorFamily::rows() const -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> result;
    result.reserve(vectors_.size());
    for (const auto & v : vectors_)
        result.push_back(v.coords());
    return result;
}

auto VectorFamily::reordered(std::span<const int> perm) const -> VectorFamily
{
    if (perm.size() != vectors_.size())
        throw InvalidArgument("permutation length does not match family size");
    std::vector<bool> seen(vectors_.size(), false);
    std::vector<GridVector> out;
    out.reserve(perm.size());
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(vectors_.size()) || seen[p])
            throw InvalidArgument("malformed permutation");
        seen[p] = true;
        out.push_back(vectors_[p]);
    }
    return VectorFamily{ambient_, r_, std::move(out)};
}

auto VectorFamily::delete_last_coordinates(int t) const -> VectorFamily
{
    if (t < 0 || t >= r_)
        throw InvalidArgument("can only delete t < r coordinates");
    std::vector<std::vector<int>> shortened;
    for (const auto & v : vectors_)
        shortened.emplace_back(v.coords().begin(), v.coords().end() - t);
    return from_rows(ambient_.q - t, ambient_.n, r_ - t, shortened);
}

auto less_r(const GridVector & x, const GridVector & y, int r) -> bool
{
    check_pair(x, y, r);
    return count_strict(x, y) >= r;
}

auto compare_r(const GridVector & x, const GridVector & y, int r) -> Relation
{
    check_pair(x, y, r);
    bool forward = count_strict(x, y) >= r;
    bool backward = count_strict(y, x) >= r;
    if (forward && backward)
        return Relation::Both;
    if (forward)
        return Relation::Forward;
    if (backward)
        return Relation::Backward;
    return Relation::Incomparable;
}

auto strict_coordinates(const GridVector & x, const GridVector & y) -> std::vector<int>
{
    std::vector<int> result;
    for (int i = 0; i < std::min(x.q(), y.q()); ++i)
        if (x[i] < y[i])
            result.push_back(i);
    return result;
}

auto validate_increasing(const VectorFamily & fam) -> ComparabilityCertificate
{
    if (fam.empty())
        throw InvalidArgument("validate_increasing needs a nonempty family");
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
            if (! less_r(fam[a], fam[b], fam.r()))
                return FailPair{static_cast<int>(a), static_cast<int>(b)};
    return Increasing{};
}

auto validate_comparable(const VectorFamily & fam) -> ComparabilityCertificate
{
    if (fam.empty())
        throw InvalidArgument("validate_comparable needs a nonempty family");
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
            if (compare_r(fam[a], fam[b], fam.r()) == Relation::Incomparable)
                return FailPair{static_cast<int>(a), static_cast<int>(b)};
    return Comparable{};
}

namespace
{
    auto make_triple(const VectorFamily & fam, int x, int y, int z) -> CyclicTriple
    {
        return CyclicTriple{x, y, z,
            strict_coordinates(fam[x], fam[y]),
            strict_coordinates(fam[y], fam[z]),
            strict_coordinates(fam[z], fam[x])};
    }

    auto require_comparable(const VectorFamily & fam) -> void
    {
        if (! std::holds_alternative<Comparable>(validate_comparable(fam)))
            throw InvalidArgument("family is not r-comparable");
    }
}

auto find_cyclic_triple(const VectorFamily & fam) -> std::optional<CyclicTriple>
{
    require_comparable(fam);
    const int size = static_cast<int>(fam.size());
    std::vector<char> less(size * size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (a != b)
                less[a * size + b] = less_r(fam[a], fam[b], fam.r());

    // The first cycle in lexicographic (x, y, z) order always starts at its
    // minimum index, so x < y, z suffices.
    for (int x = 0; x < size; ++x)
        for (int y = x + 1; y < size; ++y) {
            if (! less[x * size + y])
                continue;
            for (int z = x + 1; z < size; ++z)
                if (z != y && less[y * size + z] && less[z * size + x])
                    return make_triple(fam, x, y, z);
        }
    return std::nullopt;
}

auto audit_cyclic_triple(const VectorFamily & fam, const CyclicTriple & t) -> bool
{
    const int size = static_cast<int>(fam.size());
    for (int i : {t.x, t.y, t.z})
        if (i < 0 || i >= size)
            return false;
    if (t.x == t.y || t.y == t.z || t.x == t.z)
        return false;
    auto check = [&](int u, int v, const std::vector<int> & witness) {
        return witness == strict_coordinates(fam[u], fam[v])
            && static_cast<int>(witness.size()) >= fam.r();
    };
    return check(t.x, t.y, t.witness_a) && check(t.y, t.z, t.witness_b) && check(t.z, t.x, t.witness_c);
}

auto transitive_order(const VectorFamily & fam) -> OrderOrCycle
{
    require_comparable(fam);
    const int size = static_cast<int>(fam.size());

    // arc[a * size + b] means a -> b in the comparability tournament.
    std::vector<char> arc(size * size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) {
            switch (compare_r(fam[a], fam[b], fam.r())) {
                case Relation::Forward:
                case Relation::Both:
                    arc[a * size + b] = 1;
                    break;
                case Relation::Backward:
                    arc[b * size + a] = 1;
                    break;
                case Relation::Incomparable:
                    break;
            }
        }

    std::vector<int> in_degree(size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            in_degree[b] += arc[a * size + b];

    std::vector<bool> placed(size, false);
    std::vector<int> order;
    order.reserve(size);
    for (int step = 0; step < size; ++step) {
        int source = -1;
        for (int v = 0; v < size && source < 0; ++v)
            if (! placed[v] && in_degree[v] == 0)
                source = v;
        if (source < 0)
            break;
        placed[source] = true;
        order.push_back(source);
        for (int b = 0; b < size; ++b)
            if (arc[source * size + b])
                --in_degree[b];
    }
    if (static_cast<int>(order.size()) == size)
        return order;

    // A tournament with no source among the remaining vertices has a cycle,
    // hence a cyclic triangle.
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            if (! arc[x * size + y])
                continue;
            for (int z = 0; z < size; ++z)
                if (arc[y * size + z] && arc[z * size + x])
                    return make_triple(fam, x, y, z);
        }
    throw Error("comparability tournament has no source and no cyclic triangle");
}

} // namespace rpods
