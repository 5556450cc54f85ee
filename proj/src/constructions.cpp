#include <ramsey_pods/constructions.hpp>
#include <ramsey_pods/errors.hpp>

#include <string>

namespace rpods {

namespace
{
    auto check_size(long long n) -> void
    {
        if (n > max_product_vertices)
            throw InvalidArgument("product would have " + std::to_string(n) + " vertices; the limit is "
                + std::to_string(max_product_vertices));
    }
}

auto lex_product(const OrderedColoring & inner, const OrderedColoring & outer) -> OrderedColoring
{
    if (inner.q() != outer.q())
        throw InvalidArgument("lex product needs a shared palette, got q = " + std::to_string(inner.q()) + " and "
            + std::to_string(outer.q()));
    const int n1 = inner.size(), n2 = outer.size();
    check_size(static_cast<long long>(n1) * n2);
    OrderedColoring k(n1 * n2, inner.q());
    for (int u = 0; u < n1 * n2; ++u)
        for (int v = u + 1; v < n1 * n2; ++v) {
            int bu = u / n1, bv = v / n1;
            k.set_color(u, v, bu == bv ? inner.color(u % n1, v % n1) : outer.color(bu, bv));
        }
    return k;
}

auto product_boost_vectors(const VectorFamily & a, const VectorFamily & b) -> VectorFamily
{
    if (a.q() != b.q() || a.r() != b.r())
        throw InvalidArgument("boost factors need the same q and r");
    if (a.empty() || b.empty())
        throw InvalidArgument("boost factors must be non-empty");
    if (! std::holds_alternative<Increasing>(validate_increasing(a)) || ! std::holds_alternative<Increasing>(validate_increasing(b)))
        throw InvalidArgument("boost factors must be r-increasing");
    const int q = a.q(), n2 = b.n();
    const long long side = static_cast<long long>(a.n()) * n2;
    if (side > 1'000'000)
        throw InvalidArgument("boost ambient side too large");

    std::vector<GridVector> out;
    out.reserve(a.size() * b.size());
    for (const auto & x : a.vectors())
        for (const auto & y : b.vectors()) {
            std::vector<int> z(q);
            for (int i = 0; i < q; ++i)
                z[i] = (x[i] - 1) * n2 + y[i];
            out.emplace_back(std::move(z), static_cast<int>(side));
        }
    VectorFamily fam({q, static_cast<int>(side)}, a.r(), std::move(out));
    if (! std::holds_alternative<Increasing>(validate_increasing(fam)))
        throw Error("boost product failed validation");
    return fam;
}

auto canonical_color(int q, int m, long long u, long long v) -> int
{
    int digit = -1;
    for (int t = 0; t < q; ++t) {
        if (u % m != v % m)
            digit = t;
        u /= m;
        v /= m;
    }
    return digit + 1;
}

auto canonical_coloring(int q, int m) -> OrderedColoring
{
    if (q < 1 || q > max_palette)
        throw InvalidArgument("q outside [1, 63]");
    if (m < 1)
        throw InvalidArgument("m must be positive");
    long long n = 1;
    for (int t = 0; t < q; ++t) {
        n *= m;
        check_size(n);
    }
    OrderedColoring k(static_cast<int>(n), q);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            k.set_color(u, v, canonical_color(q, m, u, v));
    return k;
}

auto shift_colors(const OrderedColoring & k, int t) -> OrderedColoring
{
    const int q = k.q();
    OrderedColoring out(k.size(), q);
    for (int u = 0; u < k.size(); ++u)
        for (int v = u + 1; v < k.size(); ++v)
            out.set_color(u, v, ((k.color(u, v) + t - 2) % q + q) % q + 1);
    return out;
}

auto balance_coloring(const OrderedColoring & k) -> OrderedColoring
{
    long long n = 1;
    for (int t = 0; t < k.q(); ++t) {
        n *= k.size();
        check_size(n);
    }
    OrderedColoring result = shift_colors(k, 1);
    for (int t = 2; t <= k.q(); ++t)
        result = lex_product(result, shift_colors(k, t));
    return result;
}

} // namespace rpods
