#include <ramsey_pods/kernels.hpp>
#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/tournament.hpp>

#include <bit>

namespace rpods::kernels {

namespace
{
    auto check_subset_size(std::size_t n) -> void
    {
        if (n > static_cast<std::size_t>(max_subset_vertices))
            throw InvalidArgument("subset tables are limited to " + std::to_string(max_subset_vertices) + " vertices");
    }

    inline auto start_entry(const std::vector<std::uint32_t> & table, std::span<const std::uint32_t> out, std::uint32_t mask) -> std::uint32_t
    {
        std::uint32_t result = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint32_t without = mask & ~(1u << v);
            if (without == 0 || (table[without] & out[v]))
                result |= 1u << v;
        }
        return result;
    }

    // Next mask with the same popcount (Gosper).
    inline auto next_same_popcount(std::uint32_t x) -> std::uint32_t
    {
        std::uint32_t c = x & -x;
        std::uint32_t r = x + c;
        return (((r ^ x) >> 2) / c) | r;
    }

    auto cyclic_through(const ColoredTournament & t, int a) -> std::uint64_t
    {
        const int n = t.size();
        std::uint64_t count = 0;
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                bool ab = t.beats(a, b), bc = t.beats(b, c), ca = t.beats(c, a);
                if ((ab && bc && ca) || (! ab && ! bc && ! ca))
                    ++count;
            }
        return count;
    }

    auto relation_row(std::span<const int> coords, int q, int r, std::size_t a) -> Bits
    {
        const std::size_t points = coords.size() / q;
        Bits row(points);
        const int * x = coords.data() + a * q;
        for (std::size_t b = 0; b < points; ++b) {
            const int * y = coords.data() + b * q;
            int strict = 0;
            for (int i = 0; i < q; ++i)
                strict += x[i] < y[i];
            if (strict >= r)
                row.set(b);
        }
        return row;
    }
}

namespace serial {

auto path_start_table(std::span<const std::uint32_t> out) -> std::vector<std::uint32_t>
{
    check_subset_size(out.size());
    const std::uint32_t full = out.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << out.size()) - 1);
    std::vector<std::uint32_t> table(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask)
        table[mask] = start_entry(table, out, mask);
    return table;
}

auto cyclic_triangle_count(const ColoredTournament & t) -> std::uint64_t
{
    std::uint64_t total = 0;
    for (int a = 0; a < t.size(); ++a)
        total += cyclic_through(t, a);
    return total;
}

auto relation_rows(std::span<const int> coords, int q, int r) -> std::vector<Bits>
{
    const std::size_t points = coords.size() / q;
    std::vector<Bits> rows(points);
    for (std::size_t a = 0; a < points; ++a)
        rows[a] = relation_row(coords, q, r, a);
    return rows;
}

} // namespace serial

namespace parallel {

auto path_start_table(std::span<const std::uint32_t> out) -> std::vector<std::uint32_t>
{
    check_subset_size(out.size());
    const int n = static_cast<int>(out.size());
    std::vector<std::uint32_t> table(std::size_t{1} << n, 0);
    // Entries of popcount k only read entries of popcount k - 1.
    std::vector<std::uint32_t> layer;
    for (int k = 1; k <= n; ++k) {
        layer.clear();
        std::uint32_t limit = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
        for (std::uint32_t mask = (1u << k) - 1;; mask = next_same_popcount(mask)) {
            layer.push_back(mask);
            if (mask == (limit & ~((1u << (n - k)) - 1)))
                break;
        }
        const std::int64_t count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i)
            table[layer[i]] = start_entry(table, out, layer[i]);
    }
    return table;
}

auto cyclic_triangle_count(const ColoredTournament & t) -> std::uint64_t
{
    std::uint64_t total = 0;
    const int n = t.size();
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
    for (int a = 0; a < n; ++a)
        total += cyclic_through(t, a);
    return total;
}

auto relation_rows(std::span<const int> coords, int q, int r) -> std::vector<Bits>
{
    const std::int64_t points = static_cast<std::int64_t>(coords.size() / q);
    std::vector<Bits> rows(points);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < points; ++a)
        rows[a] = relation_row(coords, q, r, static_cast<std::size_t>(a));
    return rows;
}

} // namespace parallel

} // namespace rpods::kernels
