#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/kernels.hpp>
#include <ramsey_pods/paths.hpp>
#include <ramsey_pods/search.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace rpods {

using kernels::Bits;

auto kind_name(Kind k) -> std::string
{
    switch (k) {
    case Kind::F: return "F";
    case Kind::G: return "G";
    case Kind::f: return "f";
    case Kind::g: return "g";
    }
    return "?";
}

auto parse_kind(std::string_view s) -> Kind
{
    if (s == "F")
        return Kind::F;
    if (s == "G")
        return Kind::G;
    if (s == "f")
        return Kind::f;
    if (s == "g")
        return Kind::g;
    throw InvalidArgument("unknown kind '" + std::string(s) + "' (expected F, G, f or g)");
}

auto status_name(Status s) -> std::string
{
    switch (s) {
    case Status::Exact: return "exact";
    case Status::LowerBound: return "lower_bound";
    case Status::UpperBound: return "upper_bound";
    }
    return "?";
}

auto parse_status(std::string_view s) -> Status
{
    if (s == "exact")
        return Status::Exact;
    if (s == "lower_bound")
        return Status::LowerBound;
    if (s == "upper_bound")
        return Status::UpperBound;
    throw InvalidArgument("unknown status '" + std::string(s) + "'");
}

namespace
{
    inline constexpr long long max_grid_points = 1 << 14;

    using Clock = std::chrono::steady_clock;

    auto ms_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto check_qr(int q, int r) -> void
    {
        if (q < 1 || q > max_palette)
            throw InvalidArgument("q outside [1, 63]");
        if (r < 1 || r > q)
            throw InvalidArgument("r = " + std::to_string(r) + " outside [1, " + std::to_string(q) + "]");
    }

    // Raises `target` to at least `value`.
    auto atomic_max(std::atomic<int> & target, int value) -> void
    {
        int cur = target.load();
        while (value > cur && ! target.compare_exchange_weak(cur, value))
            ;
    }

    auto atomic_min(std::atomic<int> & target, int value) -> void
    {
        int cur = target.load();
        while (value < cur && ! target.compare_exchange_weak(cur, value))
            ;
    }

    // All points of [n]^q in lexicographic order, flattened.
    struct Grid
    {
        int q;
        int n;
        int points;
        std::vector<int> coords;

        auto point(int a) const -> std::vector<int> { return {coords.begin() + a * q, coords.begin() + (a + 1) * q}; }
    };

    auto make_grid(int q, int n) -> Grid
    {
        if (n < 1)
            throw InvalidArgument("n must be positive");
        long long points = 1;
        for (int i = 0; i < q; ++i) {
            points *= n;
            if (points > max_grid_points)
                throw InvalidArgument("[n]^q has more than " + std::to_string(max_grid_points) + " points");
        }
        Grid g{q, n, static_cast<int>(points), std::vector<int>(points * q)};
        for (int a = 0; a < points; ++a) {
            int rest = a;
            for (int i = q - 1; i >= 0; --i) {
                g.coords[a * q + i] = rest % n + 1;
                rest /= n;
            }
        }
        return g;
    }

    auto family_of(const Grid & g, int r, const std::vector<int> & indices) -> VectorFamily
    {
        std::vector<std::vector<int>> rows;
        for (int a : indices)
            rows.push_back(g.point(a));
        return VectorFamily::from_rows(g.q, g.n, r, rows);
    }

    // Color subsets of size r as bitmasks over colors 0..q-1.
    auto subset_masks(int q, int r) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t m = 0; m < (1u << q); ++m)
            if (std::popcount(m) == r)
                masks.push_back(m);
        return masks;
    }
}

// ---------------------------------------------------------------- F

namespace
{
    struct SequenceSearch
    {
        const Grid & grid;
        int r;
        std::vector<Bits> rows;
        // proj[s][a]: projection id of point a on the s-th (q - r + 1)-subset.
        std::vector<std::vector<int>> proj;
        int proj_range = 1;
        int upper = 0;
        BudgetMeter & meter;
        std::atomic<int> & shared_best;
        std::atomic<int> & closing_root;
    };

    struct SequenceRoot
    {
        int root_index = 0;
        int best = 0;
        std::vector<int> witness;
        std::vector<int> current;
    };

    auto projection_bound(const SequenceSearch & s, const Bits & cand) -> int
    {
        int bound = static_cast<int>(cand.count());
        std::vector<char> seen(s.proj_range);
        for (const auto & proj : s.proj) {
            std::fill(seen.begin(), seen.end(), 0);
            int distinct = 0;
            for (auto a = cand.find_first(); a != Bits::npos && distinct < bound; a = cand.find_next(a))
                if (! seen[proj[a]]) {
                    seen[proj[a]] = 1;
                    ++distinct;
                }
            bound = std::min(bound, distinct);
        }
        return bound;
    }

    auto extend_sequence(SequenceSearch & s, SequenceRoot & root, const Bits & cand) -> void
    {
        if (! s.meter.tick())
            return;
        if (s.closing_root.load() < root.root_index)
            return;
        const int depth = static_cast<int>(root.current.size());
        if (depth > root.best) {
            root.best = depth;
            root.witness = root.current;
            atomic_max(s.shared_best, depth);
            if (depth == s.upper) {
                int cur = s.closing_root.load();
                while (root.root_index < cur && ! s.closing_root.compare_exchange_weak(cur, root.root_index))
                    ;
                return;
            }
        }
        const int shared = s.shared_best.load();
        auto quick = depth + static_cast<int>(cand.count());
        if (quick <= root.best || quick < shared)
            return;
        auto bound = depth + projection_bound(s, cand);
        if (bound <= root.best || bound < shared)
            return;
        for (auto a = cand.find_first(); a != Bits::npos; a = cand.find_next(a)) {
            root.current.push_back(static_cast<int>(a));
            extend_sequence(s, root, cand & s.rows[a]);
            root.current.pop_back();
            if (s.meter.exhausted() || root.best == s.upper)
                return;
        }
    }
}

auto exact_F(int q, int r, int n, const Budget & budget, Execution exec) -> ExtremalRecord
{
    check_qr(q, r);
    const auto start = Clock::now();
    const Grid grid = make_grid(q, n);
    BudgetMeter meter(budget);
    std::atomic<int> shared_best{0};
    std::atomic<int> closing_root{std::numeric_limits<int>::max()};

    SequenceSearch s{grid, r, kernels::parallel::relation_rows(grid.coords, q, r), {}, 1, 0, meter, shared_best, closing_root};

    // Any q - r + 1 coordinates contain a strict increase between two members,
    // so projections onto them are distinct along a sequence.
    const int width = q - r + 1;
    for (int i = 0; i < width; ++i)
        s.proj_range *= n;
    s.upper = s.proj_range;
    for (std::uint32_t m = 0; m < (1u << q); ++m) {
        if (std::popcount(m) != width)
            continue;
        std::vector<int> proj(grid.points);
        for (int a = 0; a < grid.points; ++a) {
            int id = 0;
            for (int i = 0; i < q; ++i)
                if ((m >> i) & 1)
                    id = id * n + grid.coords[a * q + i] - 1;
            proj[a] = id;
        }
        s.proj.push_back(std::move(proj));
    }

    // Permuting coordinates preserves <_r, so the first member can be taken sorted.
    std::vector<int> roots;
    for (int a = 0; a < grid.points; ++a)
        if (std::is_sorted(grid.coords.begin() + a * q, grid.coords.begin() + (a + 1) * q))
            roots.push_back(a);

    std::vector<SequenceRoot> results(roots.size());
    const auto run_root = [&](std::size_t i) {
        auto & root = results[i];
        root.root_index = static_cast<int>(i);
        root.current = {roots[i]};
        extend_sequence(s, root, s.rows[roots[i]]);
    };
    const std::int64_t count = static_cast<std::int64_t>(roots.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i)
            run_root(static_cast<std::size_t>(i));
    }
    else {
        for (std::int64_t i = 0; i < count; ++i)
            run_root(static_cast<std::size_t>(i));
    }

    const SequenceRoot * winner = nullptr;
    for (const auto & root : results)
        if (! winner || root.best > winner->best)
            winner = &root;

    ExtremalRecord rec;
    rec.kind = Kind::F;
    rec.q = q;
    rec.r = r;
    rec.size = n;
    rec.value = winner->best;
    rec.status = meter.exhausted() ? Status::LowerBound : Status::Exact;
    rec.witness = family_of(grid, r, winner->witness);
    rec.nodes = meter.nodes();
    rec.wall_ms = ms_since(start);
    return rec;
}

// ---------------------------------------------------------------- G

namespace
{
    struct CliqueSearch
    {
        std::vector<Bits> adj;
        BudgetMeter & meter;
        std::vector<int> best;
        std::vector<int> current;
    };

    auto expand_clique(CliqueSearch & s, Bits cand) -> void
    {
        if (! s.meter.tick())
            return;
        // Greedy coloring: vertices in color-class order with their class number.
        std::vector<int> order;
        std::vector<int> color;
        Bits uncolored = cand;
        for (int k = 1; uncolored.any(); ++k) {
            Bits q = uncolored;
            for (auto v = q.find_first(); v != Bits::npos; v = q.find_first()) {
                q.reset(v);
                q -= s.adj[v];
                uncolored.reset(v);
                order.push_back(static_cast<int>(v));
                color.push_back(k);
            }
        }
        for (int j = static_cast<int>(order.size()) - 1; j >= 0; --j) {
            if (static_cast<int>(s.current.size()) + color[j] <= static_cast<int>(s.best.size()))
                return;
            int v = order[j];
            s.current.push_back(v);
            Bits next = cand & s.adj[v];
            if (next.none()) {
                if (s.current.size() > s.best.size())
                    s.best = s.current;
            }
            else
                expand_clique(s, next);
            s.current.pop_back();
            cand.reset(v);
            if (s.meter.exhausted())
                return;
        }
    }
}

auto exact_G(int q, int r, int n, const Budget & budget) -> ExtremalRecord
{
    check_qr(q, r);
    const auto start = Clock::now();
    const Grid grid = make_grid(q, n);
    auto rows = kernels::parallel::relation_rows(grid.coords, q, r);
    BudgetMeter meter(budget);
    CliqueSearch s{std::vector<Bits>(grid.points, Bits(grid.points)), meter, {}, {}};
    for (int a = 0; a < grid.points; ++a)
        for (int b = 0; b < grid.points; ++b)
            if (rows[a][b] || rows[b][a])
                s.adj[a].set(b);

    Bits all(grid.points);
    all.set();
    expand_clique(s, all);
    std::sort(s.best.begin(), s.best.end());

    ExtremalRecord rec;
    rec.kind = Kind::G;
    rec.q = q;
    rec.r = r;
    rec.size = n;
    rec.value = static_cast<std::int64_t>(s.best.size());
    rec.status = meter.exhausted() ? Status::LowerBound : Status::Exact;
    rec.witness = family_of(grid, r, s.best);
    rec.nodes = meter.nodes();
    rec.wall_ms = ms_since(start);
    return rec;
}

// ---------------------------------------------------------------- f and g

namespace
{
    // Pairs (a, b), a < b, ordered by column b then row a: every prefix
    // ending a column spans a complete initial segment of vertices.
    auto column_edges(int n) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> edges;
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a)
                edges.emplace_back(a, b);
        return edges;
    }

    // A choice for one edge: color in 1..q, and for tournaments whether the
    // arc points backwards (b -> a).
    struct Choice
    {
        int color = 1;
        bool reversed = false;
    };

    struct ColoringSearch
    {
        int q = 0;
        int r = 0;
        int n = 0;
        bool tournament = false;
        std::vector<std::pair<int, int>> edges;
        std::vector<std::uint32_t> subsets;
        BudgetMeter & meter;
        std::atomic<int> & shared_best;
    };

    struct ColoringRoot
    {
        int best = std::numeric_limits<int>::max();
        std::vector<Choice> witness;
        std::vector<Choice> current;
        // f: ends[s * n + v] for completed columns; partial per subset for the open column.
        std::vector<int> ends;
    };

    // Number of choices for edge e given the largest color used so far.
    auto choices_for(const ColoringSearch & s, std::size_t e, int used) -> int
    {
        int colors = std::min(s.q, used + 1);
        if (! s.tournament || e == 0)
            return colors;
        return 2 * colors;
    }

    auto decode(const ColoringSearch & s, std::size_t e, int k) -> Choice
    {
        if (! s.tournament || e == 0)
            return Choice{k + 1, false};
        return Choice{k / 2 + 1, (k & 1) != 0};
    }

    // Longest path using at most r colors in the tournament on vertices 0..last.
    auto prefix_g_value(const ColoringSearch & s, const std::vector<Choice> & choice, int last) -> int
    {
        const int m = last + 1;
        std::vector<std::vector<int>> arc(m, std::vector<int>(m, 0));
        for (std::size_t e = 0; e < choice.size(); ++e) {
            auto [a, b] = s.edges[e];
            if (b > last)
                break;
            if (choice[e].reversed)
                arc[b][a] = choice[e].color;
            else
                arc[a][b] = choice[e].color;
        }
        int best = 1;
        for (auto subset : s.subsets) {
            std::vector<std::uint32_t> out(m, 0);
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < m; ++v)
                    if (arc[u][v] && ((subset >> (arc[u][v] - 1)) & 1))
                        out[u] |= 1u << v;
            auto table = kernels::serial::path_start_table(out);
            for (std::uint32_t mask = static_cast<std::uint32_t>(table.size()) - 1; mask > 0; --mask)
                if (table[mask] && std::popcount(mask) > best)
                    best = std::popcount(mask);
            if (best == m)
                break;
        }
        return best;
    }

    auto extend_coloring(ColoringSearch & s, ColoringRoot & root, std::size_t e, int used, int lb, std::vector<int> & partial) -> void;

    // Applies choice k to edge e and recurses.
    auto apply_choice(ColoringSearch & s, ColoringRoot & root, std::size_t e, int used, int lb, const std::vector<int> & partial, int k)
        -> void
    {
        const auto [a, b] = s.edges[e];
        const Choice c = decode(s, e, k);
        const int nsub = static_cast<int>(s.subsets.size());
        std::vector<int> next_partial = partial;
        int next_lb = lb;
        root.current.push_back(c);
        if (! s.tournament) {
            for (int j = 0; j < nsub; ++j)
                if ((s.subsets[j] >> (c.color - 1)) & 1) {
                    next_partial[j] = std::max(next_partial[j], root.ends[j * s.n + a] + 1);
                    next_lb = std::max(next_lb, next_partial[j]);
                }
        }
        const bool column_done = a == b - 1;
        if (column_done) {
            if (s.tournament)
                next_lb = std::max(next_lb, prefix_g_value(s, root.current, b));
            else
                for (int j = 0; j < nsub; ++j) {
                    root.ends[j * s.n + b] = next_partial[j];
                    next_partial[j] = 1;
                }
        }
        if (next_lb < root.best && next_lb <= s.shared_best.load())
            extend_coloring(s, root, e + 1, std::max(used, c.color), next_lb, next_partial);
        root.current.pop_back();
    }

    auto extend_coloring(ColoringSearch & s, ColoringRoot & root, std::size_t e, int used, int lb, std::vector<int> & partial) -> void
    {
        if (! s.meter.tick())
            return;
        if (e == s.edges.size()) {
            if (lb < root.best) {
                root.best = lb;
                root.witness = root.current;
                atomic_min(s.shared_best, lb);
            }
            return;
        }
        const int options = choices_for(s, e, used);
        for (int k = 0; k < options && ! s.meter.exhausted(); ++k)
            apply_choice(s, root, e, used, lb, partial, k);
    }

    // Replays a root prefix; false when the prefix is already pruned.
    struct RootPrefix
    {
        std::vector<int> choices;
    };

    auto enumerate_prefixes(const ColoringSearch & s, std::size_t depth) -> std::vector<RootPrefix>
    {
        std::vector<RootPrefix> out;
        RootPrefix cur;
        auto rec = [&](auto && self, std::size_t e, int used) -> void {
            if (e == depth) {
                out.push_back(cur);
                return;
            }
            const int options = choices_for(s, e, used);
            for (int k = 0; k < options; ++k) {
                cur.choices.push_back(k);
                self(self, e + 1, std::max(used, decode(s, e, k).color));
                cur.choices.pop_back();
            }
        };
        rec(rec, 0, 0);
        return out;
    }

    auto run_prefix(ColoringSearch & s, ColoringRoot & root, const RootPrefix & prefix) -> void
    {
        root.ends.assign(s.subsets.size() * s.n, 1);
        std::vector<int> partial(s.subsets.size(), 1);
        int lb = 1;
        int used = 0;
        // Walk the prefix with the same bookkeeping as apply_choice, then search below it.
        for (std::size_t e = 0; e < prefix.choices.size(); ++e) {
            const auto [a, b] = s.edges[e];
            const Choice c = decode(s, e, prefix.choices[e]);
            root.current.push_back(c);
            if (! s.tournament)
                for (std::size_t j = 0; j < s.subsets.size(); ++j)
                    if ((s.subsets[j] >> (c.color - 1)) & 1) {
                        partial[j] = std::max(partial[j], root.ends[j * s.n + a] + 1);
                        lb = std::max(lb, partial[j]);
                    }
            if (a == b - 1) {
                if (s.tournament)
                    lb = std::max(lb, prefix_g_value(s, root.current, b));
                else
                    for (std::size_t j = 0; j < s.subsets.size(); ++j) {
                        root.ends[j * s.n + b] = partial[j];
                        partial[j] = 1;
                    }
            }
            used = std::max(used, c.color);
            if (lb >= root.best || lb > s.shared_best.load())
                return;
        }
        extend_coloring(s, root, prefix.choices.size(), used, lb, partial);
    }

    auto coloring_search(Kind kind, int q, int r, int n, const Budget & budget, Execution exec) -> ExtremalRecord
    {
        check_qr(q, r);
        if (n < 1)
            throw InvalidArgument("N must be positive");
        const bool tournament = kind == Kind::g;
        if (n > (tournament ? 8 : 12))
            throw InvalidArgument("exhaustive coloring search is limited to N <= " + std::to_string(tournament ? 8 : 12));
        const auto start = Clock::now();
        BudgetMeter meter(budget);
        std::atomic<int> shared_best{n + 1};
        ColoringSearch s{q, r, n, tournament, column_edges(n), subset_masks(q, r), meter, shared_best};

        ExtremalRecord rec;
        rec.kind = kind;
        rec.q = q;
        rec.r = r;
        rec.size = n;

        std::vector<Choice> best_choice;
        int best_value = std::numeric_limits<int>::max();
        if (s.edges.empty())
            best_value = n;
        else {
            // Enough prefix depth for a few dozen roots.
            std::size_t depth = 0;
            for (std::size_t roots = 1; depth < s.edges.size() && roots < 64; ++depth)
                roots *= static_cast<std::size_t>(std::max(1, choices_for(s, depth, q)));
            auto prefixes = enumerate_prefixes(s, depth);
            std::vector<ColoringRoot> results(prefixes.size());
            const std::int64_t count = static_cast<std::int64_t>(prefixes.size());
            if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
                for (std::int64_t i = 0; i < count; ++i)
                    run_prefix(s, results[i], prefixes[i]);
            }
            else {
                for (std::int64_t i = 0; i < count; ++i)
                    run_prefix(s, results[i], prefixes[i]);
            }
            for (const auto & root : results)
                if (root.best < best_value) {
                    best_value = root.best;
                    best_choice = root.witness;
                }
        }

        if (tournament) {
            ColoredTournament t(n, q);
            for (std::size_t e = 0; e < best_choice.size(); ++e) {
                auto [a, b] = s.edges[e];
                if (best_choice[e].reversed)
                    t.set_arc(b, a, best_choice[e].color);
                else
                    t.set_arc(a, b, best_choice[e].color);
            }
            rec.witness = std::move(t);
        }
        else {
            OrderedColoring k(n, q);
            for (std::size_t e = 0; e < best_choice.size(); ++e)
                k.set_color(s.edges[e].first, s.edges[e].second, best_choice[e].color);
            rec.witness = std::move(k);
        }
        if (best_value == std::numeric_limits<int>::max()) {
            // Budget ran out before any complete coloring; the monochromatic default has value N.
            best_value = n;
        }
        rec.value = best_value;
        rec.status = meter.exhausted() ? Status::UpperBound : Status::Exact;
        rec.nodes = meter.nodes();
        rec.wall_ms = ms_since(start);
        return rec;
    }
}

auto exact_f(int q, int r, int n, const Budget & budget, Execution exec) -> ExtremalRecord
{
    return coloring_search(Kind::f, q, r, n, budget, exec);
}

auto exact_g(int q, int r, int n, const Budget & budget, Execution exec) -> ExtremalRecord
{
    return coloring_search(Kind::g, q, r, n, budget, exec);
}

auto run_search(Kind kind, int q, int r, int size, const Budget & budget) -> ExtremalRecord
{
    switch (kind) {
    case Kind::F: return exact_F(q, r, size, budget);
    case Kind::G: return exact_G(q, r, size, budget);
    case Kind::f: return exact_f(q, r, size, budget);
    case Kind::g: return exact_g(q, r, size, budget);
    }
    throw InvalidArgument("unknown kind");
}

// ---------------------------------------------------------------- records

auto validate_record(const ExtremalRecord & rec) -> std::optional<std::string>
{
    if (rec.q < 1 || rec.r < 1 || rec.r > rec.q || rec.size < 1)
        return std::string("parameters out of range");
    switch (rec.kind) {
    case Kind::F:
    case Kind::G: {
        auto fam = std::get_if<VectorFamily>(&rec.witness);
        if (! fam)
            return std::string("witness is not a vector family");
        if (fam->q() != rec.q || fam->r() != rec.r || fam->n() != rec.size)
            return std::string("witness family has different (q, r, n)");
        if (static_cast<std::int64_t>(fam->size()) != rec.value)
            return "witness has " + std::to_string(fam->size()) + " vectors, record says " + std::to_string(rec.value);
        if (rec.status == Status::UpperBound)
            return std::string("a family only certifies a lower bound");
        auto cert = rec.kind == Kind::F ? validate_increasing(*fam) : validate_comparable(*fam);
        if (auto fail = std::get_if<FailPair>(&cert))
            return "witness fails at pair (" + std::to_string(fail->a + 1) + ", " + std::to_string(fail->b + 1) + ")";
        return std::nullopt;
    }
    case Kind::f: {
        auto k = std::get_if<OrderedColoring>(&rec.witness);
        if (! k)
            return std::string("witness is not an ordered coloring");
        if (k->q() != rec.q || k->size() != rec.size)
            return std::string("witness coloring has different (q, N)");
        if (rec.status == Status::LowerBound)
            return std::string("a coloring only certifies an upper bound");
        int value = longest_at_most_r_monotone(*k, rec.r).length();
        if (value != rec.value)
            return "witness coloring has value " + std::to_string(value) + ", record says " + std::to_string(rec.value);
        return std::nullopt;
    }
    case Kind::g: {
        auto t = std::get_if<ColoredTournament>(&rec.witness);
        if (! t)
            return std::string("witness is not a tournament");
        if (t->q() != rec.q || t->size() != rec.size)
            return std::string("witness tournament has different (q, N)");
        if (rec.status == Status::LowerBound)
            return std::string("a tournament only certifies an upper bound");
        int value = longest_at_most_r_directed(*t, rec.r).length();
        if (value != rec.value)
            return "witness tournament has value " + std::to_string(value) + ", record says " + std::to_string(rec.value);
        return std::nullopt;
    }
    }
    return std::string("unknown kind");
}

auto record_to_json(const ExtremalRecord & rec) -> Json
{
    Json witness;
    if (auto fam = std::get_if<VectorFamily>(&rec.witness))
        witness = family_to_json(*fam);
    else if (auto k = std::get_if<OrderedColoring>(&rec.witness))
        witness = coloring_to_json(*k);
    else if (auto t = std::get_if<ColoredTournament>(&rec.witness))
        witness = tournament_to_json(*t);
    return Json{{"kind", kind_name(rec.kind)},
        {"q", rec.q},
        {"r", rec.r},
        {"size", rec.size},
        {"value", rec.value},
        {"status", status_name(rec.status)},
        {"witness", witness},
        {"nodes", rec.nodes},
        {"wall_ms", rec.wall_ms}};
}

auto record_from_json(const Json & j) -> ExtremalRecord
{
    try {
        ExtremalRecord rec;
        rec.kind = parse_kind(j.at("kind").get<std::string>());
        rec.q = j.at("q").get<int>();
        rec.r = j.at("r").get<int>();
        rec.size = j.at("size").get<int>();
        rec.value = j.at("value").get<std::int64_t>();
        rec.status = parse_status(j.at("status").get<std::string>());
        rec.nodes = j.value("nodes", std::uint64_t{0});
        rec.wall_ms = j.value("wall_ms", 0.0);
        const auto & w = j.at("witness");
        if (! w.is_null()) {
            if (rec.kind == Kind::F || rec.kind == Kind::G)
                rec.witness = family_from_json(w);
            else if (rec.kind == Kind::f)
                rec.witness = coloring_from_json(w);
            else
                rec.witness = tournament_from_json(w);
        }
        return rec;
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const std::exception & e) {
        throw ParseError(std::string("record: ") + e.what());
    }
}

auto table_row(const ExtremalRecord & rec) -> std::string
{
    return kind_name(rec.kind) + "," + std::to_string(rec.q) + "," + std::to_string(rec.r) + "," + std::to_string(rec.size) + ","
        + std::to_string(rec.value) + "," + status_name(rec.status);
}

// ---------------------------------------------------------------- cache

namespace
{
    // Whether `incoming` carries strictly more information than `stored`.
    auto improves(const ExtremalRecord & incoming, const ExtremalRecord & stored) -> bool
    {
        if (stored.status == Status::Exact)
            return false;
        if (incoming.status == Status::Exact)
            return true;
        if (incoming.status != stored.status)
            return false;
        return incoming.status == Status::LowerBound ? incoming.value > stored.value : incoming.value < stored.value;
    }
}

ExtremalCache::ExtremalCache(std::filesystem::path path) :
    path_(std::move(path))
{
    std::ifstream in(path_);
    if (! in)
        return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            auto rec = record_from_json(Json::parse(line));
            if (validate_record(rec)) {
                ++rejected_;
                continue;
            }
            Key key{rec.kind, rec.q, rec.r, rec.size};
            auto it = records_.find(key);
            if (it == records_.end())
                records_.emplace(key, std::move(rec));
            else if (improves(rec, it->second))
                it->second = std::move(rec);
        }
        catch (const std::exception &) {
            ++rejected_;
        }
    }
}

auto ExtremalCache::default_path() -> std::filesystem::path
{
    if (const char * env = std::getenv("RAMSEY_PODS_CACHE"); env && *env)
        return env;
    return "cache.jsonl";
}

auto ExtremalCache::get(Kind kind, int q, int r, int size) const -> std::optional<ExtremalRecord>
{
    std::lock_guard lock(mutex_);
    auto it = records_.find({kind, q, r, size});
    if (it == records_.end())
        return std::nullopt;
    return it->second;
}

auto ExtremalCache::put(const ExtremalRecord & rec) -> bool
{
    if (auto problem = validate_record(rec))
        throw InvalidArgument("refusing to cache an invalid record: " + *problem);
    std::lock_guard lock(mutex_);
    Key key{rec.kind, rec.q, rec.r, rec.size};
    auto it = records_.find(key);
    if (it != records_.end() && ! improves(rec, it->second))
        return false;
    std::ofstream out(path_, std::ios::app);
    if (! out)
        throw Error("cannot append to cache " + path_.string());
    out << record_to_json(rec).dump() << '\n';
    if (! out)
        throw Error("write to cache " + path_.string() + " failed");
    records_[key] = rec;
    return true;
}

auto ExtremalCache::compact() -> void
{
    std::lock_guard lock(mutex_);
    auto tmp = path_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (! out)
            throw Error("cannot write " + tmp.string());
        for (const auto & [key, rec] : records_)
            out << record_to_json(rec).dump() << '\n';
        if (! out)
            throw Error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, path_);
}

} // namespace rpods
