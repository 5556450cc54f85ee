#include <ramsey_pods/kernels.hpp>
#include <ramsey_pods/paths.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace rpods {

auto full_mask(int q) -> ColorMask
{
    if (q < 1 || q > max_palette)
        throw InvalidArgument("palette size outside [1, 63]");
    return ((ColorMask{1} << q) - 1) << 1;
}

auto mask_of(const std::vector<int> & colors) -> ColorMask
{
    ColorMask m = 0;
    for (int c : colors) {
        if (c < 1 || c > max_palette)
            throw InvalidArgument("color " + std::to_string(c) + " outside [1, 63]");
        m |= ColorMask{1} << c;
    }
    return m;
}

auto colors_of(ColorMask mask) -> std::vector<int>
{
    std::vector<int> colors;
    for (; mask; mask &= mask - 1)
        colors.push_back(std::countr_zero(mask));
    return colors;
}

auto allowed_mask(const PathConstraint & c, int q) -> ColorMask
{
    if (auto avoid = std::get_if<AvoidColor>(&c)) {
        if (avoid->color < 1 || avoid->color > q)
            throw InvalidArgument("avoided color " + std::to_string(avoid->color) + " outside [1, " + std::to_string(q) + "]");
        return full_mask(q) & ~(ColorMask{1} << avoid->color);
    }
    const auto & set = std::get<AllowedSet>(c);
    ColorMask m = mask_of(set.colors);
    if (m & ~full_mask(q))
        throw InvalidArgument("allowed set mentions a color outside the palette");
    return m;
}

namespace
{
    auto allows(ColorMask m, int color) -> bool { return color > 0 && ((m >> color) & 1); }

    auto check_color(int color, int q) -> void
    {
        if (color < 1 || color > q)
            throw InvalidArgument("color " + std::to_string(color) + " outside [1, " + std::to_string(q) + "]");
    }

    // Combinations of size k from 1..q in lexicographic order.
    auto color_subsets(int q, int k) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        std::vector<int> current;
        auto rec = [&](auto && self, int next) -> void {
            if (static_cast<int>(current.size()) == k) {
                result.push_back(current);
                return;
            }
            for (int c = next; c <= q - (k - static_cast<int>(current.size())) + 1; ++c) {
                current.push_back(c);
                self(self, c + 1);
                current.pop_back();
            }
        };
        rec(rec, 1);
        return result;
    }

    auto restricted_out_masks(const ColoredTournament & t, ColorMask allowed, bool reverse) -> std::vector<std::uint32_t>
    {
        const int n = t.size();
        std::vector<std::uint32_t> out(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                int from = reverse ? v : u, to = reverse ? u : v;
                if (u != v && allows(allowed, t.arc_color(from, to)))
                    out[u] |= 1u << v;
            }
        return out;
    }

    // OR of table[M] over all M inside `free` with popcount k.
    auto startable(const std::vector<std::uint32_t> & table, std::uint32_t free, int k) -> std::uint32_t
    {
        std::uint32_t result = 0;
        for (std::uint32_t m = free;; m = (m - 1) & free) {
            if (std::popcount(m) == k)
                result |= table[m];
            if (m == 0)
                break;
        }
        return result;
    }

    // Lexicographically least path of `len` vertices (first vertex fixed when first >= 0).
    auto least_path(const std::vector<std::uint32_t> & table, std::span<const std::uint32_t> out, int n, int len, int first)
        -> std::vector<int>
    {
        std::vector<int> path;
        if (len == 0)
            return path;
        std::uint32_t free = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
        std::uint32_t candidates = first >= 0 ? (1u << first) : startable(table, free, len);
        for (int k = len; k > 0; --k) {
            int v = std::countr_zero(candidates);
            path.push_back(v);
            free &= ~(1u << v);
            if (k > 1)
                candidates = startable(table, free, k - 1) & out[v];
        }
        return path;
    }

    auto exact_subset_path(const ColoredTournament & t, ColorMask allowed) -> std::vector<int>
    {
        const int n = t.size();
        if (n == 0)
            return {};
        auto out = restricted_out_masks(t, allowed, false);
        auto table = kernels::parallel::path_start_table(out);
        int best = 0;
        for (std::uint32_t m = 1; m < table.size(); ++m)
            if (table[m])
                best = std::max(best, std::popcount(m));
        return least_path(table, out, n, best, -1);
    }

    // Forward-edge DAG DP along `order`: a valid path, not necessarily optimal.
    auto order_dag_path(const ColoredTournament & t, ColorMask allowed, std::span<const int> order) -> std::vector<int>
    {
        const int n = t.size();
        std::vector<int> len(n, 1), prev(n, -1);
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < b; ++a)
                if (allows(allowed, t.arc_color(order[a], order[b])) && len[a] + 1 > len[b]) {
                    len[b] = len[a] + 1;
                    prev[b] = a;
                }
        if (n == 0)
            return {};
        int end = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());
        std::vector<int> path;
        for (int a = end; a >= 0; a = prev[a])
            path.push_back(order[a]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    struct DfsState
    {
        const ColoredTournament & t;
        ColorMask allowed;
        BudgetMeter meter;
        std::vector<int> best;
        bool best_from_search = false;
        std::vector<int> current;
        std::vector<char> used;
        bool done = false;
    };

    auto dfs(DfsState & st, int v) -> void
    {
        if (st.done)
            return;
        if (! st.meter.tick())
            throw PathBudgetExceeded(PathCertificate{PathMode::Directed, AllowedSet{colors_of(st.allowed)}, st.best}, st.meter.nodes());
        const int n = st.t.size();
        st.current.push_back(v);
        st.used[v] = 1;
        int depth = static_cast<int>(st.current.size());
        if (depth > static_cast<int>(st.best.size()) || (depth == static_cast<int>(st.best.size()) && ! st.best_from_search)) {
            st.best = st.current;
            st.best_from_search = true;
            if (depth == n)
                st.done = true;
        }
        int unused = n - depth;
        int target = static_cast<int>(st.best.size());
        if (depth + unused > target || (! st.best_from_search && depth + unused == target))
            for (int w = 0; w < n && ! st.done; ++w)
                if (! st.used[w] && allows(st.allowed, st.t.arc_color(v, w)))
                    dfs(st, w);
        st.used[v] = 0;
        st.current.pop_back();
    }

    auto budgeted_path(const ColoredTournament & t, ColorMask allowed, const Budget & budget) -> std::vector<int>
    {
        const int n = t.size();
        DfsState st{t, allowed, BudgetMeter(budget), {}, false, {}, std::vector<char>(n, 0), false};
        st.best = order_dag_path(t, allowed, heuristic_transitive_order(t));
        for (int v = 0; v < n && ! st.done; ++v)
            dfs(st, v);
        return st.best;
    }

    auto endpoint_table(const ColoredTournament & t, ColorMask allowed, bool ending) -> EndpointTable
    {
        const int n = t.size();
        EndpointTable result{std::vector<int>(n, 1), std::vector<std::vector<int>>(n), n <= exact_path_limit};
        if (result.exact) {
            // Paths ending at v are paths starting at v in the reversed tournament.
            auto out = restricted_out_masks(t, allowed, ending);
            auto table = kernels::parallel::path_start_table(out);
            std::vector<std::uint32_t> best_mask(n, 0);
            for (int v = 0; v < n; ++v)
                best_mask[v] = 1u << v;
            for (std::uint32_t m = 1; m < table.size(); ++m) {
                int size = std::popcount(m);
                for (std::uint32_t bits = table[m]; bits; bits &= bits - 1) {
                    int v = std::countr_zero(bits);
                    if (size > result.length[v]) {
                        result.length[v] = size;
                        best_mask[v] = m;
                    }
                }
            }
            for (int v = 0; v < n; ++v) {
                auto & path = result.witness[v];
                std::uint32_t rest = best_mask[v];
                for (int u = v; u >= 0;) {
                    path.push_back(u);
                    rest &= ~(1u << u);
                    if (! rest)
                        break;
                    std::uint32_t next = table[rest] & out[u];
                    u = std::countr_zero(next);
                }
                if (ending)
                    std::reverse(path.begin(), path.end());
            }
            return result;
        }

        std::vector<int> prev(n, -1);
        if (ending) {
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < b; ++a)
                    if (allows(allowed, t.arc_color(a, b)) && result.length[a] + 1 > result.length[b]) {
                        result.length[b] = result.length[a] + 1;
                        prev[b] = a;
                    }
        }
        else {
            for (int a = n - 1; a >= 0; --a)
                for (int b = n - 1; b > a; --b)
                    if (allows(allowed, t.arc_color(a, b)) && result.length[b] + 1 > result.length[a]) {
                        result.length[a] = result.length[b] + 1;
                        prev[a] = b;
                    }
        }
        for (int v = 0; v < n; ++v) {
            for (int u = v; u >= 0; u = prev[u])
                result.witness[v].push_back(u);
            if (ending)
                std::reverse(result.witness[v].begin(), result.witness[v].end());
        }
        return result;
    }

    auto directed_with_mask(const ColoredTournament & t, ColorMask allowed, const Budget & budget) -> std::vector<int>
    {
        if (t.size() <= exact_path_limit)
            return exact_subset_path(t, allowed);
        return budgeted_path(t, allowed, budget);
    }
}

auto monotone_ending_lengths(const OrderedColoring & k, ColorMask allowed) -> std::vector<int>
{
    const int n = k.size();
    std::vector<int> ends(n, 1);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (allows(allowed, k.color(a, b)))
                ends[b] = std::max(ends[b], ends[a] + 1);
    return ends;
}

auto longest_restricted_monotone_length(const OrderedColoring & k, ColorMask allowed) -> int
{
    auto ends = monotone_ending_lengths(k, allowed);
    return ends.empty() ? 0 : *std::max_element(ends.begin(), ends.end());
}

auto longest_restricted_monotone(const OrderedColoring & k, const AllowedSet & allowed) -> PathCertificate
{
    ColorMask m = allowed_mask(allowed, k.q());
    const int n = k.size();
    // from[v]: longest allowed monotone path starting at v.
    std::vector<int> from(n, 1);
    for (int a = n - 1; a >= 0; --a)
        for (int b = a + 1; b < n; ++b)
            if (allows(m, k.color(a, b)))
                from[a] = std::max(from[a], from[b] + 1);

    PathCertificate cert{PathMode::Monotone, allowed, {}};
    if (n == 0)
        return cert;
    int best = *std::max_element(from.begin(), from.end());
    int v = static_cast<int>(std::find(from.begin(), from.end(), best) - from.begin());
    cert.vertices.push_back(v);
    while (from[v] > 1) {
        int w = v + 1;
        while (! (allows(m, k.color(v, w)) && from[w] == from[v] - 1))
            ++w;
        cert.vertices.push_back(w);
        v = w;
    }
    return cert;
}

auto ell_avoid_monotone(const OrderedColoring & k, int color) -> PathCertificate
{
    check_color(color, k.q());
    auto cert = longest_restricted_monotone(k, AllowedSet{colors_of(full_mask(k.q()) & ~(ColorMask{1} << color))});
    cert.constraint = AvoidColor{color};
    return cert;
}

auto longest_at_most_r_monotone(const OrderedColoring & k, int r) -> PathCertificate
{
    if (r < 1 || r > k.q())
        throw InvalidArgument("r outside [1, q]");
    std::optional<PathCertificate> best;
    for (const auto & s : color_subsets(k.q(), r)) {
        int len = longest_restricted_monotone_length(k, mask_of(s));
        if (! best || len > best->length())
            best = longest_restricted_monotone(k, AllowedSet{s});
    }
    return *best;
}

auto longest_restricted_directed_exact(const ColoredTournament & t, const AllowedSet & allowed, const Budget & budget) -> PathCertificate
{
    ColorMask m = allowed_mask(allowed, t.q());
    return PathCertificate{PathMode::Directed, allowed, directed_with_mask(t, m, budget)};
}

auto longest_avoiding_directed_exact(const ColoredTournament & t, int color, const Budget & budget) -> PathCertificate
{
    check_color(color, t.q());
    ColorMask m = full_mask(t.q()) & ~(ColorMask{1} << color);
    try {
        return PathCertificate{PathMode::Directed, AvoidColor{color}, directed_with_mask(t, m, budget)};
    }
    catch (const PathBudgetExceeded & e) {
        auto best = e.best();
        best.constraint = AvoidColor{color};
        throw PathBudgetExceeded(best, e.nodes());
    }
}

auto longest_at_most_r_directed(const ColoredTournament & t, int r, const Budget & budget) -> PathCertificate
{
    if (r < 1 || r > t.q())
        throw InvalidArgument("r outside [1, q]");
    std::optional<PathCertificate> best;
    for (const auto & s : color_subsets(t.q(), r)) {
        auto cert = longest_restricted_directed_exact(t, AllowedSet{s}, budget);
        if (! best || cert.length() > best->length())
            best = std::move(cert);
    }
    return *best;
}

auto paths_ending_at(const ColoredTournament & t, ColorMask allowed) -> EndpointTable
{
    return endpoint_table(t, allowed, true);
}

auto paths_starting_at(const ColoredTournament & t, ColorMask allowed) -> EndpointTable
{
    return endpoint_table(t, allowed, false);
}

namespace
{
    auto finish_profile(AvoidanceProfile & p, int n) -> void
    {
        const BigRational cap = p.gamma * n;
        p.pi = 1;
        for (int l : p.ell) {
            BigRational m = BigRational(l) < cap ? BigRational(l) : cap;
            p.m.push_back(m);
            p.pi *= m;
        }
    }
}

auto avoidance_profile(const OrderedColoring & k, const BigRational & gamma) -> AvoidanceProfile
{
    if (gamma <= 0)
        throw InvalidArgument("gamma must be positive");
    AvoidanceProfile p{{}, gamma, {}, 0, {}};
    for (int i = 1; i <= k.q(); ++i) {
        p.paths.push_back(ell_avoid_monotone(k, i));
        p.ell.push_back(p.paths.back().length());
    }
    finish_profile(p, k.size());
    return p;
}

auto avoidance_profile(const ColoredTournament & t, const BigRational & gamma, const Budget & budget) -> AvoidanceProfile
{
    if (gamma <= 0)
        throw InvalidArgument("gamma must be positive");
    AvoidanceProfile p{{}, gamma, {}, 0, {}};
    for (int i = 1; i <= t.q(); ++i) {
        p.paths.push_back(longest_avoiding_directed_exact(t, i, budget));
        p.ell.push_back(p.paths.back().length());
    }
    finish_profile(p, t.size());
    return p;
}

auto gamma_for(int q) -> double
{
    if (q < 1)
        throw InvalidArgument("q must be positive");
    return 1.0 / (2.0 * q * std::exp2(std::sqrt(std::log2(static_cast<double>(q)))));
}

auto proof_parameters(int q, int n) -> ProofParameters
{
    if (q < 2)
        throw InvalidArgument("proof parameters need q >= 2");
    if (n < 1)
        throw InvalidArgument("proof parameters need N >= 1");
    ProofParameters params;
    params.q = q;
    params.n = n;
    params.gamma = gamma_for(q);
    params.p = 24.0 * q / std::exp2(std::sqrt(std::log2(static_cast<double>(q))));
    params.raw_s = 2.0 * params.gamma * n;
    params.s = std::max(1, static_cast<int>(std::floor(params.raw_s + 1e-12)));
    params.delta = params.gamma / 8.0;
    return params;
}

namespace
{
    template <typename EdgeColor>
    auto validate_common(int n, int q, const PathCertificate & cert, EdgeColor edge_color) -> std::optional<std::string>
    {
        ColorMask allowed = 0;
        try {
            allowed = allowed_mask(cert.constraint, q);
        }
        catch (const InvalidArgument & e) {
            return std::string("constraint: ") + e.what();
        }
        if (cert.vertices.empty())
            return std::string("empty path");
        std::vector<char> seen(n, 0);
        for (std::size_t j = 0; j < cert.vertices.size(); ++j) {
            int v = cert.vertices[j];
            if (v < 0 || v >= n)
                return "vertex " + std::to_string(v + 1) + " out of range";
            if (seen[v])
                return "duplicate vertex " + std::to_string(v + 1);
            seen[v] = 1;
        }
        for (std::size_t j = 0; j + 1 < cert.vertices.size(); ++j) {
            int u = cert.vertices[j], v = cert.vertices[j + 1];
            if (cert.mode == PathMode::Monotone && u > v)
                return "not monotone at (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")";
            int c = edge_color(u, v);
            if (c == 0)
                return "edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ") points backwards";
            if (! allows(allowed, c))
                return "edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ") has forbidden color " + std::to_string(c);
        }
        return std::nullopt;
    }
}

auto validate_path(const OrderedColoring & k, const PathCertificate & cert) -> std::optional<std::string>
{
    // An ordered coloring is the transitive tournament: only increasing steps exist.
    return validate_common(k.size(), k.q(), cert, [&](int u, int v) { return u < v ? k.color(u, v) : 0; });
}

auto validate_path(const ColoredTournament & t, const PathCertificate & cert) -> std::optional<std::string>
{
    return validate_common(t.size(), t.q(), cert, [&](int u, int v) { return t.arc_color(u, v); });
}

} // namespace rpods
