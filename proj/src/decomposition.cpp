#include <ramsey_pods/decomposition.hpp>
#include <ramsey_pods/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace rpods {

using kernels::Bits;

// ---------------------------------------------------------------- three colors

namespace
{
    // A cyclic triangle read so that x -> y, y -> z, z -> x carry pattern
    // positions 0, 1, 2.
    struct Oriented
    {
        int x;
        int y;
        int z;
    };

    struct SlotIndex
    {
        int n;
        auto operator()(int u, int v, int role) const -> std::size_t { return (static_cast<std::size_t>(u) * n + v) * 3 + role; }
    };

    auto oriented_triangles(const ColoredTournament & t, const std::vector<Triangle> & bucket, const TrianglePattern & p)
        -> std::vector<Oriented>
    {
        std::vector<Oriented> out;
        for (const auto & tri : bucket) {
            const std::array<int, 3> v{tri.a, tri.b, tri.c};
            const auto colors = triangle_colors(t, tri);
            for (int k = 0; k < 3; ++k)
                if (colors[k] == p[0] && colors[(k + 1) % 3] == p[1] && colors[(k + 2) % 3] == p[2])
                    out.push_back({v[k], v[(k + 1) % 3], v[(k + 2) % 3]});
        }
        return out;
    }

    struct SlotGraph
    {
        SlotIndex index;
        std::vector<Oriented> tris;
        std::vector<std::vector<int>> by_slot;

        auto slots_of(const Oriented & o) const -> std::array<std::size_t, 3>
        {
            return {index(o.x, o.y, 0), index(o.y, o.z, 1), index(o.z, o.x, 2)};
        }
    };

    auto make_slot_graph(int n, std::vector<Oriented> tris) -> SlotGraph
    {
        SlotGraph g{SlotIndex{n}, std::move(tris), {}};
        g.by_slot.resize(static_cast<std::size_t>(n) * n * 3);
        for (std::size_t k = 0; k < g.tris.size(); ++k)
            for (auto slot : g.slots_of(g.tris[k]))
                g.by_slot[slot].push_back(static_cast<int>(k));
        return g;
    }

    // Surviving triangles once every slot has support >= threshold.
    auto prune(const SlotGraph & g, int threshold) -> std::vector<char>
    {
        std::vector<char> alive(g.tris.size(), 1);
        std::vector<int> support(g.by_slot.size(), 0);
        for (std::size_t s = 0; s < g.by_slot.size(); ++s)
            support[s] = static_cast<int>(g.by_slot[s].size());
        std::vector<char> dead(g.by_slot.size(), 0);
        std::vector<std::size_t> work;
        for (std::size_t s = 0; s < g.by_slot.size(); ++s)
            if (support[s] > 0 && support[s] < threshold) {
                dead[s] = 1;
                work.push_back(s);
            }
        while (! work.empty()) {
            auto s = work.back();
            work.pop_back();
            for (int k : g.by_slot[s]) {
                if (! alive[k])
                    continue;
                alive[k] = 0;
                for (auto other : g.slots_of(g.tris[k]))
                    if (--support[other] < threshold && ! dead[other] && support[other] >= 0) {
                        dead[other] = 1;
                        work.push_back(other);
                    }
            }
        }
        return alive;
    }

    auto greedy_path(const SlotGraph & g, const std::vector<char> & alive, const Oriented & start, int n) -> std::vector<int>
    {
        std::vector<int> path{start.x, start.y, start.z};
        std::vector<char> used(n, 0);
        used[start.x] = used[start.y] = used[start.z] = 1;
        while (true) {
            const int j = static_cast<int>(path.size()) - 2;
            const int u = path[j], v = path[j + 1], role = j % 3;
            int next = -1;
            for (int k : g.by_slot[g.index(u, v, role)]) {
                if (! alive[k])
                    continue;
                const auto & o = g.tris[k];
                int w = role == 0 ? o.z : role == 1 ? o.x : o.y;
                if (! used[w] && (next < 0 || w < next))
                    next = w;
            }
            if (next < 0)
                break;
            used[next] = 1;
            path.push_back(next);
        }
        return path;
    }
}

auto three_color_path(const ColoredTournament & t, std::optional<int> min_support) -> ThreeColorPath
{
    auto buckets = pattern_buckets(t);
    if (buckets.empty())
        throw NoCyclicTriangles();
    auto largest = buckets.begin();
    for (auto it = buckets.begin(); it != buckets.end(); ++it)
        if (it->second.size() > largest->second.size())
            largest = it;
    const TrianglePattern pattern = largest->first;
    const int n = t.size();
    const SlotGraph g = make_slot_graph(n, oriented_triangles(t, largest->second, pattern));

    auto survivors = [&](const std::vector<char> & alive) { return std::count(alive.begin(), alive.end(), 1); };

    int support = 1;
    std::vector<char> alive;
    if (min_support) {
        support = std::max(1, *min_support);
        alive = prune(g, support);
        if (survivors(alive) == 0)
            throw SupportTooHigh(support);
    }
    else {
        // Survival is monotone in the threshold, so bisect for the largest one.
        int lo = 1, hi = 1;
        for (const auto & slot : g.by_slot)
            hi = std::max(hi, static_cast<int>(slot.size()));
        alive = prune(g, lo);
        while (lo < hi) {
            int mid = lo + (hi - lo + 1) / 2;
            auto trial = prune(g, mid);
            if (survivors(trial) > 0) {
                lo = mid;
                alive = std::move(trial);
            }
            else
                hi = mid - 1;
        }
        support = lo;
    }

    std::vector<int> best;
    int starts = 0;
    for (std::size_t k = 0; k < g.tris.size() && starts < 64; ++k) {
        if (! alive[k])
            continue;
        ++starts;
        auto path = greedy_path(g, alive, g.tris[k], n);
        if (path.size() > best.size())
            best = std::move(path);
    }

    std::set<int> colors(pattern.begin(), pattern.end());
    ThreeColorPath result;
    result.cert = PathCertificate{PathMode::Directed, AllowedSet{{colors.begin(), colors.end()}}, best};
    result.pattern = pattern;
    result.min_support = support;
    return result;
}

auto audit_three_color_path(const ColoredTournament & t, const ThreeColorPath & p) -> std::optional<std::string>
{
    if (auto problem = validate_path(t, p.cert))
        return problem;
    const auto & v = p.cert.vertices;
    std::set<int> seen;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        int c = t.arc_color(v[j], v[j + 1]);
        seen.insert(c);
        if (c != p.pattern[j % 3])
            return "arc " + std::to_string(j + 1) + " has color " + std::to_string(c) + ", period 3 expects " + std::to_string(p.pattern[j % 3]);
    }
    if (seen.size() > 3)
        return std::string("more than three colors");
    for (std::size_t j = 0; j + 2 < v.size(); ++j) {
        if (! t.beats(v[j + 2], v[j]))
            return "vertices " + std::to_string(j + 1) + " and " + std::to_string(j + 3) + " are not joined backwards";
        int c = t.arc_color(v[j + 2], v[j]);
        if (c != p.pattern[(j + 2) % 3])
            return "backward arc at " + std::to_string(j + 1) + " has color " + std::to_string(c);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- classification

namespace
{
    auto check_order(std::span<const int> order, int n) -> void
    {
        if (static_cast<int>(order.size()) != n)
            throw InvalidArgument("order length does not match the tournament");
        std::vector<char> seen(n, 0);
        for (int v : order) {
            if (v < 0 || v >= n || seen[v])
                throw InvalidArgument("order is not a permutation");
            seen[v] = 1;
        }
    }

    auto avoid_mask(int q, int i) -> ColorMask { return full_mask(q) & ~(ColorMask{1} << i); }

    // The `s` positions in [begin, end) with the largest score, ties to the smaller position.
    auto top_ranked(const std::vector<int> & score, int begin, int end, int s) -> std::vector<int>
    {
        std::vector<int> pos(end - begin);
        std::iota(pos.begin(), pos.end(), begin);
        std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) { return score[a] > score[b]; });
        pos.resize(std::min<std::size_t>(pos.size(), static_cast<std::size_t>(s)));
        std::sort(pos.begin(), pos.end());
        return pos;
    }

    auto count_in(const std::vector<int> & xs, const Interval & iv) -> int
    {
        return static_cast<int>(std::count_if(xs.begin(), xs.end(), [&](int x) { return iv.contains(x); }));
    }

    auto whole_ell(const ColoredTournament & sub, int i, const Budget & budget) -> std::pair<int, bool>
    {
        try {
            return {longest_avoiding_directed_exact(sub, i, budget).length(), true};
        }
        catch (const PathBudgetExceeded & e) {
            return {e.best().length(), false};
        }
    }

    auto derive_lists(ColorClassification & cls) -> void
    {
        cls.long_colors.clear();
        cls.condensed_colors.clear();
        cls.left_diffuse.clear();
        cls.right_diffuse.clear();
        for (int i = 1; i <= static_cast<int>(cls.colors.size()); ++i) {
            const auto & c = cls.color(i);
            if (c.is_long)
                cls.long_colors.push_back(i);
            if (c.condensed())
                cls.condensed_colors.push_back(i);
            if (c.left_diffuse())
                cls.left_diffuse.push_back(i);
            if (c.right_diffuse())
                cls.right_diffuse.push_back(i);
        }
        const int p = std::max(1, static_cast<int>(std::floor(cls.params.p)));
        cls.delta_l.assign(cls.left_diffuse.begin(), cls.left_diffuse.begin() + std::min<std::size_t>(p, cls.left_diffuse.size()));
    }
}

auto classify_colors(const ColoredTournament & t, std::span<const int> order, const ProofParameters & params, const Budget & budget)
    -> ColorClassification
{
    const int n = t.size(), q = t.q(), s = params.s;
    check_order(order, n);
    if (s < 1 || n < 16 * s)
        throw DegenerateScale("classification needs N >= 16 s; N = " + std::to_string(n) + ", s = " + std::to_string(s));

    ColorClassification cls;
    cls.params = params;
    cls.order.assign(order.begin(), order.end());
    const int half = n / 2;
    cls.a = {0, half - 4 * s};
    cls.b = {half - 4 * s, half};
    cls.c = {half, half + 4 * s};
    cls.d = {half + 4 * s, n};

    const ColoredTournament sub = t.induced(order);
    std::vector<int> left_pos(half), right_pos(n - half);
    std::iota(left_pos.begin(), left_pos.end(), 0);
    std::iota(right_pos.begin(), right_pos.end(), half);
    const ColoredTournament left = sub.induced(left_pos), right = sub.induced(right_pos);

    for (int i = 1; i <= q; ++i) {
        ColorClass c;
        std::tie(c.ell, c.ell_exact) = whole_ell(sub, i, budget);
        c.is_long = c.ell >= params.gamma * n;

        auto into = paths_ending_at(left, avoid_mask(q, i));
        auto out = paths_starting_at(right, avoid_mask(q, i));
        cls.tables_exact = cls.tables_exact && into.exact && out.exact;
        c.into.assign(n, 0);
        c.out_of.assign(n, 0);
        c.into_path.assign(n, {});
        c.out_path.assign(n, {});
        for (int v = 0; v < half; ++v) {
            c.into[v] = into.length[v];
            c.into_path[v] = into.witness[v];
        }
        for (int v = 0; v < n - half; ++v) {
            c.out_of[half + v] = out.length[v];
            for (int w : out.witness[v])
                c.out_path[half + v].push_back(half + w);
        }
        c.x = top_ranked(c.into, 0, half, s);
        c.y = top_ranked(c.out_of, half, n, s);
        c.left_condensed = 2 * count_in(c.x, cls.b) >= s;
        c.right_condensed = 2 * count_in(c.y, cls.c) >= s;
        cls.colors.push_back(std::move(c));
    }
    derive_lists(cls);
    return cls;
}

auto audit_classification(const ColoredTournament & t, const ColorClassification & cls) -> std::optional<std::string>
{
    const int n = t.size(), s = cls.params.s, half = n / 2;
    if (static_cast<int>(cls.order.size()) != n || static_cast<int>(cls.colors.size()) != t.q())
        return std::string("classification does not match the tournament");
    if (cls.a.begin != 0 || cls.a.end != cls.b.begin || cls.b.end != cls.c.begin || cls.c.end != cls.d.begin || cls.d.end != n
        || cls.b.size() != 4 * s || cls.c.size() != 4 * s || cls.b.end != half)
        return std::string("intervals are not A, B, C, D of lengths N/2 - 4s, 4s, 4s, N/2 - 4s");
    const ColoredTournament sub = t.induced(cls.order);
    for (int i = 1; i <= t.q(); ++i) {
        const auto & c = cls.color(i);
        const std::string tag = "color " + std::to_string(i) + ": ";
        if (static_cast<int>(c.x.size()) != s || static_cast<int>(c.y.size()) != s)
            return tag + "|X| or |Y| differs from s";
        int min_in = std::numeric_limits<int>::max(), min_out = std::numeric_limits<int>::max();
        for (int v : c.x) {
            if (v < 0 || v >= half)
                return tag + "X leaves A u B";
            min_in = std::min(min_in, c.into[v]);
        }
        for (int v : c.y) {
            if (v < half || v >= n)
                return tag + "Y leaves C u D";
            min_out = std::min(min_out, c.out_of[v]);
        }
        for (int v = 0; v < half; ++v)
            if (! std::binary_search(c.x.begin(), c.x.end(), v) && c.into[v] > min_in)
                return tag + "position " + std::to_string(v) + " outranks X";
        for (int v = half; v < n; ++v)
            if (! std::binary_search(c.y.begin(), c.y.end(), v) && c.out_of[v] > min_out)
                return tag + "position " + std::to_string(v) + " outranks Y";
        if (c.is_long != (c.ell >= cls.params.gamma * n))
            return tag + "long flag disagrees with ell";
        if (c.left_condensed != (2 * count_in(c.x, cls.b) >= s) || c.right_condensed != (2 * count_in(c.y, cls.c) >= s))
            return tag + "condensed flags disagree with X, Y";
        for (int v = 0; v < half; ++v) {
            const auto & path = c.into_path[v];
            if (static_cast<int>(path.size()) != c.into[v] || path.empty() || path.back() != v)
                return tag + "witness ending at " + std::to_string(v) + " has the wrong shape";
            if (auto problem = validate_path(sub, PathCertificate{PathMode::Directed, AvoidColor{i}, path}))
                return tag + *problem;
            for (int w : path)
                if (w >= half)
                    return tag + "witness leaves A u B";
        }
        for (int v = half; v < n; ++v) {
            const auto & path = c.out_path[v];
            if (static_cast<int>(path.size()) != c.out_of[v] || path.empty() || path.front() != v)
                return tag + "witness starting at " + std::to_string(v) + " has the wrong shape";
            if (auto problem = validate_path(sub, PathCertificate{PathMode::Directed, AvoidColor{i}, path}))
                return tag + *problem;
            for (int w : path)
                if (w < half)
                    return tag + "witness leaves C u D";
        }
    }
    ColorClassification copy = cls;
    derive_lists(copy);
    if (copy.long_colors != cls.long_colors || copy.condensed_colors != cls.condensed_colors || copy.left_diffuse != cls.left_diffuse
        || copy.right_diffuse != cls.right_diffuse || copy.delta_l != cls.delta_l)
        return std::string("color lists disagree with the per-color flags");
    return std::nullopt;
}

// ---------------------------------------------------------------- gluing

auto audit_gluing(const ColoredTournament & t, const ColorClassification & cls, const GluingStructure & g, int min_block)
    -> std::optional<std::string>
{
    const int n = t.size();
    if (g.blocks.empty())
        return g.anchors.size() <= 1 ? std::nullopt : std::optional<std::string>("anchors without blocks");
    if (g.anchors.size() != g.blocks.size() + 1)
        return std::string("need t + 1 anchors for t blocks");
    ColorMask glue = mask_of(g.glue_colors);
    auto vertex = [&](int pos) { return cls.order[pos]; };
    for (int pos : g.anchors)
        if (pos < 0 || pos >= n)
            return std::string("anchor out of range");
    for (int a = 0; a < g.t(); ++a) {
        const auto & block = g.blocks[a];
        const int from = g.anchors[a], to = g.anchors[a + 1];
        const std::string tag = "block " + std::to_string(a + 1) + ": ";
        if (static_cast<int>(block.size()) < min_block)
            return tag + "has " + std::to_string(block.size()) + " vertices, fewer than " + std::to_string(min_block);
        for (int pos : block) {
            if (pos <= from || pos >= to)
                return tag + "position " + std::to_string(pos) + " is not between its anchors";
            if (! t.beats(vertex(from), vertex(pos)) || ! ((glue >> t.arc_color(vertex(from), vertex(pos))) & 1))
                return tag + "arc from anchor to " + std::to_string(pos) + " is missing or not a glue color";
            if (! t.beats(vertex(pos), vertex(to)) || ! ((glue >> t.arc_color(vertex(pos), vertex(to))) & 1))
                return tag + "arc from " + std::to_string(pos) + " to the next anchor is missing or not a glue color";
        }
    }
    return std::nullopt;
}

auto build_gluing(const ColoredTournament & t, const ColorClassification & cls, GluingMode mode) -> GluingStructure
{
    const int p = std::max(1, static_cast<int>(std::floor(cls.params.p)));
    if (static_cast<int>(cls.left_diffuse.size()) < p)
        throw NotDiffuse("need " + std::to_string(p) + " left-diffuse colors, found " + std::to_string(cls.left_diffuse.size()));
    const int n = t.size(), s = cls.params.s, half = n / 2;
    const ColoredTournament sub = t.induced(cls.order);
    const auto & delta = cls.delta_l;

    // iota(v): the glue color whose U_i = X_i n A holds v (first one if several do).
    std::vector<int> iota(n, 0);
    std::vector<int> u;
    for (int i : delta)
        for (int v : cls.color(i).x)
            if (cls.a.contains(v) && ! iota[v])
                iota[v] = i;
    for (int v = 0; v < n; ++v)
        if (iota[v])
            u.push_back(v);

    // w in E_i(v): on v's witness path, a non-neighbour of v, or in X_i.
    auto exceptional = [&](int i, int v, int w) {
        const auto & c = cls.color(i);
        if (std::find(c.into_path[v].begin(), c.into_path[v].end(), w) != c.into_path[v].end())
            return true;
        if (w < half && w != v && ! (v < w ? sub.beats(v, w) : sub.beats(w, v)))
            return true;
        return std::binary_search(c.x.begin(), c.x.end(), w);
    };
    ColorMask glue = mask_of(delta);
    auto glued = [&](int from, int to) { return sub.beats(from, to) && ((glue >> sub.arc_color(from, to)) & 1); };

    GluingStructure g;
    g.glue_colors = delta;
    if (u.empty())
        return g;
    g.anchors.push_back(u[0]);
    for (std::size_t k = 0; u.size() - k - 1 >= static_cast<std::size_t>(12 * s);) {
        const int va = u[k];
        std::vector<int> ia(u.begin() + k + 1, u.begin() + k + 1 + 4 * s);
        std::vector<int> ja(u.begin() + k + 1 + 4 * s, u.begin() + k + 1 + 12 * s);
        std::vector<int> ia_prime;
        for (int v : ia)
            if (! exceptional(iota[va], va, v))
                ia_prime.push_back(v);
        int next = -1, best_degree = std::numeric_limits<int>::max();
        for (int w : ja) {
            int degree = 0;
            for (int v : ia_prime)
                degree += exceptional(iota[v], v, w);
            if (degree < best_degree) {
                best_degree = degree;
                next = w;
            }
        }
        std::vector<int> block;
        for (int v : ia_prime)
            if (! exceptional(iota[v], v, next) && (mode == GluingMode::Strict || (glued(va, v) && glued(v, next))))
                block.push_back(v);
        if (mode == GluingMode::Repair && block.empty())
            break;
        g.blocks.push_back(std::move(block));
        g.anchors.push_back(next);
        k = static_cast<std::size_t>(std::find(u.begin(), u.end(), next) - u.begin());
    }
    if (auto problem = audit_gluing(t, cls, g, mode == GluingMode::Strict ? s : 1))
        throw AuditFailed("gluing structure: " + *problem);
    return g;
}

// ---------------------------------------------------------------- baseline

auto baseline_floor(int n, int q) -> int
{
    if (n <= 1 || q <= 1)
        return std::min(std::max(n, 0), 1);
    const int k = q == 2 ? 2 : q - 1;
    int m = 1;
    while (true) {
        long long power = 1;
        for (int j = 0; j < k && power < n; ++j)
            power *= m;
        if (power >= n)
            return m;
        ++m;
    }
}

namespace
{
    // Longest path inside a maximal acyclic subgraph of the arcs whose colors lie in `block`.
    auto acyclic_class_path(const ColoredTournament & t, ColorMask block, const std::vector<int> & order) -> std::vector<int>
    {
        const int n = t.size();
        std::vector<int> pos(n);
        for (int a = 0; a < n; ++a)
            pos[order[a]] = a;
        std::vector<Bits> reach(n, Bits(n));
        std::vector<std::vector<int>> succ(n);
        auto add = [&](int u, int v) {
            if (reach[v][u])
                return;
            Bits gained = reach[v];
            gained.set(v);
            for (int x = 0; x < n; ++x)
                if (x == u || reach[x][u])
                    reach[x] |= gained;
            succ[u].push_back(v);
        };
        // Forward arcs of the order first (always acyclic), then any backward arc that closes no cycle.
        for (int pass = 0; pass < 2; ++pass)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b || (pass == 0) != (a < b))
                        continue;
                    int u = order[a], v = order[b];
                    if (t.beats(u, v) && ((block >> t.arc_color(u, v)) & 1))
                        add(u, v);
                }

        // Longest path by DP over a topological order (reverse postorder).
        std::vector<int> indeg(n, 0), topo;
        for (int u = 0; u < n; ++u)
            for (int v : succ[u])
                ++indeg[v];
        std::deque<int> ready;
        for (int a = 0; a < n; ++a)
            if (! indeg[order[a]])
                ready.push_back(order[a]);
        while (! ready.empty()) {
            int u = ready.front();
            ready.pop_front();
            topo.push_back(u);
            for (int v : succ[u])
                if (--indeg[v] == 0)
                    ready.push_back(v);
        }
        std::vector<int> len(n, 1), prev(n, -1);
        for (int u : topo)
            for (int v : succ[u])
                if (len[u] + 1 > len[v]) {
                    len[v] = len[u] + 1;
                    prev[v] = u;
                }
        if (n == 0)
            return {};
        int end = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());
        std::vector<int> path;
        for (int v = end; v >= 0; v = prev[v])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }
}

auto constructive_baseline(const ColoredTournament & t, std::uint64_t seed) -> std::vector<PathCertificate>
{
    const int n = t.size(), q = t.q();
    std::vector<PathCertificate> best;
    for (int i = 1; i <= q; ++i)
        best.push_back(PathCertificate{PathMode::Directed, AvoidColor{i}, n ? std::vector<int>{0} : std::vector<int>{}});
    if (n == 0)
        return best;
    const auto order = heuristic_transitive_order(t, seed);

    std::vector<ColorMask> blocks;
    for (int c = 1; c <= q; ++c)
        blocks.push_back(ColorMask{1} << c);
    if (q >= 3)
        for (int a = 1; a <= q; ++a)
            for (int b = a + 1; b <= q; ++b)
                if (q <= 8 || (a == 1 && b == 2))
                    blocks.push_back((ColorMask{1} << a) | (ColorMask{1} << b));

    for (auto block : blocks) {
        auto path = acyclic_class_path(t, block, order);
        for (int i = 1; i <= q; ++i)
            if (! ((block >> i) & 1) && path.size() > best[i - 1].vertices.size())
                best[i - 1].vertices = path;
    }
    return best;
}

// ---------------------------------------------------------------- recursion

namespace
{
    using PerColor = std::vector<std::vector<int>>;

    auto approx_rational(double x) -> Rational
    {
        constexpr std::int64_t denom = std::int64_t{1} << 30;
        return Rational(std::llround(x * static_cast<double>(denom)), denom);
    }

    struct Finder
    {
        const ColoredTournament & t;
        const RecursiveOptions & options;
        std::vector<Json> trace;

        auto map_ids(const std::vector<int> & local, const std::vector<int> & ids) const -> std::vector<int>
        {
            std::vector<int> out;
            out.reserve(local.size());
            for (int v : local)
                out.push_back(ids[v]);
            return out;
        }

        auto valid_avoiding(const std::vector<int> & path, int color) const -> bool
        {
            return ! path.empty() && ! validate_path(t, PathCertificate{PathMode::Directed, AvoidColor{color}, path});
        }

        // Keeps `candidate` for `color` when it is strictly longer and valid.
        auto offer(PerColor & best, std::vector<int> & branch_best, int branch, int color, std::vector<int> candidate) const -> void
        {
            if (! valid_avoiding(candidate, color))
                return;
            branch_best[branch] = std::max(branch_best[branch], static_cast<int>(candidate.size()));
            if (candidate.size() > best[color - 1].size())
                best[color - 1] = std::move(candidate);
        }

        auto exact(const std::vector<int> & ids) -> PerColor
        {
            const ColoredTournament sub = t.induced(ids);
            PerColor best(t.q());
            for (int i = 1; i <= t.q(); ++i)
                best[i - 1] = map_ids(longest_avoiding_directed_exact(sub, i).vertices, ids);
            return best;
        }

        // Case-2 path v_1 P_1 v_2 ... P_t v_{t+1} for every color outside the glue colors.
        auto glue_blocks(PerColor & best, std::vector<int> & branch_best, const ColoredTournament & work, const std::vector<int> & work_ids,
            bool reversed) -> void
        {
            const int m = work.size();
            auto params = proof_parameters(t.q(), m);
            if (m < 16 * params.s)
                params.s = std::max(1, m / 16);
            std::vector<int> identity(m);
            std::iota(identity.begin(), identity.end(), 0);
            ColorClassification cls;
            try {
                cls = classify_colors(work, identity, params, options.exact_budget);
            }
            catch (const DegenerateScale &) {
                return;
            }
            // At desk scale gamma N is tiny, so every color tends to be long and
            // none is diffuse; glue with the colors whose X_i avoids B instead,
            // and with all of them since p exceeds q here.
            std::vector<int> glue;
            for (int i = 1; i <= t.q(); ++i)
                if (! cls.color(i).left_condensed)
                    glue.push_back(i);
            if (glue.empty() || static_cast<int>(glue.size()) == t.q())
                return;
            cls.left_diffuse = glue;
            cls.params.p = static_cast<double>(glue.size());
            cls.delta_l = glue;
            // |U| <= |glue| s never reaches 12 s + 1, so the blocks get their own,
            // smaller scale: room for about two rounds.
            std::set<int> u;
            for (int i : glue)
                for (int v : cls.color(i).x)
                    if (cls.a.contains(v))
                        u.insert(v);
            cls.params.s = std::max(1, (static_cast<int>(u.size()) - 1) / 24);
            GluingStructure g;
            try {
                g = build_gluing(work, cls, GluingMode::Repair);
            }
            catch (const Error &) {
                return;
            }
            if (g.t() == 0)
                return;
            std::vector<PerColor> inside;
            for (const auto & block : g.blocks)
                inside.push_back(solve(map_ids(block, work_ids)));
            for (int k = 1; k <= t.q(); ++k) {
                if (std::find(cls.delta_l.begin(), cls.delta_l.end(), k) != cls.delta_l.end())
                    continue;
                std::vector<int> path{work_ids[g.anchors[0]]};
                for (int a = 0; a < g.t(); ++a) {
                    auto piece = inside[a][k - 1];
                    if (reversed)
                        std::reverse(piece.begin(), piece.end());
                    path.insert(path.end(), piece.begin(), piece.end());
                    path.push_back(work_ids[g.anchors[a + 1]]);
                }
                if (reversed)
                    std::reverse(path.begin(), path.end());
                offer(best, branch_best, 3, k, std::move(path));
            }
        }

        auto solve(const std::vector<int> & ids) -> PerColor
        {
            const int n = static_cast<int>(ids.size()), q = t.q();
            if (n <= options.exact_floor) {
                auto best = exact(ids);
                if (options.trace) {
                    int chosen = 1;
                    for (int i = 1; i <= q; ++i)
                        if (best[i - 1].size() > best[chosen - 1].size())
                            chosen = i;
                    trace.push_back(Json{{"case", "exact"}, {"N", n}, {"chosen_color", chosen}, {"branch_lengths", {{"exact", best[chosen - 1].size()}}}});
                }
                return best;
            }

            const ColoredTournament sub = t.induced(ids);
            PerColor best(q);
            // baseline, three_color, case1, case2
            std::vector<int> branch_best(4, 0);

            for (auto & cert : constructive_baseline(sub, options.seed))
                offer(best, branch_best, 0, std::get<AvoidColor>(cert.constraint).color, map_ids(cert.vertices, ids));

            try {
                auto tri = three_color_path(sub);
                for (int i = 1; i <= q; ++i)
                    if (std::find(tri.pattern.begin(), tri.pattern.end(), i) == tri.pattern.end())
                        offer(best, branch_best, 1, i, map_ids(tri.cert.vertices, ids));
            }
            catch (const NoCyclicTriangles &) {
            }

            std::string label = "baseline_only";
            bool close = false;
            if (q >= 2) {
                auto order = heuristic_transitive_order(sub, options.seed);
                auto params = proof_parameters(q, n);
                const Rational delta = approx_rational(params.delta);
                const auto backward = backward_edge_count(sub, order);
                close = Rational(backward) <= delta * delta * Rational(static_cast<std::int64_t>(n) * n);

                // The working tournament lists vertices in order; work_ids maps its positions back to t.
                ColoredTournament work = sub.induced(order);
                std::vector<int> work_ids = map_ids(order, ids);
                if (close) {
                    auto cleaned = clean_degrees(sub, order, delta);
                    work = cleaned.sub;
                    work_ids = map_ids(cleaned.kept, ids);
                }
                const int m = work.size();
                if (m < 16 * params.s)
                    params.s = std::max(1, m / 16);
                if (m >= 16 * params.s && m > options.exact_floor) {
                    std::vector<int> identity(m);
                    std::iota(identity.begin(), identity.end(), 0);
                    auto cls = classify_colors(work, identity, params, options.exact_budget);
                    const int p = static_cast<int>(std::floor(params.p));
                    const int short_colors = q - static_cast<int>(cls.long_colors.size());
                    label = static_cast<int>(cls.condensed_colors.size()) >= short_colors - 2 * p ? "case1" : "case2";
                    if (! close)
                        label = "far";

                    // Case 1: halves recursively, then glue across the midpoint.
                    const int half = m / 2;
                    std::vector<int> left(work_ids.begin(), work_ids.begin() + half), right(work_ids.begin() + half, work_ids.end());
                    auto lbest = solve(left), rbest = solve(right);
                    for (int i = 1; i <= q; ++i) {
                        offer(best, branch_best, 2, i, lbest[i - 1]);
                        offer(best, branch_best, 2, i, rbest[i - 1]);
                        auto joined = lbest[i - 1];
                        joined.insert(joined.end(), rbest[i - 1].begin(), rbest[i - 1].end());
                        offer(best, branch_best, 2, i, std::move(joined));

                        const auto & c = cls.color(i);
                        auto try_pairs = [&](bool midpoint_only) {
                            for (int v : c.x)
                                for (int w : c.y) {
                                    if (midpoint_only && (! cls.b.contains(v) || ! cls.c.contains(w)))
                                        continue;
                                    if (! work.beats(v, w) || work.arc_color(v, w) == i)
                                        continue;
                                    auto path = c.into_path[v];
                                    path.insert(path.end(), c.out_path[w].begin(), c.out_path[w].end());
                                    offer(best, branch_best, 2, i, map_ids(path, work_ids));
                                    return true;
                                }
                            return false;
                        };
                        if (! try_pairs(true))
                            try_pairs(false);
                    }

                    // Case 2, in both orientations.
                    glue_blocks(best, branch_best, work, work_ids, false);
                    std::vector<int> rev_ids(work_ids.rbegin(), work_ids.rend());
                    std::vector<int> rev_order(m);
                    std::iota(rev_order.rbegin(), rev_order.rend(), 0);
                    glue_blocks(best, branch_best, work.reversed().induced(rev_order), rev_ids, true);
                }
            }

            if (options.trace) {
                int chosen = 1;
                for (int i = 1; i <= q; ++i)
                    if (best[i - 1].size() > best[chosen - 1].size())
                        chosen = i;
                trace.push_back(Json{{"case", label},
                    {"N", n},
                    {"close", close},
                    {"chosen_color", chosen},
                    {"branch_lengths",
                        {{"baseline", branch_best[0]}, {"three_color", branch_best[1]}, {"case1", branch_best[2]}, {"case2", branch_best[3]}}}});
            }
            return best;
        }
    };
}

auto recursive_color_avoiding(const ColoredTournament & t, const RecursiveOptions & options) -> AvoidingPath
{
    if (t.size() == 0)
        throw InvalidArgument("tournament has no vertices");
    Finder finder{t, options, {}};
    std::vector<int> all(t.size());
    std::iota(all.begin(), all.end(), 0);
    auto per = finder.solve(all);

    AvoidingPath result;
    for (int i = 1; i <= t.q(); ++i) {
        result.per_color.push_back(PathCertificate{PathMode::Directed, AvoidColor{i}, per[i - 1]});
        if (per[i - 1].size() > per[result.color - 1].size())
            result.color = i;
    }
    result.cert = result.per_color[result.color - 1];
    if (auto problem = validate_path(t, result.cert))
        throw AuditFailed("recursive finder produced an invalid path: " + *problem);
    result.trace = std::move(finder.trace);
    return result;
}

} // namespace rpods
