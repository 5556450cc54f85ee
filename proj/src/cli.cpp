#include <ramsey_pods/cli.hpp>
#include <ramsey_pods/constructions.hpp>
#include <ramsey_pods/decomposition.hpp>
#include <ramsey_pods/io.hpp>
#include <ramsey_pods/pods.hpp>
#include <ramsey_pods/reductions.hpp>
#include <ramsey_pods/search.hpp>

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>

namespace rpods {

namespace
{
    struct Common
    {
        bool json = false;
        std::uint64_t seed = 0;
        int threads = 0;
        std::string output;
    };

    auto emit(std::ostream & out, const Common & c, const Json & j) -> void
    {
        if (c.output.empty())
            out << j.dump(c.json ? -1 : 2) << '\n';
        else
            write_text_file(c.output, j.dump(2) + "\n");
    }

    // Key statistics: JSON object with --json, "key: value" lines otherwise.
    auto report(std::ostream & out, const Common & c, const Json & stats) -> void
    {
        if (c.json) {
            out << stats.dump() << '\n';
            return;
        }
        for (auto it = stats.begin(); it != stats.end(); ++it)
            out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }

    auto load_family(const std::string & file, std::optional<int> r) -> VectorFamily
    {
        if (file.size() > 4 && file.substr(file.size() - 4) == ".csv") {
            if (! r)
                throw InvalidArgument("CSV families need --r");
            return family_from_csv(read_text_file(file), *r);
        }
        auto fam = family_from_json(read_json_file(file));
        if (r && *r != fam.r())
            return VectorFamily::from_rows(fam.q(), fam.n(), *r, fam.rows());
        return fam;
    }

    auto ells(const OrderedColoring & k) -> std::vector<int>
    {
        std::vector<int> out;
        for (int i = 1; i <= k.q(); ++i)
            out.push_back(ell_avoid_monotone(k, i).length());
        return out;
    }

    auto coloring_stats(const OrderedColoring & k) -> Json
    {
        int single = 0;
        for (int c = 1; c <= k.q(); ++c)
            single = std::max(single, longest_restricted_monotone_length(k, mask_of({c})));
        auto ell = ells(k);
        return Json{{"vertices", k.size()}, {"q", k.q()}, {"longest_single_color_path", single}, {"ell", ell},
            {"ell_equal", std::adjacent_find(ell.begin(), ell.end(), std::not_equal_to<>()) == ell.end()}};
    }

    // ------------------------------------------------------------ search / table

    struct SearchArgs
    {
        std::string kind;
        int q = 0, r = 0, size = 0;
        std::string budget;
        std::uint64_t nodes = 0;
        std::string cache;
        std::string witness;
    };

    auto cmd_search(const SearchArgs & a, const Common & c, std::ostream & out, std::ostream & err) -> int
    {
        const Kind kind = parse_kind(a.kind);
        Budget budget;
        if (! a.budget.empty()) {
            auto wall = parse_duration(a.budget);
            if (! wall)
                throw InvalidArgument("cannot read budget '" + a.budget + "'");
            budget.wall = *wall;
        }
        if (a.nodes)
            budget.max_nodes = a.nodes;

        std::optional<ExtremalCache> cache;
        if (! a.cache.empty())
            cache.emplace(a.cache);
        else if (std::getenv("RAMSEY_PODS_CACHE"))
            cache.emplace(ExtremalCache::default_path());

        std::optional<ExtremalRecord> rec;
        if (cache)
            if (auto hit = cache->get(kind, a.q, a.r, a.size); hit && hit->status == Status::Exact)
                rec = hit;
        if (! rec) {
            rec = run_search(kind, a.q, a.r, a.size, budget);
            if (auto problem = validate_record(*rec))
                throw Error("search produced an inconsistent record: " + *problem);
            if (cache)
                cache->put(*rec);
        }

        if (! a.witness.empty()) {
            Json w = std::visit(
                [](const auto & x) -> Json {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, VectorFamily>)
                        return family_to_json(x);
                    else if constexpr (std::is_same_v<T, OrderedColoring>)
                        return coloring_to_json(x);
                    else if constexpr (std::is_same_v<T, ColoredTournament>)
                        return tournament_to_json(x);
                    else
                        return nullptr;
                },
                rec->witness);
            write_text_file(a.witness, w.dump(2) + "\n");
        }
        if (c.json)
            out << record_to_json(*rec).dump() << '\n';
        else {
            out << record_to_json(*rec).dump() << '\n';
            out << table_header << '\n' << table_row(*rec) << '\n';
        }
        if (rec->status != Status::Exact)
            err << "search did not close; reporting a " << status_name(rec->status) << '\n';
        return rec->status == Status::Exact ? 0 : 2;
    }

    auto cmd_table(const std::string & cache_file, std::ostream & out, std::ostream & err) -> int
    {
        ExtremalCache cache(cache_file.empty() ? ExtremalCache::default_path() : std::filesystem::path(cache_file));
        out << table_header << '\n';
        for (Kind kind : {Kind::F, Kind::G, Kind::f, Kind::g})
            for (int q = 1; q <= max_palette; ++q)
                for (int r = 1; r <= q; ++r)
                    for (int size = 1; size <= 64; ++size)
                        if (auto rec = cache.get(kind, q, r, size))
                            out << table_row(*rec) << '\n';
        if (cache.rejected_lines())
            err << cache.rejected_lines() << " cache lines failed validation and were skipped\n";
        return 0;
    }

    // ------------------------------------------------------------ verify

    auto cmd_verify(const std::string & what, const std::string & instance, const std::string & certificate, std::optional<int> r,
        const Common & c, std::ostream & out) -> int
    {
        std::optional<std::string> problem;
        if (what == "path") {
            if (certificate.empty())
                throw InvalidArgument("verify path needs an instance and a certificate");
            const Json inst = read_json_file(instance);
            const PathCertificate cert = path_from_json(read_json_file(certificate));
            if (inst.contains("edges"))
                problem = validate_path(tournament_from_json(inst), cert);
            else
                problem = validate_path(coloring_from_json(inst), cert);
        }
        else if (what == "sequence" || what == "comparable") {
            const auto fam = load_family(instance, r);
            auto verdict = what == "sequence" ? validate_increasing(fam) : validate_comparable(fam);
            if (auto fail = std::get_if<FailPair>(&verdict))
                problem = "pair (" + std::to_string(fail->a + 1) + "," + std::to_string(fail->b + 1) + ") "
                    + (what == "sequence" ? "is not r-increasing" : "is not r-comparable");
        }
        else if (what == "packing") {
            const Packing packing = packing_from_json(read_json_file(instance));
            if (auto fail = packing.first_overlap()) {
                auto voxel = shared_voxel(packing.pod(fail->a), packing.pod(fail->b));
                problem = "pods " + std::to_string(fail->a + 1) + " and " + std::to_string(fail->b + 1) + " overlap";
                if (voxel)
                    problem = *problem + " at voxel " + Json(*voxel).dump();
            }
        }
        else
            throw InvalidArgument("unknown verify kind '" + what + "'");

        if (c.json)
            out << Json{{"ok", ! problem}, {"violation", problem ? Json(*problem) : Json(nullptr)}}.dump() << '\n';
        else
            out << (problem ? "violation: " + *problem : std::string("Ok")) << '\n';
        return problem ? 1 : 0;
    }

    // ------------------------------------------------------------ construct

    auto cmd_construct(const std::string & what, const std::vector<std::string> & args, const Common & c, std::ostream & out,
        std::ostream & err) -> int
    {
        auto need = [&](std::size_t k) {
            if (args.size() != k)
                throw InvalidArgument("construct " + what + " takes " + std::to_string(k) + " arguments");
        };
        auto integer = [](const std::string & s) {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size())
                throw InvalidArgument("not an integer: " + s);
            return v;
        };
        // With -o the statistics go to stdout; otherwise the instance does and statistics go to stderr.
        std::ostream & stats_out = c.output.empty() ? err : out;

        if (what == "boost") {
            need(2);
            auto fam = product_boost_vectors(family_from_json(read_json_file(args[0])), family_from_json(read_json_file(args[1])));
            emit(out, c, family_to_json(fam));
            report(stats_out, c, Json{{"vectors", fam.size()}, {"q", fam.q()}, {"n", fam.n()}, {"r", fam.r()}, {"validated", true}});
            return 0;
        }
        OrderedColoring k(1, 1);
        if (what == "canonical") {
            need(2);
            k = canonical_coloring(integer(args[0]), integer(args[1]));
        }
        else if (what == "product") {
            need(2);
            k = lex_product(coloring_from_json(read_json_file(args[0])), coloring_from_json(read_json_file(args[1])));
        }
        else if (what == "balance") {
            need(1);
            k = balance_coloring(coloring_from_json(read_json_file(args[0])));
        }
        else
            throw InvalidArgument("unknown construction '" + what + "'");
        emit(out, c, coloring_to_json(k));
        report(stats_out, c, coloring_stats(k));
        return 0;
    }

    // ------------------------------------------------------------ decompose

    auto cmd_decompose(const std::string & what, const std::string & file, std::optional<int> support, const std::string & trace_file,
        std::uint64_t nodes, const Common & c, std::ostream & out, std::ostream & err) -> int
    {
        const ColoredTournament t = tournament_from_json(read_json_file(file));
        std::ostream & stats_out = c.output.empty() ? err : out;
        if (what == "three-color") {
            ThreeColorPath p;
            try {
                p = three_color_path(t, support);
            }
            catch (const NoCyclicTriangles & e) {
                err << e.what() << '\n';
                return 2;
            }
            if (auto problem = audit_three_color_path(t, p))
                throw AuditFailed("three-color path: " + *problem);
            Json cert = path_to_json(p.cert);
            cert["pattern"] = p.pattern;
            cert["min_support"] = p.min_support;
            emit(out, c, cert);
            report(stats_out, c, Json{{"length", p.cert.length()}, {"pattern", p.pattern}, {"min_support", p.min_support}});
            return 0;
        }
        if (what == "recursive") {
            RecursiveOptions options;
            options.seed = c.seed;
            options.trace = ! trace_file.empty();
            if (nodes)
                options.exact_budget = Budget::nodes(nodes);
            auto result = recursive_color_avoiding(t, options);
            emit(out, c, path_to_json(result.cert));
            if (options.trace)
                write_text_file(trace_file, Json(result.trace).dump(2) + "\n");
            std::vector<int> lengths;
            for (const auto & cert : result.per_color)
                lengths.push_back(cert.length());
            report(stats_out, c, Json{{"length", result.cert.length()}, {"avoided_color", result.color}, {"per_color", lengths},
                {"floor", baseline_floor(t.size(), t.q())}});
            return 0;
        }
        throw InvalidArgument("unknown decomposition '" + what + "'");
    }

    // ------------------------------------------------------------ generate

    auto cmd_generate(const std::string & what, int n, int q, int color, const Common & c, std::ostream & out) -> int
    {
        if (n < 1 || q < 1 || q > max_palette)
            throw InvalidArgument("need N >= 1 and 1 <= q <= 63");
        std::mt19937_64 rng(c.seed);
        std::uniform_int_distribution<int> pick(1, q);
        if (what == "tournament" || what == "transitive") {
            if (what == "transitive" && (color < 0 || color > q))
                throw InvalidArgument("--color outside the palette");
            ColoredTournament t(n, q);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    int col = color ? color : pick(rng);
                    if (what == "tournament" && (rng() & 1))
                        t.set_arc(v, u, col);
                    else
                        t.set_arc(u, v, col);
                }
            emit(out, c, tournament_to_json(t));
            return 0;
        }
        if (what == "coloring") {
            OrderedColoring k(n, q);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    k.set_color(u, v, color ? color : pick(rng));
            emit(out, c, coloring_to_json(k));
            return 0;
        }
        throw InvalidArgument("unknown generator '" + what + "'");
    }
}

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Search, construct, decompose and verify r-increasing families, colored tournaments and pods."};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "Machine-readable JSON on stdout");
    app.add_option("--seed", common.seed, "Seed for randomized steps");
    app.add_option("--threads", common.threads, "Cap on OpenMP worker threads");
    app.add_option("-o,--output", common.output, "Write the main result to this file");

    SearchArgs sa;
    auto * search = app.add_subcommand("search", "Exact value of F, G, f or g with a witness");
    search->add_option("kind", sa.kind, "F, G, f or g")->required()->check(CLI::IsMember({"F", "G", "f", "g"}));
    search->add_option("q", sa.q)->required();
    search->add_option("r", sa.r)->required();
    search->add_option("size", sa.size, "n for F and G, N for f and g")->required();
    search->add_option("--budget", sa.budget, "Wall-clock limit such as 500ms or 2s");
    search->add_option("--nodes", sa.nodes, "Node limit");
    search->add_option("--cache", sa.cache, "JSON-lines cache file (default $RAMSEY_PODS_CACHE when set)");
    search->add_option("--witness", sa.witness, "Write the witness instance to this file");

    std::string table_cache;
    auto * table = app.add_subcommand("table", "CSV of every cached record");
    table->add_option("--cache", table_cache);

    std::string verify_kind, instance, certificate;
    std::optional<int> verify_r;
    auto * verify = app.add_subcommand("verify", "Check a certificate");
    verify->add_option("kind", verify_kind, "path, sequence, comparable or packing")
        ->required()
        ->check(CLI::IsMember({"path", "sequence", "comparable", "packing"}));
    verify->add_option("instance", instance)->required();
    verify->add_option("certificate", certificate);
    verify->add_option("--r", verify_r, "Threshold override (required for CSV families)");

    std::string construct_kind;
    std::vector<std::string> construct_args;
    auto * construct = app.add_subcommand("construct", "Build a product, canonical, balanced or boosted instance");
    construct->add_option("kind", construct_kind, "product, canonical, balance or boost")
        ->required()
        ->check(CLI::IsMember({"product", "canonical", "balance", "boost"}));
    construct->add_option("args", construct_args);

    std::string decompose_kind, tournament_file, trace_file;
    std::optional<int> support;
    std::uint64_t decompose_nodes = 0;
    auto * decompose = app.add_subcommand("decompose", "Color-avoiding paths from the proof machinery");
    decompose->add_option("kind", decompose_kind, "three-color or recursive")->required()->check(CLI::IsMember({"three-color", "recursive"}));
    decompose->add_option("tournament", tournament_file)->required();
    decompose->add_option("--support", support, "Minimum triangle support (default: largest feasible)");
    decompose->add_option("--trace", trace_file, "Write the recursion log to this file");
    decompose->add_option("--nodes", decompose_nodes, "Node budget for each exact sub-search");

    std::string generate_kind;
    int gen_n = 0, gen_q = 0, gen_color = 0;
    auto * generate = app.add_subcommand("generate", "Random or transitive test instances");
    generate->add_option("kind", generate_kind, "tournament, transitive or coloring")
        ->required()
        ->check(CLI::IsMember({"tournament", "transitive", "coloring"}));
    generate->add_option("N", gen_n)->required();
    generate->add_option("q", gen_q)->required();
    generate->add_option("--color", gen_color, "Use this color for every edge");

    std::vector<std::string> argv_store{"ramsey-pods"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto & s : argv_store)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (common.threads > 0)
        omp_set_num_threads(common.threads);
    try {
        if (search->parsed())
            return cmd_search(sa, common, out, err);
        if (table->parsed())
            return cmd_table(table_cache, out, err);
        if (verify->parsed())
            return cmd_verify(verify_kind, instance, certificate, verify_r, common, out);
        if (construct->parsed())
            return cmd_construct(construct_kind, construct_args, common, out, err);
        if (decompose->parsed())
            return cmd_decompose(decompose_kind, tournament_file, support, trace_file, decompose_nodes, common, out, err);
        if (generate->parsed())
            return cmd_generate(generate_kind, gen_n, gen_q, gen_color, common, out);
    }
    catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace rpods
