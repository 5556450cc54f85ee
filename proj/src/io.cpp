#include <ramsey_pods/errors.hpp>
#include <ramsey_pods/io.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rpods {

namespace
{
    // Runs a reader and reports every failure as a ParseError.
    template <typename F>
    auto parsing(const char * what, F && f) -> decltype(f())
    {
        try {
            return f();
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const std::exception & e) {
            throw ParseError(std::string(what) + ": " + e.what());
        }
    }

    auto rows_to_json(const std::vector<std::vector<int>> & rows) -> Json
    {
        Json out = Json::array();
        for (const auto & row : rows)
            out.push_back(row);
        return out;
    }
}

auto family_to_json(const VectorFamily & fam) -> Json
{
    return Json{{"q", fam.q()}, {"n", fam.n()}, {"r", fam.r()}, {"vectors", rows_to_json(fam.rows())}};
}

auto family_from_json(const Json & j) -> VectorFamily
{
    return parsing("vector family", [&] {
        return VectorFamily::from_rows(j.at("q").get<int>(), j.at("n").get<int>(), j.at("r").get<int>(),
            j.at("vectors").get<std::vector<std::vector<int>>>());
    });
}

auto family_to_csv(const VectorFamily & fam) -> std::string
{
    std::ostringstream out;
    for (const auto & v : fam.vectors()) {
        for (int i = 0; i < v.q(); ++i)
            out << (i ? "," : "") << v[i];
        out << '\n';
    }
    return out.str();
}

auto family_from_csv(std::string_view text, int r, std::optional<int> n) -> VectorFamily
{
    return parsing("vector CSV", [&] {
        std::vector<std::vector<int>> rows;
        std::istringstream in{std::string(text)};
        std::string line;
        int side = 1;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            std::vector<int> row;
            std::istringstream cells(line);
            std::string cell;
            while (std::getline(cells, cell, ','))
                row.push_back(std::stoi(cell));
            if (! rows.empty() && row.size() != rows.front().size())
                throw ParseError("ragged CSV row");
            for (int c : row)
                side = std::max(side, c);
            rows.push_back(std::move(row));
        }
        if (rows.empty())
            throw ParseError("empty CSV");
        return VectorFamily::from_rows(static_cast<int>(rows.front().size()), n.value_or(side), r, rows);
    });
}

auto tournament_to_json(const ColoredTournament & t) -> Json
{
    Json edges = Json::array();
    for (int u = 0; u < t.size(); ++u)
        for (int v = u + 1; v < t.size(); ++v) {
            if (t.beats(u, v))
                edges.push_back({u + 1, v + 1, t.arc_color(u, v)});
            else
                edges.push_back({v + 1, u + 1, t.arc_color(v, u)});
        }
    return Json{{"N", t.size()}, {"q", t.q()}, {"edges", edges}};
}

auto tournament_from_json(const Json & j) -> ColoredTournament
{
    return parsing("tournament", [&] {
        const int n = j.at("N").get<int>(), q = j.at("q").get<int>();
        ColoredTournament t(n, q);
        std::set<std::pair<int, int>> seen;
        for (const auto & e : j.at("edges")) {
            auto triple = e.get<std::vector<int>>();
            if (triple.size() != 3)
                throw ParseError("edge entries are [u, v, color]");
            int u = triple[0] - 1, v = triple[1] - 1;
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("edge (" + std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + ") is not a vertex pair");
            if (! seen.insert({std::min(u, v), std::max(u, v)}).second)
                throw ParseError("pair {" + std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + "} listed twice");
            t.set_arc(u, v, triple[2]);
        }
        if (seen.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
            throw ParseError("tournament lists " + std::to_string(seen.size()) + " of " + std::to_string(n * (n - 1) / 2) + " pairs");
        return t;
    });
}

auto coloring_to_json(const OrderedColoring & k) -> Json
{
    Json colors = Json::array();
    for (int u = 0; u < k.size(); ++u)
        for (int v = u + 1; v < k.size(); ++v)
            colors.push_back({u + 1, v + 1, k.color(u, v)});
    return Json{{"N", k.size()}, {"q", k.q()}, {"colors", colors}};
}

auto coloring_from_json(const Json & j) -> OrderedColoring
{
    return parsing("ordered coloring", [&] {
        const int n = j.at("N").get<int>(), q = j.at("q").get<int>();
        OrderedColoring k(n, q);
        std::set<std::pair<int, int>> seen;
        for (const auto & e : j.at("colors")) {
            auto triple = e.get<std::vector<int>>();
            if (triple.size() != 3)
                throw ParseError("color entries are [u, v, color]");
            int u = triple[0] - 1, v = triple[1] - 1;
            if (u < 0 || v >= n || u >= v)
                throw ParseError("color entry needs 1 <= u < v <= N");
            if (! seen.insert({u, v}).second)
                throw ParseError("pair listed twice");
            k.set_color(u, v, triple[2]);
        }
        if (seen.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
            throw ParseError("coloring lists " + std::to_string(seen.size()) + " of " + std::to_string(n * (n - 1) / 2) + " pairs");
        return k;
    });
}

auto path_to_json(const PathCertificate & cert) -> Json
{
    Json constraint;
    if (auto avoid = std::get_if<AvoidColor>(&cert.constraint))
        constraint = {{"avoid", avoid->color}};
    else
        constraint = {{"allow", std::get<AllowedSet>(cert.constraint).colors}};
    std::vector<int> vertices;
    for (int v : cert.vertices)
        vertices.push_back(v + 1);
    return Json{{"mode", cert.mode == PathMode::Monotone ? "monotone" : "directed"},
        {"constraint", constraint},
        {"vertices", vertices},
        {"length", cert.length()}};
}

auto path_from_json(const Json & j) -> PathCertificate
{
    return parsing("path certificate", [&] {
        PathCertificate cert;
        auto mode = j.at("mode").get<std::string>();
        if (mode == "monotone")
            cert.mode = PathMode::Monotone;
        else if (mode == "directed")
            cert.mode = PathMode::Directed;
        else
            throw ParseError("unknown path mode '" + mode + "'");
        const auto & c = j.at("constraint");
        if (c.contains("avoid"))
            cert.constraint = AvoidColor{c.at("avoid").get<int>()};
        else
            cert.constraint = AllowedSet{c.at("allow").get<std::vector<int>>()};
        for (int v : j.at("vertices").get<std::vector<int>>())
            cert.vertices.push_back(v - 1);
        if (j.contains("length") && j.at("length").get<int>() != cert.length())
            throw ParseError("declared length " + std::to_string(j.at("length").get<int>()) + " differs from the vertex count "
                + std::to_string(cert.length()));
        return cert;
    });
}

auto partition_to_json(const ColorPartition & p) -> Json
{
    return Json{{"blocks", p.blocks()}};
}

auto partition_from_json(const Json & j, std::optional<int> q) -> ColorPartition
{
    return parsing("partition", [&] {
        auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        int largest = 0;
        for (const auto & b : blocks)
            for (int c : b)
                largest = std::max(largest, c);
        return ColorPartition(q.value_or(largest), blocks);
    });
}

auto packing_to_json(const Packing & p) -> Json
{
    std::vector<std::vector<int>> rows;
    for (const auto & a : p.apices())
        rows.push_back(a.coords());
    return Json{{"q", p.q()}, {"r", p.r()}, {"n", p.n()}, {"apices", rows_to_json(rows)}};
}

auto packing_from_json(const Json & j) -> Packing
{
    return parsing("packing", [&] {
        const int q = j.at("q").get<int>(), r = j.at("r").get<int>(), n = j.at("n").get<int>();
        std::vector<GridVector> apices;
        for (const auto & row : j.at("apices").get<std::vector<std::vector<int>>>()) {
            if (static_cast<int>(row.size()) != q)
                throw ParseError("apex has the wrong dimension");
            apices.emplace_back(row, n);
        }
        return Packing(q, r, n, std::move(apices));
    });
}

auto read_text_file(const std::filesystem::path & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

auto read_json_file(const std::filesystem::path & path) -> Json
{
    auto text = read_text_file(path);
    try {
        return Json::parse(text);
    }
    catch (const Json::exception & e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

auto write_text_file(const std::filesystem::path & path, std::string_view text) -> void
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (! out)
        throw Error("cannot write " + path.string());
    out << text;
    if (! out)
        throw Error("write to " + path.string() + " failed");
}

} // namespace rpods
