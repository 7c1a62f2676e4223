#include "sec/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace sec {

namespace {

    [[noreturn]] void parse_fail(int line, const std::string & what)
    {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
    }

    int to_int(const std::string & token, int line)
    {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size())
                parse_fail(line, "bad integer '" + token + "'");
            return v;
        }
        catch (const std::logic_error &) {
            parse_fail(line, "bad integer '" + token + "'");
        }
    }

    // Prefix length k when side X is exactly vertices 0..k-1.
    std::optional<int> prefix_side(const Graph & g)
    {
        if (!g.has_bipartition())
            return std::nullopt;
        int k = 0;
        while (k < g.vertex_count() && g.side(k) == Side::X)
            ++k;
        for (int v = k; v < g.vertex_count(); ++v)
            if (g.side(v) == Side::X)
                return std::nullopt;
        return k;
    }

    std::vector<Side> prefix_sides(int n, int k)
    {
        std::vector<Side> s(n, Side::Y);
        std::fill(s.begin(), s.begin() + k, Side::X);
        return s;
    }

    template <class T>
    T field(const Json & j, const char * key)
    {
        if (!j.is_object() || !j.contains(key))
            throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
        try {
            return j.at(key).get<T>();
        }
        catch (const nlohmann::json::exception & e) {
            throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
        }
    }

    std::vector<std::pair<int, int>> listed_edges(const Json & j)
    {
        auto raw = field<std::vector<std::vector<int>>>(j, "edges");
        std::vector<std::pair<int, int>> out;
        for (const auto & e : raw) {
            if (e.size() != 2)
                throw Error(ErrorKind::ParseError, "edges must be vertex pairs");
            out.emplace_back(e[0] - 1, e[1] - 1);
        }
        return out;
    }

    // position of each listed edge in the sorted edge list of g
    std::vector<int> listed_to_index(const Graph & g, const Json & j)
    {
        std::vector<int> out;
        for (auto [u, v] : listed_edges(j))
            out.push_back(*g.edge_index(u, v));
        return out;
    }

    std::vector<int> one_based(const std::vector<int> & c)
    {
        std::vector<int> out = c;
        for (int & v : out)
            ++v;
        return out;
    }

    std::vector<int> zero_based(const std::vector<int> & c)
    {
        std::vector<int> out = c;
        for (int & v : out)
            --v;
        return out;
    }

    void expect_kind(const Json & j, const char * kind)
    {
        if (object_kind(j) != kind)
            throw Error(ErrorKind::ParseError, std::string("expected a ") + kind + " object, found "
                                                   + object_kind(j));
    }

} // namespace

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    int n = -1, m = -1, side_x = -1;
    std::vector<Edge> edges;
    std::map<Edge, int> first_line;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (n >= 0)
                parse_fail(line, "second header");
            if (tok.size() != 4 || tok[1] != "sec")
                parse_fail(line, "header must read 'p sec <n> <m>'");
            n = to_int(tok[2], line);
            m = to_int(tok[3], line);
            if (n < 0 || m < 0)
                parse_fail(line, "negative size");
        }
        else if (tok[0] == "b") {
            if (n < 0)
                parse_fail(line, "'b' before header");
            if (tok.size() != 2)
                parse_fail(line, "expected 'b <k>'");
            side_x = to_int(tok[1], line);
            if (side_x < 0 || side_x > n)
                parse_fail(line, "side size out of range");
        }
        else if (tok[0] == "e") {
            if (n < 0)
                parse_fail(line, "edge before header");
            if (tok.size() != 3)
                parse_fail(line, "expected 'e <u> <v>'");
            int u = to_int(tok[1], line), v = to_int(tok[2], line);
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(line, "vertex out of range");
            if (u == v)
                throw Error(ErrorKind::LoopEdge, "line " + std::to_string(line) + ": loop at vertex " + tok[1]);
            Edge e(u - 1, v - 1);
            if (auto [it, fresh] = first_line.emplace(e, line); !fresh)
                throw Error(ErrorKind::DuplicateEdge, "line " + std::to_string(line) + ": repeats the edge of line "
                                                          + std::to_string(it->second));
            edges.push_back(e);
        }
        else
            parse_fail(line, "unknown record '" + tok[0] + "'");
    }
    if (n < 0)
        parse_fail(line, "missing header");
    if (static_cast<int>(edges.size()) != m)
        parse_fail(line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    if (side_x >= 0) {
        auto sides = prefix_sides(n, side_x);
        for (const auto & e : edges)
            if (sides[e.u] == sides[e.v])
                throw Error(ErrorKind::BipartitionViolation, "line " + std::to_string(first_line[e]) + ": edge "
                                                                 + std::to_string(e.u + 1) + " "
                                                                 + std::to_string(e.v + 1) + " stays inside one side");
        return Graph(n, std::move(edges), std::move(sides));
    }
    return Graph(n, std::move(edges));
}

std::string emit_graph(const Graph & g)
{
    std::string out = "p sec " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    if (auto k = prefix_side(g))
        out += "b " + std::to_string(*k) + "\n";
    for (const auto & e : g.edges())
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    return out;
}

std::string read_text(const std::string & path)
{
    std::ostringstream buf;
    if (path == "-")
        buf << std::cin.rdbuf();
    else {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

bool looks_like_json(std::string_view text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string_view::npos && (text[pos] == '{' || text[pos] == '[');
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string object_kind(const Json & j) { return field<std::string>(j, "kind"); }

namespace {

    void put_graph(Json & j, const Graph & g)
    {
        j["vertices"] = g.vertex_count();
        if (auto k = prefix_side(g))
            j["side_x"] = *k;
        Json edges = Json::array();
        for (const auto & e : g.edges())
            edges.push_back({e.u + 1, e.v + 1});
        j["edges"] = std::move(edges);
    }

} // namespace

Json graph_to_json(const Graph & g)
{
    Json j;
    j["kind"] = "graph";
    put_graph(j, g);
    return j;
}

Graph graph_from_json(const Json & j)
{
    const int n = field<int>(j, "vertices");
    std::vector<Edge> edges;
    for (auto [u, v] : listed_edges(j)) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::ParseError, "edge endpoint out of range");
        edges.emplace_back(u, v);
    }
    if (j.contains("side_x")) {
        const int k = field<int>(j, "side_x");
        if (k < 0 || k > n)
            throw Error(ErrorKind::ParseError, "side_x out of range");
        return Graph(n, std::move(edges), prefix_sides(n, k));
    }
    return Graph(n, std::move(edges));
}

Json coloring_to_json(const Graph & g, const SimultaneousColoring & sc)
{
    Json j;
    j["kind"] = "coloring";
    put_graph(j, g);
    j["mu"] = sc.mu;
    j["num_colors"] = sc.num_colors;
    Json colors = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        Json tuple = Json::array();
        for (int t = 0; t < sc.mu; ++t)
            tuple.push_back(sc.color(t, e));
        colors.push_back(std::move(tuple));
    }
    j["colors"] = std::move(colors);
    return j;
}

SimultaneousColoring coloring_from_json(const Json & j)
{
    expect_kind(j, "coloring");
    const Graph g = graph_from_json(j);
    auto index = listed_to_index(g, j);
    auto tuples = field<std::vector<std::vector<int>>>(j, "colors");
    if (tuples.size() != index.size())
        throw Error(ErrorKind::ParseError, "colors must list one tuple per edge");
    SimultaneousColoring sc;
    sc.mu = field<int>(j, "mu");
    sc.num_colors = field<int>(j, "num_colors");
    if (sc.mu < 1)
        throw Error(ErrorKind::ParseError, "mu must be positive");
    sc.colorings.assign(sc.mu, std::vector<int>(g.edge_count(), 0));
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (static_cast<int>(tuples[i].size()) != sc.mu)
            throw Error(ErrorKind::ParseError, "color tuple " + std::to_string(i + 1) + " has the wrong length");
        for (int t = 0; t < sc.mu; ++t)
            sc.colorings[t][index[i]] = tuples[i][t];
    }
    return sc;
}

Json trade_to_json(const LatinTrade & t)
{
    Json j;
    j["kind"] = "trade";
    j["mu"] = t.mu;
    j["rows"] = t.rows;
    j["cols"] = t.cols;
    j["symmetric"] = t.symmetric;
    Json cells = Json::array();
    for (const auto & c : t.cells)
        cells.push_back({{"r", c.row + 1}, {"c", c.col + 1}, {"symbols", c.symbols}});
    j["cells"] = std::move(cells);
    return j;
}

LatinTrade trade_from_json(const Json & j)
{
    expect_kind(j, "trade");
    LatinTrade t;
    t.mu = field<int>(j, "mu");
    t.rows = field<int>(j, "rows");
    t.cols = field<int>(j, "cols");
    t.symmetric = j.contains("symmetric") && field<bool>(j, "symmetric");
    if (!j.contains("cells") || !j["cells"].is_array())
        throw Error(ErrorKind::ParseError, "missing field 'cells'");
    for (const auto & c : j["cells"])
        t.cells.push_back({field<int>(c, "r") - 1, field<int>(c, "c") - 1, field<std::vector<int>>(c, "symbols")});
    return t;
}

Json cdc_to_json(const Graph & g, const CycleDoubleCover & cover)
{
    Json j;
    j["kind"] = "cdc";
    put_graph(j, g);
    Json circuits = Json::array();
    for (const auto & c : cover.circuits)
        circuits.push_back(one_based(c));
    j["circuits"] = std::move(circuits);
    if (cover.classes)
        j["classes"] = *cover.classes;
    if (cover.circuit_colorings)
        j["circuit_colorings"] = *cover.circuit_colorings;
    return j;
}

CycleDoubleCover cdc_from_json(const Json & j)
{
    expect_kind(j, "cdc");
    CycleDoubleCover cover;
    for (const auto & c : field<std::vector<std::vector<int>>>(j, "circuits"))
        cover.circuits.push_back(zero_based(c));
    if (j.contains("classes"))
        cover.classes = field<std::vector<int>>(j, "classes");
    if (j.contains("circuit_colorings"))
        cover.circuit_colorings = field<std::vector<std::vector<int>>>(j, "circuit_colorings");
    return cover;
}

Json ocdc_to_json(const Graph & g, const OrientedCDC & cover)
{
    Json j;
    j["kind"] = "ocdc";
    put_graph(j, g);
    Json circuits = Json::array();
    for (const auto & c : cover.directed_circuits)
        circuits.push_back(one_based(c));
    j["directed_circuits"] = std::move(circuits);
    return j;
}

OrientedCDC ocdc_from_json(const Json & j)
{
    expect_kind(j, "ocdc");
    OrientedCDC cover;
    for (const auto & c : field<std::vector<std::vector<int>>>(j, "directed_circuits"))
        cover.directed_circuits.push_back(zero_based(c));
    return cover;
}

Json flow_to_json(const Graph & g, const IntegerFlow & flow, int k)
{
    Json j;
    j["kind"] = "flow";
    put_graph(j, g);
    j["k"] = k;
    Json orient = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge & ed = g.edge(e);
        if (flow.forward[e])
            orient.push_back({ed.u + 1, ed.v + 1});
        else
            orient.push_back({ed.v + 1, ed.u + 1});
    }
    j["orientations"] = std::move(orient);
    j["weights"] = flow.weight;
    return j;
}

IntegerFlow flow_from_json(const Graph & g, const Json & j)
{
    expect_kind(j, "flow");
    auto orient = field<std::vector<std::vector<int>>>(j, "orientations");
    auto weights = field<std::vector<int>>(j, "weights");
    if (static_cast<int>(orient.size()) != g.edge_count() || static_cast<int>(weights.size()) != g.edge_count())
        throw Error(ErrorKind::ParseError, "flow must give one orientation and weight per edge");
    IntegerFlow flow;
    flow.forward.assign(g.edge_count(), true);
    flow.weight.assign(g.edge_count(), 0);
    for (std::size_t i = 0; i < orient.size(); ++i) {
        if (orient[i].size() != 2)
            throw Error(ErrorKind::ParseError, "orientations must be vertex pairs");
        const int tail = orient[i][0] - 1, head = orient[i][1] - 1;
        auto e = tail >= 0 && head >= 0 && tail < g.vertex_count() && head < g.vertex_count()
                     ? g.edge_index(tail, head)
                     : std::nullopt;
        if (!e)
            throw Error(ErrorKind::ParseError, "orientation " + std::to_string(i + 1) + " is not an edge");
        flow.forward[*e] = tail < head;
        flow.weight[*e] = weights[i];
    }
    return flow;
}

std::string dump(const Json & j) { return j.dump(2) + "\n"; }

} // namespace sec
