#include "sec/canonical.hpp"
#include "sec/cdc.hpp"
#include "sec/coloring.hpp"
#include "sec/constructions.hpp"
#include "sec/families.hpp"
#include "sec/io.hpp"
#include "sec/latin.hpp"
#include "sec/realization.hpp"
#include "sec/repro.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace sec;

namespace {

enum Exit { ok = 0, usage = 1, negative = 2, over_budget = 3 };

int exit_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::LimitExceeded:
        return over_budget;
    case ErrorKind::NoSuchColoring:
    case ErrorKind::NoOcdcFound:
    case ErrorKind::NotGraphic:
        return negative;
    default:
        return usage;
    }
}

// Graph from a line-format file or from any JSON object carrying one.
Graph load_graph(const std::string & path)
{
    const std::string text = read_text(path);
    if (looks_like_json(text))
        return graph_from_json(parse_json(text));
    return parse_graph(text);
}

Json load_json(const std::string & path) { return parse_json(read_text(path)); }

std::pair<Graph, SimultaneousColoring> load_coloring(const std::string & path)
{
    const Json j = load_json(path);
    return {graph_from_json(j), coloring_from_json(j)};
}

int report(const Report & r, const std::string & what)
{
    if (r) {
        std::cout << "valid " << what << "\n";
        return ok;
    }
    std::cout << "invalid " << what << ": " << r.clause << ": " << r.message << "\n";
    return negative;
}

std::vector<int> parse_list(const std::string & s)
{
    std::vector<int> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');)
        if (!tok.empty())
            out.push_back(std::stoi(tok));
    return out;
}

int print_coloring(const Graph & g, const SimultaneousColoring & sc)
{
    std::cout << dump(coloring_to_json(g, sc));
    return ok;
}

Graph family_graph(const std::string & name, const std::vector<int> & p)
{
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw Error(ErrorKind::InvalidArgument, name + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "path") return need(1), families::path(p[0]);
    if (name == "cycle") return need(1), families::cycle(p[0]);
    if (name == "complete") return need(1), families::complete(p[0]);
    if (name == "complete-bipartite") return need(2), families::complete_bipartite(p[0], p[1]);
    if (name == "hypercube") return need(1), families::hypercube(p[0]);
    if (name == "wheel") return need(1), families::wheel(p[0]);
    if (name == "petersen") return need(0), families::petersen();
    if (name == "heawood") return need(0), families::heawood();
    if (name == "bitrade10") return need(0), families::volume_ten_bitrade_graph();
    if (name == "non-3se") return need(0), families::non_three_se_graph();
    if (name == "circulant") {
        if (p.empty())
            throw Error(ErrorKind::InvalidArgument, "circulant takes n and jumps");
        return families::circulant(p[0], std::vector<int>(p.begin() + 1, p.end()));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"sectool: simultaneous edge colorings, Latin trades, cycle double covers"};
    app.require_subcommand(1);
    app.fallthrough();
    long long budget_limit = SearchBudget::default_limit;
    app.add_option("--budget", budget_limit, "node limit for exhaustive searches")->check(CLI::PositiveNumber);

    std::function<int()> action;

    // graph
    auto * graph_cmd = app.add_subcommand("graph", "print a named graph in line format");
    std::string family;
    std::vector<int> fparams;
    graph_cmd->add_option("family", family,
                          "path|cycle|complete|complete-bipartite|hypercube|wheel|circulant|petersen|heawood|bitrade10|non-3se")
        ->required();
    graph_cmd->add_option("params", fparams, "integer parameters");
    graph_cmd->callback([&] {
        action = [&] {
            std::cout << emit_graph(family_graph(family, fparams));
            return ok;
        };
    });

    // verify
    auto * verify_cmd = app.add_subcommand("verify", "check a graph, coloring, trade, CDC, OCDC or flow file");
    std::string vfile = "-";
    int vk = 0;
    verify_cmd->add_option("file", vfile, "input file or - for stdin");
    verify_cmd->add_option("--k", vk, "flow bound (defaults to the file's k)");
    verify_cmd->callback([&] {
        action = [&]() -> int {
            const std::string text = read_text(vfile);
            if (!looks_like_json(text)) {
                const Graph g = parse_graph(text);
                std::cout << "valid graph with " << g.vertex_count() << " vertices and " << g.edge_count()
                          << " edges\n";
                return ok;
            }
            const Json j = parse_json(text);
            const std::string kind = object_kind(j);
            if (kind == "graph") {
                graph_from_json(j);
                std::cout << "valid graph\n";
                return ok;
            }
            if (kind == "coloring") {
                auto sc = coloring_from_json(j);
                return report(verify_simultaneous(graph_from_json(j), sc),
                              std::to_string(sc.mu) + "-SE coloring with " + std::to_string(sc.num_colors)
                                  + " colors");
            }
            if (kind == "trade") {
                auto t = trade_from_json(j);
                return report(verify_trade(t), std::to_string(t.mu) + "-way trade of volume "
                                                   + std::to_string(t.volume()));
            }
            if (kind == "cdc") {
                const Graph g = graph_from_json(j);
                auto cover = cdc_from_json(j);
                int code = report(verify_cdc(g, cover), "cycle double cover");
                if (code == ok) {
                    auto p = se_cdc_properties(g, cover);
                    std::cout << "even circuits: " << (p.even_circuits ? "yes" : "no")
                              << ", enough classes: " << (p.enough_classes ? "yes" : "no")
                              << ", edges two-coloured: " << (p.edges_two_coloured ? "yes" : "no") << "\n";
                }
                return code;
            }
            if (kind == "ocdc")
                return report(verify_ocdc(graph_from_json(j), ocdc_from_json(j)), "oriented cycle double cover");
            if (kind == "flow") {
                const Graph g = graph_from_json(j);
                const int k = vk > 0 ? vk : j.value("k", 0);
                if (k < 2)
                    throw Error(ErrorKind::InvalidArgument, "flow bound k missing; pass --k");
                return report(verify_nzf(g, flow_from_json(g, j), k), std::to_string(k) + "-NZF");
            }
            throw Error(ErrorKind::ParseError, "unknown kind '" + kind + "'");
        };
    });

    // solve
    auto * solve_cmd = app.add_subcommand("solve", "decide or minimise a mu-SE coloring");
    std::string sfile = "-";
    int smu = 2, scolors = 0, smax = 0;
    solve_cmd->add_option("file", sfile, "graph file");
    solve_cmd->add_option("--mu", smu, "number of coordinates")->check(CLI::PositiveNumber);
    auto * colors_opt = solve_cmd->add_option("--colors", scolors, "decide with exactly this color set");
    solve_cmd->add_option("--max", smax, "search for the least l up to this bound (default |E|)")
        ->excludes(colors_opt);
    solve_cmd->callback([&] {
        action = [&]() -> int {
            const Graph g = load_graph(sfile);
            SearchBudget budget(budget_limit);
            if (scolors > 0) {
                auto sc = decide_mu_se(g, smu, scolors, budget);
                if (!sc) {
                    std::cerr << "no " << smu << "-SE coloring with " << scolors << " colors\n";
                    return negative;
                }
                return print_coloring(g, *sc);
            }
            const int bound = smax > 0 ? smax : std::max(g.edge_count(), g.max_degree());
            SimultaneousColoring witness;
            auto l = se_chromatic_number(g, smu, bound, budget, &witness);
            if (!l) {
                std::cerr << "no " << smu << "-SE coloring with at most " << bound << " colors\n";
                return negative;
            }
            std::cerr << "least number of colors: " << *l << "\n";
            return print_coloring(g, witness);
        };
    });

    // construct
    auto * construct_cmd = app.add_subcommand("construct", "build a mu-SE coloring of a family member");
    construct_cmd->require_subcommand(1);
    int cn = 0, cm = 0, cmu = 2, ck = 1;
    std::string ca, cb;
    std::vector<int> cedge;
    std::string ccircuit;

    auto * c_wheel = construct_cmd->add_subcommand("wheel", "W_n with n colors");
    c_wheel->add_option("n", cn)->required();
    c_wheel->callback([&] { action = [&] { return print_coloring(families::wheel(cn), color_wheel(cn)); }; });

    auto * c_complete = construct_cmd->add_subcommand("complete", "K_n");
    c_complete->add_option("n", cn)->required();
    c_complete->add_option("--mu", cmu);
    c_complete->callback([&] {
        action = [&]() -> int {
            auto sc = color_complete(cn, cmu);
            if (!sc)
                throw Error(ErrorKind::NoSuchColoring, "K" + std::to_string(cn) + " has no mu-SE coloring");
            return print_coloring(families::complete(cn), *sc);
        };
    });

    auto * c_kbip = construct_cmd->add_subcommand("complete-bipartite", "K_{n,m} with max(n,m) colors");
    c_kbip->add_option("n", cn)->required();
    c_kbip->add_option("m", cm)->required();
    c_kbip->add_option("--mu", cmu);
    c_kbip->callback([&] {
        action = [&] { return print_coloring(families::complete_bipartite(cn, cm), color_complete_bipartite(cn, cm, cmu)); };
    });

    auto * c_factor = construct_cmd->add_subcommand("one-factorable", "regular 1-factorable graph");
    c_factor->add_option("graph", ca)->required();
    c_factor->add_option("--mu", cmu);
    c_factor->callback([&] {
        action = [&] {
            const Graph g = load_graph(ca);
            return print_coloring(g, color_one_factorable(g, cmu));
        };
    });

    auto * c_join = construct_cmd->add_subcommand("join", "join of two colored graphs");
    c_join->add_option("first", ca)->required();
    c_join->add_option("second", cb)->required();
    c_join->callback([&] {
        action = [&] {
            auto [g1, s1] = load_coloring(ca);
            auto [g2, s2] = load_coloring(cb);
            return print_coloring(join(g1, g2), color_join(g1, s1, g2, s2));
        };
    });

    auto * c_cart = construct_cmd->add_subcommand("cartesian", "cartesian product of two colored graphs");
    c_cart->add_option("first", ca)->required();
    c_cart->add_option("second", cb)->required();
    c_cart->callback([&] {
        action = [&] {
            auto [g1, s1] = load_coloring(ca);
            auto [g2, s2] = load_coloring(cb);
            return print_coloring(cartesian_product(g1, g2), color_cartesian_sum(g1, s1, g2, s2));
        };
    });

    auto * c_cartr = construct_cmd->add_subcommand("cartesian-regular",
                                                   "G x H for regular G and 1-factorable regular H");
    c_cartr->add_option("outer", ca)->required();
    c_cartr->add_option("inner", cb)->required();
    c_cartr->add_option("--mu", cmu);
    c_cartr->callback([&] {
        action = [&] {
            const Graph g = load_graph(ca), h = load_graph(cb);
            return print_coloring(cartesian_product(g, h), color_cartesian_regular(g, h, cmu));
        };
    });

    auto * c_lex = construct_cmd->add_subcommand("lex", "lexicographic product G[H] from a coloring of H");
    c_lex->add_option("outer", ca, "outer graph file")->required();
    c_lex->add_option("inner", cb, "coloring of the inner graph")->required();
    c_lex->callback([&] {
        action = [&] {
            const Graph g = load_graph(ca);
            auto [h, sh] = load_coloring(cb);
            return print_coloring(lexicographic_product(g, h), color_lexicographic(g, h, sh));
        };
    });

    auto * c_sub = construct_cmd->add_subcommand("subdivide", "replace an edge by a path of odd length");
    c_sub->add_option("coloring", ca)->required();
    c_sub->add_option("--edge", cedge, "endpoints u v (1-based)")->expected(2)->required();
    c_sub->add_option("--k", ck, "2k new vertices");
    c_sub->callback([&] {
        action = [&] {
            auto [g, sc] = load_coloring(ca);
            auto [h, sh] = subdivide_coloring(g, sc, Edge(cedge[0] - 1, cedge[1] - 1), ck);
            return print_coloring(h, sh);
        };
    });

    auto * c_ham = construct_cmd->add_subcommand("hamiltonian", "2-SE coloring from an even Hamiltonian circuit");
    c_ham->add_option("graph", ca)->required();
    c_ham->add_option("--circuit", ccircuit, "comma separated vertices (1-based)")->required();
    c_ham->callback([&] {
        action = [&] {
            const Graph g = load_graph(ca);
            std::vector<int> c = parse_list(ccircuit);
            for (int & v : c)
                --v;
            SearchBudget budget(budget_limit);
            return print_coloring(g, color_from_hamiltonian(g, c, budget));
        };
    });

    // trade
    auto * trade_cmd = app.add_subcommand("trade", "Latin trades");
    trade_cmd->require_subcommand(1);
    std::string tfile = "-";
    bool tsym = false;
    int tmu = 2, tmax = 8;
    auto * t_to = trade_cmd->add_subcommand("to-graph", "trade file to colored graph");
    t_to->add_option("file", tfile);
    t_to->add_flag("--symmetric", tsym);
    t_to->callback([&] {
        action = [&] {
            auto t = trade_from_json(load_json(tfile));
            auto [g, sc] = trade_to_graph(t, tsym ? TradeLayout::Symmetric : TradeLayout::Bipartite);
            return print_coloring(g, sc);
        };
    });
    auto * t_from = trade_cmd->add_subcommand("from-graph", "colored graph to trade");
    t_from->add_option("file", tfile);
    t_from->add_flag("--symmetric", tsym);
    t_from->callback([&] {
        action = [&] {
            auto [g, sc] = load_coloring(tfile);
            std::cout << dump(trade_to_json(coloring_to_trade(g, sc, tsym ? TradeLayout::Symmetric
                                                                            : TradeLayout::Bipartite)));
            return ok;
        };
    });
    auto * t_verify = trade_cmd->add_subcommand("verify", "check a trade");
    t_verify->add_option("file", tfile);
    t_verify->callback([&] {
        action = [&] {
            auto t = trade_from_json(load_json(tfile));
            return report(verify_trade(t), std::to_string(t.mu) + "-way trade of volume " + std::to_string(t.volume()));
        };
    });
    auto * t_spec = trade_cmd->add_subcommand("spectrum", "feasible volumes up to a bound");
    t_spec->add_option("--mu", tmu);
    t_spec->add_option("--max", tmax);
    t_spec->callback([&] {
        action = [&] {
            SearchBudget budget(budget_limit);
            auto v = spectrum_scan(tmu, tmax, budget);
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? " " : "") << v[i];
            std::cout << "\n";
            return ok;
        };
    });

    // cdc
    auto * cdc_cmd = app.add_subcommand("cdc", "cycle double covers");
    cdc_cmd->require_subcommand(1);
    std::string dfile = "-", dclasses = "keep";
    int dlimit = 100000, dtarget = 0;
    bool dall = false;
    auto * d_verify = cdc_cmd->add_subcommand("verify", "check a CDC or OCDC file");
    d_verify->add_option("file", dfile);
    d_verify->callback([&] {
        action = [&] {
            const Json j = load_json(dfile);
            const Graph g = graph_from_json(j);
            if (object_kind(j) == "ocdc")
                return report(verify_ocdc(g, ocdc_from_json(j)), "oriented cycle double cover");
            return report(verify_cdc(g, cdc_from_json(j)), "cycle double cover");
        };
    });
    auto * d_from = cdc_cmd->add_subcommand("from-se", "CDC from a 2-SE coloring");
    d_from->add_option("file", dfile);
    d_from->callback([&] {
        action = [&] {
            auto [g, sc] = load_coloring(dfile);
            std::cout << dump(cdc_to_json(g, se_to_cdc(g, sc)));
            return ok;
        };
    });
    auto * d_to = cdc_cmd->add_subcommand("to-se", "2-SE coloring from a CDC of even circuits");
    d_to->add_option("file", dfile);
    d_to->add_option("--classes", dclasses, "keep|singleton|merge")
        ->check(CLI::IsMember({"keep", "singleton", "merge"}));
    d_to->add_option("--target", dtarget, "class count for --classes merge");
    d_to->callback([&] {
        action = [&]() -> int {
            const Json j = load_json(dfile);
            const Graph g = graph_from_json(j);
            auto cover = cdc_from_json(j);
            if (dclasses == "singleton" || (dclasses == "keep" && !cover.classes))
                cover = with_singleton_classes(std::move(cover));
            else if (dclasses == "merge")
                cover = with_merged_classes(g, std::move(cover), dtarget > 0 ? dtarget : chromatic_index(g));
            auto sc = cdc_to_se(g, cover);
            if (!sc) {
                std::cerr << "no choice of circuit colorings gives every edge two colors\n";
                return negative;
            }
            return print_coloring(g, *sc);
        };
    });
    auto * d_enum = cdc_cmd->add_subcommand("enumerate-even", "all CDCs by even circuits");
    d_enum->add_option("file", dfile);
    d_enum->add_option("--limit", dlimit);
    d_enum->add_flag("--all", dall, "do not identify covers under automorphisms");
    d_enum->callback([&] {
        action = [&]() -> int {
            const Graph g = load_graph(dfile);
            SearchBudget budget(budget_limit);
            auto covers = enumerate_even_cdcs(g, dlimit, budget, !dall);
            Json out = Json::array();
            for (const auto & c : covers)
                out.push_back(cdc_to_json(g, c));
            std::cout << dump(out);
            std::cerr << covers.size() << " cover(s)\n";
            return covers.empty() ? negative : ok;
        };
    });
    auto * d_dec = cdc_cmd->add_subcommand("decompose", "partition an even graph into even circuits");
    d_dec->add_option("file", dfile);
    d_dec->callback([&] {
        action = [&]() -> int {
            const Graph g = load_graph(dfile);
            SearchBudget budget(budget_limit);
            auto d = even_circuit_decomposition(g, budget);
            if (!d) {
                std::cerr << "no even circuit decomposition\n";
                return negative;
            }
            Json out = {{"kind", "decomposition"}, {"circuits", Json::array()}};
            for (auto c : *d) {
                for (int & v : c)
                    ++v;
                out["circuits"].push_back(c);
            }
            std::cout << dump(out);
            return ok;
        };
    });
    auto * d_to_o = cdc_cmd->add_subcommand("to-ocdc", "OCDC from a 2-SE coloring of a bipartite graph");
    d_to_o->add_option("file", dfile);
    d_to_o->callback([&] {
        action = [&] {
            auto [g, sc] = load_coloring(dfile);
            std::cout << dump(ocdc_to_json(g, se_to_ocdc_bipartite(g, sc)));
            return ok;
        };
    });
    auto * d_from_o = cdc_cmd->add_subcommand("from-ocdc", "2-SE coloring from an OCDC of a bipartite graph");
    d_from_o->add_option("file", dfile);
    d_from_o->callback([&] {
        action = [&] {
            const Json j = load_json(dfile);
            const Graph g = graph_from_json(j);
            return print_coloring(g, ocdc_to_se_bipartite(g, ocdc_from_json(j)));
        };
    });
    auto * d_find_o = cdc_cmd->add_subcommand("find-ocdc", "search for an OCDC");
    d_find_o->add_option("file", dfile);
    d_find_o->callback([&] {
        action = [&]() -> int {
            const Graph g = load_graph(dfile);
            SearchBudget budget(budget_limit);
            auto o = find_ocdc(g, budget);
            if (!o) {
                std::cerr << "no oriented cycle double cover\n";
                return negative;
            }
            std::cout << dump(ocdc_to_json(g, *o));
            return ok;
        };
    });

    // nzf
    auto * nzf_cmd = app.add_subcommand("nzf", "find a k-NZF of a graph, or verify a flow file");
    std::string nfile = "-";
    int nk = 4;
    nzf_cmd->add_option("file", nfile);
    nzf_cmd->add_option("--k", nk)->check(CLI::Range(2, 1000));
    nzf_cmd->callback([&] {
        action = [&]() -> int {
            const std::string text = read_text(nfile);
            if (looks_like_json(text) && object_kind(parse_json(text)) == "flow") {
                const Json j = parse_json(text);
                const Graph g = graph_from_json(j);
                return report(verify_nzf(g, flow_from_json(g, j), nk), std::to_string(nk) + "-NZF");
            }
            const Graph g = looks_like_json(text) ? graph_from_json(parse_json(text)) : parse_graph(text);
            SearchBudget budget(budget_limit);
            auto f = find_nzf(g, nk, budget);
            if (!f) {
                std::cerr << "no " << nk << "-NZF\n";
                return negative;
            }
            std::cout << dump(flow_to_json(g, *f, nk));
            return ok;
        };
    });

    // realize
    auto * realize_cmd = app.add_subcommand("realize", "bipartite realization of a degree sequence");
    std::string rx, ry;
    int rmu = 0;
    realize_cmd->add_option("--x", rx, "degrees of side X, comma separated")->required();
    realize_cmd->add_option("--y", ry, "degrees of side Y, comma separated")->required();
    realize_cmd->add_option("--mu", rmu, "required edge connectivity");
    realize_cmd->callback([&] {
        action = [&]() -> int {
            BipartiteDegreeSequence s{parse_list(rx), parse_list(ry)};
            if (rmu > 0) {
                SearchBudget budget(budget_limit);
                std::cout << emit_graph(realize_connected(s, rmu, budget));
                return ok;
            }
            auto g = realize_bipartite(s);
            if (!g) {
                std::cerr << "sequence is not bipartite graphic\n";
                return negative;
            }
            std::cout << emit_graph(*g);
            return ok;
        };
    });

    // filter
    auto * filter_cmd = app.add_subcommand("filter", "necessary conditions on a minimal counterexample");
    std::string ffile = "-";
    filter_cmd->add_option("file", ffile);
    filter_cmd->callback([&] {
        action = [&] {
            auto r = counterexample_filter(load_graph(ffile));
            for (const auto & f : r.failed)
                std::cout << "fails: " << f << "\n";
            std::cout << (r.passes ? "passes all conditions\n" : "");
            return r.passes ? ok : negative;
        };
    });

    // repro
    auto * repro_cmd = app.add_subcommand("repro", "run the claim-by-claim reproduction table");
    int rid = 0;
    repro_cmd->add_option("--criterion", rid, "run a single criterion")->check(CLI::Range(1, repro::criterion_count));
    repro_cmd->callback([&] {
        action = [&] {
            repro::Options options;
            bool failed = false;
            for (int id = 1; id <= repro::criterion_count; ++id) {
                if (rid != 0 && id != rid)
                    continue;
                auto r = repro::run_criterion(id, options);
                failed = failed || r.status == repro::Status::Fail;
                std::cout << repro::format(r) << std::endl;
            }
            return failed ? negative : ok;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? ok : usage;
    }
    try {
        return action();
    }
    catch (const Error & e) {
        std::cerr << "sectool: " << e.what() << "\n";
        return exit_for(e.kind());
    }
    catch (const std::exception & e) {
        std::cerr << "sectool: " << e.what() << "\n";
        return usage;
    }
}
