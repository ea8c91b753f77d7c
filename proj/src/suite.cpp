#include "tpc/suite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tpc/checker.hpp"
#include "tpc/colorers.hpp"
#include "tpc/oracle.hpp"

namespace tpc {

namespace {

OracleConfig sweep_config() {
    OracleConfig cfg;
    cfg.element_cap = 40;
    return cfg;
}

const std::vector<Graph>& connected_up_to(int n) {
    static std::vector<std::vector<Graph>> cache(8);
    if (cache[n].empty()) cache[n] = enumerate_connected_graphs(n, true, 7);
    return cache[n];
}

Graph spider5() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}}); }

bool two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int cut = 0; cut < g.vertex_count(); ++cut) {
        // connectivity of g - cut
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != cut) keep.push_back(v);
        std::vector<int> remap(g.vertex_count(), -1);
        for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            if (u != cut && v != cut) edges.emplace_back(remap[u], remap[v]);
        if (!is_connected(Graph(static_cast<int>(keep.size()), std::move(edges)))) return false;
    }
    return true;
}

struct Runner {
    SuiteReport& report;
    int criterion;

    void item(const std::string& name, bool ok, const std::string& detail = "") {
        report.items.push_back({criterion, name, ok, ok ? "" : detail});
        if (!ok) report.all_passed = false;
    }

    // Runs a colorer thunk; constructing an outcome implies the checker
    // accepted the coloring, so an exception is the failure signal.
    template <typename Fn>
    void colorer(const std::string& name, int want_k, Fn&& fn, bool forbid_repair = false) {
        try {
            ColorerOutcome out = fn();
            if (out.coloring.k != want_k) {
                item(name, false, "palette size " + std::to_string(out.coloring.k));
            } else if (forbid_repair && out.repaired) {
                item(name, false, "construction needed repair");
            } else {
                item(name, true);
            }
        } catch (const std::exception& e) {
            item(name, false, e.what());
        }
    }
};

std::string graph_tag(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "v" << g.edge_count() << "e";
    return os.str();
}

void run_paper_values(SuiteReport& report) {
    Runner r{report, 1};
    for (int n : {3, 4})
        r.item("tpc(K_" + std::to_string(n) + ")=1", brute_force_tpc(make_complete(n)).value == 1);
    for (int n : {2, 3})
        r.item("tpc(K_{1," + std::to_string(n) + "})=" + std::to_string(n + 1),
               brute_force_tpc(make_star(n)).value == n + 1);
    for (int n = 3; n <= 7; ++n)
        for (const auto& t : connected_up_to(n)) {
            if (!is_tree(t)) continue;
            int want = max_degree(t) + 1;
            r.item("tree " + std::to_string(n) + "v maxdeg " + std::to_string(want - 1) +
                       ": tpc=maxdeg+1",
                   brute_force_tpc(t).value == want);
        }
    r.item("tpc(K_{2,2})=3", brute_force_tpc(make_complete_bipartite(2, 2)).value == 3);
    r.item("tpc(K_{2,3})=3", brute_force_tpc(make_complete_bipartite(2, 3)).value == 3);
}

void run_colorer_sweep(SuiteReport& report) {
    auto cfg = sweep_config();

    {  // joins
        Runner r{report, 2};
        for (int n = 3; n <= 5; ++n)
            for (const auto& g : connected_up_to(n)) {
                if (is_complete(g)) continue;
                r.colorer("join-k1 " + graph_tag(g), 3, [&] { return color_join_with_k1(g); },
                          /*forbid_repair=*/true);
            }
        for (int a = 2; a <= 3; ++a)
            for (int b = 2; b <= 3; ++b)
                for (const auto& g : connected_up_to(a))
                    for (const auto& h : connected_up_to(b)) {
                        bool complete = is_complete(join(g, h).graph);
                        r.colorer("join " + graph_tag(g) + " v " + graph_tag(h),
                                  complete ? 1 : 3, [&] { return color_join_general(g, h); });
                    }
    }

    {  // cartesian products
        Runner r{report, 3};
        std::vector<Graph> traceable;
        for (int n = 2; n <= 4; ++n)
            for (const auto& g : connected_up_to(n))
                if (find_hamiltonian_path(g).has_value()) traceable.push_back(g);
        for (const auto& g : traceable)
            for (const auto& h : traceable)
                r.colorer("cart-trace " + graph_tag(g) + " x " + graph_tag(h), 3,
                          [&] { return color_cartesian_traceable(g, h); });
        for (int n : {2, 3, 4})
            for (int s : {3, 4})
                r.colorer("cart-star P_" + std::to_string(n) + " x K_{1," + std::to_string(s) + "}",
                          3, [&] { return color_cartesian_star(make_path(n), make_star(s)); },
                          /*forbid_repair=*/true);
        {
            // hand-evaluated spot checks of the two-layer table
            auto product = cartesian(make_path(2), make_star(3));
            auto out = color_cartesian_star(make_path(2), make_star(3));
            auto at = [&](int i, int j) { return product.map.flat(i - 1, j); };
            const auto& c = out.coloring;
            bool table = c.vertex_color[at(1, 0)] == 1 && c.vertex_color[at(1, 1)] == 3 &&
                         c.vertex_color[at(1, 2)] == 2 && c.vertex_color[at(2, 1)] == 2 &&
                         c.vertex_color[at(2, 2)] == 3 && c.edge_color(at(1, 0), at(2, 0)) == 2 &&
                         c.edge_color(at(1, 1), at(2, 1)) == 1 &&
                         c.edge_color(at(1, 0), at(1, 1)) == 2 &&
                         c.edge_color(at(1, 0), at(1, 2)) == 3 &&
                         c.edge_color(at(2, 0), at(2, 1)) == 3 &&
                         c.edge_color(at(2, 0), at(2, 2)) == 2;
            r.item("cart-star exact table at n=2 s=3", table);
        }
        for (int n = 2; n <= 7; ++n)
            r.colorer("cart-near-star P_" + std::to_string(n) + " x spider5", 3,
                      [&] { return color_cartesian_near_star(make_path(n), spider5()); });
        {
            auto product = cartesian(make_path(2), spider5());
            auto out = color_cartesian_near_star(make_path(2), spider5());
            auto at = [&](int i, int hv) { return product.map.flat(i - 1, hv); };
            bool table = out.coloring.vertex_color[at(1, 0)] == 3 &&
                         out.coloring.vertex_color[at(1, 1)] == 1 &&
                         out.coloring.edge_color(at(1, 0), at(1, 1)) == 2;
            r.item("cart-near-star explicit colors at n=2", table);
        }
    }

    {  // permutation graphs
        Runner r{report, 4};
        for (int n : {3, 4}) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            do {
                std::ostringstream name;
                name << "perm-trace P_" << n << " alpha";
                for (int x : img) name << "-" << x;
                r.colorer(name.str(), 3, [&] {
                    return color_permutation_traceable(make_path(n), Permutation(img));
                });
            } while (std::next_permutation(img.begin(), img.end()));
        }
        for (int m : {3, 4, 5}) {
            r.colorer("perm-star identity m=" + std::to_string(m), 3,
                      [&] { return color_permutation_star(m, StarPermutationVariant::Identity); });
            r.colorer("perm-star transposition m=" + std::to_string(m), 3,
                      [&] {
                          return color_permutation_star(m, StarPermutationVariant::Transposition01);
                      },
                      /*forbid_repair=*/true);
        }
        {
            std::vector<int> img{0, 1, 2};
            bool all3 = true;
            do {
                auto product = permutation_graph(make_path(3), Permutation(img));
                if (brute_force_tpc(product.graph, cfg).value != 3) all3 = false;
            } while (std::next_permutation(img.begin(), img.end()));
            r.item("oracle: every permutation graph of P_3 has tpc 3", all3);
        }
    }

    {  // lexicographic products
        Runner r{report, 5};
        std::vector<Graph> rights{make_empty(2), make_empty(3), make_complete(2), make_path(3)};
        for (int n = 2; n <= 4; ++n)
            for (const auto& g : connected_up_to(n))
                for (const auto& h : rights) {
                    auto product = lexicographic(g, h);
                    if (is_complete(product.graph)) continue;
                    std::string name =
                        "lex " + graph_tag(g) + " o " + graph_tag(h);
                    r.colorer(name, 3, [&] { return color_lexicographic(g, h); });
                    if (product.graph.vertex_count() <= 8)
                        r.item("oracle: " + name + " = 3",
                               brute_force_tpc(product.graph, cfg).value == 3);
                }
    }

    {  // strong products
        Runner r{report, 6};
        auto run_pair = [&](const Graph& g, const Graph& h) {
            auto product = strong(g, h);
            bool complete = is_complete(product.graph);
            std::string name = "strong " + graph_tag(g) + " x " + graph_tag(h);
            r.colorer(name, complete ? 1 : 3, [&] { return color_strong(g, h); });
            if (!complete && product.graph.vertex_count() <= 6)
                r.item("oracle: " + name + " = 3", brute_force_tpc(product.graph, cfg).value == 3);
        };
        for (int a = 2; a <= 3; ++a)
            for (int b = 2; b <= 3; ++b)
                for (const auto& g : connected_up_to(a))
                    for (const auto& h : connected_up_to(b)) run_pair(g, h);
        run_pair(make_star(3), make_path(3));
    }
}

void run_inequality_sweep(SuiteReport& report) {
    Runner r{report, 7};
    auto cfg = sweep_config();
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : connected_up_to(n))
            r.item("inequality tpc>=max(pc,pvc) on " + graph_tag(g), verify_inequality_star(g, cfg));

    // 50 (graph, connected spanning subgraph) pairs in deterministic order
    int pairs = 0;
    for (int n = 2; n <= 5 && pairs < 50; ++n)
        for (const auto& g : connected_up_to(n)) {
            if (pairs >= 50) break;
            int m = g.edge_count();
            for (std::uint32_t mask = 0; mask < (1u << m) && pairs < 50; ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (int e = 0; e < m; ++e)
                    if (mask & (1u << e)) edges.push_back(g.edges()[e]);
                Graph h(g.vertex_count(), std::move(edges));
                if (!is_connected(h)) continue;
                ++pairs;
                r.item("monotonicity pair #" + std::to_string(pairs), verify_monotonicity(g, h, cfg));
            }
        }

    for (int n = 2; n <= 6; ++n)
        for (const auto& t : connected_up_to(n)) {
            if (!is_tree(t)) continue;
            r.item("bridge bound on tree " + graph_tag(t), verify_bridge_bound(t, cfg));
        }
    int bridged = 0;
    for (int n = 4; n <= 5 && bridged < 10; ++n)
        for (const auto& g : connected_up_to(n)) {
            if (bridged >= 10) break;
            if (is_tree(g) || max_bridges_at_vertex(g) == 0) continue;
            ++bridged;
            r.item("bridge bound on bridged graph " + graph_tag(g), verify_bridge_bound(g, cfg));
        }

    for (int n = 3; n <= 5; ++n)
        for (const auto& g : connected_up_to(n)) {
            if (!two_connected(g)) continue;
            r.item("two-connected " + graph_tag(g) + ": tpc<=4",
                   brute_force_tpc(g, cfg).value <= 4);
        }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"paper-values", "colorer-sweep",
                                                "inequality-sweep"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    SuiteReport report;
    report.suite = name;
    if (name == "paper-values") {
        run_paper_values(report);
    } else if (name == "colorer-sweep") {
        run_colorer_sweep(report);
    } else if (name == "inequality-sweep") {
        run_inequality_sweep(report);
    } else if (name == "all") {
        run_paper_values(report);
        run_colorer_sweep(report);
        run_inequality_sweep(report);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return report;
}

}  // namespace tpc
