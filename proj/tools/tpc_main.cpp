// Command-line front end: generators, graph operations, theorem colorers,
// the connectivity checker, the exact brute-force oracle, DOT export, and
// the batch verification suites. JSON on stdout, human-readable log on
// stderr; exit 0 on success, 1 on a failed verdict, 2 on usage errors, 3 on
// exhausted budgets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpc/checker.hpp"
#include "tpc/colorers.hpp"
#include "tpc/io.hpp"
#include "tpc/oracle.hpp"
#include "tpc/suite.hpp"

using nlohmann::json;
using namespace tpc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json read_json_input(const std::string& path) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        return json::parse(in);
    }
    return json::parse(std::cin);
}

Graph graph_from_any(const json& j) {
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    return graph_from_json(j);
}

// "path:4", "star:3", "bipartite:2,3", "@file.json", ...
Graph parse_graph_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open " + spec.substr(1));
        return graph_from_any(json::parse(in));
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad graph spec: " + spec);
    std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
    if (kind == "path") return make_path(std::stoi(args));
    if (kind == "star") return make_star(std::stoi(args));
    if (kind == "cycle") return make_cycle(std::stoi(args));
    if (kind == "complete") return make_complete(std::stoi(args));
    if (kind == "empty") return make_empty(std::stoi(args));
    if (kind == "bipartite") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bipartite needs m,n");
        return make_complete_bipartite(std::stoi(args.substr(0, comma)),
                                       std::stoi(args.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown graph kind: " + kind);
}

struct GenOptions {
    std::string kind;
    int n = 0, leaves = 0, m = 0;
};

int cmd_gen(const GenOptions& o) {
    Graph g;
    if (o.kind == "path") g = make_path(o.n);
    else if (o.kind == "star") g = make_star(o.leaves);
    else if (o.kind == "cycle") g = make_cycle(o.n);
    else if (o.kind == "complete") g = make_complete(o.n);
    else if (o.kind == "empty") g = make_empty(o.n);
    else if (o.kind == "complete-bipartite") g = make_complete_bipartite(o.m, o.n);
    else throw std::invalid_argument("unknown kind: " + o.kind);
    emit(graph_json(g));
    return kExitOk;
}

struct ProductOptions {
    std::string op, with_spec, left_path, alpha_json, sidecar;
};

int cmd_product(const ProductOptions& o) {
    Graph left = graph_from_any(read_json_input(o.left_path));
    ProductResult result;
    if (o.op == "perm") {
        if (o.alpha_json.empty()) throw std::invalid_argument("perm needs --alpha");
        auto alpha = Permutation(json::parse(o.alpha_json).get<std::vector<int>>());
        result = permutation_graph(left, alpha);
    } else {
        if (o.with_spec.empty()) throw std::invalid_argument("product needs --with");
        Graph right = parse_graph_spec(o.with_spec);
        if (o.op == "join") result = join(left, right);
        else if (o.op == "cartesian") result = cartesian(left, right);
        else if (o.op == "lex") result = lexicographic(left, right);
        else if (o.op == "strong") result = strong(left, right);
        else throw std::invalid_argument("unknown op: " + o.op);
    }
    if (!o.sidecar.empty()) {
        std::ofstream out(o.sidecar);
        out << label_map_json(result).dump(2) << "\n";
    }
    emit(product_json(result));
    return kExitOk;
}

struct ColorOptions {
    std::string theorem, in_path;
    int leaves = 0;
    std::string variant = "transposition01";
    int k = 3;
    long long budget = 100'000'000;
};

int cmd_color(const ColorOptions& o) {
    // standalone form for permutation graphs of stars
    if (o.theorem == "perm-star" && o.leaves > 0) {
        auto variant = o.variant == "identity" ? StarPermutationVariant::Identity
                                               : StarPermutationVariant::Transposition01;
        auto out = color_permutation_star(o.leaves, variant);
        std::vector<int> img(o.leaves + 1);
        for (int i = 0; i <= o.leaves; ++i) img[i] = i;
        if (variant == StarPermutationVariant::Transposition01) std::swap(img[0], img[1]);
        auto product = permutation_graph(make_star(o.leaves), Permutation(img));
        json j = product_json(product);
        j["coloring"] = coloring_json(product.graph, out.coloring);
        j["construction"] = out.construction;
        j["repaired"] = out.repaired;
        emit(j);
        return kExitOk;
    }

    json input = read_json_input(o.in_path);
    Graph graph = graph_from_any(input);
    std::optional<ProductResult> product;
    if (input.contains("map")) product = product_from_json(input);

    auto need_product = [&](ProductKind kind, const char* what) -> const ProductResult& {
        if (!product || product->map.kind != kind)
            throw std::invalid_argument(std::string(what) + " needs a matching product input");
        return *product;
    };

    std::optional<ColorerOutcome> out;
    if (o.theorem == "traceable") out = color_traceable(graph);
    else if (o.theorem == "tree") out = color_tree(graph);
    else if (o.theorem == "join") {
        const auto& p = need_product(ProductKind::Join, "join");
        out = color_join_general(p.left, p.right);
    } else if (o.theorem == "cart-trace") {
        const auto& p = need_product(ProductKind::Cartesian, "cart-trace");
        out = color_cartesian_traceable(p.left, p.right);
    } else if (o.theorem == "cart-star") {
        const auto& p = need_product(ProductKind::Cartesian, "cart-star");
        out = color_cartesian_star(p.left, p.right);
    } else if (o.theorem == "cart-near-star") {
        const auto& p = need_product(ProductKind::Cartesian, "cart-near-star");
        out = color_cartesian_near_star(p.left, p.right);
    } else if (o.theorem == "perm-trace") {
        const auto& p = need_product(ProductKind::Permutation, "perm-trace");
        out = color_permutation_traceable(p.left, *p.alpha);
    } else if (o.theorem == "perm-star") {
        const auto& p = need_product(ProductKind::Permutation, "perm-star");
        bool identity = *p.alpha == Permutation::identity(p.alpha->size());
        out = color_permutation_star(p.left.vertex_count() - 1,
                                     identity ? StarPermutationVariant::Identity
                                              : StarPermutationVariant::Transposition01);
    } else if (o.theorem == "lex") {
        const auto& p = need_product(ProductKind::Lexicographic, "lex");
        out = color_lexicographic(p.left, p.right);
    } else if (o.theorem == "strong") {
        const auto& p = need_product(ProductKind::Strong, "strong");
        out = color_strong(p.left, p.right);
    } else if (o.theorem == "search") {
        auto found = search_coloring(graph, o.k, {}, o.budget);
        if (!found) {
            emit(json{{"found", false}});
            return kExitVerdict;
        }
        json j = input.contains("map") ? input : json{{"graph", graph_json(graph)}};
        j["coloring"] = coloring_json(graph, *found);
        j["construction"] = "search";
        j["repaired"] = false;
        emit(j);
        return kExitOk;
    } else {
        throw std::invalid_argument("unknown theorem key: " + o.theorem);
    }

    json j = input.contains("map") ? input : json{{"graph", graph_json(graph)}};
    j["coloring"] = coloring_json(graph, out->coloring);
    j["construction"] = out->construction;
    j["repaired"] = out->repaired;
    emit(j);
    return kExitOk;
}

struct CheckOptions {
    std::string graph_path, coloring_path, in_path, flavor = "total";
};

int cmd_check(const CheckOptions& o) {
    Graph g;
    TotalColoring c;
    if (!o.graph_path.empty() && !o.coloring_path.empty()) {
        g = graph_from_any(read_json_input(o.graph_path));
        c = coloring_from_json(read_json_input(o.coloring_path));
    } else {
        json input = read_json_input(o.in_path);
        g = graph_from_any(input);
        c = coloring_from_json(input.at("coloring"));
    }
    auto report = check_connected(g, c, flavor_from_name(o.flavor));
    emit(report_json(report));
    std::cerr << "checked " << (g.vertex_count() * (g.vertex_count() - 1)) / 2 << " pairs, "
              << report.failures.size() << " failures\n";
    return report.connected ? kExitOk : kExitVerdict;
}

struct TpcOptions {
    std::string in_path, flavor = "total";
    int cap = 14;
};

int cmd_tpc(const TpcOptions& o) {
    Graph g = graph_from_any(read_json_input(o.in_path));
    OracleConfig cfg;
    cfg.element_cap = o.cap;
    auto t0 = std::chrono::steady_clock::now();
    auto result = brute_force(g, flavor_from_name(o.flavor), cfg);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    emit(tpc_result_json(g, result));
    std::cerr << "value " << result.value << " in " << dt.count() << "s, "
              << result.colorings_tried << " colorings tried\n";
    return kExitOk;
}

struct HuntOptions {
    int n_max = 3;
    double budget_seconds = 0;  // 0 = unlimited
    int cap = 40;
};

int cmd_hunt(const HuntOptions& o) {
    OracleConfig cfg;
    cfg.element_cap = o.cap;
    std::optional<double> budget;
    if (o.budget_seconds > 0) budget = o.budget_seconds;
    auto result = hunt_permutation_tpc4(o.n_max, budget, cfg);
    emit(hunt_json(result));
    std::cerr << "examined " << result.instances_examined << " instances, found "
              << result.candidates.size() << " candidates\n";
    return result.completed ? kExitOk : kExitBudget;
}

struct DotOptions {
    std::string in_path, out_path;
};

int cmd_export_dot(const DotOptions& o) {
    json input = read_json_input(o.in_path);
    Graph g = graph_from_any(input);
    std::optional<TotalColoring> c;
    if (input.contains("coloring")) c = coloring_from_json(input.at("coloring"));
    std::ostringstream dot;
    write_dot(dot, g, c ? &*c : nullptr);
    if (o.out_path.empty()) {
        std::cout << dot.str();
    } else {
        std::ofstream out(o.out_path);
        out << dot.str();
    }
    return kExitOk;
}

int cmd_suite(const std::string& name) {
    auto t0 = std::chrono::steady_clock::now();
    auto report = run_suite(name);
    json items = json::array();
    for (const auto& item : report.items) {
        json j{{"criterion", item.criterion}, {"name", item.name}, {"passed", item.passed}};
        if (!item.detail.empty()) j["detail"] = item.detail;
        items.push_back(j);
        if (!item.passed) std::cerr << "FAIL: " << item.name << ": " << item.detail << "\n";
    }
    emit(json{{"suite", report.suite}, {"all_passed", report.all_passed}, {"items", items}});
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cerr << "suite " << name << ": " << report.items.size() << " items, "
              << (report.all_passed ? "all passed" : "FAILURES") << " in " << dt.count() << "s\n";
    return report.all_passed ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total proper connection toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* sgen = app.add_subcommand("gen", "generate a named graph");
    sgen->add_option("--kind", gen.kind, "path|star|cycle|complete|empty|complete-bipartite")
        ->required();
    sgen->add_option("--n", gen.n, "vertex count (second part size for bipartite)");
    sgen->add_option("--leaves", gen.leaves, "leaf count for stars");
    sgen->add_option("--m", gen.m, "first part size for bipartite");

    ProductOptions product;
    auto* sprod = app.add_subcommand("product", "apply a graph operation");
    sprod->add_option("--op", product.op, "join|cartesian|lex|strong|perm")->required();
    sprod->add_option("--with", product.with_spec, "right factor, e.g. star:3 or @file.json");
    sprod->add_option("--left", product.left_path, "left factor file (default: stdin)");
    sprod->add_option("--alpha", product.alpha_json, "permutation as a JSON array");
    sprod->add_option("--sidecar", product.sidecar, "also write the label map to this file");

    ColorOptions color;
    auto* scolor = app.add_subcommand("color", "run a theorem colorer");
    scolor
        ->add_option("--theorem", color.theorem,
                     "join|cart-trace|cart-star|cart-near-star|perm-trace|perm-star|lex|strong|"
                     "tree|traceable|search")
        ->required();
    scolor->add_option("--in", color.in_path, "input file (default: stdin)");
    scolor->add_option("--leaves", color.leaves, "standalone perm-star: leaf count");
    scolor->add_option("--variant", color.variant,
                       "standalone perm-star: identity|transposition01");
    scolor->add_option("--k", color.k, "palette size for search");
    scolor->add_option("--budget", color.budget, "node budget for search");

    CheckOptions check;
    auto* scheck = app.add_subcommand("check", "verify a colored graph");
    scheck->add_option("--graph", check.graph_path, "graph JSON file");
    scheck->add_option("--coloring", check.coloring_path, "coloring JSON file");
    scheck->add_option("--in", check.in_path, "combined input file (default: stdin)");
    scheck->add_option("--flavor", check.flavor, "total|edge|vertex");

    TpcOptions tpc_opts;
    auto* stpc = app.add_subcommand("tpc", "exact connection number by brute force");
    stpc->add_option("--graph", tpc_opts.in_path, "graph JSON file (default: stdin)");
    stpc->add_option("--flavor", tpc_opts.flavor, "total|edge|vertex");
    stpc->add_option("--cap", tpc_opts.cap, "element cap (vertices + edges)");

    HuntOptions hunt;
    auto* shunt = app.add_subcommand("hunt-perm", "search permutation graphs for value 4");
    shunt->add_option("--n-max", hunt.n_max, "largest base graph order")->required();
    shunt->add_option("--budget", hunt.budget_seconds, "wall-clock budget in seconds");
    shunt->add_option("--cap", hunt.cap, "oracle element cap");

    DotOptions dot;
    auto* sdot = app.add_subcommand("export-dot", "write a DOT rendering");
    sdot->add_option("--in", dot.in_path, "input file (default: stdin)");
    sdot->add_option("--out", dot.out_path, "output file (default: stdout)");

    std::string suite_name = "all";
    auto* ssuite = app.add_subcommand("suite", "run a batch verification suite");
    ssuite->add_option("--name", suite_name, "paper-values|colorer-sweep|inequality-sweep|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sgen->parsed()) return cmd_gen(gen);
        if (sprod->parsed()) return cmd_product(product);
        if (scolor->parsed()) return cmd_color(color);
        if (scheck->parsed()) return cmd_check(check);
        if (stpc->parsed()) return cmd_tpc(tpc_opts);
        if (shunt->parsed()) return cmd_hunt(hunt);
        if (sdot->parsed()) return cmd_export_dot(dot);
        if (ssuite->parsed()) return cmd_suite(suite_name);
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerdict;
    }
    return kExitUsage;
}
