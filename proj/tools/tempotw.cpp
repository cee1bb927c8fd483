// tempotw command-line front end. Talks to the library only through tempotw.h.
#include "tempotw/tempotw.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;

// Library failure: malformed input and bad arguments are usage errors.
struct Failure {
    int status;
    std::string message;
};

void ok(int status) {
    if (status != TW_OK) throw Failure{status, tw_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using DGraph = std::unique_ptr<tw_dgraph, Deleter<tw_dgraph, tw_dgraph_free>>;
using Graph = std::unique_ptr<tw_graph, Deleter<tw_graph, tw_graph_free>>;
using Structure = std::unique_ptr<tw_structure, Deleter<tw_structure, tw_structure_free>>;
using Td = std::unique_ptr<tw_td, Deleter<tw_td, tw_td_free>>;
using FormulaHandle = std::unique_ptr<tw_formula, Deleter<tw_formula, tw_formula_free>>;

std::string take(char* s) {
    std::string out = s ? s : "";
    tw_string_free(s);
    return out;
}

DGraph load_dgraph(const std::string& path) {
    tw_dgraph* g = nullptr;
    ok(tw_dgraph_load(path.c_str(), &g));
    return DGraph(g);
}

Graph load_graph(const std::string& path) {
    tw_graph* g = nullptr;
    ok(tw_graph_load(path.c_str(), &g));
    return Graph(g);
}

Td load_td(const std::string& path) {
    tw_td* d = nullptr;
    ok(tw_td_load(path.c_str(), &d));
    return Td(d);
}

struct Output {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Failure{TW_ERR_IO, "cannot write " + path};
        out << text;
    }
};

const std::map<std::string, int> variants{{"ltw", TW_LTW_PRESERVING}, {"tw", TW_TW_PRESERVING}};
const std::map<std::string, int> encodings{{"clique", TW_CLIQUE_TIME}, {"linear", TW_LINEAR_TIME}};

struct TranslationFlags {
    std::string variant = "ltw";
    std::string time = "clique";
    void add(CLI::App* app) {
        app->add_option("--variant", variant, "structure variant")->check(CLI::IsMember({"ltw", "tw"}))->capture_default_str();
        app->add_option("--time", time, "time encoding")->check(CLI::IsMember({"clique", "linear"}))->capture_default_str();
    }
    Structure translate(const tw_dgraph* g) const {
        tw_structure* s = nullptr;
        ok(tw_translate(g, variants.at(variant), encodings.at(time), &s));
        return Structure(s);
    }
};

std::string slurp_or_inline(const std::string& arg) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) return arg;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic graphs, their relational structures, tree decompositions and temporal model checking"};
    app.require_subcommand(1);
    app.fallthrough();
    Output output;
    app.add_option("-o,--output", output.path, "write the result here instead of stdout");
    unsigned exact_limit = 18;
    app.add_option("--exact-limit", exact_limit, "largest block solved by the exact treewidth DP")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random dynamic graph (.tgr)");
    gen->require_subcommand(1);
    std::uint64_t seed = 0;
    std::size_t n = 10;
    std::uint32_t tmax = 5;

    auto* markov = gen->add_subcommand("markov", "edge-Markovian graph");
    double c1 = 2, c2 = 1, density = 0;
    markov->add_option("--n", n, "vertices")->capture_default_str();
    markov->add_option("--tmax", tmax, "snapshots")->capture_default_str();
    markov->add_option("--c1", c1, "birth constant, p = c1/n")->capture_default_str();
    markov->add_option("--c2", c2, "survival constant, 1-q = c2/n")->capture_default_str();
    markov->add_option("--density", density, "edge density of the first snapshot")->capture_default_str();
    markov->add_option("--seed", seed, "RNG seed")->required();

    auto* ktree = gen->add_subcommand("ktree", "snapshots are random partial k-trees");
    unsigned k = 2;
    double edge_keep = 0.7, vertex_death = 0.0;
    ktree->add_option("--n", n, "vertices")->capture_default_str();
    ktree->add_option("--tmax", tmax, "snapshots")->capture_default_str();
    ktree->add_option("--k", k, "treewidth bound per snapshot")->capture_default_str();
    ktree->add_option("--edge-keep", edge_keep, "chance a k-tree edge is kept")->capture_default_str();
    ktree->add_option("--vertex-death", vertex_death, "chance a vertex is dead in a snapshot")->capture_default_str();
    ktree->add_option("--seed", seed, "RNG seed")->required();

    auto* bounded = gen->add_subcommand("bounded-degree", "snapshots of maximum degree <= d");
    unsigned d = 3;
    bounded->add_option("--n", n, "vertices")->capture_default_str();
    bounded->add_option("--tmax", tmax, "snapshots")->capture_default_str();
    bounded->add_option("--d", d, "degree cap")->capture_default_str();
    bounded->add_option("--seed", seed, "RNG seed")->required();

    std::string input, second;

    auto* validate = app.add_subcommand("validate", "check a .tgr file; exit 1 on violations");
    validate->add_option("graph", input, ".tgr file")->required();

    auto* stats = app.add_subcommand("stats", "per-snapshot degree table (t,mean_degree,max_degree)");
    stats->add_option("graph", input, ".tgr file")->required();

    TranslationFlags flags;
    auto* translate = app.add_subcommand("translate", "dump the relational structure of a .tgr");
    flags.add(translate);
    translate->add_option("graph", input, ".tgr file")->required();

    auto* gaifman = app.add_subcommand("gaifman", "Gaifman graph (.gr) of the structure of a .tgr");
    flags.add(gaifman);
    gaifman->add_option("graph", input, ".tgr file")->required();

    auto* decompose = app.add_subcommand("decompose", "write a tree decomposition (.td)");
    std::string method = "exact";
    decompose->add_option("--method", method,
                          "construct-clique|construct-linear take a .tgr and decompose the treewidth-preserving "
                          "structure; minfill|exact take a .gr")
        ->check(CLI::IsMember({"construct-clique", "construct-linear", "minfill", "exact"}))
        ->capture_default_str();
    decompose->add_option("graph", input, "input graph")->required();

    auto* check_td = app.add_subcommand("check-td", "check a .td against a .gr; exit 1 on violations");
    check_td->add_option("graph", input, ".gr file")->required();
    check_td->add_option("decomposition", second, ".td file")->required();

    auto* tw = app.add_subcommand("tw", "exact treewidth of a .gr");
    tw->add_option("graph", input, ".gr file")->required();

    auto* ltw = app.add_subcommand("ltw", "exact local treewidth of a .gr");
    unsigned radius = 1;
    ltw->add_option("--r", radius, "ball radius")->required();
    ltw->add_option("graph", input, ".gr file")->required();

    auto* mc = app.add_subcommand("mc", "model check a formula on the structure of a .tgr; exit 1 if false");
    std::string formula_arg;
    std::vector<std::string> bindings;
    flags.add(mc);
    mc->add_option("--formula", formula_arg, "formula file or inline s-expression")->required();
    mc->add_option("--bind", bindings, "free variable binding name=tag, e.g. u=v1@2");
    mc->add_option("graph", input, ".tgr file")->required();

    auto* formula = app.add_subcommand("formula", "print a generated sentence");
    std::string kind;
    unsigned ell = 0;
    bool evolving = false;
    flags.add(formula);
    formula->add_option("kind", kind, "journey|scdc|smrp|perm-color|evol-color")
        ->required()
        ->check(CLI::IsMember({"journey", "scdc", "smrp", "perm-color", "evol-color"}));
    formula->add_option("--k", k, "journey length, SCDC size, SMRP bound or colour count")->capture_default_str();
    auto* formula_ell = formula->add_option("--ell", ell, "SCDC journey length (default k)");
    formula->add_option("graph", input, ".tgr file supplying T(G) (journey, scdc, smrp)");

    auto* solve = app.add_subcommand("solve", "direct solvers; exit 1 on a 'no' answer");
    solve->require_subcommand(1);
    std::uint32_t vertex = 1, target = 1;
    unsigned max_length = 0;
    auto* journey = solve->add_subcommand("journey", "shortest journey from --from to --to");
    journey->add_option("--from", vertex, "source vertex")->required();
    journey->add_option("--to", target, "target vertex")->required();
    journey->add_option("--max-length", max_length, "edge budget (0 = unbounded)")->capture_default_str();
    journey->add_option("graph", input, ".tgr file")->required();
    auto* scdc = solve->add_subcommand("scdc", "strongly connected dynamic component of size >= k");
    scdc->add_option("--k", k, "component size")->required();
    auto* scdc_ell = scdc->add_option("--ell", ell, "journey length bound (default k)");
    scdc->add_option("graph", input, ".tgr file")->required();
    auto* smrp = solve->add_subcommand("smrp", "short message return path from --v");
    smrp->add_option("--v", vertex, "vertex")->required();
    smrp->add_option("--k", k, "return journey length bound")->required();
    smrp->add_option("graph", input, ".tgr file")->required();
    auto* perm = solve->add_subcommand("perm-color", "one colouring valid at every time");
    perm->add_option("--k", k, "colours")->required();
    perm->add_option("graph", input, ".tgr file")->required();
    auto* evol = solve->add_subcommand("evol-color", "independent colouring per snapshot");
    evol->add_option("--k", k, "colours")->required();
    evol->add_option("graph", input, ".tgr file")->required();

    auto* verify = app.add_subcommand("verify", "check a theorem's inequality on random instances; exit 1 on a violation");
    std::string theorem;
    unsigned trials = 20;
    verify->add_option("--theorem", theorem, "tw-bound|ltw-bound|linear-bound|markov-degree")
        ->required()
        ->check(CLI::IsMember({"tw-bound", "ltw-bound", "linear-bound", "markov-degree"}));
    verify->add_option("--trials", trials, "number of random instances")->capture_default_str();
    verify->add_option("--seed", seed, "master seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            tw_dgraph* g = nullptr;
            if (markov->parsed()) ok(tw_gen_markov(n, tmax, c1, c2, density, seed, &g));
            else if (ktree->parsed()) ok(tw_gen_ktree(n, tmax, k, edge_keep, vertex_death, seed, &g));
            else ok(tw_gen_bounded_degree(n, tmax, d, seed, &g));
            DGraph owned(g);
            char* text = nullptr;
            ok(tw_dgraph_format(g, &text));
            output.write(take(text));
            return exit_yes;
        }
        if (validate->parsed()) {
            tw_dgraph* g = nullptr;
            const int status = tw_dgraph_load(input.c_str(), &g);
            if (status == TW_ERR_INVARIANT) {
                std::cout << "INVALID\n" << tw_last_error() << '\n';
                return exit_no;
            }
            ok(status);
            DGraph owned(g);
            int valid = 0;
            char* report = nullptr;
            ok(tw_dgraph_validate(g, &valid, &report));
            std::cout << (valid ? "VALID\n" : "INVALID\n") << take(report);
            return valid ? exit_yes : exit_no;
        }
        if (stats->parsed()) {
            auto g = load_dgraph(input);
            char* csv = nullptr;
            ok(tw_degree_stats(g.get(), &csv));
            output.write(take(csv));
            return exit_yes;
        }
        if (translate->parsed() || gaifman->parsed()) {
            auto g = load_dgraph(input);
            auto s = flags.translate(g.get());
            char* text = nullptr;
            if (translate->parsed()) {
                ok(tw_structure_format(s.get(), &text));
            } else {
                tw_graph* gg = nullptr;
                ok(tw_gaifman(s.get(), &gg));
                Graph owned(gg);
                ok(tw_graph_format(gg, &text));
            }
            output.write(take(text));
            return exit_yes;
        }
        if (decompose->parsed()) {
            tw_td* td = nullptr;
            if (method == "construct-clique" || method == "construct-linear") {
                auto g = load_dgraph(input);
                ok(tw_construct_decomposition(g.get(), method == "construct-clique" ? TW_CLIQUE_TIME : TW_LINEAR_TIME,
                                              exact_limit, &td));
            } else {
                auto g = load_graph(input);
                if (method == "minfill") ok(tw_minfill(g.get(), &td));
                else ok(tw_exact_treewidth(g.get(), exact_limit, nullptr, &td));
            }
            Td owned(td);
            char* text = nullptr;
            ok(tw_td_format(td, &text));
            output.write(take(text));
            return exit_yes;
        }
        if (check_td->parsed()) {
            auto g = load_graph(input);
            auto td = load_td(second);
            int valid = 0;
            char* report = nullptr;
            ok(tw_td_check(g.get(), td.get(), &valid, &report));
            const std::string lines = take(report);
            if (!valid) {
                std::cout << "INVALID\n" << lines;
                return exit_no;
            }
            int w = 0;
            ok(tw_td_width(td.get(), &w));
            std::cout << "VALID width " << w << '\n';
            return exit_yes;
        }
        if (tw->parsed()) {
            auto g = load_graph(input);
            int w = 0;
            ok(tw_exact_treewidth(g.get(), exact_limit, &w, nullptr));
            output.write(std::to_string(w) + "\n");
            return exit_yes;
        }
        if (ltw->parsed()) {
            auto g = load_graph(input);
            int w = 0;
            ok(tw_local_treewidth(g.get(), radius, exact_limit, &w));
            output.write(std::to_string(w) + "\n");
            return exit_yes;
        }
        if (mc->parsed()) {
            tw_formula* f = nullptr;
            ok(tw_formula_parse(slurp_or_inline(formula_arg).c_str(), &f));
            FormulaHandle owned(f);
            auto g = load_dgraph(input);
            auto s = flags.translate(g.get());
            std::vector<std::string> names;
            std::vector<std::uint32_t> ids;
            for (const auto& b : bindings) {
                const auto eq = b.find('=');
                if (eq == std::string::npos) throw Failure{TW_ERR_INVALID_ARGUMENT, "binding '" + b + "' is not name=tag"};
                std::uint32_t id = 0;
                ok(tw_structure_find(s.get(), b.substr(eq + 1).c_str(), &id));
                names.push_back(b.substr(0, eq));
                ids.push_back(id);
            }
            std::vector<const char*> name_ptrs;
            for (const auto& nm : names) name_ptrs.push_back(nm.c_str());
            int result = 0;
            ok(tw_model_check(s.get(), f, name_ptrs.data(), ids.data(), ids.size(), &result));
            output.write(result ? "true\n" : "false\n");
            return result ? exit_yes : exit_no;
        }
        if (formula->parsed()) {
            tw_formula* f = nullptr;
            if (kind == "perm-color" || kind == "evol-color") {
                ok(tw_formula_coloring(k, kind == "evol-color", &f));
            } else {
                if (input.empty()) throw Failure{TW_ERR_INVALID_ARGUMENT, kind + " needs a .tgr file for T(G)"};
                auto g = load_dgraph(input);
                const int v = variants.at(flags.variant), e = encodings.at(flags.time);
                if (kind == "journey") ok(tw_formula_journey(k, v, e, g.get(), &f));
                else if (kind == "scdc") ok(tw_formula_scdc(k, formula_ell->count() ? ell : k, v, e, g.get(), &f));
                else ok(tw_formula_smrp(k, v, e, g.get(), &f));
            }
            FormulaHandle owned(f);
            char* text = nullptr;
            ok(tw_formula_format(f, &text));
            output.write(take(text) + "\n");
            return exit_yes;
        }
        if (solve->parsed()) {
            auto g = load_dgraph(input);
            int yes = 0;
            char* report = nullptr;
            if (journey->parsed()) {
                int length = -1;
                ok(tw_journey(g.get(), vertex, target, max_length == 0 ? ~0u : max_length, &length));
                output.write(length < 0 ? "RESULT no\n" : "RESULT yes\nLENGTH " + std::to_string(length) + "\n");
                return length < 0 ? exit_no : exit_yes;
            }
            if (scdc->parsed()) ok(tw_solve_scdc(g.get(), k, scdc_ell->count() ? ell : k, &yes, &report));
            else if (smrp->parsed()) ok(tw_solve_smrp(g.get(), vertex, k, &yes, &report));
            else if (perm->parsed()) ok(tw_solve_permanent_coloring(g.get(), k, &yes, &report));
            else ok(tw_solve_evolving_coloring(g.get(), k, &yes, &report));
            output.write(take(report));
            return yes ? exit_yes : exit_no;
        }
        if (verify->parsed()) {
            int pass = 0;
            char* report = nullptr;
            ok(tw_verify(theorem.c_str(), trials, seed, &pass, &report));
            output.write(take(report));
            return pass ? exit_yes : exit_no;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return exit_usage;
    }
    return exit_usage;
}
