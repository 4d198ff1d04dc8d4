#include "hunt/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hunt/errors.hpp"
#include "hunt/game.hpp"
#include "hunt/generators.hpp"
#include "hunt/graph_io.hpp"
#include "hunt/grid_strategies.hpp"
#include "hunt/isoperimetry.hpp"
#include "hunt/path_decomposition.hpp"
#include "hunt/solver.hpp"
#include "hunt/strategy_io.hpp"
#include "hunt/tree_family.hpp"

namespace hunt::cli {

namespace {

// Writes to `path`, or to `out` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write " + path);
    write(file);
}

struct GenOptions {
    std::string out;
    int rows = 0, cols = 0, n = 0, k = 0;
    std::uint64_t cap = default_tk_cap;
};

struct SolveOptions {
    std::string graph;
    int k = 0;
    std::string respect = "all";
    std::uint64_t max_states = SolverConfig{}.max_states;
    std::string out;
    bool no_prune = false;
    bool parallel = false;
};

int solve(const SolveOptions& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    SolverConfig cfg;
    cfg.max_states = o.max_states;
    cfg.antichain_pruning = !o.no_prune;
    cfg.parallel = o.parallel;

    if (o.k == 0) {
        auto result = hunter_number(g, cfg);
        out << "hunter number: " << result.hunters << '\n';
        out << "certificates: " << certificates_to_json(result.certificates);
        if (!o.out.empty()) emit(o.out, out, [&](std::ostream& os) { os << strategy_to_json(result.witness); });
        return ok;
    }

    std::optional<Bipartition> parts;
    VertexSet start = VertexSet::full(g.order());
    if (o.respect == "part0") {
        parts = bipartition(g);
        start = parts->part0;
    }
    auto outcome = wins_with_k(g, o.k, start, cfg);
    if (!outcome.winnable) {
        out << "not winnable with k=" << o.k << '\n';
        out << "certificate: " << certificate_to_json({0, o.k, outcome.explored_states, outcome.frontier_peak});
        return negative;
    }
    Strategy witness = parts ? double_for_bipartite(*outcome.witness, *parts) : *outcome.witness;
    out << "winnable with k=" << o.k << " in " << witness.rounds.size() << " rounds ("
        << outcome.explored_states << " states explored)\n";
    if (!o.out.empty()) emit(o.out, out, [&](std::ostream& os) { os << strategy_to_json(witness); });
    return ok;
}

int verify(const std::string& graph_path, const std::string& strategy_path, std::ostream& out) {
    const Graph g = load_graph(graph_path);
    const Strategy s = load_strategy(strategy_path);
    auto trace = run_strategy(g, s);
    if (trace.cleared()) {
        out << "winning: cleared after round " << *trace.cleared_at << '\n';
        return ok;
    }
    out << "not winning: " << trace.states.back().size() << " vertices contaminated after "
        << s.rounds.size() << " rounds\n";
    return negative;
}

void print_iso_header(std::ostream& out) { out << "p\tdelta_z\tdelta_z_prime\tmin_delta\n"; }

bool print_iso_row(std::ostream& out, const ContextPtr& ctx, const MinDelta& best) {
    const int z = delta(extremal_z(ctx, best.p));
    const int zp = delta(extremal_z_prime(ctx, best.p));
    out << best.p << '\t' << z << '\t' << zp << '\t' << best.value << '\n';
    return best.value == std::min(z, zp);
}

int play(const std::string& graph_path, int k, std::istream& in, std::ostream& out, std::ostream& err) {
    PlaySession session(std::make_shared<const Graph>(load_graph(graph_path)), k);
    out << "round 0: contaminated " << session.contamination() << '\n';
    std::string line;
    while (!session.won() && std::getline(in, line)) {
        std::istringstream ss(line);
        std::string word;
        VertexSet volley;
        bool quit = false, bad = false;
        while (ss >> word) {
            if (word == "quit") {
                quit = true;
                break;
            }
            try {
                std::size_t used = 0;
                int v = std::stoi(word, &used);
                if (used != word.size()) throw std::invalid_argument(word);
                volley.insert(v);
            } catch (const std::exception&) {
                err << "not a vertex index: " << word << '\n';
                bad = true;
                break;
            }
        }
        if (quit) break;
        if (bad) continue;
        try {
            session.apply_volley(volley);
        } catch (const InputError& e) {
            err << "rejected: " << e.what() << '\n';
            continue;
        }
        out << "round " << session.round() << ": contaminated " << session.contamination() << '\n';
        if (session.won()) out << "WIN after " << session.round() << " rounds\n";
    }
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hunters & Rabbit: exact solving, constructive strategies, grid isoperimetry"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen
    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
    auto* gen_grid = gen_cmd->add_subcommand("grid", "rows x cols grid");
    gen_grid->add_option("rows", gen.rows)->required();
    gen_grid->add_option("cols", gen.cols)->required();
    gen_grid->callback([&] {
        action = [&] {
            emit(gen.out, out, [&](std::ostream& os) { write_graph(os, make_grid(gen.rows, gen.cols)); });
            return ok;
        };
    });
    auto* gen_path = gen_cmd->add_subcommand("path", "Path on N vertices");
    gen_path->add_option("n", gen.n)->required();
    gen_path->callback([&] {
        action = [&] {
            emit(gen.out, out, [&](std::ostream& os) { write_graph(os, make_path(gen.n)); });
            return ok;
        };
    });
    auto* gen_cycle = gen_cmd->add_subcommand("cycle", "Cycle on N vertices");
    gen_cycle->add_option("n", gen.n)->required();
    gen_cycle->callback([&] {
        action = [&] {
            emit(gen.out, out, [&](std::ostream& os) { write_graph(os, make_cycle(gen.n)); });
            return ok;
        };
    });
    auto* gen_tk = gen_cmd->add_subcommand("tk", "Lower-bound tree T_K");
    gen_tk->add_option("k", gen.k)->required();
    gen_tk->add_option("--cap", gen.cap, "Refuse trees with more vertices");
    gen_tk->callback([&] {
        action = [&] {
            auto t = make_tk(gen.k, gen.cap);
            emit(gen.out, out, [&](std::ostream& os) { write_tk(os, t); });
            return ok;
        };
    });

    // solve
    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Exact solving: hunter number, or a fixed budget with --k");
    solve_cmd->add_option("graph", solve_opts.graph)->required();
    solve_cmd->add_option("--k", solve_opts.k, "Decide this budget only");
    solve_cmd->add_option("--respect", solve_opts.respect, "Start set for --k")
        ->check(CLI::IsMember({"all", "part0"}));
    solve_cmd->add_option("--max-states", solve_opts.max_states, "State cap");
    solve_cmd->add_option("--out", solve_opts.out, "Write the winning strategy here");
    solve_cmd->add_flag("--no-prune", solve_opts.no_prune, "Disable antichain pruning");
    solve_cmd->add_flag("--parallel", solve_opts.parallel, "Expand frontiers on worker threads");
    solve_cmd->callback([&] { action = [&] { return solve(solve_opts, out); }; });

    // verify
    std::string verify_graph, verify_strategy;
    auto* verify_cmd = app.add_subcommand("verify", "Exit 0 iff the strategy wins");
    verify_cmd->add_option("graph", verify_graph)->required();
    verify_cmd->add_option("strategy", verify_strategy)->required();
    verify_cmd->callback([&] { action = [&] { return verify(verify_graph, verify_strategy, out); }; });

    // grid-strategy
    int grid_rows = 0, grid_cols = 0;
    std::string grid_out;
    bool grid_doubled = false;
    auto* grid_cmd = app.add_subcommand("grid-strategy", "Column sweep strategy for the N x M grid");
    grid_cmd->add_option("n", grid_rows)->required();
    grid_cmd->add_option("m", grid_cols)->required();
    grid_cmd->add_option("--out", grid_out)->required();
    grid_cmd->add_flag("--doubled", grid_doubled, "Double it into a strategy winning from all vertices");
    grid_cmd->callback([&] {
        action = [&] {
            auto plan = grid_sweep_plan(grid_rows, grid_cols);
            Strategy s = plan.strategy;
            if (grid_doubled) s = double_for_bipartite(s, bipartition(make_grid(grid_rows, grid_cols)));
            emit(grid_out, out, [&](std::ostream& os) { os << strategy_to_json(s); });
            return ok;
        };
    });

    // pw-strategy
    std::string pw_tree, pw_out;
    auto* pw_cmd = app.add_subcommand("pw-strategy", "Bag-sequence strategy from a centroid path decomposition");
    pw_cmd->add_option("tree", pw_tree)->required();
    pw_cmd->add_option("--out", pw_out)->required();
    pw_cmd->callback([&] {
        action = [&] {
            const Graph t = load_graph(pw_tree);
            auto s = pw_strategy(t, centroid_path_decomposition(t));
            emit(pw_out, out, [&](std::ostream& os) { os << strategy_to_json(s); });
            return ok;
        };
    });

    // iso
    int iso_n = 0, iso_p = 0;
    auto* iso_cmd = app.add_subcommand("iso", "Vertex boundaries of even-class subsets of the n x n grid");
    iso_cmd->require_subcommand(1);
    auto* iso_min = iso_cmd->add_subcommand("min-delta", "One row of the extremal table");
    iso_min->add_option("--n", iso_n)->required();
    iso_min->add_option("--p", iso_p)->required();
    iso_min->callback([&] {
        action = [&] {
            auto ctx = GridClassContext::make(iso_n);
            auto best = min_delta_bruteforce(iso_n, iso_p);
            print_iso_header(out);
            return print_iso_row(out, ctx, best) ? ok : negative;
        };
    });
    auto* iso_check = iso_cmd->add_subcommand("check", "Full table; exit 0 iff min = min(delta(Z), delta(Z'))");
    iso_check->add_option("--n", iso_n)->required();
    iso_check->callback([&] {
        action = [&] {
            auto ctx = GridClassContext::make(iso_n);
            auto table = min_delta_table(iso_n);
            print_iso_header(out);
            bool all = true;
            for (std::size_t p = 1; p < table.size(); ++p) all = print_iso_row(out, ctx, table[p]) && all;
            return all ? ok : negative;
        };
    });
    auto* iso_cor = iso_cmd->add_subcommand("corollary", "Check the n^2/4 bound at p = n^2/4 - n/2");
    iso_cor->add_option("--n", iso_n)->required();
    iso_cor->callback([&] {
        action = [&] {
            if (iso_n < 4 || iso_n % 2 != 0) throw InputError("corollary needs an even n >= 4");
            auto ctx = GridClassContext::make(iso_n);
            const int p = iso_n * iso_n / 4 - iso_n / 2;
            auto best = min_delta_bruteforce(iso_n, p);
            print_iso_header(out);
            print_iso_row(out, ctx, best);
            return best.value == iso_n * iso_n / 4 ? ok : negative;
        };
    });

    // play
    std::string play_graph;
    int play_k = 0;
    auto* play_cmd = app.add_subcommand("play", "Interactive game: one volley per line, `quit` to leave");
    play_cmd->add_option("graph", play_graph)->required();
    play_cmd->add_option("--k", play_k)->required();
    play_cmd->callback([&] { action = [&] { return play(play_graph, play_k, in, out, err); }; });

    // monotone
    std::string mono_graph;
    int mono_trials = 20;
    std::uint64_t seed = 1;
    auto* mono_cmd = app.add_subcommand("monotone", "Check h(subgraph) <= h(graph) on random subgraphs");
    mono_cmd->add_option("graph", mono_graph)->required();
    mono_cmd->add_option("--trials", mono_trials);
    mono_cmd->add_option("--seed", seed, "Seed for random sampling");
    mono_cmd->callback([&] {
        action = [&] {
            Rng rng(seed);
            auto report = subgraph_monotonicity_check(load_graph(mono_graph), mono_trials, rng);
            out << "trials: " << report.trials << "\thunter number: " << report.super_hunters
                << "\tviolations: " << report.violations.size() << '\n';
            for (const auto& v : report.violations) {
                out << "# violation: h(sub)=" << v.sub_hunters << '\n';
                write_graph(out, v.subgraph);
            }
            return report.violations.empty() ? ok : negative;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    try {
        return action ? action() : input_error;
    } catch (const ResourceError& e) {
        err << "inconclusive: " << e.what();
        if (e.explored_states() > 0) err << " (explored " << e.explored_states() << " states)";
        err << '\n';
        return resource_cap;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return input_error;
    }
}

}  // namespace hunt::cli
