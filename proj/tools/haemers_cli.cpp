// Command-line surface: lift, verify, search, bounds, chif, formulas, graph.
// Exit codes: 0 success/verified, 1 verified-false, 2 usage/parse errors,
// 3 budget exhaustion.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "haemers/haemers.hpp"

using namespace haemers;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~Timer() {
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << "---\nelapsed " << s << "s\n";
    }
};

void banner(const std::string& cmd, const std::string& params) {
    std::cout << "haemers " << kVersion << " " << cmd << " " << params << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BadParameter("cannot open output file " + path);
    return out;
}

template <class F>
int run_lift(const std::string& graph_spec, const std::string& rep_file, F field,
             int r, const std::string& out_path) {
    DualRepresentation<F> rep;
    std::string base_ref;
    if (!rep_file.empty()) {
        std::ifstream in(rep_file);
        if (!in) throw BadParameter("cannot open representation " + rep_file);
        const auto h = read_rep_header(in);
        if (h.field != field.spec())
            throw FieldMismatch("representation field " + h.field.str() +
                                " does not match --field");
        rep = read_representation_body(in, h, graph_for_spec(h.graph_ref), field);
        base_ref = h.graph_ref;
    } else {
        rep = rep_for_spec(graph_spec, field);
        base_ref = graph_spec;
    }
    const auto lifted = lift(rep, r);
    if (r >= 2) {
        const auto plan = lift_plan(BigInt(rep.ambient), BigInt(rep.local_dim), r);
        std::cout << "plan " << plan.summary() << "\n";
        std::cout << "N=" << plan.N.str() << " D=" << plan.D.str()
                  << " value=" << to_string(plan.ratio()) << "\n";
    } else {
        std::cout << "N=" << lifted.ambient << " D=" << lifted.local_dim
                  << " value=" << to_string(value(lifted)) << "\n";
    }
    std::cout << "ambient " << lifted.ambient << "\n";
    std::cout << "verified " << (verify(lifted).valid ? "true" : "false") << "\n";
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_representation(out, lifted, "mycielski:" + base_ref + ":" +
                                              std::to_string(r));
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

template <class F>
int run_verify(std::istream& in, const RepHeader& h, F field) {
    const auto rep =
        read_representation_body(in, h, graph_for_spec(h.graph_ref), field);
    const auto rpt = verify(rep);
    std::cout << "n=" << rep.ambient << " d=" << rep.local_dim
              << " value=" << to_string(value(rep)) << "\n";
    for (const auto& c : rpt.checks)
        std::cout << "vertex " << c.vertex.str() << " dim=" << c.dim
                  << " meet=" << c.intersection_dim << " "
                  << (c.ok ? "ok" : "VIOLATION") << "\n";
    std::cout << "total_span " << rpt.total_span_dim << "\n";
    std::cout << "verified " << (rpt.valid ? "true" : "false") << "\n";
    return rpt.valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dual subspace representations of graphs"};
    app.set_version_flag("--version", std::string("haemers ") + kVersion);
    int threads = 1;
    app.add_option("--threads", threads, "worker count cap")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    // lift
    auto* lift_cmd = app.add_subcommand("lift", "build the Mycielski lift of a representation");
    std::string graph_spec, field_str = "2", rep_file, out_path;
    int r = 2;
    lift_cmd->add_option("--graph", graph_spec, "builtin representation spec");
    lift_cmd->add_option("--rep", rep_file, "input representation file");
    lift_cmd->add_option("--field", field_str, "p or Q");
    lift_cmd->add_option("--r", r, "number of levels")->required();
    lift_cmd->add_option("--out", out_path, "output representation file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a representation file");
    std::string verify_file;
    verify_cmd->add_option("--rep", verify_file, "representation file")->required();

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive oracle over GF(p)");
    std::string search_graph, witness_path;
    std::uint32_t search_p = 2;
    int search_n = 0, search_d = 1;
    std::uint64_t budget = 1000000000ull;
    std::size_t max_candidates = 100000;
    bool symmetry = false;
    search_cmd->add_option("--graph", search_graph, "graph spec or file")->required();
    search_cmd->add_option("--p", search_p, "prime modulus")->required();
    search_cmd->add_option("--n", search_n, "ambient dimension")->required();
    search_cmd->add_option("--d", search_d, "local dimension")->required();
    search_cmd->add_option("--budget", budget, "search node budget");
    search_cmd->add_option("--max-candidates", max_candidates, "subspace pool cap");
    search_cmd->add_flag("--symmetry", symmetry,
                         "fix the first vertex's subspace (user-asserted soundness)");
    search_cmd->add_option("--witness", witness_path, "write a found witness here");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "recursion table and closed forms");
    int bm = 0, br = 0;
    bounds_cmd->add_option("--m", bm, "clique size")->required();
    bounds_cmd->add_option("--r", br, "number of levels")->required();

    // chif
    auto* chif_cmd = app.add_subcommand("chif", "exact fractional chromatic number");
    std::string chif_graph, chif_witness;
    chif_cmd->add_option("--graph", chif_graph, "graph spec or file")->required();
    chif_cmd->add_option("--witness", chif_witness, "write the optimal weighting here");

    // formulas
    auto* formulas_cmd = app.add_subcommand("formulas", "closed-form evaluators");
    std::string fh = "2";
    int fr = 2;
    double ftheta = -1;
    formulas_cmd->add_option("--chi", fh, "value of the base representation (rational)");
    formulas_cmd->add_option("--r", fr, "number of levels");
    formulas_cmd->add_option("--theta", ftheta, "evaluate theta_mycielski2 here");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "materialize a graph spec");
    std::string gspec, gout;
    graph_cmd->add_option("--spec", gspec, "graph spec or file")->required();
    graph_cmd->add_option("--out", gout, "output graph file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Timer timer;
        if (*lift_cmd) {
            banner("lift", "graph=" + (rep_file.empty() ? graph_spec : rep_file) +
                               " field=" + field_str + " r=" + std::to_string(r));
            if (graph_spec.empty() == rep_file.empty())
                throw BadParameter("lift needs exactly one of --graph / --rep");
            const auto fs = FieldSpec::parse(field_str);
            return fs.kind == FieldSpec::Kind::Prime
                       ? run_lift(graph_spec, rep_file, Gf(fs), r, out_path)
                       : run_lift(graph_spec, rep_file, Rat{}, r, out_path);
        }
        if (*verify_cmd) {
            banner("verify", "rep=" + verify_file);
            std::ifstream in(verify_file);
            if (!in) throw BadParameter("cannot open representation " + verify_file);
            const auto h = read_rep_header(in);
            std::cout << "graph " << h.graph_ref << " field " << h.field.str()
                      << "\n";
            return h.field.kind == FieldSpec::Kind::Prime
                       ? run_verify(in, h, Gf(h.field))
                       : run_verify(in, h, Rat{});
        }
        if (*search_cmd) {
            banner("search", "graph=" + search_graph + " p=" +
                                 std::to_string(search_p) + " n=" +
                                 std::to_string(search_n) + " d=" +
                                 std::to_string(search_d) + " budget=" +
                                 std::to_string(budget));
            const Graph g = graph_for_spec(search_graph);
            SearchConfig cfg;
            cfg.node_budget = budget;
            cfg.max_candidates = max_candidates;
            cfg.symmetry_pruning = symmetry;
            const auto res =
                exists_representation(g, Gf(search_p), search_n, search_d, cfg);
            std::cout << "nodes " << res.nodes << "\n";
            switch (res.outcome) {
                case SearchOutcome::Found:
                    std::cout << "verdict exists\n";
                    if (!witness_path.empty()) {
                        auto out = open_out(witness_path);
                        write_representation(out, *res.witness, search_graph);
                        std::cout << "wrote " << witness_path << "\n";
                    }
                    return 0;
                case SearchOutcome::NotFound:
                    std::cout << "verdict not-exists (exhaustive)\n";
                    return 1;
                case SearchOutcome::BudgetExhausted:
                    std::cout << "verdict inconclusive (budget exhausted)\n";
                    return 3;
            }
        }
        if (*bounds_cmd) {
            banner("bounds", "m=" + std::to_string(bm) + " r=" + std::to_string(br));
            const auto t = recursion_table(bm, br);
            for (std::size_t l = 1; l < t.a.size(); ++l)
                std::cout << "a_" << l << " = " << t.a[l].str() << "\n";
            for (std::size_t l = 0; l < t.b.size(); ++l)
                std::cout << "b_" << l << " = " << t.b[l].str() << "\n";
            for (std::size_t k = 0; k < t.c.size(); ++k)
                std::cout << "c_" << k << " = " << t.c[k].str() << "\n";
            bool lem2 = true;
            for (const auto& res : lemma2_residual(t)) lem2 = lem2 && res.is_zero();
            std::cout << "Lemma2 " << (lem2 ? "OK" : "VIOLATED") << "\n";
            if (br >= 4)
                std::cout << "Lemma3 "
                          << (lemma3_identity_check(bm, br) ? "OK" : "VIOLATED")
                          << "\n";
            else
                std::cout << "Lemma3 n/a (needs r >= 4)\n";
            std::cout << "lower=" << to_string(clique_lower_bound(bm, br)) << "\n";
            return 0;
        }
        if (*chif_cmd) {
            banner("chif", "graph=" + chif_graph);
            const Graph g = graph_for_spec(chif_graph);
            const auto sol = fractional_chromatic_full(g);
            std::cout << "chi_f=" << to_string(sol.optimum) << "\n";
            std::ostream* wout = &std::cout;
            std::ofstream file;
            if (!chif_witness.empty()) {
                file = open_out(chif_witness);
                wout = &file;
            }
            for (std::size_t i = 0; i < sol.columns.size(); ++i) {
                if (sol.weights[i] == 0) continue;
                *wout << "weight " << to_string(sol.weights[i]) << " set";
                for (const std::size_t v : sol.columns[i])
                    *wout << " " << g.label(v).str();
                *wout << "\n";
            }
            if (!chif_witness.empty()) std::cout << "wrote " << chif_witness << "\n";
            return 0;
        }
        if (*formulas_cmd) {
            banner("formulas", "chi=" + fh + " r=" + std::to_string(fr));
            const Rational h = parse_rational(fh);
            std::cout << "lift_upper_bound=" << to_string(lift_upper_bound(h, fr))
                      << "\n";
            std::cout << "tardif_chi=" << to_string(tardif_chi(h, fr)) << "\n";
            if (denominator(h) == 1)
                std::cout << "clique_lower_bound="
                          << to_string(clique_lower_bound(
                                 numerator(h).convert_to<int>(), fr))
                          << "\n";
            if (ftheta >= 0)
                std::cout << "theta_mycielski2="
                          << static_cast<double>(theta_mycielski2(ftheta)) << "\n";
            return 0;
        }
        if (*graph_cmd) {
            banner("graph", "spec=" + gspec);
            const Graph g = graph_for_spec(gspec);
            std::cout << "vertices " << g.num_vertices() << " edges "
                      << g.num_edges() << "\n";
            if (!gout.empty()) {
                auto out = open_out(gout);
                write_graph(out, g);
                std::cout << "wrote " << gout << "\n";
            } else {
                write_graph(std::cout, g);
            }
            return 0;
        }
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
