// Command-line front end: graph generation, dimension and bound computation,
// table reproduction, and statement verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metdim/driver.hpp"
#include "metdim/johnson.hpp"
#include "metdim/json_io.hpp"
#include "metdim/vns.hpp"

using namespace metdim;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitTimeout = 3;

void write_out(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_file);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

struct GraphArgs {
    int n = 0, k = 0;
    std::string graph_file;

    Graph load() const {
        if (!graph_file.empty()) {
            std::ifstream f(graph_file);
            if (!f) throw std::invalid_argument("cannot open graph file: " + graph_file);
            json j;
            f >> j;
            return graph_from_json(j);
        }
        if (n == 0) throw std::invalid_argument("specify either --n/--k or --graph FILE");
        return johnson_graph(n, k);
    }
};

std::vector<std::pair<int, int>> parse_rows(const std::string& spec) {
    // "6,3;7,3" -> {(6,3),(7,3)}
    std::vector<std::pair<int, int>> rows;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t semi = spec.find(';', pos);
        std::string part = spec.substr(pos, semi == std::string::npos ? semi : semi - pos);
        std::size_t comma = part.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bad row spec '" + part + "' (expected n,k)");
        rows.emplace_back(std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric, edge and mixed metric dimensions of Johnson graphs"};
    app.require_subcommand(1);

    std::string format = "json", out_file;
    int threads = 1;
    bool canonical = false;
    app.add_option("--format", format, "output format: json|csv")->capture_default_str();
    app.add_option("--out", out_file, "write output to a file instead of stdout");
    app.add_option("--threads", threads, "worker threads for independent subtasks")
        ->capture_default_str();
    app.add_flag("--canonical", canonical, "force single-threaded, canonical output");

    // johnson
    auto* cmd_johnson = app.add_subcommand("johnson", "emit a Johnson graph as JSON");
    int jn = 0, jk = 0;
    cmd_johnson->add_option("n", jn, "ground set size")->required();
    cmd_johnson->add_option("k", jk, "subset size")->required();

    // dim
    auto* cmd_dim = app.add_subcommand("dim", "compute a metric dimension with a basis");
    GraphArgs dim_graph;
    std::string dim_kind = "vertex";
    double dim_budget = 600.0;
    bool dim_vns = false;
    std::uint64_t vns_seed = 1;
    int vns_max_shake = 3;
    std::optional<int> vns_target;
    cmd_dim->add_option("--n", dim_graph.n, "Johnson ground size");
    cmd_dim->add_option("--k", dim_graph.k, "Johnson subset size");
    cmd_dim->add_option("--graph", dim_graph.graph_file, "graph JSON file");
    cmd_dim->add_option("--kind", dim_kind, "vertex|edge|mixed")->capture_default_str();
    cmd_dim->add_option("--budget", dim_budget, "time budget in seconds")->capture_default_str();
    cmd_dim->add_flag("--vns", dim_vns, "heuristic upper bound instead of exact search");
    cmd_dim->add_option("--seed", vns_seed, "VNS random seed")->capture_default_str();
    cmd_dim->add_option("--max-shake", vns_max_shake, "VNS max shaking strength")
        ->capture_default_str();
    cmd_dim->add_option("--target", vns_target, "VNS stops at this cardinality");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "lower-bound ladder for a graph");
    GraphArgs bounds_graph;
    double bounds_budget = 60.0;
    cmd_bounds->add_option("--n", bounds_graph.n, "Johnson ground size");
    cmd_bounds->add_option("--k", bounds_graph.k, "Johnson subset size");
    cmd_bounds->add_option("--graph", bounds_graph.graph_file, "graph JSON file");
    cmd_bounds->add_option("--budget", bounds_budget, "per-solve time budget in seconds")
        ->capture_default_str();

    // table1
    auto* cmd_table = app.add_subcommand("table1", "reproduce the dimension/bound table");
    std::string rows_spec;
    Table1Options topt;
    cmd_table->add_option("--rows", rows_spec, "rows as 'n,k;n,k;...' (default: the six rows)");
    cmd_table->add_option("--bound-budget", topt.bound_budget_s, "seconds per hitting bound")
        ->capture_default_str();
    cmd_table->add_option("--exact-budget", topt.exact_budget_s, "seconds per exact cell")
        ->capture_default_str();
    cmd_table->add_flag("--extended", topt.extended, "exact edge/mixed cells on large rows too");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a statement and report pass/fail");
    std::string target;
    int vn = 6, vk = 3, samples = 100;
    std::uint64_t vseed = 1;
    bool with_exact = false;
    double vbudget = 600.0;
    std::string vrows = "6,3;7,3";
    cmd_verify->add_option("target", target, "theorem1|lemma1|observation1|hypothesis1|observation2")
        ->required();
    cmd_verify->add_option("--n", vn, "parameter n")->capture_default_str();
    cmd_verify->add_option("--k", vk, "parameter k")->capture_default_str();
    cmd_verify->add_option("--samples", samples, "randomized draws")->capture_default_str();
    cmd_verify->add_option("--seed", vseed, "random seed")->capture_default_str();
    cmd_verify->add_flag("--exact", with_exact, "also run the exact solver (theorem1)");
    cmd_verify->add_option("--budget", vbudget, "time budget in seconds")->capture_default_str();
    cmd_verify->add_option("--rows", vrows, "rows for hypothesis1")->capture_default_str();

    // eqdim
    auto* cmd_eqdim = app.add_subcommand("eqdim", "exact equidistant dimension (small graphs)");
    GraphArgs eq_graph;
    int eq_maxc = 0;
    double eq_budget = 1800.0;
    cmd_eqdim->add_option("--n", eq_graph.n, "Johnson ground size");
    cmd_eqdim->add_option("--k", eq_graph.k, "Johnson subset size");
    cmd_eqdim->add_option("--graph", eq_graph.graph_file, "graph JSON file");
    cmd_eqdim->add_option("--max-cardinality", eq_maxc, "cap on the search (default |V|-1)");
    cmd_eqdim->add_option("--budget", eq_budget, "time budget in seconds")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    if (canonical) threads = 1;

    try {
        if (*cmd_johnson) {
            Graph g = johnson_graph(jn, jk);
            write_out(graph_to_json(g).dump(2), out_file);
            return kExitOk;
        }

        if (*cmd_dim) {
            Graph g = dim_graph.load();
            DistanceMatrix dist = all_pairs_distances(g, threads);
            ResolveKind kind = resolve_kind_from_string(dim_kind);
            SolveResult res;
            if (dim_vns) {
                VnsConfig cfg;
                cfg.seed = vns_seed;
                cfg.max_shake = vns_max_shake;
                cfg.time_budget_s = dim_budget;
                cfg.target_cardinality = vns_target;
                res = vns_upper_bound(g, dist, kind, cfg);
            } else {
                res = exact_dimension(g, dist, kind, dim_budget);
            }
            write_out(solve_result_to_json(res, to_string(kind), &g).dump(2), out_file);
            if (res.status == SolveStatus::infeasible) return kExitInvalid;
            if (!dim_vns && res.status != SolveStatus::optimal) return kExitTimeout;
            return kExitOk;
        }

        if (*cmd_bounds) {
            Graph g = bounds_graph.load();
            DistanceMatrix dist = all_pairs_distances(g, threads);
            GraphStats stats = graph_stats(g, dist);
            BoundsReport fb = formula_bounds(stats);

            json j;
            j["V"] = stats.vertex_count;
            j["E"] = stats.edge_count;
            j["ed_prop1"] = fb.ed_prop1;
            j["ed_thm2"] = fb.ed_thm2;
            j["mi1"] = fb.mi1;
            j["mi1_regular"] = fb.mi1_regular;
            j["mi2"] = fb.mi2;
            j["chain"] = BoundsReport::chain;

            bool timed_out = false;
            {
                HittingInstance inst;
                inst.family = mixed_w_family(g, dist);
                inst.time_budget_s = bounds_budget;
                SolveResult r = min_hitting_set(inst);
                j["mhs_less"] = r.status == SolveStatus::optimal ? json(r.cardinality) : json(nullptr);
                j["mhs_less_status"] = to_string(r.status);
                j["w_family_sets"] = inst.family.size();
                timed_out |= r.status != SolveStatus::optimal;
            }
            if (g.has_labels() && g.labels[0].k >= 2) {
                HittingInstance inst;
                inst.family = mhsp_family(g.labels[0].n, g.labels[0].k);
                inst.time_budget_s = bounds_budget;
                SolveResult r = min_hitting_set(inst);
                j["mhsp"] = r.status == SolveStatus::optimal ? json(r.cardinality) : json(nullptr);
                j["mhsp_status"] = to_string(r.status);
                j["mhsp_family_sets"] = inst.family.size();
                timed_out |= r.status != SolveStatus::optimal;

                auto cf = johnson_closed_forms(g.labels[0].n, g.labels[0].k);
                j["closed_forms"]["beta"] = cf.beta ? json(*cf.beta) : json(nullptr);
                j["closed_forms"]["beta_upper"] = cf.beta_upper ? json(*cf.beta_upper) : json(nullptr);
                j["closed_forms"]["eqdim"] = cf.eqdim ? json(*cf.eqdim) : json(nullptr);
            } else {
                j["mhsp"] = nullptr;
                j["mhsp_status"] = "skipped";
            }
            write_out(j.dump(2), out_file);
            return timed_out ? kExitTimeout : kExitOk;
        }

        if (*cmd_table) {
            if (!rows_spec.empty()) topt.rows = parse_rows(rows_spec);
            topt.threads = threads;
            auto rows = cmd_table1(topt);
            write_out(format == "csv" ? table1_csv(rows) : table1_json(rows).dump(2), out_file);
            return table1_any_timeout(rows) ? kExitTimeout : kExitOk;
        }

        if (*cmd_verify) {
            VerifyReport rep;
            if (target == "theorem1") rep = verify_theorem1(vn, with_exact, vbudget);
            else if (target == "lemma1") rep = verify_lemma1(vn, vk, samples, vseed);
            else if (target == "observation1") rep = verify_observation1();
            else if (target == "hypothesis1") rep = verify_hypothesis1(parse_rows(vrows), vbudget);
            else if (target == "observation2")
                rep = verify_observation2(vbudget, vbudget, samples > 5 ? 5 : samples, threads);
            else throw std::invalid_argument("unknown verify target '" + target + "'");

            json j;
            j["pass"] = rep.pass;
            j["summary"] = rep.summary;
            j["details"] = rep.details;
            write_out(j.dump(2), out_file);
            std::cerr << (rep.pass ? "PASS " : "FAIL ") << rep.summary << "\n";
            return rep.pass ? kExitOk : 1;
        }

        if (*cmd_eqdim) {
            Graph g = eq_graph.load();
            DistanceMatrix dist = all_pairs_distances(g, threads);
            int cap = eq_maxc > 0 ? eq_maxc : g.vertex_count - 1;
            SolveResult res = exact_eqdim(g, dist, cap, eq_budget);
            json j = solve_result_to_json(res, "eqdim", &g);
            if (g.has_labels()) {
                auto cf = johnson_closed_forms(g.labels[0].n, g.labels[0].k);
                j["closed_form"] = cf.eqdim ? json(*cf.eqdim) : json(nullptr);
            }
            write_out(j.dump(2), out_file);
            return res.status == SolveStatus::optimal ? kExitOk : kExitTimeout;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
