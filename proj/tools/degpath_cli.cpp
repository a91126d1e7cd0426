// Command-line front end: parses graphs, dispatches to the solvers and
// helper engines, and prints JSON (or plain-text) reports. Exit codes follow
// the decision: 0 = yes/found, 1 = no, 2 = error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degpath/decompose.hpp"
#include "degpath/graph.hpp"
#include "degpath/oracle.hpp"
#include "degpath/reroute.hpp"
#include "degpath/segments.hpp"
#include "degpath/solver.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

/// Everything one dispatch needs; filled from flags or batch-row params.
struct RunConfig {
    std::string command;
    std::string input = "-";  // path, or "-" for stdin
    int k = 0, q = 0, p = 0, r = 0, s = -1, t = -1;
    bool extended = false;
    std::uint64_t seed = 0;
    long long trials = 0;          // 0 = default formula
    int exact_threshold = 18;      // instances at most this size run exactly
    int brute_threshold = degpath::kBruteThreshold;
    std::string format = "json";   // json | plain
    std::string terminals_file, pairs_file, witness_file, out_file;
    std::string gen_kind, brute_what, verify_kind = "path";
    int gen_n = 0, gen_d = 0;
    double gen_eps = 0.0;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw degpath::FormatError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

degpath::Graph load_graph(const RunConfig& cfg) { return degpath::parse_graph(read_all(cfg.input)); }

std::vector<int> load_vertex_list(const std::string& path) {
    std::istringstream in(read_all(path));
    std::vector<int> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int v;
        if (ls >> v) out.push_back(v);
    }
    return out;
}

ordered_json witness_json(const degpath::Witness& w) {
    return ordered_json{{"kind", w.kind == degpath::Witness::Kind::path ? "path" : "cycle"},
                        {"vertices", w.vertices}};
}

void emit(const RunConfig& cfg, const ordered_json& doc) {
    if (cfg.format == "plain") {
        for (auto it = doc.begin(); it != doc.end(); ++it)
            std::cout << it.key() << ": " << it.value().dump() << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

degpath::TrialBudget budget_of(const RunConfig& cfg) {
    return degpath::TrialBudget{cfg.trials, cfg.seed, cfg.exact_threshold};
}

int run_stats(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["degeneracy"] = degpath::degeneracy(g);
    doc["connected"] = degpath::is_connected(g);
    doc["two_connected"] = degpath::is_two_connected(g);
    doc["block_count"] = g.vertex_count() == 0
                             ? 0
                             : static_cast<int>(degpath::blocks_and_cuts(g).blocks.size());
    emit(cfg, doc);
    return kExitYes;
}

int run_core(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    int d = cfg.k > 0 ? cfg.k : degpath::degeneracy(g);
    auto core = degpath::d_core(g, d);
    ordered_json doc;
    doc["d"] = d;
    doc["exists"] = core.has_value();
    if (core) doc["core"] = *core;
    emit(cfg, doc);
    return core ? kExitYes : kExitNo;
}

int run_solver(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    degpath::SolverReport rep = cfg.command == "lpad" ? degpath::lpad(g, cfg.k, budget_of(cfg))
                                                      : degpath::lcad(g, cfg.k, budget_of(cfg));
    ordered_json doc;
    doc["answer"] = rep.yes ? "yes" : "no";
    doc["d"] = rep.d;
    doc["k"] = rep.k;
    doc["branch"] = degpath::branch_name(rep.branch);
    doc["p"] = rep.p;
    doc["core_size"] = rep.t_size;
    doc["seed"] = cfg.seed;
    doc["trials_total"] = rep.trials_total();
    doc["residual_error"] = rep.residual_error;
    if (rep.witness) doc["witness"] = witness_json(*rep.witness);
    emit(cfg, doc);
    return rep.yes ? kExitYes : kExitNo;
}

int run_color_search(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    degpath::SearchResult res;
    if (cfg.command == "longest-path")
        res = degpath::longest_path_at_least(g, cfg.q, budget_of(cfg));
    else if (cfg.command == "longest-cycle")
        res = degpath::longest_cycle_at_least(g, cfg.q, budget_of(cfg));
    else
        res = degpath::st_path_at_least(g, cfg.s, cfg.t, cfg.q, budget_of(cfg));
    ordered_json doc;
    doc["answer"] = res.witness ? "yes" : "no";
    doc["q"] = cfg.q;
    doc["seed"] = cfg.seed;
    doc["trials_used"] = res.trials_used;
    if (res.witness) doc["witness"] = witness_json(*res.witness);
    emit(cfg, doc);
    return res.witness ? kExitYes : kExitNo;
}

int run_segments(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    std::vector<int> terminals = load_vertex_list(cfg.terminals_file);
    degpath::SegmentsResult res =
        cfg.extended ? degpath::solve_extended_segments(g, terminals, cfg.p, cfg.r, budget_of(cfg))
                     : degpath::solve_segments(g, terminals, cfg.p, cfg.r, budget_of(cfg));
    ordered_json doc;
    doc["answer"] = res.system ? "yes" : "no";
    doc["p"] = cfg.p;
    doc["r"] = cfg.r;
    doc["extended"] = cfg.extended;
    doc["seed"] = cfg.seed;
    doc["trials_used"] = res.trials_used;
    if (res.system) doc["segments"] = res.system->paths;
    emit(cfg, doc);
    return res.system ? kExitYes : kExitNo;
}

int run_reroute(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    std::istringstream in(read_all(cfg.pairs_file));
    degpath::TerminalPairs tp;
    tp.k = cfg.k;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int a, b;
        if (ls >> a >> b) tp.pairs.emplace_back(a, b);
    }
    auto paths = degpath::cover_paths(g, tp);
    ordered_json doc;
    doc["k"] = cfg.k;
    doc["paths"] = ordered_json::array();
    for (const auto& w : paths) doc["paths"].push_back(w.vertices);
    emit(cfg, doc);
    return kExitYes;
}

int run_gen(const RunConfig& cfg) {
    degpath::GenSpec spec;
    spec.kind = cfg.gen_kind;
    spec.n = cfg.gen_n;
    spec.d = cfg.gen_d;
    spec.eps = cfg.gen_eps;
    spec.seed = cfg.seed;
    if (spec.kind != "random-degen") spec.base = load_graph(cfg);
    degpath::Graph out = degpath::generate(spec);
    std::string text;
    if (!degpath::is_connected(out))
        text += "# disconnected instance: unsuitable for solvers that require connectivity\n";
    text += degpath::serialize_graph(out);
    if (cfg.out_file.empty() || cfg.out_file == "-") {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_file);
        if (!f) throw degpath::FormatError("cannot open output file '" + cfg.out_file + "'");
        f << text;
    }
    return kExitYes;
}

int run_brute(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    ordered_json doc;
    std::optional<degpath::Witness> w;
    if (cfg.brute_what == "path") {
        w = degpath::brute_longest_path(g, cfg.brute_threshold);
    } else if (cfg.brute_what == "cycle") {
        w = degpath::brute_longest_cycle(g, cfg.brute_threshold);
    } else {
        throw degpath::PreconditionError("brute target must be 'path' or 'cycle'");
    }
    doc["answer"] = w ? "yes" : "no";
    if (w) {
        doc["length"] = w->size();
        doc["witness"] = witness_json(*w);
    }
    emit(cfg, doc);
    return w ? kExitYes : kExitNo;
}

int run_verify(const RunConfig& cfg) {
    degpath::Graph g = load_graph(cfg);
    degpath::Witness w;
    w.kind = cfg.verify_kind == "cycle" ? degpath::Witness::Kind::cycle
                                        : degpath::Witness::Kind::path;
    w.vertices = load_vertex_list(cfg.witness_file);
    bool ok = degpath::verify_witness(g, w);
    ordered_json doc;
    doc["valid"] = ok;
    doc["kind"] = cfg.verify_kind;
    doc["length"] = w.size();
    emit(cfg, doc);
    return ok ? kExitYes : kExitNo;
}

int dispatch(const RunConfig& cfg);

/// Manifest rows: `<file> <command> [key=value ...]`. Rows keep manifest
/// order; a missing file is recorded on its row and flags the whole batch.
int run_batch(const RunConfig& cfg) {
    std::istringstream in(read_all(cfg.input));
    ordered_json rows = ordered_json::array();
    bool any_error = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string file, command, kv;
        if (!(ls >> file >> command)) continue;
        RunConfig row = cfg;
        row.input = file;
        row.command = command;
        row.format = "json";
        while (ls >> kv) {
            auto eq = kv.find('=');
            std::string key = kv.substr(0, eq);
            std::string val = eq == std::string::npos ? "" : kv.substr(eq + 1);
            if (key == "k") row.k = std::stoi(val);
            else if (key == "q") row.q = std::stoi(val);
            else if (key == "p") row.p = std::stoi(val);
            else if (key == "r") row.r = std::stoi(val);
            else if (key == "s") row.s = std::stoi(val);
            else if (key == "t") row.t = std::stoi(val);
            else if (key == "seed") row.seed = std::stoull(val);
            else if (key == "trials") row.trials = std::stoll(val);
            else if (key == "exact-threshold") row.exact_threshold = std::stoi(val);
            else if (key == "extended") row.extended = (val != "0");
            else if (key == "terminals") row.terminals_file = val;
            else if (key == "pairs") row.pairs_file = val;
            else if (key == "what") row.brute_what = val;
            else throw degpath::FormatError("unknown batch parameter '" + key + "'");
        }
        ordered_json rec;
        rec["file"] = file;
        rec["command"] = command;
        std::ifstream probe(file);
        auto t0 = std::chrono::steady_clock::now();
        if (!probe) {
            rec["error"] = "missing file";
            any_error = true;
        } else {
            probe.close();
            try {
                degpath::Graph g = degpath::parse_graph(read_all(file));
                if (command == "lpad" || command == "lcad") {
                    auto rep = command == "lpad" ? degpath::lpad(g, row.k, budget_of(row))
                                                 : degpath::lcad(g, row.k, budget_of(row));
                    rec["decision"] = rep.yes ? "yes" : "no";
                    rec["witness_length"] = rep.witness ? rep.witness->size() : 0;
                    rec["trials"] = rep.trials_total();
                } else if (command == "longest-path" || command == "longest-cycle" ||
                           command == "st-path") {
                    degpath::SearchResult res;
                    if (command == "longest-path")
                        res = degpath::longest_path_at_least(g, row.q, budget_of(row));
                    else if (command == "longest-cycle")
                        res = degpath::longest_cycle_at_least(g, row.q, budget_of(row));
                    else
                        res = degpath::st_path_at_least(g, row.s, row.t, row.q, budget_of(row));
                    rec["decision"] = res.witness ? "yes" : "no";
                    rec["witness_length"] = res.witness ? res.witness->size() : 0;
                    rec["trials"] = res.trials_used;
                } else if (command == "stats") {
                    rec["decision"] = "ok";
                    rec["degeneracy"] = degpath::degeneracy(g);
                } else if (command == "brute") {
                    auto w = row.brute_what == "cycle"
                                 ? degpath::brute_longest_cycle(g, row.brute_threshold)
                                 : std::optional<degpath::Witness>(
                                       degpath::brute_longest_path(g, row.brute_threshold));
                    rec["decision"] = w ? "yes" : "no";
                    rec["witness_length"] = w ? w->size() : 0;
                } else {
                    throw degpath::PreconditionError("command '" + command +
                                                     "' is not available in batch mode");
                }
            } catch (const std::exception& ex) {
                rec["error"] = ex.what();
                any_error = true;
            }
        }
        auto t1 = std::chrono::steady_clock::now();
        rec["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rows.push_back(std::move(rec));
    }
    if (cfg.format == "plain") {
        for (const auto& rec : rows) {
            std::cout << rec.value("file", "") << "  " << rec.value("command", "") << "  "
                      << (rec.contains("error") ? std::string("ERROR: ") + rec["error"].get<std::string>()
                                                : rec.value("decision", ""))
                      << "\n";
        }
    } else {
        std::cout << rows.dump(2) << "\n";
    }
    return any_error ? kExitError : kExitYes;
}

int dispatch(const RunConfig& cfg) {
    if (cfg.command == "stats") return run_stats(cfg);
    if (cfg.command == "core") return run_core(cfg);
    if (cfg.command == "lpad" || cfg.command == "lcad") return run_solver(cfg);
    if (cfg.command == "longest-path" || cfg.command == "longest-cycle" ||
        cfg.command == "st-path")
        return run_color_search(cfg);
    if (cfg.command == "segments") return run_segments(cfg);
    if (cfg.command == "reroute") return run_reroute(cfg);
    if (cfg.command == "gen") return run_gen(cfg);
    if (cfg.command == "brute") return run_brute(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "batch") return run_batch(cfg);
    throw degpath::PreconditionError("unknown command '" + cfg.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("DEGPATH_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);

    CLI::App app{"Long paths and cycles above the degeneracy bound"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "graph edge-list file, '-' for stdin");
        sub->add_option("-i,--input-file", cfg.input, "alias for the positional input");
        sub->add_option("--format", cfg.format, "output format: json or plain")
            ->check(CLI::IsMember({"json", "plain"}));
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
        return sub;
    };
    auto add_random = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "PRNG seed (overrides DEGPATH_SEED)");
        sub->add_option("--trials", cfg.trials, "trial budget override (0 = default)");
        sub->add_option("--exact-threshold", cfg.exact_threshold,
                        "solve exactly when the graph has at most this many vertices");
        return sub;
    };

    add_common(app.add_subcommand("stats", "graph summary: n, m, degeneracy, connectivity"));
    add_common(app.add_subcommand("core", "deepest core (or the d-core for --d)"))
        ->add_option("--d", cfg.k, "explicit core depth (default: degeneracy)");

    for (const char* name : {"lpad", "lcad"}) {
        auto* sub = add_random(add_common(app.add_subcommand(
            name, std::string(name) == "lpad"
                      ? "path with at least degeneracy+k vertices (connected G)"
                      : "cycle with at least degeneracy+k vertices (2-connected G)")));
        sub->add_option("--k", cfg.k, "offset above the degeneracy")->required();
    }
    {
        auto* sub = add_random(add_common(
            app.add_subcommand("longest-path", "path with at least q vertices")));
        sub->add_option("--q", cfg.q, "target vertex count")->required();
    }
    {
        auto* sub = add_random(add_common(
            app.add_subcommand("longest-cycle", "cycle with at least q vertices")));
        sub->add_option("--q", cfg.q, "target vertex count")->required();
    }
    {
        auto* sub = add_random(add_common(
            app.add_subcommand("st-path", "(s,t)-path with at least q vertices")));
        sub->add_option("--s", cfg.s, "start vertex")->required();
        sub->add_option("--t", cfg.t, "end vertex")->required();
        sub->add_option("--q", cfg.q, "target vertex count")->required();
    }
    {
        auto* sub = add_random(add_common(
            app.add_subcommand("segments", "terminal-set segment system search")));
        sub->add_option("--terminals", cfg.terminals_file, "file with one terminal id per line")
            ->required();
        sub->add_option("--p", cfg.p, "outside vertices used")->required();
        sub->add_option("--r", cfg.r, "segment count")->required();
        sub->add_flag("--extended", cfg.extended, "allow one or two one-terminal segments");
    }
    {
        auto* sub = add_common(app.add_subcommand("reroute", "disjoint covering (s,t)-paths"));
        sub->add_option("--pairs", cfg.pairs_file, "file with one 's t' pair per line")->required();
        sub->add_option("--k", cfg.k, "degree-bound parameter")->required();
    }
    {
        auto* sub = add_common(app.add_subcommand("gen", "instance generators"));
        sub->add_option("--kind", cfg.gen_kind, "hardness-path | hardness-cycle | tight-path | tight-cycle | random-degen")
            ->required();
        sub->add_option("--n", cfg.gen_n, "vertex count (random-degen)");
        sub->add_option("--d", cfg.gen_d, "degeneracy target (random-degen)");
        sub->add_option("--eps", cfg.gen_eps, "epsilon in (0,1) (tight-*)");
        sub->add_option("--seed", cfg.seed, "PRNG seed");
        sub->add_option("-o,--out", cfg.out_file, "output file, '-' for stdout");
    }
    {
        auto* sub = add_common(app.add_subcommand("brute", "exact small-instance oracle"));
        sub->add_option("--what", cfg.brute_what, "path | cycle")->required();
        sub->add_option("--threshold", cfg.brute_threshold, "max vertices accepted");
    }
    {
        auto* sub = add_common(app.add_subcommand("verify", "check a witness against the graph"));
        sub->add_option("--witness", cfg.witness_file, "file with one vertex id per line")
            ->required();
        sub->add_option("--kind", cfg.verify_kind, "path | cycle")
            ->check(CLI::IsMember({"path", "cycle"}));
    }
    add_random(add_common(app.add_subcommand(
        "batch", "run a manifest: '<file> <command> [key=value ...]' per line")));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitYes : kExitError;
    }
    try {
        return dispatch(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
}
