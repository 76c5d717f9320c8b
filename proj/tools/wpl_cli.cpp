// wpl: command-line front end for the braid group action on exceptional sequences.
//
// Exit codes: 0 success/pass, 1 verdict fail, 2 usage or input error, 3 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "wpl/invariants.hpp"
#include "wpl/io.hpp"
#include "wpl/orbit.hpp"
#include "wpl/tilting.hpp"

using namespace wpl;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

int log_level() {
    const char* v = std::getenv("WPL_BRAID_LOG");
    return v ? std::atoi(v) : 0;
}

void log(int level, const std::string& msg) {
    if (log_level() >= level) std::cerr << "[wpl] " << msg << '\n';
}

struct RunConfig {
    std::string weights;
    std::string subcommand;
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 1;
    std::string seq, src, dst, word, line;
    bool trace = false, det2 = false, quotient = false;
    std::size_t max_nodes = 0, max_depth = 64, depth = 4, radius = 0;
    double seconds = 0;
    std::string strategy = "recursive";
    int words = 0, len = 30, trials = 200, pairs = 100;
    Int range = 5;

    Json to_json() const {
        Json j{{"weights", weights}, {"subcommand", subcommand}, {"format", format}, {"seed", seed}, {"threads", threads}};
        auto put = [&](const char* k, const std::string& v) {
            if (!v.empty()) j[k] = v;
        };
        put("seq", seq);
        put("src", src);
        put("dst", dst);
        put("word", word);
        put("line", line);
        if (max_nodes) j["max_nodes"] = max_nodes;
        if (subcommand == "connect") {
            j["max_depth"] = max_depth;
            j["strategy"] = strategy;
            if (seconds > 0) j["seconds"] = seconds;
        }
        if (subcommand == "orbit") j["depth"] = depth;
        if (subcommand == "sgd" && radius) j["radius"] = radius;
        if (subcommand == "det") {
            j["words"] = words;
            j["len"] = len;
        }
        if (subcommand == "relations") j["trials"] = trials;
        if (subcommand == "rr-check") {
            j["pairs"] = pairs;
            j["range"] = range;
        }
        return j;
    }
};

void emit(const RunConfig& cfg, Json body) {
    body["config"] = cfg.to_json();
    std::cout << body.dump(2) << '\n';
}

ExcSeq input_sequence(const EulerLattice& lat, const RunConfig& cfg) {
    if (cfg.seq.empty()) return canonical_sequence(lat);
    return read_sequence(lat, cfg.seq);
}

ExpandMode mode_of(const RunConfig& cfg) { return cfg.threads == 1 ? ExpandMode::Serial : ExpandMode::Parallel; }

void write_classes_csv(std::ostream& out, const ExcSeq& s) {
    out << "slot";
    if (!s.entries.empty())
        for (std::size_t r = 0; r < s[0].size(); ++r) out << ",e" << r;
    out << '\n';
    for (std::size_t k = 0; k < s.size(); ++k) {
        out << k + 1;
        for (std::size_t r = 0; r < s[k].size(); ++r) out << ',' << s[k][r];
        out << '\n';
    }
}

int cmd_lattice(const EulerLattice& lat, const RunConfig& cfg) {
    if (cfg.format == "csv") {
        const IntMatrix& g = lat.gram();
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) std::cout << g(i, j) << (j + 1 < g.cols() ? ',' : '\n');
        return kPass;
    }
    emit(cfg, lattice_to_json(lat));
    return kPass;
}

int cmd_kappa(const EulerLattice& lat, const RunConfig& cfg) {
    const ExcSeq s = cfg.det2 ? det2_sequence(lat) : canonical_sequence(lat);
    if (cfg.format == "csv") {
        write_classes_csv(std::cout, s);
        return kPass;
    }
    emit(cfg, sequence_to_json(lat, s));
    return kPass;
}

int cmd_validate(const EulerLattice& lat, const RunConfig& cfg) {
    const ExcSeq s = read_sequence(lat, cfg.seq);
    const ValidationReport rep = validate_sequence(lat, s);
    Json vs = Json::array();
    for (const auto& v : rep.violations) vs.push_back(describe(v));
    emit(cfg, Json{{"valid", rep.ok()}, {"length", s.size()}, {"violations", vs}});
    return rep.ok() ? kPass : kFail;
}

int cmd_mutate(const EulerLattice& lat, const RunConfig& cfg) {
    const ExcSeq s = input_sequence(lat, cfg);
    if (!is_valid(lat, s)) throw MalformedInput("input is not an exceptional sequence");
    const BraidWord w = BraidWord::parse(cfg.word);
    for (int l : w.letters)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= s.size())
            throw MalformedInput("letter " + std::to_string(l) + " out of range for length " + std::to_string(s.size()));
    std::vector<TraceStep> trace;
    const ExcSeq out = apply_word(lat, s, w, &trace);
    for (const auto& t : trace) log(1, "letter " + std::to_string(t.letter) + ": " + to_string(t.mutation));
    if (cfg.format == "csv") {
        if (cfg.trace) write_trace_csv(std::cout, trace);
        else write_classes_csv(std::cout, out);
        return kPass;
    }
    Json body = sequence_to_json(lat, out);
    body["word"] = word_to_json(w);
    if (cfg.trace) body["trace"] = trace_to_json(trace);
    emit(cfg, body);
    return kPass;
}

int cmd_orbit(const EulerLattice& lat, const RunConfig& cfg) {
    const ExcSeq s = input_sequence(lat, cfg);
    if (!is_valid(lat, s)) throw MalformedInput("input is not an exceptional sequence");
    KeyFunction key;
    if (cfg.quotient) key = [&lat](const ExcSeq& x) { return twist_canonical_key(lat, x); };
    const std::size_t limit = cfg.max_nodes ? cfg.max_nodes : 100000;
    OrbitBfs bfs(lat, s, generator_letters(s.size()), key, mode_of(cfg), cfg.threads);
    std::vector<std::size_t> per_depth{1};
    while (!bfs.exhausted() && bfs.depth() < cfg.depth && bfs.size() < limit) {
        per_depth.push_back(bfs.step(limit).size());
        log(1, "depth " + std::to_string(bfs.depth()) + ": " + std::to_string(per_depth.back()) + " new");
    }
    const bool budget = !bfs.exhausted() && bfs.size() >= limit;
    if (cfg.format == "csv") {
        std::cout << "depth,new_nodes\n";
        for (std::size_t d = 0; d < per_depth.size(); ++d) std::cout << d << ',' << per_depth[d] << '\n';
    } else {
        emit(cfg, Json{{"nodes", bfs.size()},
                       {"depth", bfs.depth()},
                       {"per_depth", per_depth},
                       {"exhausted", bfs.exhausted()},
                       {"budget_exhausted", budget}});
    }
    return budget ? kBudget : kPass;
}

int cmd_connect(const EulerLattice& lat, const RunConfig& cfg) {
    const ExcSeq src = read_sequence(lat, cfg.src);
    const ExcSeq dst = read_sequence(lat, cfg.dst);
    SearchBudget b;
    b.max_nodes = cfg.max_nodes ? cfg.max_nodes : 1'000'000;
    b.max_depth = cfg.max_depth;
    if (cfg.seconds > 0) b.max_seconds = cfg.seconds;
    b.seed = cfg.seed;
    b.mode = mode_of(cfg);
    b.threads = cfg.threads;
    const Strategy st = cfg.strategy == "recursive" ? Strategy::Recursive : Strategy::Bidirectional;
    const ConnectResult r = find_braid_word(lat, src, dst, st, b);
    Json body{{"found", r.found}, {"word", word_to_json(r.word)}, {"nodes", r.nodes}, {"depth", r.depth}};
    if (!r.found) {
        body["failure"] = r.failure;
        body["frontier_src"] = r.frontier_src;
        body["frontier_dst"] = r.frontier_dst;
    }
    emit(cfg, body);
    return r.found ? kPass : kBudget;
}

int cmd_det(const EulerLattice& lat, const RunConfig& cfg) {
    const ExcSeq s = input_sequence(lat, cfg);
    if (!is_valid(lat, s) || s.size() != lat.rank()) throw MalformedInput("det needs a full exceptional sequence");
    const DeterminantRun run = determinant_survey(lat, s, cfg.words, cfg.len, cfg.seed);
    Json body{{"p", run.p}, {"det", run.det}, {"invariant_holds", run.invariant_holds},
              {"sequences_checked", run.sequences_checked}};
    if (!run.invariant_holds) body["counterexample"] = run.counterexample;
    emit(cfg, body);
    return run.invariant_holds ? kPass : kFail;
}

Json verdict_json(const Verdict& v) {
    Json j{{"pass", v.pass}, {"transcript", v.transcript}};
    if (!v.pass) j["counterexample"] = v.counterexample;
    return j;
}

int cmd_helix(const EulerLattice& lat, const RunConfig& cfg) {
    const Verdict v = helix_check(lat, input_sequence(lat, cfg));
    emit(cfg, verdict_json(v));
    return v.pass ? kPass : kFail;
}

int cmd_relations(const EulerLattice& lat, const RunConfig& cfg) {
    const Verdict v = braid_relation_suite(lat, input_sequence(lat, cfg), cfg.trials, cfg.seed);
    Json body = verdict_json(v);
    if (log_level() < 2) body.erase("transcript");
    body["trials"] = cfg.trials;
    emit(cfg, body);
    return v.pass ? kPass : kFail;
}

int cmd_rr(const EulerLattice& lat, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<Int> coeff(-cfg.range, cfg.range);
    auto random_class = [&] {
        K0Class a = lat.zero();
        for (std::size_t k = 0; k < lat.rank(); ++k) a[k] = coeff(rng);
        return a;
    };
    Int worst = 0;
    bool pass = true;
    for (int t = 0; t < cfg.pairs; ++t) {
        const Int r = lat.riemann_roch_residual(random_class(), random_class());
        if (r != 0) pass = false;
        worst = std::max(worst, std::abs(r));
    }
    Json arms = Json::array();
    const K0Class O = lat.line_class(lv_zero(lat.weights()));
    for (std::size_t i = 1; i <= lat.weights().arms(); ++i) {
        K0Class a = lat.simple_class(i, 0);
        Int sum = 0;
        for (Int j = 0; j < lat.lcm(); ++j) {
            sum += lat.euler_form(a, O);
            a = lat.tau(a);
        }
        const Int expected = -lat.lcm() / lat.weights().weight(i - 1);
        if (sum != expected) pass = false;
        arms.push_back(Json{{"arm", i}, {"sum", sum}, {"expected", expected}});
    }
    emit(cfg, Json{{"pass", pass}, {"pairs", cfg.pairs}, {"max_abs_residual", worst}, {"arm_sums", arms},
                   {"genus2", lat.genus2()}});
    return pass ? kPass : kFail;
}

int cmd_perp(const EulerLattice& lat, const RunConfig& cfg) {
    const WeightType& w = lat.weights();
    const LVec y = cfg.line.empty() ? lv_zero(w) : parse_lvec(cfg.line, w);
    const K0Class L = lat.line_class(y);
    const WingReport rep = wing_gram_check(lat, L);
    Json blocks = Json::array();
    for (const auto& b : rep.blocks) blocks.push_back(matrix_to_json(b));
    Json scan = Json::array();
    bool scan_ok = true;
    for (const auto& e : line_pair_scan(lat, L, 3)) {
        scan.push_back(Json{{"x", format_lvec(e.x)}, {"chi", e.chi}});
        scan_ok = scan_ok && e.x == canonical_element(w) && e.chi == 2;
    }
    Json body{{"line", format_lvec(y)}, {"pass", rep.pass && scan_ok}, {"wing", rep.lines}, {"blocks", blocks},
              {"hom2_pairs", scan}};
    if (w.arms() > 0) {
        const PerpSublattice ps = perp_sublattice(lat, lat.simple_class(1, 1));
        Json basis = Json::array();
        for (const auto& b : ps.exceptional_basis) basis.push_back(class_to_json(b));
        body["perp_S11"] = Json{{"basis", basis}, {"gram", matrix_to_json(ps.exceptional_gram)}};
    }
    emit(cfg, body);
    return rep.pass && scan_ok ? kPass : kFail;
}

int cmd_sgd(const EulerLattice& lat, const RunConfig& cfg) {
    SgdBudget b;
    b.max_nodes = cfg.max_nodes ? cfg.max_nodes : 100000;
    if (cfg.radius) b.radius = cfg.radius;
    b.mode = mode_of(cfg);
    b.threads = cfg.threads;
    const SgdResult r = sgd_lower_bound(lat, b);
    Json witness = Json::array();
    for (const auto& e : r.witness.entries) witness.push_back(class_to_json(e));
    emit(cfg, Json{{"lower_bound", r.lower_bound},
                   {"witness_sequence", witness},
                   {"shifts", r.assignment.shifts},
                   {"nodes_visited", r.nodes_visited},
                   {"depth", r.depth},
                   {"budget_exhausted", r.budget_exhausted},
                   {"spread_histogram", r.spread_histogram},
                   {"witness_verified", verify_witness(lat, r.witness, r.assignment)}});
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Braid group action on exceptional sequences over weighted projective lines"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with option defaults");

    RunConfig cfg;
    app.add_option("--weights", cfg.weights, "weights as a comma list, e.g. 2,3,5 (empty for P^1)")
        ->required()
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--threads", cfg.threads, "frontier threads; 1 is the serial kernel, 0 the OpenMP default");

    auto seq_opt = [&](CLI::App* sub) { sub->add_option("--seq", cfg.seq, "sequence JSON (default: kappa)"); };

    auto* lattice = app.add_subcommand("lattice", "Gram matrix, degrees and twist data");
    auto* kappa = app.add_subcommand("kappa", "the canonical sequence");
    kappa->add_flag("--det2", cfg.det2, "print (O, O(c), simples) instead");
    auto* validate = app.add_subcommand("validate", "check a sequence file");
    validate->add_option("--seq", cfg.seq, "sequence JSON")->required();
    auto* mutate = app.add_subcommand("mutate", "apply a braid word");
    seq_opt(mutate);
    mutate->add_option("--word", cfg.word, "letters, e.g. \"1 -2 3\"; the rightmost acts first")->required();
    mutate->add_flag("--trace", cfg.trace, "include one row per mutation step");
    auto* orbit = app.add_subcommand("orbit", "breadth-first orbit statistics");
    seq_opt(orbit);
    orbit->add_option("--depth", cfg.depth, "maximum depth");
    orbit->add_option("--max-nodes", cfg.max_nodes, "node budget");
    orbit->add_flag("--twist-quotient", cfg.quotient, "identify sequences differing by a global twist");
    auto* connect = app.add_subcommand("connect", "find a braid word from --src to --dst");
    connect->add_option("--src", cfg.src, "source sequence JSON")->required();
    connect->add_option("--dst", cfg.dst, "target sequence JSON")->required();
    connect->add_option("--strategy", cfg.strategy)->check(CLI::IsMember({"recursive", "bfs", "bidirectional"}));
    connect->add_option("--max-nodes", cfg.max_nodes, "node budget");
    connect->add_option("--max-depth", cfg.max_depth, "depth budget");
    connect->add_option("--seconds", cfg.seconds, "wall-clock limit");
    auto* det = app.add_subcommand("det", "determinant invariant");
    seq_opt(det);
    det->add_option("--words", cfg.words, "random words to follow");
    det->add_option("--len", cfg.len, "maximum word length");
    auto* helix = app.add_subcommand("helix", "rotation formulas");
    seq_opt(helix);
    auto* relations = app.add_subcommand("relations", "braid relations and inverses in random contexts");
    seq_opt(relations);
    relations->add_option("--trials", cfg.trials);
    auto* rr = app.add_subcommand("rr-check", "Riemann-Roch residuals");
    rr->add_option("--pairs", cfg.pairs);
    rr->add_option("--range", cfg.range, "coefficient range of random classes");
    auto* perp = app.add_subcommand("perp", "wing report for a line bundle");
    perp->add_option("--line", cfg.line, "twist of the line bundle, e.g. \"0;1,0\"");
    auto* sgd = app.add_subcommand("sgd", "strongest global dimension lower bound");
    sgd->add_option("--max-nodes", cfg.max_nodes, "node budget");
    sgd->add_option("--radius", cfg.radius, "maximum BFS depth");

    // "--weights=" (the projective line) would otherwise swallow the next token
    std::vector<std::string> args;
    for (int k = argc - 1; k >= 1; --k) {
        if (std::string_view(argv[k]) == "--weights=") {
            args.emplace_back("");
            args.emplace_back("--weights");
        } else {
            args.emplace_back(argv[k]);
        }
    }

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        std::cerr << app.help();
        return kUsage;
    }

    try {
        const EulerLattice lat(WeightType::parse(cfg.weights));
        cfg.subcommand = app.get_subcommands().front()->get_name();
        log(1, "weights (" + lat.weights().to_string() + "), subcommand " + cfg.subcommand);
        if (cfg.format == "csv" && !(lattice->parsed() || kappa->parsed() || mutate->parsed() || orbit->parsed()))
            throw MalformedInput("csv output is available for lattice, kappa, mutate and orbit");

        if (lattice->parsed()) return cmd_lattice(lat, cfg);
        if (kappa->parsed()) return cmd_kappa(lat, cfg);
        if (validate->parsed()) return cmd_validate(lat, cfg);
        if (mutate->parsed()) return cmd_mutate(lat, cfg);
        if (orbit->parsed()) return cmd_orbit(lat, cfg);
        if (connect->parsed()) return cmd_connect(lat, cfg);
        if (det->parsed()) return cmd_det(lat, cfg);
        if (helix->parsed()) return cmd_helix(lat, cfg);
        if (relations->parsed()) return cmd_relations(lat, cfg);
        if (rr->parsed()) return cmd_rr(lat, cfg);
        if (perp->parsed()) return cmd_perp(lat, cfg);
        if (sgd->parsed()) return cmd_sgd(lat, cfg);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
