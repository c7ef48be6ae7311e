#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "epkit/classic.hpp"
#include "epkit/errors.hpp"
#include "epkit/generators.hpp"
#include "epkit/io.hpp"
#include "epkit/multigraph.hpp"
#include "epkit/oracle.hpp"
#include "epkit/solver.hpp"

using namespace epkit;

namespace {

int to_int(const std::string& tok) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (...) {
        used = 0;
    }
    require(!tok.empty() && used == tok.size() && v >= INT_MIN && v <= INT_MAX,
            "expected an integer, got '" + tok + "'");
    return static_cast<int>(v);
}

std::uint64_t to_seed(const std::string& tok) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(tok, &used);
    } catch (...) {
        used = 0;
    }
    require(!tok.empty() && used == tok.size(), "expected a seed, got '" + tok + "'");
    return v;
}

double to_double(const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (...) {
        used = 0;
    }
    require(!tok.empty() && used == tok.size(), "expected a number, got '" + tok + "'");
    return v;
}

// Model grammar shared by `gen` and corpus spec lines: a model name followed
// by its numeric parameters.  `disjoint-union` consumes the remaining tokens
// as a list of sub-models; a gnp part at position i draws from seed + i.
Multigraph build_single_model(const std::string& name, const std::vector<std::string>& toks,
                              std::size_t& pos, std::uint64_t seed) {
    auto next = [&]() -> const std::string& {
        require(pos < toks.size(), "model '" + name + "' is missing a parameter");
        return toks[pos++];
    };
    if (name == "cycle") return gen_cycle(to_int(next()));
    if (name == "path") return gen_path(to_int(next()));
    if (name == "complete") return gen_complete(to_int(next()));
    if (name == "grid") {
        int rows = to_int(next());
        int cols = to_int(next());
        return gen_grid(rows, cols);
    }
    if (name == "theta") {
        int a = to_int(next());
        int b = to_int(next());
        int c = to_int(next());
        return gen_theta(a, b, c);
    }
    if (name == "gnp") {
        int n = to_int(next());
        double p = to_double(next());
        return gen_gnp(n, p, seed);
    }
    throw precondition_error("unknown model '" + name + "'");
}

Multigraph build_model(const std::vector<std::string>& toks, std::uint64_t seed) {
    require(!toks.empty(), "missing model name");
    std::size_t pos = 0;
    std::string name = toks[pos++];
    Multigraph g(0);
    if (name == "disjoint-union") {
        require(pos < toks.size(), "disjoint-union needs at least one part");
        std::vector<Multigraph> parts;
        while (pos < toks.size()) {
            std::string part = toks[pos++];
            parts.push_back(build_single_model(part, toks, pos, seed + parts.size()));
        }
        g = disjoint_union(parts);
    } else {
        g = build_single_model(name, toks, pos, seed);
    }
    if (pos != toks.size())
        throw precondition_error("trailing model parameters starting at '" + toks[pos] + "'");
    return g;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    require(out.good(), "cannot open file for writing: " + out_path);
    out << text;
    out.flush();
    require(out.good(), "write failed: " + out_path);
}

const char* verdict_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::ok: return "ok";
        case VerifyStatus::violation: return "violation";
        default: return "unverifiable";
    }
}

std::string answer_or(const OracleStatus& status, int value) {
    return status == OracleStatus::ok ? std::to_string(value) : "unverifiable";
}

int cmd_solve_long(const std::string& in_path, int k, int l, const std::string& out_path,
                   bool verify, const OracleBudget& budget) {
    Multigraph g = read_graph_file(in_path);
    Certificate cert;
    try {
        cert = solve_long(g, k, l);
    } catch (const theorem_gap& e) {
        std::cerr << "theorem gap: " << e.what() << "\n"
                  << "instance: n=" << g.num_vertices() << " m=" << g.num_edges() << " k=" << k
                  << " l=" << l << "\n";
        return 3;
    }
    emit(out_path, certificate_to_json(cert));
    if (verify) {
        VerifyReport rep = verify_certificate(g, k, l, cert, budget);
        if (rep.status != VerifyStatus::ok)
            std::cerr << verdict_name(rep.status) << ": " << rep.detail << "\n";
        if (rep.status == VerifyStatus::violation) return 1;
    }
    return 0;
}

int cmd_solve_classic(const std::string& in_path, int k, const std::string& mode_name,
                      const std::string& out_path, bool verify) {
    ClassicMode mode = mode_name == "vertex" ? ClassicMode::vertex : ClassicMode::edge;
    Multigraph g = read_graph_file(in_path);
    ClassicCertificate cert;
    try {
        cert = solve_classic(g, k, mode);
    } catch (const theorem_gap& e) {
        std::cerr << "theorem gap: " << e.what() << "\n"
                  << "instance: n=" << g.num_vertices() << " m=" << g.num_edges() << " k=" << k
                  << " mode=" << mode_name << "\n";
        return 3;
    }
    emit(out_path, classic_certificate_to_json(cert));
    if (verify) {
        VerifyReport rep = verify_classic_certificate(g, k, mode, cert);
        if (rep.status != VerifyStatus::ok)
            std::cerr << verdict_name(rep.status) << ": " << rep.detail << "\n";
        if (rep.status == VerifyStatus::violation) return 1;
    }
    return 0;
}

int cmd_gen(const std::vector<std::string>& tokens, std::uint64_t seed,
            const std::string& out_path) {
    Multigraph g = build_model(tokens, seed);
    std::ostringstream text;
    write_graph(text, g);
    emit(out_path, text.str());
    return 0;
}

int cmd_oracle(const std::string& in_path, int l, const std::string& out_path,
               const OracleBudget& budget) {
    Multigraph g = read_graph_file(in_path);
    PackingAnswer nu = exact_max_packing(g, l, budget);
    HittingAnswer tau = exact_min_hitting(g, l, budget);
    LongCycleAnswer cyc = has_long_cycle_exact(g, l, budget);
    std::ostringstream text;
    text << "nu " << answer_or(nu.status, nu.value) << "\n";
    text << "tau " << answer_or(tau.status, tau.value) << "\n";
    text << "has-long-cycle "
         << (cyc.status == OracleStatus::ok ? (cyc.exists ? "yes" : "no") : "unverifiable")
         << "\n";
    emit(out_path, text.str());
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, int k, int l,
               const OracleBudget& budget) {
    Multigraph g = read_graph_file(graph_path);
    std::ifstream in(cert_path);
    require(in.good(), "cannot open certificate file: " + cert_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    // Classic certificates carry a mode field; long ones carry l.
    VerifyReport rep;
    if (text.find("\"mode\"") != std::string::npos) {
        ClassicCertificate cert = classic_certificate_from_json(g, text);
        rep = verify_classic_certificate(g, k > 0 ? k : cert.k, cert.mode, cert);
    } else {
        Certificate cert = certificate_from_json(g, text);
        rep = verify_certificate(g, k > 0 ? k : cert.k, l > 0 ? l : cert.l, cert, budget);
    }
    std::cout << verdict_name(rep.status) << (rep.detail.empty() ? "" : ": " + rep.detail) << "\n";
    return rep.status == VerifyStatus::violation ? 1 : 0;
}

struct Instance {
    std::vector<std::string> model;
    int k = 0;
    int l = 0;
    std::uint64_t seed = 0;
    std::string line;
};

std::vector<Instance> parse_corpus_spec(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open corpus spec: " + path);
    std::vector<Instance> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line.substr(0, line.find('#')));
        std::vector<std::string> toks{std::istream_iterator<std::string>(ss),
                                      std::istream_iterator<std::string>()};
        if (toks.empty()) continue;
        Instance ins;
        ins.line = line;
        bool have_k = false, have_l = false;
        for (const std::string& tok : toks) {
            std::size_t eq = tok.find('=');
            if (eq == std::string::npos) {
                require(!have_k && !have_l, "model tokens after k=/l= in corpus line: " + line);
                ins.model.push_back(tok);
                continue;
            }
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "k") {
                ins.k = to_int(val);
                have_k = true;
            } else if (key == "l") {
                ins.l = to_int(val);
                have_l = true;
            } else if (key == "seed") {
                ins.seed = to_seed(val);
            } else {
                throw precondition_error("unknown key '" + key + "' in corpus line: " + line);
            }
        }
        require(have_k && have_l, "corpus line needs k= and l=: " + line);
        require(!ins.model.empty(), "corpus line needs a model: " + line);
        out.push_back(std::move(ins));
    }
    return out;
}

struct CorpusRow {
    std::string csv;
    std::string complaint; // stderr note for violations and gaps
    int severity = 0;      // 0 fine, 1 violation, 3 theorem gap
};

CorpusRow run_corpus_instance(const Multigraph& g, const Instance& ins, const OracleBudget& budget,
                              bool times) {
    auto t0 = std::chrono::steady_clock::now();
    CorpusRow out;
    std::string kind = "-", size = "-", bound = "-", verdict;
    try {
        Certificate cert = solve_long(g, ins.k, ins.l);
        kind = cert.is_packing ? "packing" : "hitting";
        size = std::to_string(cert.is_packing ? cert.cycles.size() : cert.hitting.size());
        bound = std::to_string(cert.bound);
        VerifyReport rep = verify_certificate(g, ins.k, ins.l, cert, budget);
        verdict = verdict_name(rep.status);
        if (rep.status == VerifyStatus::violation) {
            out.severity = 1;
            out.complaint = "violation: " + rep.detail + " (line: " + ins.line + ")";
        }
    } catch (const theorem_gap& e) {
        kind = "theorem-gap";
        verdict = "gap";
        out.severity = 3;
        out.complaint = std::string("theorem gap: ") + e.what() + " (line: " + ins.line + ")";
    }
    PackingAnswer nu = exact_max_packing(g, ins.l, budget);
    HittingAnswer tau = exact_min_hitting(g, ins.l, budget);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

    std::ostringstream row;
    row << g.num_vertices() << ',' << g.num_edges() << ',' << ins.k << ',' << ins.l << ',' << kind
        << ',' << size << ',' << bound << ',' << answer_or(nu.status, nu.value) << ','
        << answer_or(tau.status, tau.value) << ',' << verdict << ','
        << (times ? std::to_string(ms.count()) : "-") << '\n';
    out.csv = row.str();
    return out;
}

// Instances are independent, so a worker pool grinds them in any order; the
// rows land in spec order and the bytes do not depend on the schedule.  Wall
// times are suppressed unless asked for, keeping reports reproducible.
int cmd_corpus(const std::string& spec_path, const std::string& out_path, bool times,
               const OracleBudget& budget) {
    std::vector<Instance> instances = parse_corpus_spec(spec_path);
    std::vector<Multigraph> graphs;
    for (const Instance& ins : instances) graphs.push_back(build_model(ins.model, ins.seed));

    std::vector<CorpusRow> rows(instances.size());
    std::atomic<std::size_t> cursor{0};
    auto grind = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= instances.size()) break;
            try {
                rows[i] = run_corpus_instance(graphs[i], instances[i], budget, times);
            } catch (const std::exception& e) {
                rows[i].csv = "-,-,-,-,error,-,-,-,-,error,-\n";
                rows[i].complaint = std::string("error: ") + e.what() +
                                    " (line: " + instances[i].line + ")";
                rows[i].severity = 1;
            }
        }
    };
    unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(instances.size()));
    if (workers <= 1) {
        grind();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(grind);
        for (std::thread& t : pool) t.join();
    }

    std::string report = "n,m,k,l,kind,size,bound,nu,tau,verdict,wall_ms\n";
    int severity = 0;
    for (const CorpusRow& row : rows) {
        report += row.csv;
        severity = std::max(severity, row.severity);
        if (!row.complaint.empty()) std::cerr << row.complaint << "\n";
    }
    emit(out_path, report);
    return severity;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"long-cycle packing/hitting certificates for multigraphs"};
    app.require_subcommand(1);

    std::string in_path, cert_path, out_path, mode = "vertex", spec_path;
    std::vector<std::string> gen_tokens;
    int k = 0, l = 0, budget_edges = 0;
    std::uint64_t seed = 0;
    bool verify = false, times = false;

    CLI::App* solve_long_cmd = app.add_subcommand("solve-long", "k edge-disjoint cycles of length >= l, or a small hitting set");
    solve_long_cmd->add_option("input", in_path, "graph file")->required();
    solve_long_cmd->add_option("--k", k, "number of cycles")->required();
    solve_long_cmd->add_option("--l", l, "minimum cycle length")->required();
    solve_long_cmd->add_option("--out", out_path, "certificate destination (default stdout)");
    solve_long_cmd->add_flag("--verify", verify, "check the certificate with the exact oracle");
    solve_long_cmd->add_option("--budget-edges", budget_edges, "verification size cap");

    CLI::App* solve_classic_cmd = app.add_subcommand("solve-classic", "k disjoint cycles, or a small feedback set");
    solve_classic_cmd->add_option("input", in_path, "graph file")->required();
    solve_classic_cmd->add_option("--k", k, "number of cycles")->required();
    solve_classic_cmd->add_option("--mode", mode, "vertex or edge disjointness")
        ->check(CLI::IsMember({"vertex", "edge"}));
    solve_classic_cmd->add_option("--out", out_path, "certificate destination (default stdout)");
    solve_classic_cmd->add_flag("--verify", verify, "check the certificate");

    CLI::App* gen_cmd = app.add_subcommand("gen", "write a generated graph file");
    gen_cmd->add_option("model", gen_tokens,
                        "cycle n | path n | complete n | grid r c | theta a b c | gnp n p | "
                        "disjoint-union part...")
        ->required();
    gen_cmd->add_option("--seed", seed, "seed for random models");
    gen_cmd->add_option("--out", out_path, "graph destination (default stdout)");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact nu, tau and long-cycle existence");
    oracle_cmd->add_option("input", in_path, "graph file")->required();
    oracle_cmd->add_option("--l", l, "minimum cycle length")->required();
    oracle_cmd->add_option("--out", out_path, "report destination (default stdout)");
    oracle_cmd->add_option("--budget-edges", budget_edges, "oracle size cap");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a certificate file against a graph");
    verify_cmd->add_option("input", in_path, "graph file")->required();
    verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
    verify_cmd->add_option("--k", k, "expected k (default: the certificate's)");
    verify_cmd->add_option("--l", l, "expected l (default: the certificate's)");
    verify_cmd->add_option("--budget-edges", budget_edges, "verification size cap");

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "run a spec of instances and report CSV");
    corpus_cmd->add_option("spec", spec_path, "spec file: one '<model> [seed=S] k=K l=L' per line")
        ->required();
    corpus_cmd->add_option("--out", out_path, "CSV destination (default stdout)");
    corpus_cmd->add_flag("--times", times, "fill the wall_ms column (off keeps runs byte-identical)");
    corpus_cmd->add_option("--budget-edges", budget_edges, "oracle size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    OracleBudget budget = oracle_budget_from_env();
    if (budget_edges > 0) budget.max_edges = budget_edges;

    try {
        if (app.got_subcommand(solve_long_cmd))
            return cmd_solve_long(in_path, k, l, out_path, verify, budget);
        if (app.got_subcommand(solve_classic_cmd))
            return cmd_solve_classic(in_path, k, mode, out_path, verify);
        if (app.got_subcommand(gen_cmd)) return cmd_gen(gen_tokens, seed, out_path);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(in_path, l, out_path, budget);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(in_path, cert_path, k, l, budget);
        if (app.got_subcommand(corpus_cmd)) return cmd_corpus(spec_path, out_path, times, budget);
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const theorem_gap& e) {
        std::cerr << "theorem gap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
