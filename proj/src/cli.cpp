#include "cyclepack/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclepack/engine.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/ineq.hpp"
#include "cyclepack/lemma_suite.hpp"
#include "cyclepack/minimalize.hpp"
#include "cyclepack/verify.hpp"

namespace cyclepack {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitStuck = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;
constexpr int kExitInternal = 70;

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return read_edge_list(in);
        std::ifstream file(path);
        if (!file) throw FileError(path + ": cannot open");
        return read_edge_list(file);
    } catch (const std::invalid_argument& e) {
        throw FileError(path + ": " + e.what());
    }
}

std::string load_text(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw FileError(path + ": cannot open");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

int run_pack(const std::string& path, std::istream& in, std::ostream& out, int k, int r,
             bool no_minimalize, bool json_format, bool with_trace) {
    Graph g = load_graph(path, in);

    MinimalizeResult reduction;
    bool reduced = !no_minimalize && !g.empty();
    if (reduced) reduction = minimalize(g);
    const Graph& target = reduced ? reduction.minor : g;

    PackConfig cfg;
    cfg.k = k;
    cfg.r = r;
    PackResult result = pack(target, cfg);

    nlohmann::json envelope;
    envelope["outcome"] = result.success ? "success" : "stuck";
    envelope["k"] = k;
    envelope["r"] = r;
    envelope["certificate"] = nullptr;
    envelope["diagnostics"] = nullptr;
    if (with_trace) envelope["trace"] = nlohmann::json::parse(trace_to_json(result.trace));

    if (result.success) {
        std::vector<Cycle> cycles = result.certificate->cycles;
        if (reduced) cycles = lift_packing(g, reduction.history, cycles);
        PackingCertificate cert{k, r, cycles};
        auto report = verify_certificate(g, cert);
        if (!report.ok())
            throw std::logic_error("packing failed verification: " + report.problems[0]);
        envelope["certificate"] = nlohmann::json::parse(certificate_to_json(cert));
        if (json_format) {
            out << envelope.dump() << "\n";
        } else {
            out << certificate_to_json(cert) << "\n";
            if (with_trace)
                for (const TraceEntry& entry : result.trace)
                    out << "# " << move_kind_name(entry.move.kind) << " -> "
                        << format_potential(entry.potential_after) << "\n";
        }
        return kExitOk;
    }

    nlohmann::json diag;
    diag["reason"] = result.stuck->reason;
    diag["guard_findings"] = result.stuck->guard_findings;
    diag["potential"] = potential(*result.final_collection).counts;
    envelope["diagnostics"] = diag;
    if (json_format) {
        out << envelope.dump() << "\n";
    } else {
        out << "stuck: " << result.stuck->reason << "\n";
        out << "potential: " << format_potential(potential(*result.final_collection)) << "\n";
        for (const std::string& finding : result.stuck->guard_findings)
            out << "guard finding: " << finding << "\n";
        if (with_trace)
            for (const TraceEntry& entry : result.trace)
                out << "# " << move_kind_name(entry.move.kind) << " -> "
                    << format_potential(entry.potential_after) << "\n";
    }
    return kExitStuck;
}

int run_verify(const std::string& path, const std::string& cert_path, std::istream& in,
               std::ostream& out, int k, int r, bool json_format) {
    Graph g = load_graph(path, in);
    PackingCertificate cert;
    try {
        cert = certificate_from_json(load_text(cert_path, in));
    } catch (const FileError&) {
        throw;
    } catch (const std::exception& e) {
        if (json_format) {
            nlohmann::json j;
            j["valid"] = false;
            j["problems"] = {std::string("unparseable certificate: ") + e.what()};
            out << j.dump() << "\n";
        } else {
            out << "invalid: unparseable certificate: " << e.what() << "\n";
        }
        return kExitInvalid;
    }
    if (k > 0) cert.k = k;
    if (r > 0) cert.r = r;
    auto report = verify_certificate(g, cert);
    if (json_format) {
        nlohmann::json j;
        j["valid"] = report.ok();
        j["problems"] = report.problems;
        out << j.dump() << "\n";
    } else if (report.ok()) {
        out << "valid\n";
    } else {
        for (const std::string& problem : report.problems) out << "invalid: " << problem << "\n";
    }
    return report.ok() ? kExitOk : kExitInvalid;
}

int run_minimalize(const std::string& path, std::istream& in, std::ostream& out,
                   bool json_format) {
    Graph g = load_graph(path, in);
    if (g.empty()) throw std::invalid_argument("minimalize: empty graph");
    MinimalizeResult result = minimalize(g);
    if (json_format) {
        nlohmann::json j;
        j["original_average_degree"] = format_rat(result.original_average_degree);
        j["final_average_degree"] = format_rat(result.final_average_degree);
        j["minor_vertices"] = result.minor.vertices();
        j["minor_edges"] = nlohmann::json::array();
        for (const auto& [u, v] : result.minor.edges())
            j["minor_edges"].push_back(nlohmann::json::array({u, v}));
        j["history"] = format_history(result.history);
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "# average degree " << format_rat(result.original_average_degree) << " -> "
        << format_rat(result.final_average_degree) << "\n";
    out << format_edge_list(result.minor);
    out << "# history\n";
    std::istringstream history(format_history(result.history));
    for (std::string line; std::getline(history, line);) out << "# " << line << "\n";
    return kExitOk;
}

int run_ineq_check(const std::string& range, std::ostream& out, bool json_format) {
    auto sep = range.find("..");
    int lo = 0;
    int hi = 0;
    try {
        if (sep == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, sep));
            hi = std::stoi(range.substr(sep + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("ineq-check: range must look like A..B");
    }
    if (lo < 1 || hi < lo || hi > 500)
        throw std::invalid_argument("ineq-check: range must satisfy 1 <= A <= B <= 500");

    struct Row {
        int k_minus_1;
        const char* system;
        bool feasible;
        std::string witness;
        nlohmann::json witness_json;
    };
    auto theta_string = [](const TypeCounts& t) {
        std::string s = "theta=(" + std::to_string(t.theta1) + "," + std::to_string(t.theta2) +
                        "," + std::to_string(t.theta3) + "," + std::to_string(t.theta4) + ")";
        if (t.b) s += " b=" + std::to_string(*t.b);
        if (t.a) s += " a=" + std::to_string(*t.a);
        return s;
    };
    auto theta_json = [](const TypeCounts& t) {
        nlohmann::json j;
        j["theta"] = {t.theta1, t.theta2, t.theta3, t.theta4};
        if (t.b) j["b"] = *t.b;
        if (t.a) j["a"] = *t.a;
        return j;
    };

    std::vector<Row> rows;
    bool pattern_ok = true;
    for (int K = lo; K <= hi; ++K) {
        Feasibility linear = check_linear_system(K);
        Row row{K, "linear", linear.feasible, "", nullptr};
        if (!linear.witnesses.empty()) {
            row.witness = theta_string(linear.witnesses.front());
            row.witness_json = theta_json(linear.witnesses.front());
        }
        rows.push_back(std::move(row));
        if (K <= 4 && !linear.feasible) pattern_ok = false;
        if (K >= 6 && linear.feasible) pattern_ok = false;
        if (K == 5) {
            Feasibility quad = check_quadratic_system_k5();
            Row qrow{K, "quadratic", quad.feasible, "", nullptr};
            if (!quad.witnesses.empty()) {
                qrow.witness = theta_string(quad.witnesses.front());
                qrow.witness_json = theta_json(quad.witnesses.front());
            }
            rows.push_back(std::move(qrow));
            if (quad.feasible) pattern_ok = false;
        }
    }

    if (json_format) {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (const Row& row : rows) {
            nlohmann::json rj;
            rj["k_minus_1"] = row.k_minus_1;
            rj["system"] = row.system;
            rj["feasible"] = row.feasible;
            rj["witness"] = row.witness_json;
            j["rows"].push_back(std::move(rj));
        }
        j["pattern_ok"] = pattern_ok;
        out << j.dump() << "\n";
    } else {
        out << std::left << std::setw(6) << "k-1" << std::setw(11) << "system" << std::setw(11)
            << "feasible" << "witness\n";
        for (const Row& row : rows)
            out << std::left << std::setw(6) << row.k_minus_1 << std::setw(11) << row.system
                << std::setw(11) << (row.feasible ? "yes" : "no") << row.witness << "\n";
        out << (pattern_ok ? "pattern: ok\n" : "pattern: MISMATCH\n");
    }
    return pattern_ok ? kExitOk : kExitInvalid;
}

int run_lemma_check(int lemma, std::size_t up_to, std::size_t cycles, std::size_t order,
                    int samples, std::uint64_t seed, std::ostream& out, bool json_format) {
    SuiteReport report;
    switch (lemma) {
        case 1: report = check_spare_guarantee_exhaustive(up_to); break;
        case 2: report = check_st_guarantee_exhaustive(up_to); break;
        case 3: report = check_double_guarantee_random(cycles, order, samples, seed); break;
        case 4: report = check_crossing_guarantee_exhaustive(up_to); break;
        default: throw std::invalid_argument("lemma-check: lemma must lie in 1..4");
    }
    if (json_format) {
        nlohmann::json j;
        j["lemma"] = lemma;
        j["instances"] = report.instances;
        j["witnesses"] = report.witnesses;
        j["failures"] = report.failures;
        out << j.dump() << "\n";
    } else {
        out << "instances: " << report.instances << "\n";
        out << "witnesses: " << report.witnesses << "\n";
        for (std::size_t i = 0; i < report.failures.size() && i < 20; ++i)
            out << "failure: " << report.failures[i] << "\n";
        if (report.failures.size() > 20)
            out << "... " << (report.failures.size() - 20) << " more failures\n";
        out << (report.ok() ? "result: ok\n" : "result: FAILED\n");
    }
    return report.ok() ? kExitOk : kExitInvalid;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"disjoint cycle packing toolkit"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    auto* pack_cmd = app.add_subcommand("pack", "pack k disjoint cycles of order >= r");
    std::string pack_file;
    int pack_k = 0;
    int pack_r = 0;
    bool pack_no_min = false;
    bool pack_trace = false;
    std::string pack_format = "text";
    pack_cmd->add_option("file", pack_file, "edge list file, - for stdin")->required();
    pack_cmd->add_option("--k", pack_k, "number of cycles")->required()->check(CLI::Range(1, 1000));
    pack_cmd->add_option("--r", pack_r, "minimum cycle order")
        ->required()
        ->check(CLI::Range(3, 1000));
    pack_cmd->add_flag("--no-minimalize", pack_no_min, "pack the input graph directly");
    pack_cmd->add_flag("--trace", pack_trace, "include the move trace");
    pack_cmd->add_option("--format", pack_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    pack_cmd->callback([&] {
        exit_code = run_pack(pack_file, in, out, pack_k, pack_r, pack_no_min,
                             pack_format == "json", pack_trace);
    });

    auto* verify_cmd = app.add_subcommand("verify", "check a packing certificate");
    std::string verify_file;
    std::string verify_cert;
    int verify_k = 0;
    int verify_r = 0;
    std::string verify_format = "text";
    verify_cmd->add_option("file", verify_file, "edge list file, - for stdin")->required();
    verify_cmd->add_option("--cert", verify_cert, "certificate JSON file")->required();
    verify_cmd->add_option("--k", verify_k, "override the certificate's k")
        ->check(CLI::Range(1, 1000));
    verify_cmd->add_option("--r", verify_r, "override the certificate's r")
        ->check(CLI::Range(3, 1000));
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->callback([&] {
        exit_code = run_verify(verify_file, verify_cert, in, out, verify_k, verify_r,
                               verify_format == "json");
    });

    auto* min_cmd =
        app.add_subcommand("minimalize", "reduce to an average-degree-preserving minor");
    std::string min_file;
    std::string min_format = "text";
    min_cmd->add_option("file", min_file, "edge list file, - for stdin")->required();
    min_cmd->add_option("--format", min_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    min_cmd->callback([&] { exit_code = run_minimalize(min_file, in, out, min_format == "json"); });

    auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen_cmd->require_subcommand(1);
    int gen_n = 0;
    int gen_a = 0;
    int gen_b = 0;
    int gen_k = 0;
    int gen_r = 0;
    int gen_indep = 0;
    bool gen_matched = false;
    int gen_size = 0;
    int gen_copies = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;

    auto* complete = gen_cmd->add_subcommand("complete", "complete graph");
    complete->add_option("n", gen_n, "vertices")->required()->check(CLI::Range(1, 100000));
    complete->callback([&] { write_edge_list(out, gen_complete(gen_n)); });

    auto* bipartite = gen_cmd->add_subcommand("bipartite", "complete bipartite graph");
    bipartite->add_option("a", gen_a, "left side")->required()->check(CLI::Range(1, 100000));
    bipartite->add_option("b", gen_b, "right side")->required()->check(CLI::Range(1, 100000));
    bipartite->callback([&] { write_edge_list(out, gen_complete_bipartite(gen_a, gen_b)); });

    auto* split = gen_cmd->add_subcommand("split", "clique joined completely to an independent set");
    split->add_option("k", gen_k, "cycle count parameter")->required()->check(CLI::Range(1, 1000));
    split->add_option("r", gen_r, "cycle order parameter")->required()->check(CLI::Range(3, 1000));
    split->add_option("n", gen_indep, "independent set size")
        ->required()
        ->check(CLI::Range(1, 100000));
    split->add_flag("--matched", gen_matched, "add a perfect matching on the independent set");
    split->callback([&] {
        write_edge_list(out, gen_matched ? gen_split_matched(gen_k, gen_r, gen_indep)
                                         : gen_split(gen_k, gen_r, gen_indep));
    });

    auto* cliques = gen_cmd->add_subcommand("cliques", "disjoint complete graphs");
    cliques->add_option("size", gen_size, "vertices per clique")
        ->required()
        ->check(CLI::Range(1, 1000));
    cliques->add_option("copies", gen_copies, "number of cliques")
        ->required()
        ->check(CLI::Range(1, 1000));
    cliques->callback([&] { write_edge_list(out, gen_disjoint_cliques(gen_size, gen_copies)); });

    auto* cycles_sub = gen_cmd->add_subcommand("cycles", "disjoint cycles");
    cycles_sub->add_option("k", gen_k, "number of cycles")->required()->check(CLI::Range(1, 1000));
    cycles_sub->add_option("r", gen_r, "order of each cycle")
        ->required()
        ->check(CLI::Range(3, 1000));
    cycles_sub->callback([&] { write_edge_list(out, gen_disjoint_cycles(gen_k, gen_r)); });

    auto* gnp = gen_cmd->add_subcommand("gnp", "binomial random graph");
    gnp->add_option("n", gen_n, "vertices")->required()->check(CLI::Range(1, 100000));
    gnp->add_option("p", gen_p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gnp->add_option("--seed", gen_seed, "generator seed")->required();
    gnp->callback([&] { write_edge_list(out, gen_gnp(gen_n, gen_p, gen_seed)); });

    auto* lemma_cmd = app.add_subcommand("lemma-check", "run an arc-search guarantee suite");
    int lemma = 0;
    std::size_t up_to = 9;
    std::size_t lc_cycles = 5;
    std::size_t lc_order = 4;
    int lc_samples = 1000;
    std::uint64_t lc_seed = 1;
    std::string lemma_format = "text";
    lemma_cmd
        ->add_option("--lemma", lemma,
                     "suite: 1 = arc with spare vertex on a family, 2 = two disjoint arcs on one "
                     "cycle, 3 = reroute-or-double on equal orders, 4 = short crossing arc")
        ->required()
        ->check(CLI::Range(1, 4));
    lemma_cmd->add_option("--exhaustive-up-to", up_to, "largest vertex count (suites 1, 2, 4)")
        ->check(CLI::Range(3, 20));
    lemma_cmd->add_option("--cycles", lc_cycles, "family size (suite 3)")->check(CLI::Range(5, 20));
    lemma_cmd->add_option("--order", lc_order, "cycle order (suite 3)")->check(CLI::Range(4, 50));
    lemma_cmd->add_option("--samples", lc_samples, "random trials (suite 3)")
        ->check(CLI::Range(1, 10000000));
    lemma_cmd->add_option("--seed", lc_seed, "random seed (suite 3)");
    lemma_cmd->add_option("--format", lemma_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    lemma_cmd->callback([&] {
        exit_code = run_lemma_check(lemma, up_to, lc_cycles, lc_order, lc_samples, lc_seed, out,
                                    lemma_format == "json");
    });

    auto* ineq_cmd = app.add_subcommand("ineq-check", "cycle-type feasibility table");
    std::string range;
    std::string ineq_format = "text";
    ineq_cmd->add_option("--kminus1-range", range, "range A..B of k-1 values")->required();
    ineq_cmd->add_option("--format", ineq_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    ineq_cmd->callback([&] { exit_code = run_ineq_check(range, out, ineq_format == "json"); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFile;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return exit_code;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("cyclepack");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace cyclepack
