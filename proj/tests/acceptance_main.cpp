#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclepack/engine.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/ineq.hpp"
#include "cyclepack/lemma_suite.hpp"
#include "cyclepack/minimalize.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/verify.hpp"

using namespace cyclepack;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

// Traces collected from criteria 3 and 6 and re-checked in criterion 7.
struct RecordedRun {
    Graph host;
    int r = 0;
    std::string label;
    PackResult result;
};

std::vector<RecordedRun> recorded_runs;

Graph path_graph(int n) {
    Graph g;
    g.add_vertex(0);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

struct PipelineRun {
    bool success = false;
    PackingCertificate certificate;
};

// Production path: reduce, pack the minor, lift, verify.
PipelineRun run_pipeline(const Graph& g, int k, int r, const std::string& label, Outcome& o) {
    auto reduced = minimalize(g);
    PackConfig cfg;
    cfg.k = k;
    cfg.r = r;
    PackResult result = pack(reduced.minor, cfg);
    recorded_runs.push_back({reduced.minor, r, label, result});

    PipelineRun out;
    out.success = result.success;
    if (!result.success) return out;

    std::vector<Cycle> lifted =
        lift_packing(g, reduced.history, result.certificate->cycles);
    out.certificate = PackingCertificate{k, r, lifted};
    auto report = verify_certificate(g, out.certificate);
    if (!report.ok()) {
        o.pass = false;
        o.detail << " [" << label << ": lifted certificate rejected: " << report.problems[0]
                 << "]";
    }
    return out;
}

Outcome criterion1() {
    Outcome o;
    auto start = Clock::now();
    for (int k = 1; k <= 4; ++k) {
        auto result = check_linear_system(k);
        if (!result.feasible || result.witnesses.empty()) {
            o.pass = false;
            o.detail << " [linear k-1=" << k << " expected feasible with witness]";
        }
    }
    if (check_quadratic_system_k5().feasible) {
        o.pass = false;
        o.detail << " [quadratic k-1=5 expected infeasible]";
    }
    for (int k = 6; k <= 100; ++k) {
        if (check_linear_system(k).feasible) {
            o.pass = false;
            o.detail << " [linear k-1=" << k << " expected infeasible]";
        }
    }
    double t = seconds_since(start);
    if (t >= 5.0) {
        o.pass = false;
        o.detail << " [runtime " << t << " s exceeds 5 s]";
    }
    o.detail << " linear feasible 1..4, k-1=5 closed quadratically, infeasible 6..100 ("
             << t << " s)";
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto start = Clock::now();
    long long total_instances = 0;

    auto take = [&](const char* name, const SuiteReport& report) {
        total_instances += report.instances;
        if (!report.ok()) {
            o.pass = false;
            o.detail << " [" << name << ": " << report.failures.size() << " failures, first: "
                     << report.failures.front() << "]";
        }
        if (report.witnesses != report.instances) {
            o.pass = false;
            o.detail << " [" << name << ": " << (report.instances - report.witnesses)
                     << " instances without witness]";
        }
    };

    take("spare exhaustive <= 12", check_spare_guarantee_exhaustive(12));
    take("st exhaustive <= 12", check_st_guarantee_exhaustive(12));
    take("crossing exhaustive <= 12", check_crossing_guarantee_exhaustive(12));
    take("double (5,4) x 10^4", check_double_guarantee_random(5, 4, 10000, 1001));
    take("double (5,7) x 10^4", check_double_guarantee_random(5, 7, 10000, 1002));
    take("double (6,4) x 10^4", check_double_guarantee_random(6, 4, 10000, 1003));

    double t = seconds_since(start);
    if (t >= 300.0) {
        o.pass = false;
        o.detail << " [runtime " << t << " s exceeds 300 s]";
    }
    o.detail << " " << total_instances << " instances, every witness checked (" << t << " s)";
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto start = Clock::now();
    const int k = 6, r = 3;
    const Rat bound(24);

    std::vector<std::pair<std::string, Graph>> suite;
    std::uint64_t seed = 42;
    int n = 30;
    while (suite.size() < 34) {
        double p = std::max(0.55, 27.0 / (n - 1));
        if (p > 0.95) p = 0.95;
        Graph g = gen_gnp(n, p, seed++);
        if (stats(g).average_degree >= bound)
            suite.emplace_back("gnp n=" + std::to_string(n) + " seed=" + std::to_string(seed - 1),
                               g);
        n = (n == 60) ? 30 : n + 1;
    }
    for (int order = 25; order <= 40; ++order)
        suite.emplace_back("complete n=" + std::to_string(order), gen_complete(order));

    int successes = 0;
    for (const auto& [label, g] : suite) {
        auto run = run_pipeline(g, k, r, label, o);
        if (!run.success) {
            o.pass = false;
            o.detail << " [" << label << ": stuck]";
            continue;
        }
        ++successes;
    }

    double t = seconds_since(start);
    if (t >= 600.0) {
        o.pass = false;
        o.detail << " [runtime " << t << " s exceeds 600 s]";
    }
    o.detail << " " << successes << "/" << suite.size()
             << " instances packed, lifted, and verified at k=6 r=3 (" << t << " s)";
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto start = Clock::now();

    struct NegativeCase {
        std::string label;
        Graph g;
        int k;
        int r;
    };
    std::vector<NegativeCase> cases;
    cases.push_back({"bipartite 6,3 k=2 r=3", gen_complete_bipartite(6, 3), 2, 3});
    cases.push_back({"bipartite 8,5 k=3 r=3", gen_complete_bipartite(8, 5), 3, 3});
    for (int n : {4, 6, 8}) {
        cases.push_back({"split k=2 r=3 n=" + std::to_string(n), gen_split(2, 3, n), 2, 3});
        cases.push_back({"split k=2 r=4 n=" + std::to_string(n), gen_split(2, 4, n), 2, 4});
    }

    for (const auto& c : cases) {
        auto result = exact_pack(c.g, c.k, c.r);
        if (result.status == OracleStatus::BudgetExceeded) {
            o.pass = false;
            o.detail << " [" << c.label << ": budget exceeded]";
        } else if (result.status != OracleStatus::No) {
            o.pass = false;
            o.detail << " [" << c.label << ": expected No, packing found]";
        }
    }

    double t = seconds_since(start);
    if (t >= 120.0) {
        o.pass = false;
        o.detail << " [runtime " << t << " s exceeds 120 s]";
    }
    o.detail << " " << cases.size() << " complete refutations (" << t << " s)";
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> n_dist(5, 60);
    const double ps[] = {0.2, 0.5, 0.8};
    std::uint64_t seed = 10'000;
    int checked = 0;

    for (int i = 0; i < 200; ++i) {
        Graph g;
        do {
            g = gen_gnp(n_dist(rng), ps[i % 3], seed++);
        } while (g.num_edges() == 0);

        auto result = minimalize(g);
        auto s = stats(result.minor);
        if (result.final_average_degree < result.original_average_degree) {
            o.pass = false;
            o.detail << " [instance " << i << ": average degree dropped]";
        }
        if (s.m == 0) {
            o.pass = false;
            o.detail << " [instance " << i << ": minor lost all edges]";
            continue;
        }
        if (!(Rat(2 * static_cast<long long>(s.min_degree)) > s.average_degree)) {
            o.pass = false;
            o.detail << " [instance " << i << ": min degree bound fails]";
        }
        if (!(Rat(2 * (static_cast<long long>(*s.min_common_neighbors) + 1)) >
              s.average_degree)) {
            o.pass = false;
            o.detail << " [instance " << i << ": common neighbor bound fails]";
        }
        if (replay_history(g, result.history.steps) != result.minor) {
            o.pass = false;
            o.detail << " [instance " << i << ": replay mismatch]";
        }
        ++checked;
    }

    double t = seconds_since(start);
    o.detail << " " << checked << " random graphs reduced with exact bounds and replay ("
             << t << " s)";
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto start = Clock::now();

    std::vector<std::pair<std::string, Graph>> curated;
    for (int n = 3; n <= 8; ++n)
        curated.emplace_back("complete " + std::to_string(n), gen_complete(n));
    for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4},
                        {3, 5}, {4, 4}})
        curated.emplace_back("bipartite " + std::to_string(a) + "," + std::to_string(b),
                             gen_complete_bipartite(a, b));
    for (int n = 3; n <= 8; ++n)
        curated.emplace_back("cycle " + std::to_string(n), gen_disjoint_cycles(1, n));
    for (int n = 2; n <= 8; ++n)
        curated.emplace_back("path " + std::to_string(n), path_graph(n));
    curated.emplace_back("cliques 3x2", gen_disjoint_cliques(3, 2));
    curated.emplace_back("cliques 4x2", gen_disjoint_cliques(4, 2));
    curated.emplace_back("split k=2 r=3 n=4", gen_split(2, 3, 4));
    curated.emplace_back("split k=2 r=3 n=5", gen_split(2, 3, 5));
    curated.emplace_back("split k=2 r=4 n=4", gen_split(2, 4, 4));
    curated.emplace_back("split matched k=2 r=3 n=4", gen_split_matched(2, 3, 4));

    const std::vector<std::pair<int, int>> kr_pairs = {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 3}};

    long long comparisons = 0;
    long long oracle_yes_engine_stuck = 0;
    long long soundness_violations = 0;

    auto compare = [&](const std::string& label, const Graph& g, int k, int r) {
        ++comparisons;
        auto oracle = exact_pack(g, k, r);
        if (oracle.status == OracleStatus::BudgetExceeded) {
            o.pass = false;
            o.detail << " [" << label << " k=" << k << " r=" << r << ": oracle budget exceeded]";
            return;
        }
        auto run = run_pipeline(g, k, r,
                                label + " k=" + std::to_string(k) + " r=" + std::to_string(r), o);
        if (run.success && oracle.status == OracleStatus::No) {
            ++soundness_violations;
            o.pass = false;
            o.detail << " [" << label << " k=" << k << " r=" << r
                     << ": engine success but exhaustive search says no]";
        }
        if (!run.success && oracle.status == OracleStatus::Yes) {
            ++oracle_yes_engine_stuck;
            Rat d = stats(g).average_degree;
            bool hypothesis = k >= 6 && d >= Rat(4LL * k * r, 3);
            if (hypothesis) {
                o.pass = false;
                o.detail << " [" << label << " k=" << k << " r=" << r
                         << ": stuck on a hypothesis-satisfying input]";
            }
        }
    };

    for (const auto& [label, g] : curated)
        for (auto [k, r] : kr_pairs) compare(label, g, k, r);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> n_dist(4, 10);
    std::uniform_int_distribution<int> k_dist(1, 3);
    std::uniform_int_distribution<int> r_dist(3, 5);
    const double ps[] = {0.3, 0.5, 0.8};
    std::uint64_t seed = 90'000;
    for (int i = 0; i < 500; ++i) {
        Graph g = gen_gnp(n_dist(rng), ps[i % 3], seed++);
        if (g.num_edges() == 0) g.add_edge(0, 1);
        compare("random " + std::to_string(i), g, k_dist(rng), r_dist(rng));
    }

    double t = seconds_since(start);
    o.detail << " " << comparisons << " oracle comparisons, " << soundness_violations
             << " soundness violations, " << oracle_yes_engine_stuck
             << " oracle-yes/engine-stuck on off-hypothesis inputs (" << t << " s)";
    return o;
}

Outcome criterion7() {
    Outcome o;
    auto start = Clock::now();
    long long moves_checked = 0;

    for (const RecordedRun& run : recorded_runs) {
        if (run.result.stuck && run.result.stuck->reason == "iteration cap") {
            o.pass = false;
            o.detail << " [" << run.label << ": hit the iteration cap]";
            continue;
        }
        CycleCollection c = seed_collection(run.host, run.r);
        Potential prev = potential(c);
        for (std::size_t i = 0; i < run.result.trace.size(); ++i) {
            const TraceEntry& entry = run.result.trace[i];
            if (entry.move.success) {
                if (i + 1 != run.result.trace.size()) {
                    o.pass = false;
                    o.detail << " [" << run.label << ": success move not terminal]";
                }
                break;
            }
            apply_move(c, entry.move);
            Potential now = potential(c);
            if (!(prev < now)) {
                o.pass = false;
                o.detail << " [" << run.label << ": potential not strictly increasing at move "
                         << i << "]";
                break;
            }
            if (now != entry.potential_after) {
                o.pass = false;
                o.detail << " [" << run.label << ": recorded potential mismatch at move " << i
                         << "]";
                break;
            }
            prev = now;
            ++moves_checked;
        }
    }

    double t = seconds_since(start);
    o.detail << " " << recorded_runs.size() << " traces replayed, " << moves_checked
             << " moves strictly increasing, no iteration caps (" << t << " s)";
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto start = Clock::now();

    for (int k : {2, 3}) {
        Rat prev(-1);
        for (int n : {10, 20, 50, 100, 1000, 5000, 10000}) {
            Rat d = stats(gen_complete_bipartite(n, 2 * k - 1)).average_degree;
            if (!(d > prev)) {
                o.pass = false;
                o.detail << " [k=" << k << ": not monotone at n=" << n << "]";
            }
            prev = d;
        }
        Rat limit(4 * k - 2);
        Rat gap = limit - prev;
        if (!(gap > Rat(0)) || !(gap < Rat(1, 10))) {
            o.pass = false;
            o.detail << " [k=" << k << ": gap " << format_rat(gap) << " outside (0, 1/10)]";
        }
    }

    double t = seconds_since(start);
    o.detail << " bipartite family degrees monotone, within 1/10 of the limit at n=10^4 ("
             << t << " s)";
    return o;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {1, "feasibility table", criterion1},
        {2, "arc guarantee suites", criterion2},
        {3, "end-to-end packing", criterion3},
        {4, "extremal refutations", criterion4},
        {5, "reduction contract", criterion5},
        {6, "oracle cross-validation", criterion6},
        {7, "potential monotonicity", criterion7},
        {8, "bipartite sharpness", criterion8},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        Outcome o = entry.fn();
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << entry.number << " ("
                  << entry.name << "):" << o.detail.str() << "\n";
    }
    return failures;
}
