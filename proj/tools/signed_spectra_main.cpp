// signed-spectra: spectral analysis of signed graphs from edge-list files.
// Subcommands: spectrum | cheeger | cluster | bounds | verify | frustration.
// JSON goes to stdout or --out; exit codes: 0 ok, 1 usage/parse error,
// 2 numerical failure, 3 verification violation.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigspec/bounds.hpp"
#include "sigspec/cheeger.hpp"
#include "sigspec/clustering.hpp"
#include "sigspec/io.hpp"
#include "sigspec/random.hpp"
#include "sigspec/spectral.hpp"

namespace {

using nlohmann::json;
using namespace sigspec;

int thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("SIGNED_SPECTRA_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            hw = std::min<long>(hw, parsed);
        }
    }
    return hw;
}

void emit(const json& payload, const std::string& out_path) {
    std::string text = payload.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << text;
    }
}

json base(const std::string& command) {
    return {{"schema_version", kSchemaVersion}, {"command", command}};
}

int run_spectrum(const std::string& file, const std::string& op, const std::string& out) {
    SignedGraph g = load_graph_file(file);
    LaplaceOperator lap = op == "kirchhoff" ? LaplaceOperator::Kirchhoff
                                            : LaplaceOperator::Normalized;
    json payload = base("spectrum");
    payload.update(spectrum_json(g, spectrum(g, lap)));
    emit(payload, out);
    return 0;
}

int run_cheeger(const std::string& file, int k, const std::string& measure,
                const std::string& method, int budget, const std::string& out) {
    SignedGraph g = load_graph_file(file);
    VertexMeasure mu = measure == "unit" ? VertexMeasure::unit(g) : VertexMeasure::degree(g);
    json payload = base("cheeger");
    payload["k"] = k;
    payload["measure"] = measure;
    if (method == "exact") {
        HExactOptions opts;
        opts.max_vertices = budget;
        payload.update(to_json(g, h_exact(g, k, mu, opts)));
    } else {
        LaplaceOperator lap = measure == "unit" ? LaplaceOperator::Kirchhoff
                                                : LaplaceOperator::Normalized;
        Spectrum spec = spectrum(g, lap);
        if (k < 1 || k > g.vertex_count()) {
            throw IndexOutOfRangeError("k outside 1..N");
        }
        payload.update(to_json(g, sweep_quadratic(g, spec.eigenfunctions[k - 1], mu)));
    }
    emit(payload, out);
    return 0;
}

int run_cluster(const std::string& file, int k, const std::string& mode,
                const std::string& strategy, double epsilon, std::uint64_t seed,
                const std::string& out) {
    SignedGraph g = load_graph_file(file);
    ClusterOptions opts;
    opts.mode = mode == "antibalanced" ? EmbeddingMode::Antibalanced : EmbeddingMode::Balanced;
    opts.strategy = strategy == "projective-kmeans" ? PartitionStrategy::ProjectiveKMeans
                                                    : PartitionStrategy::RandomPadded;
    if (epsilon > 0.0) opts.epsilon = epsilon;
    opts.seed = seed;
    json payload = base("cluster");
    payload["k"] = k;
    payload["mode"] = mode;
    payload["strategy"] = strategy;
    payload["seed"] = seed;
    payload.update(to_json(g, cluster(g, k, opts)));
    emit(payload, out);
    return 0;
}

int run_bounds(const std::string& file, const std::string& out) {
    SignedGraph g = load_graph_file(file);
    auto [lower, upper] = triangle_bounds_normalized(g);
    json reports = json::array({to_json(lower), to_json(upper), to_json(das_bound_kirchhoff(g))});
    json payload = base("bounds");
    payload["reports"] = reports;
    emit(payload, out);
    return 0;
}

json verify_one(const SignedGraph& g, int budget) {
    VerifyOptions opts;
    opts.h_budget = budget;
    std::vector<BoundReport> reports = verify_all(g, opts);
    json out = json::array();
    int violations = 0;
    for (const BoundReport& r : reports) {
        if (!r.satisfied()) ++violations;
        out.push_back(to_json(r));
    }
    return {{"reports", out}, {"violations", violations}};
}

int run_verify(const std::string& file, int random_count, int max_n, std::uint64_t seed,
               int budget, const std::string& out) {
    json payload = base("verify");
    int violations = 0;
    if (!file.empty()) {
        SignedGraph g = load_graph_file(file);
        json result = verify_one(g, budget);
        violations = result["violations"].get<int>();
        payload.update(result);
    } else {
        std::vector<json> results(random_count);
        std::atomic<int> next{0};
        int workers = std::min(thread_cap(), std::max(1, random_count));
        auto work = [&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= random_count) return;
                Rng rng = Rng(seed).split(i);
                int n = rng.uniform_int(2, max_n);
                SignedGraph g = random_signed_graph(rng, n, 0.5, 0.5, 0.5, 2.0);
                results[i] = verify_one(g, budget);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();

        int checked = 0;
        json worst;
        double worst_slack = std::numeric_limits<double>::infinity();
        for (int i = 0; i < random_count; ++i) {
            violations += results[i]["violations"].get<int>();
            for (const json& r : results[i]["reports"]) {
                ++checked;
                if (!r["vacuous"].get<bool>() && r["slack"].get<double>() < worst_slack) {
                    worst_slack = r["slack"].get<double>();
                    worst = r;
                    worst["graph"] = i;
                }
            }
        }
        payload["graphs"] = random_count;
        payload["reports_checked"] = checked;
        payload["violations"] = violations;
        payload["worst"] = worst;
    }
    emit(payload, out);
    return violations > 0 ? 3 : 0;
}

int run_frustration(const std::string& file, const std::string& method, std::uint64_t seed,
                    int restarts, int cap, const std::string& out) {
    SignedGraph g = load_graph_file(file);
    std::vector<int> all(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) all[u] = u;
    FrustrationOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.exact_cap = cap;
    FrustrationMethod fm = method == "local-search" ? FrustrationMethod::LocalSearch
                                                    : FrustrationMethod::Exact;
    json payload = base("frustration");
    payload["method"] = method;
    payload.update(to_json(g, frustration(g, all, fm, opts)));
    emit(payload, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of signed graphs"};
    app.require_subcommand(1);

    std::string file, out, op = "normalized", measure = "degree", method = "exact";
    std::string mode = "balanced", strategy = "random-padded";
    int k = 1, budget = 14, random_count = 0, max_n = 8, restarts = 20, cap = 24;
    double epsilon = 0.0;
    std::uint64_t seed = 0;

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and balance flags");
    spectrum_cmd->add_option("file", file)->required();
    spectrum_cmd->add_option("--operator", op)->check(CLI::IsMember({"normalized", "kirchhoff"}));
    spectrum_cmd->add_option("--out", out);

    CLI::App* cheeger_cmd = app.add_subcommand("cheeger", "signed Cheeger constant h_k");
    cheeger_cmd->add_option("file", file)->required();
    cheeger_cmd->add_option("--k", k);
    cheeger_cmd->add_option("--measure", measure)->check(CLI::IsMember({"degree", "unit"}));
    cheeger_cmd->add_option("--method", method)->check(CLI::IsMember({"exact", "sweep"}));
    cheeger_cmd->add_option("--budget", budget);
    cheeger_cmd->add_option("--out", out);

    CLI::App* cluster_cmd = app.add_subcommand("cluster", "k almost-balanced sub-bipartitions");
    cluster_cmd->add_option("file", file)->required();
    cluster_cmd->add_option("--k", k)->required();
    cluster_cmd->add_option("--mode", mode)->check(CLI::IsMember({"balanced", "antibalanced"}));
    cluster_cmd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"random-padded", "projective-kmeans"}));
    cluster_cmd->add_option("--epsilon", epsilon);
    cluster_cmd->add_option("--seed", seed);
    cluster_cmd->add_option("--out", out);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "triangle and Kirchhoff eigenvalue bounds");
    bounds_cmd->add_option("file", file)->required();
    bounds_cmd->add_option("--out", out);

    CLI::App* verify_cmd = app.add_subcommand("verify", "inequality harness; nonzero exit on violation");
    verify_cmd->add_option("file", file);
    verify_cmd->add_option("--random", random_count, "verify a corpus of seeded random graphs");
    verify_cmd->add_option("--max-n", max_n);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--budget", budget);
    verify_cmd->add_option("--out", out);

    CLI::App* frustration_cmd = app.add_subcommand("frustration", "frustration index of the whole graph");
    frustration_cmd->add_option("file", file)->required();
    frustration_cmd->add_option("--method", method)->check(CLI::IsMember({"exact", "local-search"}));
    frustration_cmd->add_option("--seed", seed);
    frustration_cmd->add_option("--restarts", restarts);
    frustration_cmd->add_option("--cap", cap);
    frustration_cmd->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum_cmd->parsed()) return run_spectrum(file, op, out);
        if (cheeger_cmd->parsed()) return run_cheeger(file, k, measure, method, budget, out);
        if (cluster_cmd->parsed()) return run_cluster(file, k, mode, strategy, epsilon, seed, out);
        if (bounds_cmd->parsed()) return run_bounds(file, out);
        if (verify_cmd->parsed()) {
            if (file.empty() && random_count <= 0) {
                std::cerr << "verify needs a file or --random COUNT\n";
                return 1;
            }
            return run_verify(file, random_count, max_n, seed, budget, out);
        }
        if (frustration_cmd->parsed()) {
            return run_frustration(file, method, seed, restarts, cap, out);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const TooLargeForExactError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const PartitionFailureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const DisjointnessViolationError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
