#include "sigspec/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sigspec {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::vector<EdgeInput> parse_edge_list(std::istream& in) {
    std::vector<EdgeInput> edges;
    std::vector<int> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream ss(line);
        std::string u, v, w;
        std::string extra;
        if (!(ss >> u >> v >> w)) {
            throw ParseError(lineno, "expected 'label_u label_v signed_weight'");
        }
        if (ss >> extra) {
            throw ParseError(lineno, "trailing token '" + extra + "'");
        }
        char* end = nullptr;
        double weight = std::strtod(w.c_str(), &end);
        if (end == w.c_str() || *end != '\0') {
            throw ParseError(lineno, "'" + w + "' is not a number");
        }
        edges.push_back({u, v, weight});
        lines.push_back(lineno);
    }
    // re-check structural invariants here so errors carry line numbers
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == edges[i].v) {
            throw ParseError(lines[i], "self-loop at vertex '" + edges[i].u + "'");
        }
        if (edges[i].signed_weight == 0.0) {
            throw ParseError(lines[i], "zero weight on edge (" + edges[i].u + "," + edges[i].v + ")");
        }
        for (std::size_t j = 0; j < i; ++j) {
            bool same = (edges[i].u == edges[j].u && edges[i].v == edges[j].v) ||
                        (edges[i].u == edges[j].v && edges[i].v == edges[j].u);
            if (same) {
                throw ParseError(lines[i], "duplicate edge (" + edges[i].u + "," + edges[i].v + ")");
            }
        }
    }
    return edges;
}

SignedGraph read_graph(std::istream& in) {
    return build_graph(parse_edge_list(in));
}

SignedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_graph(in);
}

std::vector<std::string> to_labels(const SignedGraph& g, std::span<const int> vertices) {
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (int u : vertices) out.push_back(g.label(u));
    return out;
}

nlohmann::json to_json(const SignedGraph& g, const SubBipartition& bp) {
    return {{"v1", to_labels(g, bp.v1())}, {"v2", to_labels(g, bp.v2())}};
}

namespace {

std::string mode_name(CertificateMode mode) {
    switch (mode) {
        case CertificateMode::ExactEnumeration: return "exact-enumeration";
        case CertificateMode::SweepUpperBound: return "sweep-upper-bound";
        case CertificateMode::SwitchingForm: return "switching-form";
    }
    return "unknown";
}

}  // namespace

nlohmann::json to_json(const SignedGraph& g, const CheegerCertificate& cert) {
    nlohmann::json witness = nlohmann::json::array();
    for (const SubBipartition& bp : cert.witness) witness.push_back(to_json(g, bp));
    return {{"value", cert.value}, {"witness", witness}, {"mode", mode_name(cert.mode)}};
}

nlohmann::json to_json(const SignedGraph& g, const SweepResult& sweep) {
    return {{"value", sweep.value},
            {"witness", nlohmann::json::array({to_json(g, sweep.cut)})},
            {"threshold", sweep.threshold},
            {"mode", "sweep-upper-bound"}};
}

nlohmann::json to_json(const SignedGraph& g, const FrustrationResult& fr) {
    nlohmann::json deleted = nlohmann::json::array();
    for (auto [u, v] : fr.deleted_edges) {
        deleted.push_back(nlohmann::json::array({g.label(u), g.label(v)}));
    }
    nlohmann::json switching;
    for (int u = 0; u < g.vertex_count(); ++u) switching[g.label(u)] = fr.best_switching.at(u);
    return {{"value", fr.value},
            {"deleted_edges", deleted},
            {"switching", switching},
            {"exact", fr.exact}};
}

nlohmann::json to_json(const SignedGraph& g, const ClusterResult& result) {
    nlohmann::json parts = nlohmann::json::array();
    for (const SubBipartition& bp : result.parts) parts.push_back(to_json(g, bp));
    nlohmann::json raw = nlohmann::json::array();
    for (const std::vector<int>& s : result.raw_subsets) raw.push_back(to_labels(g, s));
    const ClusterDiagnostics& d = result.diagnostics;
    nlohmann::json diagnostics = {
        {"embedding_rayleigh", d.embedding_rayleigh},
        {"localized_rayleigh", d.localized_rayleigh},
        {"coordinate_rayleigh", d.coordinate_rayleigh},
        {"coordinate_index", d.coordinate_index},
        {"sweep_thresholds", d.sweep_thresholds},
        {"masses", d.masses},
        {"separation", d.separation},
        {"epsilon", d.epsilon},
        {"epsilon_shrunk", d.epsilon_shrunk},
        {"lipschitz_max_excess", d.lipschitz_max_excess},
        {"excluded_vertices", to_labels(g, d.excluded_vertices)},
        {"partition_strategy",
         d.strategy == PartitionStrategy::RandomPadded ? "random-padded" : "projective-kmeans"},
        {"partition_attempts", d.partition_attempts},
    };
    return {{"parts", parts},
            {"betas", result.betas},
            {"raw_subsets", raw},
            {"diagnostics", diagnostics}};
}

nlohmann::json to_json(const BoundReport& report) {
    return {{"name", report.name},
            {"lhs", report.lhs},
            {"rhs", report.rhs},
            {"slack", report.slack},
            {"vacuous", report.vacuous},
            {"witness", report.witness},
            {"satisfied", report.satisfied()}};
}

nlohmann::json spectrum_json(const SignedGraph& g, const Spectrum& spec) {
    BalanceResult bal = is_balanced(g);
    BalanceResult anti = is_antibalanced(g);
    return {{"operator", spec.op == LaplaceOperator::Normalized ? "normalized" : "kirchhoff"},
            {"eigenvalues", spec.eigenvalues},
            {"balanced", bal.balanced},
            {"antibalanced", anti.balanced}};
}

}  // namespace sigspec
