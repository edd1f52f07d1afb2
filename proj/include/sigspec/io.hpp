#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigspec/bounds.hpp"
#include "sigspec/cheeger.hpp"
#include "sigspec/clustering.hpp"
#include "sigspec/graph.hpp"
#include "sigspec/spectral.hpp"

namespace sigspec {

inline constexpr int kSchemaVersion = 1;

/// Edge-list format: "label_u <ws> label_v <ws> signed_weight" per line,
/// '#' starts a comment, blank lines are skipped. Throws ParseError with the
/// offending 1-based line number; structural violations (self-loop, duplicate
/// pair, zero weight) are reported the same way.
std::vector<EdgeInput> parse_edge_list(std::istream& in);
SignedGraph read_graph(std::istream& in);
SignedGraph load_graph_file(const std::string& path);

std::vector<std::string> to_labels(const SignedGraph& g, std::span<const int> vertices);

nlohmann::json to_json(const SignedGraph& g, const SubBipartition& bp);
nlohmann::json to_json(const SignedGraph& g, const CheegerCertificate& cert);
nlohmann::json to_json(const SignedGraph& g, const SweepResult& sweep);
nlohmann::json to_json(const SignedGraph& g, const FrustrationResult& fr);
nlohmann::json to_json(const SignedGraph& g, const ClusterResult& result);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json spectrum_json(const SignedGraph& g, const Spectrum& spec);

}  // namespace sigspec
