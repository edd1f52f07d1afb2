#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigspec/cheeger.hpp"
#include "sigspec/graph.hpp"

namespace sigspec {

enum class EmbeddingMode { Balanced, Antibalanced };

/// Spectral embedding Phi: V -> R^k by the first k eigenfunctions of the
/// normalized Laplacian (balanced mode) or the last k (antibalanced mode).
struct Embedding {
    int k = 0;
    EmbeddingMode mode = EmbeddingMode::Balanced;
    std::vector<std::vector<double>> points;  // [u] in R^k
    std::vector<double> eigenvalues;          // the k eigenvalues used, ascending
};

Embedding embed(const SignedGraph& g, int k, EmbeddingMode mode);

/// Projective-space distance min(||x+y||, ||x-y||) between unit vectors.
/// Throws NotUnitError when a norm deviates from 1 by more than 1e-9.
double projective_distance(std::span<const double> x, std::span<const double> y);

/// Phi^nor on the support set V~ = {v : Phi(v) != 0}; zero vertices (norm
/// <= 1e-12) are excluded and reported.
struct NormalizedEmbedding {
    std::vector<int> support;                      // ascending vertex ids
    std::vector<std::vector<double>> unit_points;  // aligned with support
    std::vector<double> norms;                     // ||Phi(u)|| per support vertex
    std::vector<int> excluded;
};

NormalizedEmbedding normalize(const Embedding& emb);

enum class PartitionStrategy { RandomPadded, ProjectiveKMeans };

struct PartitionOptions {
    double mass_floor_factor = 0.25;  // floor = factor / k of the total mu ||Phi||^2 mass
    double separation_floor = 0.0;
    int retry_cap = 200;
    double initial_radius = 0.5;
    int kmeans_iter_cap = 100;
};

struct ProjectivePartition {
    std::vector<std::vector<int>> subsets;  // k disjoint nonempty subsets of the support
    std::vector<double> masses;             // mu ||Phi||^2 mass per subset
    double separation = 0.0;                // min pairwise point distance between subsets
    int attempts = 0;
    PartitionStrategy strategy = PartitionStrategy::RandomPadded;
};

/// k nonempty mutually disjoint clusters of the projective points. The
/// random-padded strategy retries seeded random-radius ball growing until the
/// mass floor and separation floor hold; projective k-means runs Lloyd
/// iterations under the projective metric. Throws PartitionFailureError.
ProjectivePartition partition_projective(const Embedding& emb, const NormalizedEmbedding& nemb,
                                         const VertexMeasure& mu, int k,
                                         PartitionStrategy strategy, std::uint64_t seed,
                                         const PartitionOptions& opts = {});

/// Cutoff localization Psi_i = theta_i Phi with
/// theta_i(v) = max{0, 1 - d_Phi(v, S_i)/eps} on the support, 0 elsewhere.
std::vector<std::vector<double>> localize(const Embedding& emb, const NormalizedEmbedding& nemb,
                                          std::span<const int> s_i, double eps);

struct CoordinateSelection {
    std::vector<double> psi;
    int index = 0;
    double rayleigh_value = 0.0;
};

/// Coordinate of the map with the smallest Rayleigh quotient among those with
/// nonzero denominator; never exceeds the quotient of the full map.
CoordinateSelection select_coordinate(const SignedGraph& g,
                                      const std::vector<std::vector<double>>& psi,
                                      const VertexMeasure& mu);

struct ClusterOptions {
    EmbeddingMode mode = EmbeddingMode::Balanced;
    PartitionStrategy strategy = PartitionStrategy::RandomPadded;
    std::optional<double> epsilon;  // default 1/(2 k^{5/2}) clipped to (0.05, 1.9)
    std::uint64_t seed = 0;
    PartitionOptions partition;
};

struct ClusterDiagnostics {
    double embedding_rayleigh = 0.0;
    std::vector<double> localized_rayleigh;
    std::vector<double> coordinate_rayleigh;
    std::vector<int> coordinate_index;
    std::vector<double> sweep_thresholds;
    std::vector<double> masses;
    double separation = 0.0;
    double epsilon = 0.0;
    bool epsilon_shrunk = false;
    double lipschitz_max_excess = 0.0;  // worst per-edge violation of the cutoff bound
    std::vector<int> excluded_vertices;
    PartitionStrategy strategy = PartitionStrategy::RandomPadded;
    int partition_attempts = 0;
};

struct ClusterResult {
    std::vector<SubBipartition> parts;
    std::vector<double> betas;
    std::vector<std::vector<int>> raw_subsets;
    ClusterDiagnostics diagnostics;
};

/// Full pipeline: embed, normalize, partition the projective points, localize
/// each cluster, select a coordinate, and sweep it on its own support. The
/// returned sub-bipartitions are mutually disjoint. Antibalanced mode runs the
/// balanced pipeline on the negated graph.
ClusterResult cluster(const SignedGraph& g, int k, const ClusterOptions& opts = {});

}  // namespace sigspec
