#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigspec/errors.hpp"

namespace sigspec {

/// One input edge as it appears in a file or builder call. The sign of the
/// edge is the sign of `signed_weight`, the stored weight its magnitude.
struct EdgeInput {
    std::string u;
    std::string v;
    double signed_weight;
};

struct Edge {
    int u;          // u < v
    int v;
    double weight;  // > 0
    int sign;       // +1 or -1
};

/// Total map V -> {+1,-1}.
class SwitchingFunction {
public:
    SwitchingFunction() = default;
    explicit SwitchingFunction(std::vector<int> signs);
    static SwitchingFunction all_plus(int n);
    static SwitchingFunction from_negative_set(int n, std::span<const int> negative);

    int size() const { return static_cast<int>(signs_.size()); }
    int at(int u) const;
    const std::vector<int>& signs() const { return signs_; }
    std::vector<int> negative_set() const;

private:
    std::vector<int> signs_;
};

/// Simple undirected graph with strictly positive edge weights and +-1 edge
/// signs. Vertices carry string labels; all indices are dense 0..N-1 in
/// first-appearance order. Immutable after construction.
class SignedGraph {
public:
    struct Incidence {
        int neighbor;
        int edge;
    };

    SignedGraph() = default;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int u) const { return labels_.at(u); }

    /// Dense index of a label; throws MissingVertexError when absent.
    int index_of(const std::string& lbl) const;
    bool has_vertex(const std::string& lbl) const { return index_.count(lbl) > 0; }

    /// Weighted degree d_u = sum of incident edge weights.
    double degree(int u) const { return degrees_.at(u); }
    double max_degree() const;
    const std::vector<Incidence>& incident(int u) const { return adj_.at(u); }

    /// Pointer to the edge {u,v}, or nullptr when the pair is not an edge.
    const Edge* edge_between(int u, int v) const;
    bool is_unweighted() const;

    /// New graph with signature sigma^theta(uv) = theta(u) sigma(uv) theta(v).
    SignedGraph switched(const SwitchingFunction& theta) const;
    /// New graph with every edge sign flipped (the negation -Gamma).
    SignedGraph negated() const;
    /// Induced subgraph on the given vertices; labels are preserved.
    SignedGraph induced(std::span<const int> vertices) const;

    std::vector<std::vector<int>> components() const;

    /// Construct from already-indexed edges; labels default to "0","1",...
    static SignedGraph from_indexed_edges(int n, const std::vector<Edge>& edges,
                                          std::vector<std::string> labels = {});

private:
    void finalize();  // builds adjacency, degrees, pair lookup

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::vector<double> degrees_;
    std::unordered_map<std::uint64_t, int> pair_edge_;

    friend SignedGraph build_graph(const std::vector<EdgeInput>& edges);
};

/// Builds a SignedGraph from labelled edges. Throws SelfLoopError,
/// DuplicateEdgeError or ZeroWeightError naming the offending pair.
SignedGraph build_graph(const std::vector<EdgeInput>& edges);

struct BalanceResult {
    bool balanced = false;
    /// When balanced: sigma^theta is all-positive (Zaslavsky witness).
    SwitchingFunction witness;
    /// When unbalanced: vertices of a cycle with negative sign product.
    std::vector<int> negative_cycle;
};

/// Harary/Zaslavsky balance decision with constructive witness. Disconnected
/// graphs are balanced iff every component is.
BalanceResult is_balanced(const SignedGraph& g);
/// Balance of the negation -Gamma.
BalanceResult is_antibalanced(const SignedGraph& g);
/// Number of connected components that are balanced.
int balanced_component_count(const SignedGraph& g);

enum class SignFilter { All, Positive, Negative };

/// |E(V1,V2)| restricted by sign: sum over u in V1, v in V2 of w_uv. With
/// V1 == V2 every edge weight is counted twice.
double edge_measure(const SignedGraph& g, std::span<const int> v1,
                    std::span<const int> v2, SignFilter filter);

std::vector<int> complement_set(int n, std::span<const int> s);

/// Positive vertex weighting. Degree and unit measures are the two the
/// estimates in this library use; custom ones are allowed anywhere a measure
/// is taken as argument.
class VertexMeasure {
public:
    enum class Kind { Degree, Unit, Custom };

    static VertexMeasure degree(const SignedGraph& g);
    static VertexMeasure unit(const SignedGraph& g);
    static VertexMeasure custom(std::vector<double> values);

    Kind kind() const { return kind_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator()(int u) const { return values_.at(u); }
    const std::vector<double>& values() const { return values_; }

private:
    VertexMeasure(Kind kind, std::vector<double> values);
    Kind kind_ = Kind::Unit;
    std::vector<double> values_;
};

double volume(const VertexMeasure& mu, std::span<const int> s);

/// Ordered pair of disjoint vertex sets with nonempty union. Sets are stored
/// sorted and deduplicated.
class SubBipartition {
public:
    SubBipartition(std::vector<int> v1, std::vector<int> v2);

    const std::vector<int>& v1() const { return v1_; }
    const std::vector<int>& v2() const { return v2_; }
    std::vector<int> union_set() const;

private:
    std::vector<int> v1_, v2_;
};

/// Counts of common neighbors u' of the edge {u,v} forming a positive
/// (resp. negative) signed triangle. Throws NotAnEdgeError.
std::pair<int, int> signed_triangle_counts(const SignedGraph& g, int u, int v);

}  // namespace sigspec
