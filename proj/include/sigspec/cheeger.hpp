#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sigspec/graph.hpp"

namespace sigspec {

/// Signed bipartiteness ratio beta^sigma(V1,V2):
///   (2|E^+(V1,V2)| + |E^-(V1)| + |E^-(V2)| + |E(V1 u V2, complement)|) / vol_mu(V1 u V2),
/// with internal terms double-counted.
double beta(const SignedGraph& g, const SubBipartition& bp, const VertexMeasure& mu);

/// rho^sigma(S) = (|E^-(S)| + |E(S, complement)|) / vol_mu(S); equals beta(g,(S,{}),mu).
double signed_expansion(const SignedGraph& g, std::span<const int> s, const VertexMeasure& mu);

enum class FrustrationMethod { Exact, LocalSearch };

struct FrustrationOptions {
    int exact_cap = 24;   // maximal |S| for exhaustive switching enumeration
    int restarts = 20;    // local-search restarts
    std::uint64_t seed = 0;
};

struct FrustrationResult {
    double value = 0.0;                              // e^sigma_min(S), or an upper bound
    std::vector<std::pair<int, int>> deleted_edges;  // global vertex ids; deleting them balances Gamma_S
    SwitchingFunction best_switching;                // total on V (+1 off S); |E^-(S)|(sigma') = 2 value
    bool exact = true;                               // false for the local-search upper bound
};

/// Frustration index of the induced subgraph Gamma_S: minimum edge weight to
/// delete so it becomes balanced, computed as half the minimum of |E^-(S)|
/// over switchings. Exact enumerates 2^{|S|-1} switchings.
FrustrationResult frustration(const SignedGraph& g, std::span<const int> s,
                              FrustrationMethod method, const FrustrationOptions& opts = {});

/// alpha-bar^sigma(S) = (2 e_min(S) + |E(S, complement)|) / vol_mu(S), exact frustration.
double alpha_bar(const SignedGraph& g, std::span<const int> s, const VertexMeasure& mu);

enum class CertificateMode { ExactEnumeration, SweepUpperBound, SwitchingForm };

struct CheegerCertificate {
    double value = 0.0;
    std::vector<SubBipartition> witness;  // k mutually disjoint pairs
    CertificateMode mode = CertificateMode::ExactEnumeration;
};

struct HExactOptions {
    int max_vertices = 14;
};

/// Exact k-way signed Cheeger constant h_k^sigma(mu): minimum over k mutually
/// disjoint sub-bipartitions of the maximal beta. Throws BudgetExceededError
/// when the graph exceeds the enumeration budget, IndexOutOfRangeError when
/// k is outside 1..N.
CheegerCertificate h_exact(const SignedGraph& g, int k, const VertexMeasure& mu,
                           const HExactOptions& opts = {});

struct SweepResult {
    SubBipartition cut;
    double value = 0.0;      // beta of the cut
    double threshold = 0.0;  // |f| cutoff realizing it (0 uses the special split)
};

/// Threshold sweep over V_f(s) = {f >= s}, V_f(-s) = {f <= -s} for
/// s in {0} u {|f(u)| : f(u) != 0}, with V_f(0) = {f >= 0}, V_f(-0) = {f < 0}.
/// Returns the cut of minimal beta (ties: smallest threshold). The minimum is
/// guaranteed <= sqrt(2 d_mu^w R^sigma(f)). With support_only the sweep and
/// the t=0 convention are restricted to supp(f).
SweepResult sweep_quadratic(const SignedGraph& g, std::span<const double> f,
                            const VertexMeasure& mu, bool support_only = false);

/// Same sweep; the guarantee is the l1 ratio
///   sum w |f(u) - sigma f(v)| / sum mu |f(u)|.
SweepResult sweep_linear(const SignedGraph& g, std::span<const double> f,
                         const VertexMeasure& mu, bool support_only = false);

}  // namespace sigspec
