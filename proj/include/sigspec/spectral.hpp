#pragma once

#include <span>
#include <vector>

#include "sigspec/graph.hpp"
#include "sigspec/matrix.hpp"

namespace sigspec {

enum class LaplaceOperator { Normalized, Kirchhoff };

/// Full eigendecomposition of Delta^sigma or L^sigma. Eigenvalues ascend;
/// eigenfunctions are orthonormal in the measure inner product (mu_d for the
/// normalized operator, mu_1 for the Kirchhoff matrix) and sign-fixed so the
/// first component of magnitude > 1e-12 is positive.
struct Spectrum {
    LaplaceOperator op;
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenfunctions;  // [i][u]
    VertexMeasure measure;
};

/// Symmetrized normalized Laplacian I - D^{-1/2} A^sigma D^{-1/2}, similar to
/// Delta^sigma = I - D^{-1} A^sigma. Throws IsolatedVertexError.
SymMatrix normalized_laplacian(const SignedGraph& g);

/// Kirchhoff matrix L^sigma = D - A^sigma.
SymMatrix kirchhoff(const SignedGraph& g);

Spectrum spectrum(const SignedGraph& g, LaplaceOperator op);

/// Operator applied pointwise: Delta^sigma f(u) = (1/d_u) sum w (f(u) - sigma f(v)),
/// Kirchhoff form without the 1/d_u factor.
std::vector<double> apply_operator(const SignedGraph& g, LaplaceOperator op,
                                   std::span<const double> f);

/// Signed Rayleigh quotient  sum_{u~v} w (f(u)-sigma f(v))^2 / sum_u mu f(u)^2.
double rayleigh(const SignedGraph& g, std::span<const double> f, const VertexMeasure& mu);
/// Dual form with + in place of -.
double dual_rayleigh(const SignedGraph& g, std::span<const double> f, const VertexMeasure& mu);

/// Vector-valued versions for maps V -> R^k (points[u] is the vector at u).
double rayleigh(const SignedGraph& g, const std::vector<std::vector<double>>& points,
                const VertexMeasure& mu);
double dual_rayleigh(const SignedGraph& g, const std::vector<std::vector<double>>& points,
                     const VertexMeasure& mu);

/// Residual of the duality identity 2 - lambda_{N-k+1}(Delta^sigma) = lambda_k(Delta^{-sigma}).
double check_duality(const SignedGraph& g, int k);

/// d_mu^w = max_u (sum of incident weights) / mu(u).
double max_weight_degree_ratio(const SignedGraph& g, const VertexMeasure& mu);

}  // namespace sigspec
