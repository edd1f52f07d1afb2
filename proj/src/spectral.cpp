#include "sigspec/spectral.hpp"

#include <cmath>

namespace sigspec {

namespace {

void require_positive_degrees(const SignedGraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!(g.degree(u) > 0.0)) {
            throw IsolatedVertexError("vertex '" + g.label(u) + "' is isolated; the normalized Laplacian needs d_u > 0");
        }
    }
}

void fix_sign(std::vector<double>& f) {
    for (double x : f) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0) {
                for (double& y : f) y = -y;
            }
            return;
        }
    }
}

}  // namespace

SymMatrix normalized_laplacian(const SignedGraph& g) {
    require_positive_degrees(g);
    const int n = g.vertex_count();
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) m(u, u) = 1.0;
    for (const Edge& e : g.edges()) {
        double value = -e.sign * e.weight / std::sqrt(g.degree(e.u) * g.degree(e.v));
        m.set_sym(e.u, e.v, value);
    }
    return m;
}

SymMatrix kirchhoff(const SignedGraph& g) {
    const int n = g.vertex_count();
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) m(u, u) = g.degree(u);
    for (const Edge& e : g.edges()) {
        m.set_sym(e.u, e.v, -e.sign * e.weight);
    }
    return m;
}

Spectrum spectrum(const SignedGraph& g, LaplaceOperator op) {
    if (op == LaplaceOperator::Normalized) {
        EigenDecomposition dec = jacobi_eigendecomposition(normalized_laplacian(g));
        Spectrum out{op, std::move(dec.values), {}, VertexMeasure::degree(g)};
        out.eigenfunctions.reserve(g.vertex_count());
        for (std::vector<double>& vec : dec.vectors) {
            // back-transform: phi = D^{-1/2} x solves Delta^sigma phi = lambda phi
            for (int u = 0; u < g.vertex_count(); ++u) vec[u] /= std::sqrt(g.degree(u));
            fix_sign(vec);
            out.eigenfunctions.push_back(std::move(vec));
        }
        return out;
    }
    EigenDecomposition dec = jacobi_eigendecomposition(kirchhoff(g));
    Spectrum out{op, std::move(dec.values), {}, VertexMeasure::unit(g)};
    out.eigenfunctions.reserve(g.vertex_count());
    for (std::vector<double>& vec : dec.vectors) {
        fix_sign(vec);
        out.eigenfunctions.push_back(std::move(vec));
    }
    return out;
}

std::vector<double> apply_operator(const SignedGraph& g, LaplaceOperator op,
                                   std::span<const double> f) {
    if (op == LaplaceOperator::Normalized) require_positive_degrees(g);
    std::vector<double> out(g.vertex_count(), 0.0);
    for (const Edge& e : g.edges()) {
        out[e.u] += e.weight * (f[e.u] - e.sign * f[e.v]);
        out[e.v] += e.weight * (f[e.v] - e.sign * f[e.u]);
    }
    if (op == LaplaceOperator::Normalized) {
        for (int u = 0; u < g.vertex_count(); ++u) out[u] /= g.degree(u);
    }
    return out;
}

namespace {

double quotient(const SignedGraph& g, std::span<const double> f, const VertexMeasure& mu,
                double edge_sign) {
    double num = 0.0;
    for (const Edge& e : g.edges()) {
        double d = f[e.u] - edge_sign * e.sign * f[e.v];
        num += e.weight * d * d;
    }
    double den = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u) den += mu(u) * f[u] * f[u];
    if (den == 0.0) throw ZeroFunctionError("Rayleigh quotient of the zero function");
    return num / den;
}

double quotient(const SignedGraph& g, const std::vector<std::vector<double>>& points,
                const VertexMeasure& mu, double edge_sign) {
    double num = 0.0;
    for (const Edge& e : g.edges()) {
        const std::vector<double>& fu = points[e.u];
        const std::vector<double>& fv = points[e.v];
        double d2 = 0.0;
        for (std::size_t j = 0; j < fu.size(); ++j) {
            double d = fu[j] - edge_sign * e.sign * fv[j];
            d2 += d * d;
        }
        num += e.weight * d2;
    }
    double den = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        double n2 = 0.0;
        for (double x : points[u]) n2 += x * x;
        den += mu(u) * n2;
    }
    if (den == 0.0) throw ZeroFunctionError("Rayleigh quotient of the zero map");
    return num / den;
}

}  // namespace

double rayleigh(const SignedGraph& g, std::span<const double> f, const VertexMeasure& mu) {
    return quotient(g, f, mu, 1.0);
}

double dual_rayleigh(const SignedGraph& g, std::span<const double> f, const VertexMeasure& mu) {
    return quotient(g, f, mu, -1.0);
}

double rayleigh(const SignedGraph& g, const std::vector<std::vector<double>>& points,
                const VertexMeasure& mu) {
    return quotient(g, points, mu, 1.0);
}

double dual_rayleigh(const SignedGraph& g, const std::vector<std::vector<double>>& points,
                     const VertexMeasure& mu) {
    return quotient(g, points, mu, -1.0);
}

double check_duality(const SignedGraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) {
        throw IndexOutOfRangeError("duality index k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    Spectrum direct = spectrum(g, LaplaceOperator::Normalized);
    Spectrum dual = spectrum(g.negated(), LaplaceOperator::Normalized);
    return std::abs((2.0 - direct.eigenvalues[n - k]) - dual.eigenvalues[k - 1]);
}

double max_weight_degree_ratio(const SignedGraph& g, const VertexMeasure& mu) {
    double best = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        best = std::max(best, g.degree(u) / mu(u));
    }
    return best;
}

}  // namespace sigspec
