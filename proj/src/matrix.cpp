#include "sigspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sigspec/errors.hpp"

namespace sigspec {

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) sum += (*this)(i, j) * (*this)(i, j);
    }
    return std::sqrt(sum);
}

double SymMatrix::off_diagonal_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i != j) sum += (*this)(i, j) * (*this)(i, j);
        }
    }
    return std::sqrt(sum);
}

EigenDecomposition jacobi_eigendecomposition(SymMatrix a, const JacobiOptions& opts) {
    const int n = a.size();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double tol = opts.tolerance * std::max(1.0, a.frobenius_norm());
    bool converged = n <= 1 || a.off_diagonal_norm() <= tol;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::abs(apq) < 1e-300) {
                    a.set_sym(p, q, 0.0);
                    continue;
                }
                double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a.set_sym(p, q, 0.0);
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a(i, p), aiq = a(i, q);
                    a.set_sym(i, p, c * aip - s * aiq);
                    a.set_sym(i, q, s * aip + c * aiq);
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v[static_cast<std::size_t>(i) * n + p];
                    double viq = v[static_cast<std::size_t>(i) * n + q];
                    v[static_cast<std::size_t>(i) * n + p] = c * vip - s * viq;
                    v[static_cast<std::size_t>(i) * n + q] = s * vip + c * viq;
                }
            }
        }
        converged = a.off_diagonal_norm() <= tol;
    }
    if (!converged) {
        throw ConvergenceFailure("Jacobi eigensolver did not reach tolerance within " +
                                 std::to_string(opts.max_sweeps) + " sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int x, int y) { return a(x, x) < a(y, y); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n, 0.0));
    for (int k = 0; k < n; ++k) {
        int col = order[k];
        out.values[k] = a(col, col);
        std::vector<double>& vec = out.vectors[k];
        for (int i = 0; i < n; ++i) vec[i] = v[static_cast<std::size_t>(i) * n + col];
        for (int i = 0; i < n; ++i) {
            if (std::abs(vec[i]) > 1e-12) {
                if (vec[i] < 0.0) {
                    for (double& x : vec) x = -x;
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace sigspec
