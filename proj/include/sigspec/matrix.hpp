#pragma once

#include <vector>

namespace sigspec {

/// Dense symmetric matrix, full row-major storage.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set_sym(int i, int j, double value) {
        (*this)(i, j) = value;
        (*this)(j, i) = value;
    }

    double frobenius_norm() const;
    double off_diagonal_norm() const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values;                    // ascending
    std::vector<std::vector<double>> vectors;      // vectors[i]: unit l2 eigenvector of values[i]
};

struct JacobiOptions {
    double tolerance = 1e-12;  // off-diagonal Frobenius target, relative to max(1, ||A||_F)
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition. Deterministic: fixed rotation order,
/// ascending eigenvalues with stable tie order, and each eigenvector scaled
/// so its first component of magnitude > 1e-12 is positive. Throws
/// ConvergenceFailure when the sweep cap is reached.
EigenDecomposition jacobi_eigendecomposition(SymMatrix a, const JacobiOptions& opts = {});

}  // namespace sigspec
