#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigspec/graph.hpp"

namespace sigspec {

/// One verified inequality lhs <= rhs. Vacuous reports either carry no
/// numerical content (degenerate spectrum, unknown absolute constant,
/// enumeration budget) or hold trivially; they never count as violations.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs, as computed
    bool vacuous = false;
    std::string witness;  // extremal edge / index achieving the bound, or a skip reason

    bool satisfied() const { return vacuous || slack >= -1e-9; }
};

/// Triangle-count bounds on the extremal normalized eigenvalues:
///   (w^2/W) min #-(u,v) / max d  <=  lambda_1   and
///   lambda_N  <=  2 - (w^2/W) min #+(u,v) / max d.
/// Throws EmptyEdgeSetError.
std::pair<BoundReport, BoundReport> triangle_bounds_normalized(const SignedGraph& g);

/// Weighted Das-style bound on lambda_N(L^sigma); on unweighted graphs the
/// per-edge expression reduces exactly to d_u + d_v - #+(u,v), and the
/// implementation cross-checks the reduction on every edge.
BoundReport das_bound_kirchhoff(const SignedGraph& g);

struct VerifyOptions {
    int h_budget = 14;   // max N for exact Cheeger constants
    int max_order = 3;   // verify h_k lower bounds for k up to this order
};

/// Inequality harness: every Cheeger-type, duality, improved-Cheeger and
/// triangle estimate this library implements, evaluated on one graph. Items
/// that need an exact constant the source material leaves unspecified, or a
/// budget the graph exceeds, come back flagged vacuous instead of failing.
std::vector<BoundReport> verify_all(const SignedGraph& g, const VerifyOptions& opts = {});

}  // namespace sigspec
