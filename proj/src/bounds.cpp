#include "sigspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigspec/cheeger.hpp"
#include "sigspec/spectral.hpp"

namespace sigspec {

namespace {

BoundReport make_report(std::string name, double lhs, double rhs, std::string witness = "",
                        bool vacuous = false) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.vacuous = vacuous;
    r.witness = std::move(witness);
    return r;
}

std::string edge_name(const SignedGraph& g, const Edge& e) {
    return "(" + g.label(e.u) + "," + g.label(e.v) + ")";
}

}  // namespace

std::pair<BoundReport, BoundReport> triangle_bounds_normalized(const SignedGraph& g) {
    if (g.edge_count() == 0) throw EmptyEdgeSetError("triangle bounds need at least one edge");
    double wmin = std::numeric_limits<double>::infinity(), wmax = 0.0;
    for (const Edge& e : g.edges()) {
        wmin = std::min(wmin, e.weight);
        wmax = std::max(wmax, e.weight);
    }
    int min_plus = -1, min_minus = -1;
    const Edge* arg_plus = nullptr;
    const Edge* arg_minus = nullptr;
    for (const Edge& e : g.edges()) {
        auto [plus, minus] = signed_triangle_counts(g, e.u, e.v);
        if (min_plus < 0 || plus < min_plus) {
            min_plus = plus;
            arg_plus = &e;
        }
        if (min_minus < 0 || minus < min_minus) {
            min_minus = minus;
            arg_minus = &e;
        }
    }
    double scale = wmin * wmin / wmax / g.max_degree();
    Spectrum spec = spectrum(g, LaplaceOperator::Normalized);
    double lambda_1 = spec.eigenvalues.front();
    double lambda_n = spec.eigenvalues.back();

    BoundReport lower = make_report("triangle-lower-lambda1", scale * min_minus, lambda_1,
                                    "edge " + edge_name(g, *arg_minus), min_minus == 0);
    BoundReport upper = make_report("triangle-upper-lambdaN", lambda_n, 2.0 - scale * min_plus,
                                    "edge " + edge_name(g, *arg_plus), min_plus == 0);
    return {lower, upper};
}

namespace {

// Half the per-edge bracket of the weighted bound on lambda_N(L^sigma):
// degree sums, exclusive neighbor mass on both sides, discordant
// common-neighbor mass, and |w_{u'u} - w_{u'v}| over concordant commons.
double das_edge_value(const SignedGraph& g, const Edge& e, std::vector<int>& sign_to_u) {
    for (const SignedGraph::Incidence& inc : g.incident(e.u)) {
        sign_to_u[inc.neighbor] = g.edges()[inc.edge].sign;
    }
    double exclusive_u = g.degree(e.u);   // will drop common-neighbor mass below
    double exclusive_v = g.degree(e.v);
    double discordant = 0.0, concordant_diff = 0.0;
    for (const SignedGraph::Incidence& inc : g.incident(e.v)) {
        int w = inc.neighbor;
        if (w == e.u || sign_to_u[w] == 0) continue;
        const Edge& ev = g.edges()[inc.edge];
        const Edge* eu = g.edge_between(e.u, w);
        exclusive_u -= eu->weight;
        exclusive_v -= ev.weight;
        if (sign_to_u[w] * ev.sign == e.sign) {
            concordant_diff += std::abs(eu->weight - ev.weight);
        } else {
            discordant += eu->weight + ev.weight;
        }
    }
    for (const SignedGraph::Incidence& inc : g.incident(e.u)) sign_to_u[inc.neighbor] = 0;
    double bracket = g.degree(e.u) + g.degree(e.v) + exclusive_u + exclusive_v + discordant +
                     concordant_diff;
    return bracket / 2.0;
}

}  // namespace

BoundReport das_bound_kirchhoff(const SignedGraph& g) {
    if (g.edge_count() == 0) throw EmptyEdgeSetError("the Kirchhoff bound needs at least one edge");
    const bool unweighted = g.is_unweighted();
    std::vector<int> sign_to_u(g.vertex_count(), 0);
    double rhs = -std::numeric_limits<double>::infinity();
    const Edge* arg = nullptr;
    for (const Edge& e : g.edges()) {
        double value = das_edge_value(g, e, sign_to_u);
        if (unweighted) {
            auto [plus, minus] = signed_triangle_counts(g, e.u, e.v);
            (void)minus;
            double reduced = g.degree(e.u) + g.degree(e.v) - plus;
            if (std::abs(value - reduced) > 1e-12) {
                throw Error("weighted bound does not reduce to d_u + d_v - #+ on edge " +
                            edge_name(g, e));
            }
            value = reduced;
        }
        if (value > rhs) {
            rhs = value;
            arg = &e;
        }
    }
    Spectrum spec = spectrum(g, LaplaceOperator::Kirchhoff);
    return make_report("kirchhoff-lambdaN-upper", spec.eigenvalues.back(), rhs,
                       "edge " + edge_name(g, *arg));
}

namespace {

constexpr double kDegenerate = 1e-12;

struct HValues {
    bool available = false;
    std::vector<double> h;  // h_1 .. h_{max order}
};

HValues exact_h_values(const SignedGraph& g, const VertexMeasure& mu, int max_order, int budget) {
    HValues out;
    if (g.vertex_count() > budget) return out;
    out.available = true;
    HExactOptions opts;
    opts.max_vertices = budget;
    for (int k = 1; k <= std::min(max_order, g.vertex_count()); ++k) {
        out.h.push_back(h_exact(g, k, mu, opts).value);
    }
    return out;
}

}  // namespace

std::vector<BoundReport> verify_all(const SignedGraph& g, const VerifyOptions& opts) {
    std::vector<BoundReport> reports;
    const int n = g.vertex_count();

    Spectrum norm = spectrum(g, LaplaceOperator::Normalized);
    Spectrum kirch = spectrum(g, LaplaceOperator::Kirchhoff);
    const double lambda1 = norm.eigenvalues.front();
    const double lambdaN = norm.eigenvalues.back();
    const double lambda1_L = kirch.eigenvalues.front();
    const double dmax = g.max_degree();

    const VertexMeasure mu_d = VertexMeasure::degree(g);
    const VertexMeasure mu_1 = VertexMeasure::unit(g);
    HValues hd = exact_h_values(g, mu_d, opts.max_order, opts.h_budget);
    HValues h1 = exact_h_values(g, mu_1, opts.max_order, opts.h_budget);
    HValues hdual = exact_h_values(g.negated(), mu_d, 1, opts.h_budget);

    if (!hd.available) {
        reports.push_back(make_report("cheeger-inequality", 0.0, 0.0,
                                      "skipped: N exceeds the exact budget", true));
        return reports;
    }
    const double h1_d = hd.h[0];
    const double h1_1 = h1.h[0];

    reports.push_back(make_report("cheeger-lower", lambda1 / 2.0, h1_d));
    reports.push_back(make_report("cheeger-upper", h1_d, std::sqrt(2.0 * lambda1)));

    for (int k = 2; k <= static_cast<int>(hd.h.size()); ++k) {
        reports.push_back(make_report("higher-cheeger-lower k=" + std::to_string(k),
                                      norm.eigenvalues[k - 1] / 2.0, hd.h[k - 1]));
    }

    reports.push_back(make_report("kirchhoff-cheeger-lower", lambda1_L / 2.0, h1_1));
    reports.push_back(make_report("kirchhoff-cheeger-upper", h1_1,
                                  std::sqrt(2.0 * dmax * lambda1_L)));
    for (int k = 2; k <= static_cast<int>(h1.h.size()); ++k) {
        reports.push_back(make_report("kirchhoff-higher-lower k=" + std::to_string(k),
                                      kirch.eigenvalues[k - 1] / 2.0, h1.h[k - 1]));
    }

    double gap = 2.0 - lambdaN;
    reports.push_back(make_report("dual-cheeger-lower", gap / 2.0, hdual.h[0]));
    reports.push_back(make_report("dual-cheeger-upper", hdual.h[0], std::sqrt(2.0 * gap)));

    Spectrum dual_norm = spectrum(g.negated(), LaplaceOperator::Normalized);
    double worst_duality = 0.0;
    for (int k = 1; k <= n; ++k) {
        double residual = std::abs((2.0 - norm.eigenvalues[n - k]) - dual_norm.eigenvalues[k - 1]);
        worst_duality = std::max(worst_duality, residual);
    }
    reports.push_back(make_report("duality-residual", worst_duality, 1e-8, "all k"));

    // improved Cheeger: h_1 < 16 sqrt(2) k lambda_1 / sqrt(lambda_k)
    {
        double worst = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int k = 1; k <= n; ++k) {
            double lk = norm.eigenvalues[k - 1];
            if (lk <= kDegenerate) continue;
            double rhs = 16.0 * std::sqrt(2.0) * k * lambda1 / std::sqrt(lk);
            if (rhs - h1_d < worst) {
                worst = rhs - h1_d;
                arg = k;
            }
        }
        if (arg == 0) {
            reports.push_back(make_report("improved-cheeger", 0.0, 0.0,
                                          "vacuous: every lambda_k degenerate", true));
        } else {
            reports.push_back(make_report("improved-cheeger", h1_d, h1_d + worst,
                                          "k=" + std::to_string(arg)));
        }
    }

    // "at least one holds": h_1 <= 8 k lambda_1, or the improved form above
    {
        double worst = std::numeric_limits<double>::infinity();
        int arg = 1;
        for (int k = 1; k <= n; ++k) {
            double lk = norm.eigenvalues[k - 1];
            double slack_i = 8.0 * k * lambda1 - h1_d;
            double slack_ii = lk > kDegenerate
                                  ? 16.0 * std::sqrt(2.0) * k * lambda1 / std::sqrt(lk) - h1_d
                                  : -std::numeric_limits<double>::infinity();
            double best = std::max(slack_i, slack_ii);
            if (best < worst) {
                worst = best;
                arg = k;
            }
        }
        reports.push_back(make_report("improved-cheeger-disjunction", h1_d, h1_d + worst,
                                      "k=" + std::to_string(arg)));
    }

    // Kirchhoff improved form: h_1(mu_1) < 16 sqrt(2 dmax) k lambda_1(L) / sqrt(lambda_k(L))
    {
        double worst = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int k = 1; k <= n; ++k) {
            double lk = kirch.eigenvalues[k - 1];
            if (lk <= kDegenerate) continue;
            double rhs = 16.0 * std::sqrt(2.0 * dmax) * k * lambda1_L / std::sqrt(lk);
            if (rhs - h1_1 < worst) {
                worst = rhs - h1_1;
                arg = k;
            }
        }
        if (arg == 0) {
            reports.push_back(make_report("kirchhoff-improved-cheeger", 0.0, 0.0,
                                          "vacuous: every lambda_k degenerate", true));
        } else {
            reports.push_back(make_report("kirchhoff-improved-cheeger", h1_1, h1_1 + worst,
                                          "k=" + std::to_string(arg)));
        }
    }

    // higher-order improved estimates carry an unspecified absolute constant;
    // reported with the constant taken as 1, never enforced
    for (int k = 2; k <= static_cast<int>(hd.h.size()); ++k) {
        double worst = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (int l = k; l <= n; ++l) {
            double ll = norm.eigenvalues[l - 1];
            if (ll <= kDegenerate) continue;
            double rhs = l * std::pow(k, 6) * norm.eigenvalues[k - 1] / std::sqrt(ll);
            if (rhs - hd.h[k - 1] < worst) {
                worst = rhs - hd.h[k - 1];
                arg = l;
            }
        }
        std::string label = "higher-improved k=" + std::to_string(k);
        if (arg == 0) {
            reports.push_back(make_report(label, 0.0, 0.0, "vacuous: lambda_l degenerate", true));
        } else {
            reports.push_back(make_report(label, hd.h[k - 1], hd.h[k - 1] + worst,
                                          "constant taken as 1; l=" + std::to_string(arg), true));
        }
    }

    if (g.edge_count() > 0) {
        auto [lower, upper] = triangle_bounds_normalized(g);
        reports.push_back(lower);
        reports.push_back(upper);
        reports.push_back(das_bound_kirchhoff(g));
    }
    return reports;
}

}  // namespace sigspec
