#include "sigspec/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "sigspec/matrix.hpp"
#include "sigspec/random.hpp"
#include "sigspec/spectral.hpp"

namespace sigspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double raw_projective_distance(std::span<const double> x, std::span<const double> y) {
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        plus += (x[i] + y[i]) * (x[i] + y[i]);
        minus += (x[i] - y[i]) * (x[i] - y[i]);
    }
    return std::sqrt(std::min(plus, minus));
}

}  // namespace

Embedding embed(const SignedGraph& g, int k, EmbeddingMode mode) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) {
        throw IndexOutOfRangeError("embedding dimension k=" + std::to_string(k) +
                                   " outside 1.." + std::to_string(n));
    }
    Spectrum spec = spectrum(g, LaplaceOperator::Normalized);
    const int first = mode == EmbeddingMode::Balanced ? 0 : n - k;
    Embedding emb;
    emb.k = k;
    emb.mode = mode;
    emb.points.assign(n, std::vector<double>(k, 0.0));
    emb.eigenvalues.assign(spec.eigenvalues.begin() + first, spec.eigenvalues.begin() + first + k);
    for (int j = 0; j < k; ++j) {
        const std::vector<double>& phi = spec.eigenfunctions[first + j];
        for (int u = 0; u < n; ++u) emb.points[u][j] = phi[u];
    }
    return emb;
}

double projective_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error("projective distance of vectors of different dimension");
    if (std::abs(norm2(x) - 1.0) > 1e-9 || std::abs(norm2(y) - 1.0) > 1e-9) {
        throw NotUnitError("projective distance expects unit vectors");
    }
    return raw_projective_distance(x, y);
}

NormalizedEmbedding normalize(const Embedding& emb) {
    NormalizedEmbedding out;
    for (int u = 0; u < static_cast<int>(emb.points.size()); ++u) {
        double n = norm2(emb.points[u]);
        if (n <= 1e-12) {
            out.excluded.push_back(u);
            continue;
        }
        std::vector<double> unit(emb.points[u]);
        for (double& x : unit) x /= n;
        out.support.push_back(u);
        out.unit_points.push_back(std::move(unit));
        out.norms.push_back(n);
    }
    return out;
}

namespace {

struct PointCloud {
    const NormalizedEmbedding* nemb;
    std::vector<double> weight;  // mu(u) ||Phi(u)||^2 per support point
    double total_weight = 0.0;

    int size() const { return static_cast<int>(nemb->support.size()); }
    double dist(int i, int j) const {
        return raw_projective_distance(nemb->unit_points[i], nemb->unit_points[j]);
    }
};

PointCloud make_cloud(const NormalizedEmbedding& nemb, const VertexMeasure& mu) {
    PointCloud cloud;
    cloud.nemb = &nemb;
    for (std::size_t i = 0; i < nemb.support.size(); ++i) {
        double w = mu(nemb.support[i]) * nemb.norms[i] * nemb.norms[i];
        cloud.weight.push_back(w);
        cloud.total_weight += w;
    }
    return cloud;
}

int count_distinct_classes(const PointCloud& cloud) {
    std::vector<int> reps;
    for (int i = 0; i < cloud.size(); ++i) {
        bool fresh = true;
        for (int r : reps) {
            if (cloud.dist(r, i) < 1e-9) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(i);
    }
    return static_cast<int>(reps.size());
}

// Minimum pairwise projective distance between distinct subsets (single linkage).
double subset_separation(const PointCloud& cloud, const std::vector<std::vector<int>>& parts) {
    double sep = kInf;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            for (int i : parts[a]) {
                for (int j : parts[b]) sep = std::min(sep, cloud.dist(i, j));
            }
        }
    }
    return sep;
}

std::vector<double> subset_masses(const PointCloud& cloud, const std::vector<std::vector<int>>& parts) {
    std::vector<double> masses;
    for (const std::vector<int>& part : parts) {
        double m = 0.0;
        for (int i : part) m += cloud.weight[i];
        masses.push_back(m);
    }
    return masses;
}

ProjectivePartition grow_random_balls(const PointCloud& cloud, int k, std::uint64_t seed,
                                      const PartitionOptions& opts) {
    const int n = cloud.size();
    Rng rng(seed);
    double radius_scale = opts.initial_radius;
    const double mass_floor = opts.mass_floor_factor / k * cloud.total_weight;

    ProjectivePartition best;
    double best_min_mass = -1.0;
    for (int attempt = 0; attempt < opts.retry_cap; ++attempt) {
        double radius = rng.uniform(radius_scale / 2.0, radius_scale);
        radius_scale = std::max(radius_scale / 2.0, 1e-5);

        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        for (int i = n - 1; i > 0; --i) {
            std::swap(order[i], order[rng.uniform_int(0, i)]);
        }

        std::vector<char> taken(n, 0);
        std::vector<std::vector<int>> parts;
        for (int idx : order) {
            if (taken[idx] || static_cast<int>(parts.size()) == k) continue;
            std::vector<int> ball;
            for (int j = 0; j < n; ++j) {
                if (!taken[j] && cloud.dist(idx, j) <= radius) ball.push_back(j);
            }
            for (int j : ball) taken[j] = 1;
            parts.push_back(std::move(ball));
        }
        if (static_cast<int>(parts.size()) < k) continue;

        std::vector<double> masses = subset_masses(cloud, parts);
        double min_mass = *std::min_element(masses.begin(), masses.end());
        double sep = subset_separation(cloud, parts);
        if (min_mass > best_min_mass) {
            best_min_mass = min_mass;
            best = {parts, masses, sep, attempt + 1, PartitionStrategy::RandomPadded};
        }
        if (min_mass >= mass_floor && sep >= opts.separation_floor) {
            return {std::move(parts), std::move(masses), sep, attempt + 1,
                    PartitionStrategy::RandomPadded};
        }
    }
    throw PartitionFailureError(
        "random-padded partition failed after " + std::to_string(opts.retry_cap) +
        " attempts; best attempt reached minimal mass " + std::to_string(best_min_mass) +
        " against a floor of " + std::to_string(opts.mass_floor_factor / k * cloud.total_weight));
}

// Weighted projective mean: dominant eigenvector of sum w x x^T.
std::vector<double> projective_center(const PointCloud& cloud, const std::vector<int>& members,
                                      int dim) {
    SymMatrix second_moment(dim);
    for (int i : members) {
        const std::vector<double>& x = cloud.nemb->unit_points[i];
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                second_moment(a, b) += cloud.weight[i] * x[a] * x[b];
            }
        }
    }
    EigenDecomposition dec = jacobi_eigendecomposition(second_moment);
    std::vector<double> center = dec.vectors.back();
    double n = norm2(center);
    for (double& x : center) x /= n;
    return center;
}

double point_center_distance(const PointCloud& cloud, int i, const std::vector<double>& center) {
    return raw_projective_distance(cloud.nemb->unit_points[i], center);
}

ProjectivePartition lloyd_kmeans(const PointCloud& cloud, int k, std::uint64_t seed,
                                 const PartitionOptions& opts) {
    const int n = cloud.size();
    const int dim = static_cast<int>(cloud.nemb->unit_points.front().size());
    Rng rng(seed);

    // farthest-point initialization from a seeded start
    std::vector<std::vector<double>> centers{cloud.nemb->unit_points[rng.uniform_int(0, n - 1)]};
    while (static_cast<int>(centers.size()) < k) {
        int far = 0;
        double far_dist = -1.0;
        for (int i = 0; i < n; ++i) {
            double d = kInf;
            for (const std::vector<double>& c : centers) {
                d = std::min(d, point_center_distance(cloud, i, c));
            }
            if (d > far_dist) {
                far_dist = d;
                far = i;
            }
        }
        centers.push_back(cloud.nemb->unit_points[far]);
    }

    std::vector<int> assignment(n, -1);
    for (int iter = 0; iter < opts.kmeans_iter_cap; ++iter) {
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            int pick = 0;
            double pick_dist = kInf;
            for (int c = 0; c < k; ++c) {
                double d = point_center_distance(cloud, i, centers[c]);
                if (d < pick_dist) {
                    pick_dist = d;
                    pick = c;
                }
            }
            next[i] = pick;
        }
        // re-seat empty clusters on the point farthest from its current center
        for (int c = 0; c < k; ++c) {
            if (std::count(next.begin(), next.end(), c) > 0) continue;
            int far = -1;
            double far_dist = -1.0;
            for (int i = 0; i < n; ++i) {
                if (std::count(next.begin(), next.end(), next[i]) <= 1) continue;
                double d = point_center_distance(cloud, i, centers[next[i]]);
                if (d > far_dist) {
                    far_dist = d;
                    far = i;
                }
            }
            if (far < 0) throw PartitionFailureError("projective k-means could not fill all clusters");
            next[far] = c;
            centers[c] = cloud.nemb->unit_points[far];
        }
        bool stable = next == assignment;
        assignment = std::move(next);
        if (stable) break;
        for (int c = 0; c < k; ++c) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i) {
                if (assignment[i] == c) members.push_back(i);
            }
            if (!members.empty()) centers[c] = projective_center(cloud, members, dim);
        }
    }

    std::vector<std::vector<int>> parts(k);
    for (int i = 0; i < n; ++i) parts[assignment[i]].push_back(i);
    std::vector<double> masses = subset_masses(cloud, parts);
    double sep = subset_separation(cloud, parts);
    return {std::move(parts), std::move(masses), sep, 1, PartitionStrategy::ProjectiveKMeans};
}

}  // namespace

ProjectivePartition partition_projective(const Embedding& emb, const NormalizedEmbedding& nemb,
                                         const VertexMeasure& mu, int k,
                                         PartitionStrategy strategy, std::uint64_t seed,
                                         const PartitionOptions& opts) {
    (void)emb;
    if (nemb.support.empty()) throw EmptySetError("no nonzero embedding points to partition");
    if (k < 1) throw IndexOutOfRangeError("partition needs k >= 1");
    PointCloud cloud = make_cloud(nemb, mu);
    if (k > count_distinct_classes(cloud)) {
        throw PartitionFailureError("fewer than k=" + std::to_string(k) +
                                    " distinct projective points");
    }

    ProjectivePartition part;
    if (k == 1) {
        std::vector<int> all(cloud.size());
        for (int i = 0; i < cloud.size(); ++i) all[i] = i;
        part = {{all}, {cloud.total_weight}, kInf, 1, strategy};
    } else if (strategy == PartitionStrategy::RandomPadded) {
        part = grow_random_balls(cloud, k, seed, opts);
    } else {
        part = lloyd_kmeans(cloud, k, seed, opts);
    }

    // report in vertex ids, each subset ascending
    for (std::vector<int>& subset : part.subsets) {
        for (int& idx : subset) idx = nemb.support[idx];
        std::sort(subset.begin(), subset.end());
    }
    return part;
}

std::vector<std::vector<double>> localize(const Embedding& emb, const NormalizedEmbedding& nemb,
                                          std::span<const int> s_i, double eps) {
    if (!(eps > 0.0) || !(eps < 2.0)) {
        throw BadEpsilonError("localization needs 0 < eps < 2");
    }
    if (s_i.empty()) throw EmptySetError("localization against an empty cluster");
    const int n = static_cast<int>(emb.points.size());
    std::vector<char> in_support(n, 0);
    std::vector<int> support_pos(n, -1);
    for (std::size_t i = 0; i < nemb.support.size(); ++i) {
        in_support[nemb.support[i]] = 1;
        support_pos[nemb.support[i]] = static_cast<int>(i);
    }
    std::vector<int> anchor;
    for (int u : s_i) {
        if (u < 0 || u >= n) throw MissingVertexError("cluster names vertex " + std::to_string(u));
        if (in_support[u]) anchor.push_back(support_pos[u]);
    }
    if (anchor.empty()) throw EmptySetError("cluster has no support vertices to localize around");

    std::vector<std::vector<double>> psi(n, std::vector<double>(emb.k, 0.0));
    for (std::size_t i = 0; i < nemb.support.size(); ++i) {
        double d = kInf;
        for (int a : anchor) {
            d = std::min(d, raw_projective_distance(nemb.unit_points[i], nemb.unit_points[a]));
        }
        double theta = std::max(0.0, 1.0 - d / eps);
        if (theta == 0.0) continue;
        int u = nemb.support[i];
        for (int j = 0; j < emb.k; ++j) psi[u][j] = theta * emb.points[u][j];
    }
    return psi;
}

CoordinateSelection select_coordinate(const SignedGraph& g,
                                      const std::vector<std::vector<double>>& psi,
                                      const VertexMeasure& mu) {
    if (psi.empty()) throw ZeroMapError("coordinate selection of an empty map");
    const int n = g.vertex_count();
    if (static_cast<int>(psi.size()) != n) throw Error("map length does not match graph");
    const int k = static_cast<int>(psi.front().size());
    CoordinateSelection out;
    double best = kInf;
    int found = -1;
    for (int j = 0; j < k; ++j) {
        std::vector<double> coord(n);
        double den = 0.0;
        for (int u = 0; u < n; ++u) {
            coord[u] = psi[u][j];
            den += mu(u) * coord[u] * coord[u];
        }
        if (den == 0.0) continue;  // identically-zero coordinate
        double value = rayleigh(g, coord, mu);
        if (value < best) {
            best = value;
            found = j;
            out.psi = std::move(coord);
        }
    }
    if (found < 0) throw ZeroMapError("coordinate selection of the zero map");
    out.index = found;
    out.rayleigh_value = best;
    return out;
}

ClusterResult cluster(const SignedGraph& g, int k, const ClusterOptions& opts) {
    if (opts.mode == EmbeddingMode::Antibalanced) {
        // duality: nearly antibalanced subgraphs of Gamma are the nearly
        // balanced subgraphs of -Gamma
        ClusterOptions balanced = opts;
        balanced.mode = EmbeddingMode::Balanced;
        return cluster(g.negated(), k, balanced);
    }
    const VertexMeasure mu = VertexMeasure::degree(g);
    Embedding emb = embed(g, k, EmbeddingMode::Balanced);
    NormalizedEmbedding nemb = normalize(emb);

    ClusterResult result;
    ClusterDiagnostics& diag = result.diagnostics;
    diag.embedding_rayleigh = rayleigh(g, emb.points, mu);
    diag.excluded_vertices = nemb.excluded;
    diag.strategy = opts.strategy;

    ProjectivePartition part =
        partition_projective(emb, nemb, mu, k, opts.strategy, opts.seed, opts.partition);
    diag.separation = part.separation;
    diag.masses = part.masses;
    diag.partition_attempts = part.attempts;
    result.raw_subsets = part.subsets;

    double eps = opts.epsilon.value_or(std::clamp(1.0 / (2.0 * std::pow(k, 2.5)), 0.05, 1.9));
    if (!(eps > 0.0) || !(eps < 2.0)) throw BadEpsilonError("epsilon must lie in (0, 2)");
    if (k > 1 && eps >= part.separation / 2.0) {
        // shrink once; with eps < sep/2 the localized supports cannot meet
        double shrunk = part.separation / 2.0 * (1.0 - 1e-9);
        if (!(shrunk > 0.0)) {
            throw DisjointnessViolationError(
                "projective clusters touch (separation " + std::to_string(part.separation) +
                "); localized supports cannot be kept disjoint");
        }
        eps = shrunk;
        diag.epsilon_shrunk = true;
    }
    diag.epsilon = eps;

    const double lipschitz = 1.0 + 2.0 / eps;
    std::vector<char> claimed(g.vertex_count(), 0);
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<double>> psi = localize(emb, nemb, part.subsets[i], eps);
        for (const Edge& e : g.edges()) {
            double lhs = 0.0, rhs = 0.0;
            for (int j = 0; j < k; ++j) {
                double a = psi[e.u][j] - e.sign * psi[e.v][j];
                double b = emb.points[e.u][j] - e.sign * emb.points[e.v][j];
                lhs += a * a;
                rhs += b * b;
            }
            double excess = std::sqrt(lhs) - lipschitz * std::sqrt(rhs);
            assert(excess <= 1e-9 * (1.0 + lipschitz));
            diag.lipschitz_max_excess = std::max(diag.lipschitz_max_excess, excess);
        }
        diag.localized_rayleigh.push_back(rayleigh(g, psi, mu));

        CoordinateSelection sel = select_coordinate(g, psi, mu);
        diag.coordinate_rayleigh.push_back(sel.rayleigh_value);
        diag.coordinate_index.push_back(sel.index);

        SweepResult sweep = sweep_quadratic(g, sel.psi, mu, /*support_only=*/true);
        diag.sweep_thresholds.push_back(sweep.threshold);
        for (int u : sweep.cut.union_set()) {
            if (claimed[u]) {
                throw DisjointnessViolationError("localized supports overlap at vertex '" +
                                                 g.label(u) + "'");
            }
            claimed[u] = 1;
        }
        result.betas.push_back(beta(g, sweep.cut, mu));
        result.parts.push_back(std::move(sweep.cut));
    }
    return result;
}

}  // namespace sigspec
