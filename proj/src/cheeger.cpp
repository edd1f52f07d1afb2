#include "sigspec/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>

#include "sigspec/random.hpp"

namespace sigspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_vertices(const SignedGraph& g, std::span<const int> s) {
    for (int u : s) {
        if (u < 0 || u >= g.vertex_count()) {
            throw MissingVertexError("set names vertex " + std::to_string(u));
        }
    }
}

}  // namespace

double beta(const SignedGraph& g, const SubBipartition& bp, const VertexMeasure& mu) {
    check_vertices(g, bp.v1());
    check_vertices(g, bp.v2());
    std::vector<signed char> side(g.vertex_count(), 0);
    for (int u : bp.v1()) side[u] = 1;
    for (int u : bp.v2()) side[u] = 2;
    double num = 0.0;
    for (const Edge& e : g.edges()) {
        signed char a = side[e.u], b = side[e.v];
        if (a != 0 && b != 0) {
            // cross positive edges and same-side negative edges, double-counted
            if (a != b ? e.sign > 0 : e.sign < 0) num += 2.0 * e.weight;
        } else if (a != 0 || b != 0) {
            num += e.weight;  // boundary
        }
    }
    double den = 0.0;
    for (int u : bp.union_set()) den += mu(u);
    return num / den;
}

double signed_expansion(const SignedGraph& g, std::span<const int> s, const VertexMeasure& mu) {
    if (s.empty()) throw EmptySetError("signed expansion of the empty set");
    return beta(g, SubBipartition(std::vector<int>(s.begin(), s.end()), {}), mu);
}

namespace {

struct InducedEdge {
    int pu, pv;  // positions within the sorted subset
    double weight;
    int sign;
};

struct SwitchSearch {
    double value = 0.0;
    std::uint64_t bits = 0;  // bit i set: position i switched to -1
};

// Cost of one switching, summed fresh in edge-list order. Identical edge
// lists give bit-identical sums, which keeps frustration and h_k exactly
// switching invariant.
double switching_cost(const std::vector<InducedEdge>& edges, std::uint64_t bits) {
    double cost = 0.0;
    for (const InducedEdge& e : edges) {
        int su = (bits >> e.pu) & 1u ? -1 : 1;
        int sv = (bits >> e.pv) & 1u ? -1 : 1;
        if (e.sign * su * sv < 0) cost += e.weight;
    }
    return cost;
}

SwitchSearch exhaustive_fresh(const std::vector<InducedEdge>& edges, int s) {
    SwitchSearch best{kInf, 0};
    const std::uint64_t limit = 1ull << (s - 1);
    for (std::uint64_t t = 0; t < limit; ++t) {
        std::uint64_t bits = t << 1;  // position 0 stays +1
        double cost = switching_cost(edges, bits);
        if (cost < best.value) best = {cost, bits};
    }
    return best;
}

SwitchSearch exhaustive_gray(const std::vector<InducedEdge>& edges, int s) {
    std::vector<std::vector<int>> incident(s);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        incident[edges[i].pu].push_back(i);
        incident[edges[i].pv].push_back(i);
    }
    std::vector<char> frustrated(edges.size(), 0);
    double cost = 0.0;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        frustrated[i] = edges[i].sign < 0;
        if (frustrated[i]) cost += edges[i].weight;
    }
    std::uint64_t bits = 0;
    SwitchSearch best{cost, 0};
    const std::uint64_t limit = 1ull << (s - 1);
    for (std::uint64_t t = 1; t < limit; ++t) {
        int flip = std::countr_zero(t) + 1;  // Gray walk over positions 1..s-1
        bits ^= 1ull << flip;
        for (int ei : incident[flip]) {
            cost += frustrated[ei] ? -edges[ei].weight : edges[ei].weight;
            frustrated[ei] ^= 1;
        }
        if (cost < best.value) best = {cost, bits};
    }
    best.value = switching_cost(edges, best.bits);  // clean final sum
    return best;
}

SwitchSearch local_search(const std::vector<InducedEdge>& edges, int s,
                          const FrustrationOptions& opts) {
    std::vector<std::vector<int>> incident(s);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        incident[edges[i].pu].push_back(i);
        incident[edges[i].pv].push_back(i);
    }
    Rng rng(opts.seed);
    SwitchSearch best{kInf, 0};
    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        std::uint64_t bits = 0;
        if (restart > 0) {
            for (int i = 1; i < s; ++i) {
                if (rng.bernoulli(0.5)) bits |= 1ull << i;
            }
        }
        std::vector<char> frustrated(edges.size());
        double cost = 0.0;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            const InducedEdge& e = edges[i];
            int su = (bits >> e.pu) & 1u ? -1 : 1;
            int sv = (bits >> e.pv) & 1u ? -1 : 1;
            frustrated[i] = e.sign * su * sv < 0;
            if (frustrated[i]) cost += e.weight;
        }
        for (;;) {
            int pick = -1;
            double pick_delta = -1e-12;
            for (int i = 0; i < s; ++i) {
                double delta = 0.0;
                for (int ei : incident[i]) {
                    delta += frustrated[ei] ? -edges[ei].weight : edges[ei].weight;
                }
                if (delta < pick_delta) {
                    pick_delta = delta;
                    pick = i;
                }
            }
            if (pick < 0) break;
            bits ^= 1ull << pick;
            for (int ei : incident[pick]) {
                cost += frustrated[ei] ? -edges[ei].weight : edges[ei].weight;
                frustrated[ei] ^= 1;
            }
        }
        double fresh = switching_cost(edges, bits);
        if (fresh < best.value) best = {fresh, bits};
    }
    return best;
}

std::vector<InducedEdge> collect_induced(const SignedGraph& g, const std::vector<int>& verts,
                                         std::vector<std::pair<int, int>>* endpoints) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) pos[verts[i]] = i;
    std::vector<InducedEdge> out;
    for (const Edge& e : g.edges()) {
        if (pos[e.u] >= 0 && pos[e.v] >= 0) {
            out.push_back({pos[e.u], pos[e.v], e.weight, e.sign});
            if (endpoints != nullptr) endpoints->push_back({e.u, e.v});
        }
    }
    return out;
}

}  // namespace

FrustrationResult frustration(const SignedGraph& g, std::span<const int> s,
                              FrustrationMethod method, const FrustrationOptions& opts) {
    if (s.empty()) throw EmptySetError("frustration of the empty set");
    check_vertices(g, s);
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int count = static_cast<int>(verts.size());

    std::vector<std::pair<int, int>> endpoints;
    std::vector<InducedEdge> edges = collect_induced(g, verts, &endpoints);

    SwitchSearch found;
    bool exact = method == FrustrationMethod::Exact;
    if (exact) {
        if (count > opts.exact_cap) {
            throw TooLargeForExactError("exact frustration over " + std::to_string(count) +
                                        " vertices exceeds the cap of " + std::to_string(opts.exact_cap) +
                                        "; use the local-search method");
        }
        found = count <= 16 ? exhaustive_fresh(edges, count) : exhaustive_gray(edges, count);
    } else {
        found = local_search(edges, count, opts);
    }

    FrustrationResult out;
    out.value = found.value;
    out.exact = exact;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const InducedEdge& e = edges[i];
        int su = (found.bits >> e.pu) & 1u ? -1 : 1;
        int sv = (found.bits >> e.pv) & 1u ? -1 : 1;
        if (e.sign * su * sv < 0) out.deleted_edges.push_back(endpoints[i]);
    }
    std::vector<int> signs(g.vertex_count(), 1);
    for (int i = 0; i < count; ++i) {
        if ((found.bits >> i) & 1u) signs[verts[i]] = -1;
    }
    out.best_switching = SwitchingFunction(std::move(signs));
    return out;
}

double alpha_bar(const SignedGraph& g, std::span<const int> s, const VertexMeasure& mu) {
    if (s.empty()) throw EmptySetError("alpha-bar of the empty set");
    FrustrationResult fr = frustration(g, s, FrustrationMethod::Exact);
    std::vector<int> inside(s.begin(), s.end());
    std::vector<int> outside = complement_set(g.vertex_count(), inside);
    double bound = edge_measure(g, inside, outside, SignFilter::All);
    return (2.0 * fr.value + bound) / volume(mu, inside);
}

namespace {

// Per-subset tables over bitmask subsets of V: alpha-bar value and the
// argument switching of the inner frustration minimum.
struct MaskTables {
    std::vector<double> alpha;
    std::vector<std::uint32_t> bits;
};

MaskTables build_mask_tables(const SignedGraph& g, const VertexMeasure& mu) {
    const int n = g.vertex_count();
    const std::uint32_t size = 1u << n;
    MaskTables t;
    t.alpha.assign(size, kInf);
    t.bits.assign(size, 0);

    std::vector<double> vol(size, 0.0);
    for (std::uint32_t m = 1; m < size; ++m) {
        int high = 31 - std::countl_zero(m);
        vol[m] = vol[m ^ (1u << high)] + mu(high);
    }

    std::vector<int> pos(n, -1);
    std::vector<InducedEdge> induced;
    for (std::uint32_t m = 1; m < size; ++m) {
        int count = std::popcount(m);
        for (int u = 0, p = 0; u < n; ++u) {
            if (m & (1u << u)) pos[u] = p++;
        }
        induced.clear();
        double boundary = 0.0;
        for (const Edge& e : g.edges()) {
            bool inu = m & (1u << e.u), inv = m & (1u << e.v);
            if (inu && inv) {
                induced.push_back({pos[e.u], pos[e.v], e.weight, e.sign});
            } else if (inu || inv) {
                boundary += e.weight;
            }
        }
        SwitchSearch best = exhaustive_fresh(induced, count);
        t.alpha[m] = (2.0 * best.value + boundary) / vol[m];
        t.bits[m] = static_cast<std::uint32_t>(best.bits);
    }
    return t;
}

// f[m] = number of mutually disjoint subsets of m with alpha <= t, capped at k.
void pack_table(int n, const std::vector<double>& alpha, double t, int k,
                std::vector<signed char>& f) {
    const std::uint32_t size = 1u << n;
    f.assign(size, 0);
    for (std::uint32_t m = 1; m < size; ++m) {
        int v = std::countr_zero(m);
        std::uint32_t vbit = 1u << v;
        std::uint32_t rest = m ^ vbit;
        signed char best = f[rest];  // v left unused
        for (std::uint32_t sub = 0;; sub = (sub - rest) & rest) {
            std::uint32_t candidate = sub | vbit;
            if (alpha[candidate] <= t) {
                signed char with = static_cast<signed char>(1 + f[m ^ candidate]);
                if (with > best) best = with;
            }
            if (sub == rest) break;
        }
        f[m] = std::min<signed char>(best, static_cast<signed char>(k));
    }
}

SubBipartition mask_witness(const SignedGraph& g, std::uint32_t mask, std::uint32_t bits) {
    std::vector<int> flipped, kept;
    int p = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!(mask & (1u << u))) continue;
        if ((bits >> p) & 1u) flipped.push_back(u); else kept.push_back(u);
        ++p;
    }
    // switching the first side turns the bipartition cost into the expansion form
    return SubBipartition(std::move(flipped), std::move(kept));
}

}  // namespace

CheegerCertificate h_exact(const SignedGraph& g, int k, const VertexMeasure& mu,
                           const HExactOptions& opts) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) {
        throw IndexOutOfRangeError("h_k needs 1 <= k <= N, got k=" + std::to_string(k) +
                                   ", N=" + std::to_string(n));
    }
    if (n > opts.max_vertices) {
        throw BudgetExceededError("exact h_k enumeration is capped at N <= " +
                                  std::to_string(opts.max_vertices) + " (graph has N=" +
                                  std::to_string(n) + "); use the sweep upper bound instead");
    }
    if (mu.size() != n) throw Error("measure size does not match graph");

    CheegerCertificate cert;
    cert.mode = CertificateMode::ExactEnumeration;

    if (k == 1) {
        // subset scan with the boundary/volume lower bound as pruning
        const std::uint32_t size = 1u << n;
        std::vector<double> vol(size, 0.0);
        for (std::uint32_t m = 1; m < size; ++m) {
            int high = 31 - std::countl_zero(m);
            vol[m] = vol[m ^ (1u << high)] + mu(high);
        }
        double best = kInf;
        std::uint32_t best_mask = 0, best_bits = 0;
        std::vector<int> pos(n, -1);
        std::vector<InducedEdge> induced;
        for (std::uint32_t m = 1; m < size; ++m) {
            double boundary = 0.0;
            bool prunable = false;
            induced.clear();
            for (int u = 0, p = 0; u < n; ++u) {
                if (m & (1u << u)) pos[u] = p++;
            }
            for (const Edge& e : g.edges()) {
                bool inu = m & (1u << e.u), inv = m & (1u << e.v);
                if (inu && inv) induced.push_back({pos[e.u], pos[e.v], e.weight, e.sign});
                else if (inu || inv) boundary += e.weight;
            }
            if (boundary / vol[m] >= best) prunable = true;
            if (prunable) continue;
            SwitchSearch sw = exhaustive_fresh(induced, std::popcount(m));
            double value = (2.0 * sw.value + boundary) / vol[m];
            if (value < best) {
                best = value;
                best_mask = m;
                best_bits = static_cast<std::uint32_t>(sw.bits);
            }
        }
        cert.witness.push_back(mask_witness(g, best_mask, best_bits));
        cert.value = beta(g, cert.witness[0], mu);
        return cert;
    }

    MaskTables tables = build_mask_tables(g, mu);
    const std::uint32_t full = (1u << n) - 1;

    std::vector<double> levels = tables.alpha;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<signed char> f;
    int lo = 0, hi = static_cast<int>(levels.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        pack_table(n, tables.alpha, levels[mid], k, f);
        if (f[full] >= k) hi = mid; else lo = mid + 1;
    }
    const double level = levels[lo];
    pack_table(n, tables.alpha, level, k, f);

    std::uint32_t m = full;
    std::vector<std::uint32_t> chosen;
    while (static_cast<int>(chosen.size()) < k) {
        std::uint32_t vbit = m & (~m + 1);
        std::uint32_t rest = m ^ vbit;
        int needed = k - static_cast<int>(chosen.size());
        if (f[rest] >= needed) {
            m = rest;
            continue;
        }
        for (std::uint32_t sub = 0;; sub = (sub - rest) & rest) {
            std::uint32_t candidate = sub | vbit;
            if (tables.alpha[candidate] <= level && f[m ^ candidate] >= needed - 1) {
                chosen.push_back(candidate);
                m ^= candidate;
                break;
            }
            if (sub == rest) throw Error("internal error: packing reconstruction failed");
        }
    }

    double value = 0.0;
    for (std::uint32_t mask : chosen) {
        cert.witness.push_back(mask_witness(g, mask, tables.bits[mask]));
        value = std::max(value, beta(g, cert.witness.back(), mu));
    }
    cert.value = value;
    return cert;
}

namespace {

SweepResult sweep_impl(const SignedGraph& g, std::span<const double> f,
                       const VertexMeasure& mu, bool support_only) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw Error("function length does not match graph");
    std::vector<double> thresholds{0.0};
    for (double x : f) {
        if (x != 0.0) thresholds.push_back(std::abs(x));
    }
    if (thresholds.size() == 1) throw ZeroFunctionError("sweep of the zero function");
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    std::optional<SweepResult> best;
    for (double s : thresholds) {
        std::vector<int> v1, v2;
        for (int u = 0; u < n; ++u) {
            if (support_only && f[u] == 0.0) continue;
            if (s == 0.0) {
                if (f[u] >= 0.0) v1.push_back(u); else v2.push_back(u);
            } else {
                if (f[u] >= s) v1.push_back(u);
                else if (f[u] <= -s) v2.push_back(u);
            }
        }
        if (v1.empty() && v2.empty()) continue;
        SubBipartition cut(std::move(v1), std::move(v2));
        double value = beta(g, cut, mu);
        if (!best || value < best->value) {
            best.emplace(SweepResult{std::move(cut), value, s});
        }
    }
    return *best;
}

}  // namespace

SweepResult sweep_quadratic(const SignedGraph& g, std::span<const double> f,
                            const VertexMeasure& mu, bool support_only) {
    return sweep_impl(g, f, mu, support_only);
}

SweepResult sweep_linear(const SignedGraph& g, std::span<const double> f,
                         const VertexMeasure& mu, bool support_only) {
    return sweep_impl(g, f, mu, support_only);
}

}  // namespace sigspec
