#include "sigspec/random.hpp"

#include <cmath>

namespace sigspec {

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

int Rng::uniform_int(int lo, int hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % range);
}

bool Rng::bernoulli(double p) {
    return uniform01() < p;
}

Rng Rng::split(std::uint64_t stream) const {
    Rng derived(state_ ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
    derived.next_u64();
    return derived;
}

SignedGraph random_signed_graph(Rng& rng, int n, double edge_prob, double negative_prob,
                                double wmin, double wmax) {
    std::vector<Edge> edges;
    std::vector<char> covered(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.bernoulli(edge_prob)) continue;
            int sign = rng.bernoulli(negative_prob) ? -1 : 1;
            edges.push_back({u, v, rng.uniform(wmin, wmax), sign});
            covered[u] = covered[v] = 1;
        }
    }
    for (int u = 0; u < n && n >= 2; ++u) {
        if (covered[u]) continue;
        int v = rng.uniform_int(0, n - 2);
        if (v >= u) ++v;
        int sign = rng.bernoulli(negative_prob) ? -1 : 1;
        edges.push_back({std::min(u, v), std::max(u, v), rng.uniform(wmin, wmax), sign});
        covered[u] = covered[v] = 1;
    }
    return SignedGraph::from_indexed_edges(n, edges);
}

SignedGraph random_complete_signed_graph(Rng& rng, int n, double negative_prob,
                                         double wmin, double wmax) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int sign = rng.bernoulli(negative_prob) ? -1 : 1;
            edges.push_back({u, v, rng.uniform(wmin, wmax), sign});
        }
    }
    return SignedGraph::from_indexed_edges(n, edges);
}

SwitchingFunction random_switching(Rng& rng, int n) {
    std::vector<int> signs(n);
    for (int& s : signs) s = rng.bernoulli(0.5) ? -1 : 1;
    return SwitchingFunction(std::move(signs));
}

std::vector<double> random_function(Rng& rng, int n) {
    std::vector<double> f(n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        bool nonzero = false;
        for (double& x : f) {
            x = rng.uniform(-1.0, 1.0);
            nonzero = nonzero || x != 0.0;
        }
        if (nonzero) return f;
    }
    f.assign(n, 0.0);
    f[0] = 1.0;
    return f;
}

}  // namespace sigspec
