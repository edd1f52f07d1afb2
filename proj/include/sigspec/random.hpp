#pragma once

#include <cstdint>
#include <vector>

#include "sigspec/graph.hpp"

namespace sigspec {

/// Deterministic splitmix64 generator. All randomness in the library flows
/// from explicit seeds through this type, so identical seeds give identical
/// results on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();                      // [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);         // inclusive bounds
    bool bernoulli(double p);

    /// Independent substream derived from this seed and a stream id.
    Rng split(std::uint64_t stream) const;

private:
    std::uint64_t state_;
};

/// G(n, p) signed graph: each pair independently an edge, sign negative with
/// probability negative_prob, weight uniform in [wmin, wmax]. Any vertex left
/// isolated gets one extra random edge so degree measures stay positive.
SignedGraph random_signed_graph(Rng& rng, int n, double edge_prob, double negative_prob,
                                double wmin, double wmax);

SignedGraph random_complete_signed_graph(Rng& rng, int n, double negative_prob,
                                         double wmin, double wmax);

SwitchingFunction random_switching(Rng& rng, int n);

/// Uniform values in [-1, 1], resampled until not identically zero.
std::vector<double> random_function(Rng& rng, int n);

}  // namespace sigspec
