#include "sigspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace sigspec {

namespace {

std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::vector<int> sorted_unique(std::span<const int> s) {
    std::vector<int> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

SwitchingFunction::SwitchingFunction(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_) {
        if (s != 1 && s != -1) throw Error("switching function values must be +1 or -1");
    }
}

SwitchingFunction SwitchingFunction::all_plus(int n) {
    return SwitchingFunction(std::vector<int>(n, 1));
}

SwitchingFunction SwitchingFunction::from_negative_set(int n, std::span<const int> negative) {
    std::vector<int> signs(n, 1);
    for (int u : negative) {
        if (u < 0 || u >= n) throw MissingVertexError("switching set names vertex " + std::to_string(u));
        signs[u] = -1;
    }
    return SwitchingFunction(std::move(signs));
}

int SwitchingFunction::at(int u) const {
    if (u < 0 || u >= size()) {
        throw MissingVertexError("switching function undefined at vertex " + std::to_string(u));
    }
    return signs_[u];
}

std::vector<int> SwitchingFunction::negative_set() const {
    std::vector<int> out;
    for (int u = 0; u < size(); ++u) {
        if (signs_[u] < 0) out.push_back(u);
    }
    return out;
}

int SignedGraph::index_of(const std::string& lbl) const {
    auto it = index_.find(lbl);
    if (it == index_.end()) throw MissingVertexError("unknown vertex label '" + lbl + "'");
    return it->second;
}

double SignedGraph::max_degree() const {
    double d = 0.0;
    for (double du : degrees_) d = std::max(d, du);
    return d;
}

const Edge* SignedGraph::edge_between(int u, int v) const {
    auto it = pair_edge_.find(pair_key(u, v));
    if (it == pair_edge_.end()) return nullptr;
    return &edges_[it->second];
}

bool SignedGraph::is_unweighted() const {
    for (const Edge& e : edges_) {
        if (e.weight != 1.0) return false;
    }
    return true;
}

void SignedGraph::finalize() {
    const int n = vertex_count();
    adj_.assign(n, {});
    degrees_.assign(n, 0.0);
    pair_edge_.clear();
    for (int eid = 0; eid < edge_count(); ++eid) {
        const Edge& e = edges_[eid];
        adj_[e.u].push_back({e.v, eid});
        adj_[e.v].push_back({e.u, eid});
        degrees_[e.u] += e.weight;
        degrees_[e.v] += e.weight;
        pair_edge_[pair_key(e.u, e.v)] = eid;
    }
}

SignedGraph SignedGraph::switched(const SwitchingFunction& theta) const {
    if (theta.size() != vertex_count()) {
        throw MissingVertexError("switching function defined on " + std::to_string(theta.size()) +
                                 " vertices, graph has " + std::to_string(vertex_count()));
    }
    SignedGraph out = *this;
    for (Edge& e : out.edges_) {
        e.sign = theta.at(e.u) * e.sign * theta.at(e.v);
    }
    return out;
}

SignedGraph SignedGraph::negated() const {
    SignedGraph out = *this;
    for (Edge& e : out.edges_) e.sign = -e.sign;
    return out;
}

SignedGraph SignedGraph::induced(std::span<const int> vertices) const {
    std::vector<int> verts = sorted_unique(vertices);
    std::vector<int> pos(vertex_count(), -1);
    SignedGraph out;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        int u = verts[i];
        if (u < 0 || u >= vertex_count()) {
            throw MissingVertexError("induced set names vertex " + std::to_string(u));
        }
        pos[u] = i;
        out.labels_.push_back(labels_[u]);
        out.index_[labels_[u]] = i;
    }
    for (const Edge& e : edges_) {
        if (pos[e.u] >= 0 && pos[e.v] >= 0) {
            out.edges_.push_back({pos[e.u], pos[e.v], e.weight, e.sign});
        }
    }
    out.finalize();
    return out;
}

std::vector<std::vector<int>> SignedGraph::components() const {
    const int n = vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{root};
        comp[root] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            out[id].push_back(u);
            for (const Incidence& inc : adj_[u]) {
                if (comp[inc.neighbor] < 0) {
                    comp[inc.neighbor] = id;
                    queue.push_back(inc.neighbor);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

SignedGraph SignedGraph::from_indexed_edges(int n, const std::vector<Edge>& edges,
                                            std::vector<std::string> labels) {
    SignedGraph g;
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n) throw Error("label count does not match vertex count");
    g.labels_ = std::move(labels);
    for (int i = 0; i < n; ++i) g.index_[g.labels_[i]] = i;
    std::unordered_map<std::uint64_t, int> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw MissingVertexError("edge endpoint out of range");
        }
        if (e.u == e.v) throw SelfLoopError("self-loop at vertex " + g.labels_[e.u]);
        if (e.weight <= 0.0) throw ZeroWeightError("non-positive weight on edge (" + g.labels_[e.u] + "," + g.labels_[e.v] + ")");
        if (e.sign != 1 && e.sign != -1) throw Error("edge sign must be +1 or -1");
        auto [it, fresh] = seen.emplace(pair_key(e.u, e.v), 1);
        if (!fresh) throw DuplicateEdgeError("duplicate edge (" + g.labels_[e.u] + "," + g.labels_[e.v] + ")");
        Edge copy = e;
        if (copy.u > copy.v) std::swap(copy.u, copy.v);
        g.edges_.push_back(copy);
    }
    g.finalize();
    return g;
}

SignedGraph build_graph(const std::vector<EdgeInput>& edges) {
    SignedGraph g;
    auto intern = [&g](const std::string& lbl) {
        auto it = g.index_.find(lbl);
        if (it != g.index_.end()) return it->second;
        int id = static_cast<int>(g.labels_.size());
        g.labels_.push_back(lbl);
        g.index_[lbl] = id;
        return id;
    };
    std::unordered_map<std::uint64_t, int> seen;
    for (const EdgeInput& in : edges) {
        if (in.u == in.v) throw SelfLoopError("self-loop at vertex '" + in.u + "'");
        if (in.signed_weight == 0.0) {
            throw ZeroWeightError("zero weight on edge (" + in.u + "," + in.v + ")");
        }
        if (!std::isfinite(in.signed_weight)) {
            throw ZeroWeightError("non-finite weight on edge (" + in.u + "," + in.v + ")");
        }
        int u = intern(in.u);
        int v = intern(in.v);
        auto [it, fresh] = seen.emplace(pair_key(u, v), 1);
        if (!fresh) throw DuplicateEdgeError("duplicate edge (" + in.u + "," + in.v + ")");
        Edge e;
        e.u = std::min(u, v);
        e.v = std::max(u, v);
        e.weight = std::abs(in.signed_weight);
        e.sign = in.signed_weight > 0.0 ? 1 : -1;
        g.edges_.push_back(e);
    }
    g.finalize();
    return g;
}

namespace {

// Two-colors one component with sign parity. theta(v) is chosen so that
// every tree edge becomes positive under sigma^theta; an inconsistent
// non-tree edge closes a negative cycle through the BFS tree.
struct ComponentScan {
    bool balanced = true;
    std::vector<int> cycle;
};

ComponentScan scan_component(const SignedGraph& g, int root, std::vector<int>& theta,
                             std::vector<int>& parent, std::vector<int>& depth) {
    ComponentScan result;
    theta[root] = 1;
    parent[root] = -1;
    depth[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const SignedGraph::Incidence& inc : g.incident(u)) {
            const Edge& e = g.edges()[inc.edge];
            int v = inc.neighbor;
            if (theta[v] == 0) {
                // sigma^theta(uv) = +1 requires theta(u) theta(v) = sigma(uv)
                theta[v] = theta[u] * e.sign;
                parent[v] = u;
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            } else if (theta[u] * theta[v] != e.sign) {
                result.balanced = false;
                // walk both endpoints up to their common ancestor
                std::vector<int> up_u{u}, up_v{v};
                int a = u, b = v;
                while (depth[a] > depth[b]) { a = parent[a]; up_u.push_back(a); }
                while (depth[b] > depth[a]) { b = parent[b]; up_v.push_back(b); }
                while (a != b) {
                    a = parent[a]; up_u.push_back(a);
                    b = parent[b]; up_v.push_back(b);
                }
                result.cycle.assign(up_u.begin(), up_u.end());
                for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) {
                    if (*it != a) result.cycle.push_back(*it);
                }
                return result;
            }
        }
    }
    return result;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> theta(n, 0), parent(n, -1), depth(n, 0);
    BalanceResult out;
    for (int root = 0; root < n; ++root) {
        if (theta[root] != 0) continue;
        ComponentScan scan = scan_component(g, root, theta, parent, depth);
        if (!scan.balanced) {
            out.balanced = false;
            out.negative_cycle = std::move(scan.cycle);
            return out;
        }
    }
    out.balanced = true;
    out.witness = SwitchingFunction(std::move(theta));
    return out;
}

BalanceResult is_antibalanced(const SignedGraph& g) {
    return is_balanced(g.negated());
}

int balanced_component_count(const SignedGraph& g) {
    int count = 0;
    for (const std::vector<int>& comp : g.components()) {
        if (is_balanced(g.induced(comp)).balanced) ++count;
    }
    return count;
}

double edge_measure(const SignedGraph& g, std::span<const int> v1,
                    std::span<const int> v2, SignFilter filter) {
    std::vector<char> in2(g.vertex_count(), 0);
    for (int u : v2) {
        if (u < 0 || u >= g.vertex_count()) {
            throw MissingVertexError("edge_measure set names vertex " + std::to_string(u));
        }
        in2[u] = 1;
    }
    std::vector<int> left = sorted_unique(v1);
    double total = 0.0;
    for (int u : left) {
        if (u < 0 || u >= g.vertex_count()) {
            throw MissingVertexError("edge_measure set names vertex " + std::to_string(u));
        }
        for (const SignedGraph::Incidence& inc : g.incident(u)) {
            if (!in2[inc.neighbor]) continue;
            const Edge& e = g.edges()[inc.edge];
            if (filter == SignFilter::Positive && e.sign != 1) continue;
            if (filter == SignFilter::Negative && e.sign != -1) continue;
            total += e.weight;
        }
    }
    return total;
}

std::vector<int> complement_set(int n, std::span<const int> s) {
    std::vector<char> in(n, 0);
    for (int u : s) in.at(u) = 1;
    std::vector<int> out;
    for (int u = 0; u < n; ++u) {
        if (!in[u]) out.push_back(u);
    }
    return out;
}

VertexMeasure::VertexMeasure(Kind kind, std::vector<double> values)
    : kind_(kind), values_(std::move(values)) {
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            if (kind_ == Kind::Degree) {
                throw IsolatedVertexError("degree measure requires every vertex degree > 0");
            }
            throw Error("vertex measure values must be strictly positive");
        }
    }
}

VertexMeasure VertexMeasure::degree(const SignedGraph& g) {
    std::vector<double> values(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) values[u] = g.degree(u);
    return VertexMeasure(Kind::Degree, std::move(values));
}

VertexMeasure VertexMeasure::unit(const SignedGraph& g) {
    return VertexMeasure(Kind::Unit, std::vector<double>(g.vertex_count(), 1.0));
}

VertexMeasure VertexMeasure::custom(std::vector<double> values) {
    return VertexMeasure(Kind::Custom, std::move(values));
}

double volume(const VertexMeasure& mu, std::span<const int> s) {
    std::vector<int> verts = sorted_unique(s);
    double total = 0.0;
    for (int u : verts) total += mu(u);
    return total;
}

SubBipartition::SubBipartition(std::vector<int> v1, std::vector<int> v2)
    : v1_(sorted_unique(v1)), v2_(sorted_unique(v2)) {
    if (v1_.empty() && v2_.empty()) throw EmptyUnionError("sub-bipartition must have nonempty union");
    std::size_t i = 0, j = 0;
    while (i < v1_.size() && j < v2_.size()) {
        if (v1_[i] == v2_[j]) throw Error("sub-bipartition sides overlap at vertex " + std::to_string(v1_[i]));
        if (v1_[i] < v2_[j]) ++i; else ++j;
    }
}

std::vector<int> SubBipartition::union_set() const {
    std::vector<int> out;
    out.reserve(v1_.size() + v2_.size());
    std::merge(v1_.begin(), v1_.end(), v2_.begin(), v2_.end(), std::back_inserter(out));
    return out;
}

std::pair<int, int> signed_triangle_counts(const SignedGraph& g, int u, int v) {
    const Edge* uv = g.edge_between(u, v);
    if (uv == nullptr) {
        throw NotAnEdgeError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    }
    std::vector<int> sign_to(g.vertex_count(), 0);
    for (const SignedGraph::Incidence& inc : g.incident(u)) {
        sign_to[inc.neighbor] = g.edges()[inc.edge].sign;
    }
    int plus = 0, minus = 0;
    for (const SignedGraph::Incidence& inc : g.incident(v)) {
        int w = inc.neighbor;
        if (w == u || sign_to[w] == 0) continue;
        int product = uv->sign * g.edges()[inc.edge].sign * sign_to[w];
        if (product > 0) ++plus; else ++minus;
    }
    return {plus, minus};
}

}  // namespace sigspec
