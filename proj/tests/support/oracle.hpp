#pragma once

// Test-only helpers: brute-force oracles that share no code path with the
// library's search, plus deterministic graph generators.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weightlab/graph.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab::oracle {

// Uniform integer in [0, n) from raw 64-bit draws (rejection sampling), so
// sequences do not depend on the standard library's distributions.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

// Vertex ids "0".."n-1"; bit k of `mask` selects the k-th pair (i<j) in
// lexicographic order.
inline FiniteGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<VertexId, DegreeTag>> vertices;
    for (int i = 0; i < n; ++i) vertices.emplace_back(VertexId(std::to_string(i)), DegreeTag::finite());
    std::vector<EdgeKey> edges;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if ((mask >> k) & 1u) edges.emplace_back(VertexId(std::to_string(i)), VertexId(std::to_string(j)));
        }
    }
    return FiniteGraph(std::move(vertices), std::move(edges));
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Independent connectivity check (union-find over the edge list).
inline bool is_connected(const FiniteGraph& g) {
    std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        parent[root(a)] = root(b);
    }
    std::size_t r = root(0);
    for (std::size_t i = 1; i < n; ++i) {
        if (root(i) != r) return false;
    }
    return true;
}

// True iff some vertex pair forms a K2 component (both endpoints degree 1
// and adjacent).
inline bool has_isolated_edge(const FiniteGraph& g) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (g.degree(a) == 1 && g.degree(b) == 1) return true;
    }
    return false;
}

// Sums recomputed from scratch; Infinite-tagged vertices are skipped.
inline bool brute_force_valid(const FiniteGraph& g, const Weighting& w) {
    std::map<VertexId, std::int64_t> sum;
    for (const auto& v : g.vertices()) sum[v] = w.vertex(v);
    for (const auto& e : g.edges()) {
        sum[e.u] += w.edge(e);
        sum[e.v] += w.edge(e);
    }
    for (const auto& e : g.edges()) {
        if (g.tag(e.u).is_infinite() || g.tag(e.v).is_infinite()) continue;
        if (sum[e.u] == sum[e.v]) return false;
    }
    return true;
}

// Odometer over the full product of lists; calls `visit` on every valid
// weighting. No pruning.
inline void brute_force_enumerate(const FiniteGraph& g, const ListAssignment& lists,
                                  const std::function<void(const Weighting&)>& visit) {
    std::vector<const WeightList*> item_lists;
    for (const auto& e : g.edges()) item_lists.push_back(&lists.edge_list(e));
    for (const auto& v : g.vertices()) item_lists.push_back(&lists.vertex_list(v));
    std::vector<std::size_t> digit(item_lists.size(), 0);
    while (true) {
        Weighting w;
        std::size_t k = 0;
        for (const auto& e : g.edges()) w.set_edge(e, (*item_lists[k])[digit[k]]), ++k;
        for (const auto& v : g.vertices()) w.set_vertex(v, (*item_lists[k])[digit[k]]), ++k;
        if (brute_force_valid(g, w)) visit(w);
        std::size_t pos = digit.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < item_lists[pos]->size()) break;
            digit[pos] = 0;
            if (pos == 0) return;
        }
        if (digit.empty()) return;
    }
}

inline std::size_t brute_force_count(const FiniteGraph& g, const ListAssignment& lists) {
    std::size_t count = 0;
    brute_force_enumerate(g, lists, [&](const Weighting&) { ++count; });
    return count;
}

// Random sorted list of `size` distinct values from [1, range].
inline WeightList random_list(std::mt19937_64& rng, int size, int range) {
    std::vector<int> pool(static_cast<std::size_t>(range));
    for (int i = 0; i < range; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(size); ++i) {
        std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    WeightList out(pool.begin(), pool.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

// Uniform labeled graph on n vertices with no K2 component (rejection).
inline FiniteGraph random_graph_without_isolated_edge(std::mt19937_64& rng, int n) {
    while (true) {
        std::uint64_t mask = 0;
        for (int k = 0; k < pair_count(n); ++k) {
            if (uniform_below(rng, 2) == 1) mask |= (std::uint64_t{1} << k);
        }
        FiniteGraph g = graph_from_mask(n, mask);
        if (!has_isolated_edge(g)) return g;
    }
}

}  // namespace weightlab::oracle
