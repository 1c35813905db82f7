#include "weightlab/graph.hpp"

#include <algorithm>
#include <queue>

#include "weightlab/errors.hpp"

namespace weightlab {

std::strong_ordering DegreeTag::operator<=>(const DegreeTag& other) const {
    if (is_finite() || other.is_finite()) return is_infinite() <=> other.is_infinite();
    return *rank_ <=> *other.rank_;
}

std::string DegreeTag::str() const {
    if (is_finite()) return "finite";
    return "infinite(" + std::to_string(*rank_) + ")";
}

FiniteGraph::FiniteGraph(std::vector<std::pair<VertexId, DegreeTag>> vertices,
                         std::vector<EdgeKey> edges) {
    std::map<VertexId, DegreeTag> declared;
    for (auto& [id, tag] : vertices) {
        auto [it, inserted] = declared.emplace(id, tag);
        if (!inserted && it->second != tag) {
            throw InputError("vertex '" + id.value + "' declared with conflicting tags");
        }
    }
    for (const auto& e : edges) {
        if (e.u == e.v) throw InputError("loop edge at vertex '" + e.u.value + "'");
        declared.emplace(e.u, DegreeTag::finite());
        declared.emplace(e.v, DegreeTag::finite());
    }
    ids_.reserve(declared.size());
    tags_.reserve(declared.size());
    for (auto& [id, tag] : declared) {
        ids_.push_back(id);
        tags_.push_back(tag);
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.resize(ids_.size());
    incidence_.resize(ids_.size());
    ends_.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::size_t a = index(edges_[e].u);
        std::size_t b = index(edges_[e].v);
        ends_.emplace_back(a, b);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
        incidence_[a].push_back(e);
        incidence_[b].push_back(e);
    }
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        // sort neighbours and keep incidence aligned
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        pairs.reserve(adjacency_[i].size());
        for (std::size_t k = 0; k < adjacency_[i].size(); ++k) {
            pairs.emplace_back(adjacency_[i][k], incidence_[i][k]);
        }
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            adjacency_[i][k] = pairs[k].first;
            incidence_[i][k] = pairs[k].second;
        }
    }
}

std::optional<std::size_t> FiniteGraph::find(const VertexId& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t FiniteGraph::index(const VertexId& id) const {
    auto i = find(id);
    if (!i) throw InputError("unknown vertex '" + id.value + "'");
    return *i;
}

std::optional<std::size_t> FiniteGraph::find_edge(const EdgeKey& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

FiniteGraph from_edge_list(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                           const TagMap& tags) {
    std::vector<std::pair<VertexId, DegreeTag>> vertices(tags.begin(), tags.end());
    std::vector<EdgeKey> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
    return FiniteGraph(std::move(vertices), std::move(edges));
}

std::vector<FiniteGraph> components(const FiniteGraph& g) {
    std::vector<FiniteGraph> out;
    std::vector<bool> seen(g.vertex_count(), false);
    // vertices are stored in id order, so each new root is the smallest of its component
    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        std::vector<VertexId> members;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        seen[root] = true;
        while (!frontier.empty()) {
            std::size_t x = frontier.front();
            frontier.pop();
            members.push_back(g.vertex(x));
            for (std::size_t y : g.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        out.push_back(induced_subgraph(g, members));
    }
    return out;
}

bool is_isolated_edge_component(const FiniteGraph& h) {
    return h.vertex_count() == 2 && h.edge_count() == 1 && h.tag(0).is_finite() &&
           h.tag(1).is_finite();
}

FiniteGraph induced_subgraph(const FiniteGraph& g, std::span<const VertexId> subset) {
    std::vector<bool> keep(g.vertex_count(), false);
    std::vector<std::pair<VertexId, DegreeTag>> vertices;
    vertices.reserve(subset.size());
    for (const auto& id : subset) {
        auto i = g.find(id);
        if (!i) throw InputError("vertex '" + id.value + "' is not in the graph");
        keep[*i] = true;
        vertices.emplace_back(id, g.tag(*i));
    }
    std::vector<EdgeKey> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (keep[a] && keep[b]) edges.push_back(g.edges()[e]);
    }
    return FiniteGraph(std::move(vertices), std::move(edges));
}

FiniteGraph remove_edges(const FiniteGraph& g, std::span<const EdgeKey> drop) {
    std::vector<bool> removed(g.edge_count(), false);
    for (const auto& e : drop) {
        auto idx = g.find_edge(e);
        if (!idx) throw InputError("edge " + e.str() + " is not in the graph");
        removed[*idx] = true;
    }
    std::vector<std::pair<VertexId, DegreeTag>> vertices;
    vertices.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) vertices.emplace_back(g.vertex(i), g.tag(i));
    std::vector<EdgeKey> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!removed[e]) edges.push_back(g.edges()[e]);
    }
    return FiniteGraph(std::move(vertices), std::move(edges));
}

}  // namespace weightlab
