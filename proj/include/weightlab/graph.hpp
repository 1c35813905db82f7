#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weightlab/vertex_id.hpp"

namespace weightlab {

// Symbolic degree of a vertex. Infinite ranks are order tokens for cardinals
// (rank 0 ~ aleph_0, rank 1 ~ aleph_1, ...); no arithmetic is defined on them.
class DegreeTag {
public:
    static DegreeTag finite() { return DegreeTag(); }
    static DegreeTag infinite(unsigned rank) { return DegreeTag(rank); }

    bool is_infinite() const { return rank_.has_value(); }
    bool is_finite() const { return !rank_.has_value(); }
    unsigned rank() const { return rank_.value(); }

    bool operator==(const DegreeTag&) const = default;
    std::strong_ordering operator<=>(const DegreeTag& other) const;

    std::string str() const;

private:
    DegreeTag() = default;
    explicit DegreeTag(unsigned rank) : rank_(rank) {}

    std::optional<unsigned> rank_;
};

using TagMap = std::map<VertexId, DegreeTag>;

// Simple undirected graph with a degree tag per vertex. Immutable after
// construction. Vertices are kept in VertexId order and addressed by dense
// indices; edges are kept in EdgeKey order.
//
// A vertex tagged Infinite may have any finite number of represented
// neighbours: the tag, not the represented degree, is authoritative.
class FiniteGraph {
public:
    FiniteGraph() = default;

    // Duplicate vertices and edges are collapsed. Edge endpoints missing from
    // `vertices` are added as Finite. Throws InputError on a loop or on a
    // vertex declared twice with different tags.
    FiniteGraph(std::vector<std::pair<VertexId, DegreeTag>> vertices,
                std::vector<EdgeKey> edges);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return ids_.empty(); }

    std::span<const VertexId> vertices() const { return ids_; }
    std::span<const EdgeKey> edges() const { return edges_; }

    const VertexId& vertex(std::size_t i) const { return ids_[i]; }
    const DegreeTag& tag(std::size_t i) const { return tags_[i]; }
    const DegreeTag& tag(const VertexId& id) const { return tags_[index(id)]; }

    std::optional<std::size_t> find(const VertexId& id) const;
    std::size_t index(const VertexId& id) const;  // throws InputError if absent
    bool contains(const VertexId& id) const { return find(id).has_value(); }

    std::optional<std::size_t> find_edge(const EdgeKey& e) const;
    bool contains(const EdgeKey& e) const { return find_edge(e).has_value(); }

    // Endpoint indices of edge `e`, first < second.
    std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const { return ends_[e]; }

    // Neighbour indices in vertex order; incident_edges(i)[k] joins i and neighbors(i)[k].
    std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
    std::span<const std::size_t> incident_edges(std::size_t i) const { return incidence_[i]; }
    std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

    bool operator==(const FiniteGraph& other) const {
        return ids_ == other.ids_ && tags_ == other.tags_ && edges_ == other.edges_;
    }

private:
    std::vector<VertexId> ids_;
    std::vector<DegreeTag> tags_;
    std::vector<EdgeKey> edges_;
    std::vector<std::pair<std::size_t, std::size_t>> ends_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::vector<std::size_t>> incidence_;
};

// Builds a graph from an edge list. Untagged vertices are Finite; tags for
// vertices absent from `pairs` add isolated vertices.
FiniteGraph from_edge_list(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                           const TagMap& tags = {});

// Connected components as induced subgraphs, ordered by smallest vertex.
std::vector<FiniteGraph> components(const FiniteGraph& g);

// True iff `h` is K2 with both endpoints Finite: the isolated-edge obstruction.
bool is_isolated_edge_component(const FiniteGraph& h);

// Subgraph induced by `subset`. Throws InputError if a vertex is not in `g`.
FiniteGraph induced_subgraph(const FiniteGraph& g, std::span<const VertexId> subset);

// Copy of `g` without the listed edges (all must be present).
FiniteGraph remove_edges(const FiniteGraph& g, std::span<const EdgeKey> drop);

}  // namespace weightlab
