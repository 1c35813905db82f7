#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weightlab/graph.hpp"

namespace weightlab {

using Weight = int;
using WeightList = std::vector<Weight>;  // sorted, duplicate-free, nonempty

// Weight lists for the vertices (L_v) and edges (L_e) of a graph.
//
// The pure edge problem is the total problem with every L_v = {1}.
class ListAssignment {
public:
    ListAssignment() = default;

    // Same vertex list and edge list everywhere.
    static ListAssignment uniform(const FiniteGraph& g, WeightList vertex_list, WeightList edge_list);
    // L_v = {1}, L_e = {1,2,3}.
    static ListAssignment edge123(const FiniteGraph& g) { return edge_k(g, 3); }
    // L_v = {1}, L_e = {1..k}.
    static ListAssignment edge_k(const FiniteGraph& g, int k);
    // L_v = {1..a}, L_e = {1..b}.
    static ListAssignment total(const FiniteGraph& g, int a, int b);

    // Sorts and deduplicates; throws InputError on an empty list.
    void set_vertex_list(const VertexId& v, WeightList list);
    void set_edge_list(const EdgeKey& e, WeightList list);

    bool has_vertex_list(const VertexId& v) const { return vertex_lists_.contains(v); }
    bool has_edge_list(const EdgeKey& e) const { return edge_lists_.contains(e); }
    const WeightList& vertex_list(const VertexId& v) const;
    const WeightList& edge_list(const EdgeKey& e) const;

    const std::map<VertexId, WeightList>& vertex_lists() const { return vertex_lists_; }
    const std::map<EdgeKey, WeightList>& edge_lists() const { return edge_lists_; }

    // Throws InputError naming the first vertex or edge of `g` without a list.
    void require_total_on(const FiniteGraph& g) const;

    // Lists of the items of `h` only.
    ListAssignment restricted_to(const FiniteGraph& h) const;

    // Product of list sizes over the items of `g`.
    double search_space(const FiniteGraph& g) const;

    bool operator==(const ListAssignment&) const = default;

private:
    std::map<VertexId, WeightList> vertex_lists_;
    std::map<EdgeKey, WeightList> edge_lists_;
};

// omega: V u E -> integers.
class Weighting {
public:
    void set_vertex(const VertexId& v, Weight w) { vertex_[v] = w; }
    void set_edge(const EdgeKey& e, Weight w) { edge_[e] = w; }

    bool has_vertex(const VertexId& v) const { return vertex_.contains(v); }
    bool has_edge(const EdgeKey& e) const { return edge_.contains(e); }
    Weight vertex(const VertexId& v) const;  // throws InputError if unset
    Weight edge(const EdgeKey& e) const;

    const std::map<VertexId, Weight>& vertex_weights() const { return vertex_; }
    const std::map<EdgeKey, Weight>& edge_weights() const { return edge_; }
    bool empty() const { return vertex_.empty() && edge_.empty(); }

    // Every vertex and edge of `g` has a value.
    bool is_total_on(const FiniteGraph& g) const;
    // Every assigned value belongs to its list in `lists` (missing lists fail).
    bool respects(const ListAssignment& lists) const;

    bool operator==(const Weighting&) const = default;
    auto operator<=>(const Weighting&) const = default;

private:
    std::map<VertexId, Weight> vertex_;
    std::map<EdgeKey, Weight> edge_;
};

// Weighted degree. Finite sums compare numerically and sit below every
// infinite sum; infinite sums are equal exactly when their ranks are.
class SumValue {
public:
    static SumValue finite(std::int64_t s) { return SumValue(s, std::nullopt); }
    static SumValue infinite(unsigned rank) { return SumValue(0, rank); }

    bool is_finite() const { return !rank_.has_value(); }
    bool is_infinite() const { return rank_.has_value(); }
    std::int64_t value() const { return sum_; }
    unsigned rank() const { return *rank_; }

    bool operator==(const SumValue&) const = default;
    std::strong_ordering operator<=>(const SumValue& other) const;

    std::string str() const;

private:
    SumValue(std::int64_t s, std::optional<unsigned> r) : sum_(s), rank_(r) {}

    std::int64_t sum_;
    std::optional<unsigned> rank_;
};

// s(v) = sum of incident edge weights + w(v), or Infinite(rank) when v is
// tagged Infinite. Throws InputError if v is absent or a needed weight is unset.
SumValue weighted_degree(const FiniteGraph& g, const Weighting& w, const VertexId& v);

struct Violation {
    EdgeKey edge;
    std::int64_t sum = 0;  // the shared finite sum

    bool operator==(const Violation&) const = default;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;  // EdgeKey order
};

// An edge is violated iff both endpoint sums are finite and equal. Edges whose
// endpoints share the same infinite degree are exempt.
ValidityReport check_validity(const FiniteGraph& g, const Weighting& w);
bool is_valid(const FiniteGraph& g, const Weighting& w);

// Pointwise restriction to the items of `h`. Validity is not preserved in
// general. Throws InputError if an item of `h` has no value in `w`.
Weighting restrict(const Weighting& w, const FiniteGraph& h);

// Values of `w` in canonical item order (edges in EdgeKey order, then
// vertices in VertexId order) and back.
std::vector<Weight> pack(const Weighting& w, const FiniteGraph& g);
Weighting unpack(std::span<const Weight> values, const FiniteGraph& g);

}  // namespace weightlab
