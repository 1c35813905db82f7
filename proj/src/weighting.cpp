#include "weightlab/weighting.hpp"

#include <algorithm>
#include <numeric>

#include "weightlab/errors.hpp"

namespace weightlab {
namespace {

WeightList normalized(WeightList list, const std::string& what) {
    if (list.empty()) throw InputError("empty weight list for " + what);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

WeightList range(int lo, int hi) {
    if (hi < lo) throw InputError("weight range is empty");
    WeightList out(static_cast<std::size_t>(hi - lo + 1));
    std::iota(out.begin(), out.end(), lo);
    return out;
}

}  // namespace

ListAssignment ListAssignment::uniform(const FiniteGraph& g, WeightList vertex_list,
                                       WeightList edge_list) {
    vertex_list = normalized(std::move(vertex_list), "vertices");
    edge_list = normalized(std::move(edge_list), "edges");
    ListAssignment out;
    for (const auto& v : g.vertices()) out.vertex_lists_.emplace(v, vertex_list);
    for (const auto& e : g.edges()) out.edge_lists_.emplace(e, edge_list);
    return out;
}

ListAssignment ListAssignment::edge_k(const FiniteGraph& g, int k) {
    return uniform(g, {1}, range(1, k));
}

ListAssignment ListAssignment::total(const FiniteGraph& g, int a, int b) {
    return uniform(g, range(1, a), range(1, b));
}

void ListAssignment::set_vertex_list(const VertexId& v, WeightList list) {
    vertex_lists_[v] = normalized(std::move(list), "vertex '" + v.value + "'");
}

void ListAssignment::set_edge_list(const EdgeKey& e, WeightList list) {
    edge_lists_[e] = normalized(std::move(list), "edge " + e.str());
}

const WeightList& ListAssignment::vertex_list(const VertexId& v) const {
    auto it = vertex_lists_.find(v);
    if (it == vertex_lists_.end()) throw InputError("no list for vertex '" + v.value + "'");
    return it->second;
}

const WeightList& ListAssignment::edge_list(const EdgeKey& e) const {
    auto it = edge_lists_.find(e);
    if (it == edge_lists_.end()) throw InputError("no list for edge " + e.str());
    return it->second;
}

void ListAssignment::require_total_on(const FiniteGraph& g) const {
    for (const auto& v : g.vertices()) vertex_list(v);
    for (const auto& e : g.edges()) edge_list(e);
}

ListAssignment ListAssignment::restricted_to(const FiniteGraph& h) const {
    ListAssignment out;
    for (const auto& v : h.vertices()) out.vertex_lists_.emplace(v, vertex_list(v));
    for (const auto& e : h.edges()) out.edge_lists_.emplace(e, edge_list(e));
    return out;
}

double ListAssignment::search_space(const FiniteGraph& g) const {
    double product = 1.0;
    for (const auto& v : g.vertices()) product *= static_cast<double>(vertex_list(v).size());
    for (const auto& e : g.edges()) product *= static_cast<double>(edge_list(e).size());
    return product;
}

Weight Weighting::vertex(const VertexId& v) const {
    auto it = vertex_.find(v);
    if (it == vertex_.end()) throw InputError("no weight for vertex '" + v.value + "'");
    return it->second;
}

Weight Weighting::edge(const EdgeKey& e) const {
    auto it = edge_.find(e);
    if (it == edge_.end()) throw InputError("no weight for edge " + e.str());
    return it->second;
}

bool Weighting::is_total_on(const FiniteGraph& g) const {
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [&](const VertexId& v) { return vertex_.contains(v); }) &&
           std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const EdgeKey& e) { return edge_.contains(e); });
}

bool Weighting::respects(const ListAssignment& lists) const {
    for (const auto& [v, w] : vertex_) {
        if (!lists.has_vertex_list(v)) return false;
        const auto& l = lists.vertex_list(v);
        if (!std::binary_search(l.begin(), l.end(), w)) return false;
    }
    for (const auto& [e, w] : edge_) {
        if (!lists.has_edge_list(e)) return false;
        const auto& l = lists.edge_list(e);
        if (!std::binary_search(l.begin(), l.end(), w)) return false;
    }
    return true;
}

std::strong_ordering SumValue::operator<=>(const SumValue& other) const {
    if (is_finite() && other.is_finite()) return sum_ <=> other.sum_;
    if (is_finite() != other.is_finite()) return is_infinite() <=> other.is_infinite();
    return *rank_ <=> *other.rank_;
}

std::string SumValue::str() const {
    if (is_finite()) return std::to_string(sum_);
    return "infinite(" + std::to_string(*rank_) + ")";
}

SumValue weighted_degree(const FiniteGraph& g, const Weighting& w, const VertexId& v) {
    std::size_t i = g.index(v);
    if (g.tag(i).is_infinite()) return SumValue::infinite(g.tag(i).rank());
    std::int64_t s = w.vertex(v);
    for (std::size_t e : g.incident_edges(i)) s += w.edge(g.edges()[e]);
    return SumValue::finite(s);
}

ValidityReport check_validity(const FiniteGraph& g, const Weighting& w) {
    std::vector<SumValue> sums;
    sums.reserve(g.vertex_count());
    for (const auto& v : g.vertices()) sums.push_back(weighted_degree(g, w, v));
    ValidityReport report;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (sums[a].is_finite() && sums[a] == sums[b]) {
            report.violations.push_back({g.edges()[e], sums[a].value()});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

bool is_valid(const FiniteGraph& g, const Weighting& w) { return check_validity(g, w).valid; }

Weighting restrict(const Weighting& w, const FiniteGraph& h) {
    Weighting out;
    for (const auto& v : h.vertices()) out.set_vertex(v, w.vertex(v));
    for (const auto& e : h.edges()) out.set_edge(e, w.edge(e));
    return out;
}

std::vector<Weight> pack(const Weighting& w, const FiniteGraph& g) {
    std::vector<Weight> out;
    out.reserve(g.edge_count() + g.vertex_count());
    for (const auto& e : g.edges()) out.push_back(w.edge(e));
    for (const auto& v : g.vertices()) out.push_back(w.vertex(v));
    return out;
}

Weighting unpack(std::span<const Weight> values, const FiniteGraph& g) {
    if (values.size() != g.edge_count() + g.vertex_count()) {
        throw InputError("packed weighting has the wrong length");
    }
    Weighting out;
    std::size_t k = 0;
    for (const auto& e : g.edges()) out.set_edge(e, values[k++]);
    for (const auto& v : g.vertices()) out.set_vertex(v, values[k++]);
    return out;
}

}  // namespace weightlab
