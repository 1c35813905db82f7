#include "weightlab/splitting.hpp"

#include <algorithm>
#include <set>

#include "weightlab/errors.hpp"

namespace weightlab {

FiniteGraph strip_infinite_edges(const FiniteGraph& g) {
    std::vector<EdgeKey> drop;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (g.tag(a).is_infinite() && g.tag(b).is_infinite()) drop.push_back(g.edges()[e]);
    }
    return remove_edges(g, drop);
}

std::optional<CopyVertex> SplitMap::find_copy(const VertexId& copy) const {
    for (const auto& c : copies) {
        if (c.copy == copy) return c;
    }
    return std::nullopt;
}

SplitResult split_infinite(const FiniteGraph& stripped, const ListAssignment& lists) {
    lists.require_total_on(stripped);
    for (std::size_t e = 0; e < stripped.edge_count(); ++e) {
        auto [a, b] = stripped.endpoints(e);
        if (stripped.tag(a).is_infinite() && stripped.tag(b).is_infinite()) {
            throw InputError("edge " + stripped.edges()[e].str() +
                             " joins two Infinite vertices; strip it before splitting");
        }
    }

    std::set<VertexId> taken(stripped.vertices().begin(), stripped.vertices().end());
    std::vector<std::pair<VertexId, DegreeTag>> vertices;
    std::vector<EdgeKey> edges;
    SplitResult out;

    for (std::size_t v = 0; v < stripped.vertex_count(); ++v) {
        const VertexId& id = stripped.vertex(v);
        if (stripped.tag(v).is_finite()) {
            vertices.emplace_back(id, stripped.tag(v));
            out.lists.set_vertex_list(id, lists.vertex_list(id));
        }
    }
    for (std::size_t e = 0; e < stripped.edge_count(); ++e) {
        auto [a, b] = stripped.endpoints(e);
        if (stripped.tag(a).is_finite() && stripped.tag(b).is_finite()) {
            edges.push_back(stripped.edges()[e]);
            out.lists.set_edge_list(stripped.edges()[e], lists.edge_list(stripped.edges()[e]));
        }
    }
    for (std::size_t v = 0; v < stripped.vertex_count(); ++v) {
        if (stripped.tag(v).is_finite()) continue;
        const VertexId& origin = stripped.vertex(v);
        for (std::size_t u : stripped.neighbors(v)) {
            const VertexId& neighbor = stripped.vertex(u);
            std::string name = origin.value + "@" + neighbor.value;
            while (taken.contains(VertexId(name))) name += "'";
            VertexId copy(name);
            taken.insert(copy);
            vertices.emplace_back(copy, stripped.tag(v));
            EdgeKey pendant(copy, neighbor);
            edges.push_back(pendant);
            out.lists.set_vertex_list(copy, lists.vertex_list(origin));
            out.lists.set_edge_list(pendant, lists.edge_list(EdgeKey(origin, neighbor)));
            out.map.copies.push_back({origin, neighbor, copy});
        }
    }
    out.graph = FiniteGraph(std::move(vertices), std::move(edges));
    out.map.stripped = stripped;
    out.map.split = out.graph;
    return out;
}

std::vector<ComponentOutcome> solve_split(const FiniteGraph& split, const ListAssignment& lists,
                                          const SearchConfig& cfg) {
    std::vector<ComponentOutcome> out;
    for (auto& h : components(split)) {
        ComponentOutcome c;
        c.exempt = h.vertex_count() == 2 && h.edge_count() == 1 &&
                   (h.tag(0).is_infinite() || h.tag(1).is_infinite());
        if (!c.exempt) c.outcome = solve(h, lists.restricted_to(h), cfg);
        c.component = std::move(h);
        out.push_back(std::move(c));
    }
    return out;
}

LiftResult lift(const std::vector<ComponentOutcome>& outcomes, const SplitMap& map,
                const FiniteGraph& original, const ListAssignment& lists) {
    Weighting w;
    auto original_edge = [&](const EdgeKey& e) -> EdgeKey {
        if (auto c = map.find_copy(e.u)) return EdgeKey(c->origin, c->neighbor);
        if (auto c = map.find_copy(e.v)) return EdgeKey(c->origin, c->neighbor);
        return e;
    };
    for (const auto& c : outcomes) {
        if (c.exempt) continue;
        if (!c.outcome.found()) {
            throw InputError("component containing '" + c.component.vertex(0).value + "' is " +
                             to_string(c.outcome.status) + ", nothing to lift");
        }
        for (const auto& [e, value] : c.outcome.witness.edge_weights()) w.set_edge(original_edge(e), value);
        for (const auto& [v, value] : c.outcome.witness.vertex_weights()) {
            if (!map.find_copy(v)) w.set_vertex(v, value);
        }
    }
    // free choices
    for (const auto& c : outcomes) {
        if (!c.exempt) continue;
        for (const auto& e : c.component.edges()) {
            EdgeKey orig = original_edge(e);
            w.set_edge(orig, lists.edge_list(orig).front());
        }
    }
    for (const auto& e : original.edges()) {
        auto [a, b] = std::pair(original.index(e.u), original.index(e.v));
        if (original.tag(a).is_infinite() && original.tag(b).is_infinite()) {
            w.set_edge(e, lists.edge_list(e).front());
        }
    }
    for (std::size_t v = 0; v < original.vertex_count(); ++v) {
        const VertexId& id = original.vertex(v);
        if (original.tag(v).is_infinite() || !w.has_vertex(id)) {
            bool in_exempt = original.tag(v).is_infinite();
            for (const auto& c : outcomes) {
                if (c.exempt && c.component.contains(id)) in_exempt = true;
            }
            if (in_exempt) w.set_vertex(id, lists.vertex_list(id).front());
        }
    }
    for (const auto& v : original.vertices()) {
        if (!w.has_vertex(v)) throw InputError("no component outcome covers vertex '" + v.value + "'");
    }
    for (const auto& e : original.edges()) {
        if (!w.has_edge(e)) throw InputError("no component outcome covers edge " + e.str());
    }
    LiftResult out;
    out.report = check_validity(original, w);
    out.weighting = std::move(w);
    return out;
}

SplitReport split_and_solve(const FiniteGraph& g, const ListAssignment& lists, const SearchConfig& cfg) {
    lists.require_total_on(g);
    SplitReport report;
    FiniteGraph stripped = strip_infinite_edges(g);
    for (const auto& e : g.edges()) {
        if (!stripped.contains(e)) report.stripped_edges.push_back(e);
    }
    report.split = split_infinite(stripped, lists);
    report.outcomes = solve_split(report.split.graph, report.split.lists, cfg);

    bool aborted = false;
    for (const auto& c : report.outcomes) {
        if (c.exempt) continue;
        if (c.outcome.status == SolveStatus::Unsat) {
            report.status = SolveStatus::Unsat;
            report.diagnostic = c.outcome.diagnostic;
            return report;
        }
        if (c.outcome.status == SolveStatus::Aborted && !aborted) {
            aborted = true;
            report.diagnostic = c.outcome.diagnostic;
        }
    }
    if (aborted) {
        report.status = SolveStatus::Aborted;
        return report;
    }
    report.lifted = lift(report.outcomes, report.split.map, g, lists);
    return report;
}

}  // namespace weightlab
