#include "weightlab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <future>

#include "search_core.hpp"
#include "weightlab/errors.hpp"

namespace weightlab {
namespace {

using detail::Budget;
using detail::SearchCore;
using detail::Step;

// Packed indices and values of the pinned items of `h`, in packed order.
std::pair<std::vector<std::size_t>, std::vector<Weight>> pinned_items(const FiniteGraph& h,
                                                                      const Weighting& pinned) {
    std::vector<std::size_t> items;
    std::vector<Weight> values;
    std::size_t m = h.edge_count();
    for (std::size_t e = 0; e < m; ++e) {
        if (pinned.has_edge(h.edges()[e])) {
            items.push_back(e);
            values.push_back(pinned.edge(h.edges()[e]));
        }
    }
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (pinned.has_vertex(h.vertex(v))) {
            items.push_back(m + v);
            values.push_back(pinned.vertex(h.vertex(v)));
        }
    }
    return {std::move(items), std::move(values)};
}

void validate_inputs(const FiniteGraph& g, const ListAssignment& lists, const Weighting& pinned) {
    lists.require_total_on(g);
    for (const auto& [e, w] : pinned.edge_weights()) {
        if (!g.contains(e)) throw InputError("pinned edge " + e.str() + " is not in the graph");
        const auto& l = lists.edge_list(e);
        if (!std::binary_search(l.begin(), l.end(), w)) {
            throw InputError("pinned value " + std::to_string(w) + " for edge " + e.str() +
                             " is outside its list");
        }
    }
    for (const auto& [v, w] : pinned.vertex_weights()) {
        if (!g.contains(v)) throw InputError("pinned vertex '" + v.value + "' is not in the graph");
        const auto& l = lists.vertex_list(v);
        if (!std::binary_search(l.begin(), l.end(), w)) {
            throw InputError("pinned value " + std::to_string(w) + " for vertex '" + v.value +
                             "' is outside its list");
        }
    }
}

// A Finite K2 whose endpoint weights are forced equal has no valid weighting.
std::optional<std::string> forced_isolated_edge(const FiniteGraph& h, const ListAssignment& lists,
                                                const Weighting& pinned) {
    if (!is_isolated_edge_component(h)) return std::nullopt;
    auto fixed = [&](const VertexId& v) -> std::optional<Weight> {
        if (pinned.has_vertex(v)) return pinned.vertex(v);
        const auto& l = lists.vertex_list(v);
        if (l.size() == 1) return l.front();
        return std::nullopt;
    };
    auto a = fixed(h.vertex(0));
    auto b = fixed(h.vertex(1));
    if (a && b && *a == *b) {
        return "isolated edge " + h.edges()[0].str() + ": endpoint sums are always equal";
    }
    return std::nullopt;
}

SolveOutcome solve_with(const FiniteGraph& g, const ListAssignment& lists, const SearchConfig& cfg,
                        const Weighting& pinned, std::function<bool()> cancelled) {
    validate_inputs(g, lists, pinned);
    SolveOutcome out;
    Budget budget{cfg.node_budget, 0, std::move(cancelled)};
    bool aborted = false;
    for (const auto& h : components(g)) {
        if (auto why = forced_isolated_edge(h, lists, pinned)) {
            out.status = SolveStatus::Unsat;
            out.diagnostic = *why;
            out.witness = Weighting();
            out.nodes = budget.used;
            return out;
        }
        if (aborted) continue;  // an Unsat later on still decides the outcome
        auto [items, values] = pinned_items(h, pinned);
        SearchCore search(h, lists, cfg, std::move(items));
        Step step = search.set_pins(values) ? search.run(budget) : Step::Fail;
        if (step == Step::Fail) {
            out.status = SolveStatus::Unsat;
            out.diagnostic = "no valid weighting for the component containing '" + h.vertex(0).value + "'";
            out.witness = Weighting();
            out.nodes = budget.used;
            return out;
        }
        if (step == Step::Abort) {
            aborted = true;
            out.diagnostic = "node budget exhausted in the component containing '" + h.vertex(0).value + "'";
            continue;
        }
        search.write_witness(out.witness);
    }
    out.nodes = budget.used;
    if (aborted) {
        out.status = SolveStatus::Aborted;
        out.witness = Weighting();
        return out;
    }
    out.status = SolveStatus::Found;
    return out;
}

}  // namespace

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::Unsat: return "unsat";
        case SolveStatus::Aborted: return "aborted";
    }
    return {};
}

SolveOutcome solve(const FiniteGraph& g, const ListAssignment& lists, const SearchConfig& cfg,
                   const Weighting& pinned) {
    return solve_with(g, lists, cfg, pinned, {});
}

std::optional<bool> solvable(const FiniteGraph& g, const ListAssignment& lists,
                             const SearchConfig& cfg) {
    auto outcome = solve(g, lists, cfg);
    if (outcome.status == SolveStatus::Aborted) return std::nullopt;
    return outcome.found();
}

SolveOutcome solve_portfolio(const FiniteGraph& g, const ListAssignment& lists,
                             const SearchConfig& cfg, unsigned runs, const Weighting& pinned) {
    if (runs <= 1) {
        SearchConfig single = cfg;
        if (!single.seed) single.seed = 0;
        return solve(g, lists, single, pinned);
    }
    validate_inputs(g, lists, pinned);
    std::atomic<unsigned> winner{runs};
    std::atomic<bool> refuted{false};
    std::vector<std::future<SolveOutcome>> futures;
    std::uint64_t base = cfg.seed.value_or(0);
    for (unsigned i = 0; i < runs; ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            SearchConfig local = cfg;
            local.seed = base + i;
            auto cancelled = [&, i] { return refuted.load() || winner.load() < i; };
            SolveOutcome r = solve_with(g, lists, local, pinned, cancelled);
            if (r.status == SolveStatus::Found) {
                unsigned cur = winner.load();
                while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                }
            } else if (r.status == SolveStatus::Unsat) {
                refuted.store(true);
            }
            return r;
        }));
    }
    std::vector<SolveOutcome> results;
    for (auto& f : futures) results.push_back(f.get());
    for (const auto& r : results) {
        if (r.status == SolveStatus::Unsat) return r;
    }
    for (const auto& r : results) {
        if (r.status == SolveStatus::Found) return r;
    }
    return results.front();
}

}  // namespace weightlab
