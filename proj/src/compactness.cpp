#include "weightlab/compactness.hpp"

#include <algorithm>
#include <set>

#include "search_core.hpp"
#include "weightlab/errors.hpp"

namespace weightlab {
namespace {

void check_radii(unsigned j, unsigned n) {
    if (j < 2) throw InputError("inner radius j must be at least 2");
    if (n < j) throw InputError("outer radius N must be at least j");
}

// Position of every packed item of `inner` inside the packed layout of `outer`.
std::vector<std::size_t> packed_positions(const FiniteGraph& inner, const FiniteGraph& outer) {
    std::vector<std::size_t> pos;
    pos.reserve(inner.edge_count() + inner.vertex_count());
    for (const auto& e : inner.edges()) {
        auto idx = outer.find_edge(e);
        if (!idx) throw InputError("edge " + e.str() + " of the inner ball is missing from the outer ball");
        pos.push_back(*idx);
    }
    for (const auto& v : inner.vertices()) pos.push_back(outer.edge_count() + outer.index(v));
    return pos;
}

SearchConfig rooted(const SearchConfig& cfg, const VertexId& center) {
    SearchConfig out = cfg;
    if (!out.bfs_root) out.bfs_root = center;
    return out;
}

// Walks the items of H_j in packed order; a branch survives while the pinned
// prefix still extends to a valid weighting of H_N.
class ProjectedSearch {
public:
    ProjectedSearch(const FiniteGraph& inner, const FiniteGraph& outer, const ListAssignment& lists,
                    const SearchConfig& cfg)
        : inner_(inner), outer_(outer), lists_(lists), cfg_(cfg) {
        for (const auto& e : inner.edges()) item_lists_.push_back(&lists.edge_list(e));
        for (const auto& v : inner.vertices()) item_lists_.push_back(&lists.vertex_list(v));
        values_.resize(item_lists_.size());
    }

    void run(RestrictionSet& out) {
        out_ = &out;
        SolveOutcome root = solve(outer_, lists_, cfg_, pins_);
        if (root.status == SolveStatus::Aborted) {
            ++out.undecided;
            return;
        }
        if (root.found()) descend(0, root.witness);
    }

private:
    void set_pin(std::size_t k, Weight w) {
        std::size_t m = inner_.edge_count();
        if (k < m) {
            pins_.set_edge(inner_.edges()[k], w);
        } else {
            pins_.set_vertex(inner_.vertex(k - m), w);
        }
    }

    void clear_pin(std::size_t k) {
        // rebuild without item k; prefixes are short so this stays cheap
        Weighting next;
        std::size_t m = inner_.edge_count();
        for (std::size_t i = 0; i < k; ++i) {
            if (i < m) {
                next.set_edge(inner_.edges()[i], values_[i]);
            } else {
                next.set_vertex(inner_.vertex(i - m), values_[i]);
            }
        }
        pins_ = std::move(next);
    }

    Weight witness_value(const Weighting& w, std::size_t k) const {
        std::size_t m = inner_.edge_count();
        return k < m ? w.edge(inner_.edges()[k]) : w.vertex(inner_.vertex(k - m));
    }

    void descend(std::size_t k, const Weighting& witness) {
        if (k == values_.size()) {
            out_->members.push_back(values_);
            return;
        }
        for (Weight x : *item_lists_[k]) {
            values_[k] = x;
            set_pin(k, x);
            if (witness_value(witness, k) == x) {
                descend(k + 1, witness);
            } else {
                SolveOutcome r = solve(outer_, lists_, cfg_, pins_);
                if (r.found()) {
                    descend(k + 1, r.witness);
                } else if (r.status == SolveStatus::Aborted) {
                    ++out_->undecided;
                }
            }
            clear_pin(k);
        }
    }

    const FiniteGraph& inner_;
    const FiniteGraph& outer_;
    const ListAssignment& lists_;
    SearchConfig cfg_;
    std::vector<const WeightList*> item_lists_;
    std::vector<Weight> values_;
    Weighting pins_;
    RestrictionSet* out_ = nullptr;
};

}  // namespace

std::string to_string(RestrictionMethod m) {
    return m == RestrictionMethod::Enumeration ? "enumeration" : "pinned_search";
}

bool RestrictionSet::contains(const Weighting& w) const {
    auto packed = pack(w, inner);
    return std::binary_search(members.begin(), members.end(), packed);
}

RestrictionSet restriction_set(const PresentedGraph& p, const VertexId& center, unsigned j,
                               unsigned n, const ListAssignment& lists, double max_space) {
    check_radii(j, n);
    Ball outer = ball(p, center, n);
    Ball inner = ball(p, center, j);
    ListAssignment outer_lists = lists.restricted_to(outer.graph);
    auto pos = packed_positions(inner.graph, outer.graph);

    std::set<std::vector<Weight>> seen;
    std::vector<Weight> buffer(pos.size());
    try {
        for_each_valid_weighting(
            outer.graph, outer_lists,
            [&](std::span<const Weight> values) {
                for (std::size_t k = 0; k < pos.size(); ++k) buffer[k] = values[pos[k]];
                seen.insert(buffer);
                return true;
            },
            max_space);
    } catch (const EnumerationTooLarge& e) {
        throw EnumerationTooLarge(std::string(e.what()) + "; ball of radius " + std::to_string(n) +
                                  " is too large to enumerate, use pinned-search membership instead");
    }

    RestrictionSet out;
    out.family = p.name();
    out.center = center;
    out.j = j;
    out.n = n;
    out.method = RestrictionMethod::Enumeration;
    out.inner = std::move(inner.graph);
    out.members.assign(seen.begin(), seen.end());
    return out;
}

RestrictionSet restriction_set_by_search(const PresentedGraph& p, const VertexId& center,
                                         unsigned j, unsigned n, const ListAssignment& lists,
                                         const SearchConfig& cfg) {
    check_radii(j, n);
    Ball outer = ball(p, center, n);
    Ball inner = ball(p, center, j);
    ListAssignment outer_lists = lists.restricted_to(outer.graph);

    RestrictionSet out;
    out.family = p.name();
    out.center = center;
    out.j = j;
    out.n = n;
    out.method = RestrictionMethod::PinnedSearch;
    out.inner = inner.graph;
    ProjectedSearch(out.inner, outer.graph, outer_lists, rooted(cfg, center)).run(out);
    // the walk visits leaves in lexicographic order already
    return out;
}

std::optional<bool> extends(const PresentedGraph& p, const VertexId& center, const Weighting& partial,
                            unsigned n, const ListAssignment& lists, const SearchConfig& cfg) {
    Ball outer = ball(p, center, n);
    for (const auto& [v, w] : partial.vertex_weights()) {
        if (!outer.graph.contains(v)) throw InputError("vertex '" + v.value + "' lies outside the ball");
    }
    for (const auto& [e, w] : partial.edge_weights()) {
        if (!outer.graph.contains(e)) throw InputError("edge " + e.str() + " lies outside the ball");
    }
    ListAssignment outer_lists = lists.restricted_to(outer.graph);
    SolveOutcome r = solve(outer.graph, outer_lists, rooted(cfg, center), partial);
    if (r.status == SolveStatus::Aborted) return std::nullopt;
    return r.found();
}

std::string PersistenceReport::finding() const {
    if (!exact) {
        return "search budget exhausted on some membership test; sizes and the persistent count are lower bounds";
    }
    if (persistent_nonempty()) {
        return "restrictions to H_j survived every tested outer radius";
    }
    return "no restriction to H_j survived every tested outer radius (a finding, not a failure: "
           "survival is only guaranteed in the infinite limit)";
}

PersistenceReport persistence(const PresentedGraph& p, const VertexId& center, unsigned j,
                              unsigned nmax, const ListAssignment& lists,
                              const PersistenceOptions& options) {
    check_radii(j, nmax);
    const std::size_t level_count = nmax - j + 1;
    if (level_count > 16) throw InputError("at most 16 outer radii per run");

    Ball inner = ball(p, center, j);
    ListAssignment inner_lists = lists.restricted_to(inner.graph);

    // Boundary vertices of H_j get more neighbours in H_N, so only edges
    // between two interior vertices constrain a candidate.
    std::vector<std::pair<VertexId, DegreeTag>> tagged;
    for (const auto& v : inner.graph.vertices()) {
        tagged.emplace_back(v, inner.distance.at(v) < j ? DegreeTag::finite() : DegreeTag::infinite(0));
    }
    FiniteGraph candidate_graph(std::move(tagged), {inner.graph.edges().begin(), inner.graph.edges().end()});

    SearchConfig cfg = rooted(options.search, center);
    std::vector<Ball> outers;
    outers.reserve(level_count);
    for (unsigned n = j; n <= nmax; ++n) outers.push_back(ball(p, center, n));
    std::vector<ListAssignment> outer_lists;
    std::vector<detail::SearchCore> cores;
    outer_lists.reserve(level_count);
    cores.reserve(level_count);
    for (const auto& outer : outers) {
        outer_lists.push_back(lists.restricted_to(outer.graph));
        cores.emplace_back(outer.graph, outer_lists.back(), cfg, packed_positions(inner.graph, outer.graph));
    }

    PersistenceReport report;
    report.family = p.name();
    report.center = center;
    report.j = j;
    report.nmax = nmax;
    report.inner = inner.graph;
    for (unsigned n = j; n <= nmax; ++n) report.levels.push_back({n, 0, 0});

    const std::uint32_t all = (std::uint32_t{1} << level_count) - 1;
    std::vector<std::uint64_t> by_mask(std::size_t{1} << level_count, 0);
    try {
        for_each_valid_weighting(
            candidate_graph, inner_lists,
            [&](std::span<const Weight> values) {
                ++report.candidates;
                std::uint32_t mask = 0;
                for (std::size_t k = 0; k < level_count; ++k) {
                    if (!cores[k].set_pins(values)) continue;
                    detail::Budget budget{cfg.node_budget, 0, {}};
                    detail::Step step = cores[k].run(budget);
                    if (step == detail::Step::Found) {
                        mask |= std::uint32_t{1} << k;
                    } else if (step == detail::Step::Abort) {
                        ++report.levels[k].undecided;
                    }
                }
                ++by_mask[mask];
                if (mask == all && report.persistent_sample.size() < options.sample_limit) {
                    report.persistent_sample.emplace_back(values.begin(), values.end());
                }
                return true;
            },
            options.max_candidate_space);
    } catch (const EnumerationTooLarge& e) {
        throw EnumerationTooLarge(std::string(e.what()) + "; too many candidate weightings of the ball of radius " +
                                  std::to_string(j));
    }

    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        for (std::size_t k = 0; k < level_count; ++k) {
            if (mask >> k & 1u) report.levels[k].size += by_mask[mask];
        }
    }
    report.persistent_count = by_mask[all];
    for (std::size_t k = 0; k + 1 < level_count; ++k) {
        std::uint32_t pair = (std::uint32_t{1} << k) | (std::uint32_t{1} << (k + 1));
        std::uint64_t kept = 0;
        for (std::uint32_t mask = 0; mask <= all; ++mask) {
            if ((mask & pair) == pair) kept += by_mask[mask];
        }
        double base = static_cast<double>(report.levels[k].size);
        report.carry_rates.push_back(base == 0 ? 0.0 : static_cast<double>(kept) / base);
    }
    for (const auto& level : report.levels) {
        if (level.undecided > 0) report.exact = false;
    }
    return report;
}

std::vector<Weighting> konig_chain(const PresentedGraph& p, const VertexId& center, unsigned nmax,
                                   const ListAssignment& lists, const SearchConfig& cfg) {
    if (nmax < 2) throw InputError("chain needs an outer radius of at least 2");
    Ball outer = ball(p, center, nmax);
    ListAssignment outer_lists = lists.restricted_to(outer.graph);
    SolveOutcome r = solve(outer.graph, outer_lists, rooted(cfg, center));
    if (r.status == SolveStatus::Unsat) {
        throw InputError("ball of radius " + std::to_string(nmax) +
                         " has no valid weighting; check the list assignment");
    }
    if (r.status == SolveStatus::Aborted) {
        throw std::runtime_error("search budget exhausted on the ball of radius " + std::to_string(nmax));
    }
    std::vector<Weighting> chain;
    for (unsigned k = 2; k <= nmax; ++k) {
        Weighting wk = restrict(r.witness, ball(p, center, k).graph);
        if (extends(p, center, wk, nmax, lists, cfg) != true) {
            throw std::logic_error("chain element for radius " + std::to_string(k) + " does not extend");
        }
        chain.push_back(std::move(wk));
    }
    return chain;
}

StabilityReport interior_sum_stability(const PresentedGraph& p, const VertexId& center, unsigned i,
                                       const Weighting& w) {
    Ball hi = ball(p, center, i);
    Ball hi1 = ball(p, center, i + 1);
    Ball hi2 = ball(p, center, i + 2);
    Weighting wi = restrict(w, hi.graph);

    StabilityReport report;
    for (const auto& z : hi.members) {
        if (hi.distance.at(z) + 1 > i) continue;  // boundary of H_i
        ++report.sums_checked;
        if (weighted_degree(hi.graph, wi, z) != weighted_degree(hi1.graph, w, z)) {
            report.unstable.push_back(z);
        }
    }
    for (const auto& z : hi.members) {
        ++report.neighborhoods_checked;
        auto a = hi1.graph.neighbors(hi1.graph.index(z));
        auto b = hi2.graph.neighbors(hi2.graph.index(z));
        bool same = a.size() == b.size() &&
                    std::equal(a.begin(), a.end(), b.begin(), [&](std::size_t x, std::size_t y) {
                        return hi1.graph.vertex(x) == hi2.graph.vertex(y);
                    });
        if (!same && std::find(report.unstable.begin(), report.unstable.end(), z) == report.unstable.end()) {
            report.unstable.push_back(z);
        }
    }
    std::sort(report.unstable.begin(), report.unstable.end());
    report.stable = report.unstable.empty();
    return report;
}

}  // namespace weightlab
