#include "search_core.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace weightlab::detail {

SearchCore::SearchCore(const FiniteGraph& g, const ListAssignment& lists, const SearchConfig& cfg,
                       std::vector<std::size_t> pinned_items)
    : g_(g), edges_(g.edge_count()), pinned_(std::move(pinned_items)) {
    std::size_t n = g.vertex_count();
    std::size_t m = edges_;
    ends_.resize(m);
    for (std::size_t e = 0; e < m; ++e) ends_[e] = g.endpoints(e);
    finite_.resize(n);
    for (std::size_t v = 0; v < n; ++v) finite_[v] = g.tag(v).is_finite();

    values_.resize(m + n);
    for (std::size_t e = 0; e < m; ++e) values_[e] = lists.edge_list(g.edges()[e]);
    for (std::size_t v = 0; v < n; ++v) values_[m + v] = lists.vertex_list(g.vertex(v));

    base_rem_min_.assign(n, 0);
    base_rem_max_.assign(n, 0);
    bound_lo_.resize(m + n);
    bound_hi_.resize(m + n);
    for (std::size_t k = 0; k < m + n; ++k) {
        bound_lo_[k] = values_[k].front();
        bound_hi_[k] = values_[k].back();
        for (std::size_t x : touched(k)) {
            base_rem_min_[x] += bound_lo_[k];
            base_rem_max_[x] += bound_hi_[k];
        }
    }
    constrained_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!finite_[v]) continue;
        for (std::size_t u : g.neighbors(v)) {
            if (finite_[u]) constrained_[v].push_back(u);
        }
    }

    if (cfg.seed) {
        std::mt19937_64 rng(*cfg.seed);
        for (auto& list : values_) std::shuffle(list.begin(), list.end(), rng);
    }
    value_.assign(m + n, 0);
    build_order(g, cfg);
    partial_.assign(n, 0);
    rem_min_ = base_rem_min_;
    rem_max_ = base_rem_max_;
}

bool SearchCore::set_pins(std::span<const Weight> values) {
    std::fill(partial_.begin(), partial_.end(), 0);
    rem_min_ = base_rem_min_;
    rem_max_ = base_rem_max_;
    for (std::size_t k = 0; k < pinned_.size(); ++k) {
        value_[pinned_[k]] = values[k];
        apply(pinned_[k], values[k], +1);
    }
    for (std::size_t v = 0; v < finite_.size(); ++v) {
        if (!point_consistent(v)) return false;
    }
    return true;
}

Step SearchCore::run(Budget& budget) { return descend(0, budget); }

void SearchCore::write_witness(Weighting& out) const {
    for (std::size_t e = 0; e < edges_; ++e) out.set_edge(g_.edges()[e], value_[e]);
    for (std::size_t v = 0; v < finite_.size(); ++v) out.set_vertex(g_.vertex(v), value_[edges_ + v]);
}

void SearchCore::apply(std::size_t item, Weight w, int sign) {
    for (std::size_t x : touched(item)) {
        partial_[x] += sign * static_cast<std::int64_t>(w);
        rem_min_[x] -= sign * bound_lo_[item];
        rem_max_[x] -= sign * bound_hi_[item];
    }
}

// False iff v has a single possible sum equal to the single possible sum of
// a constrained neighbour.
bool SearchCore::point_consistent(std::size_t v) const {
    if (!finite_[v] || lo(v) != hi(v)) return true;
    std::int64_t s = lo(v);
    for (std::size_t u : constrained_[v]) {
        if (lo(u) == hi(u) && lo(u) == s) return false;
    }
    return true;
}

Step SearchCore::descend(std::size_t pos, Budget& budget) {
    if (pos == order_.size()) return Step::Found;
    std::size_t item = order_[pos];
    for (Weight w : values_[item]) {
        if (++budget.used > budget.limit) return Step::Abort;
        if ((budget.used & 1023u) == 0 && budget.cancelled && budget.cancelled()) return Step::Abort;
        value_[item] = w;
        apply(item, w, +1);
        bool ok = true;
        for (std::size_t x : touched(item)) ok = ok && point_consistent(x);
        if (ok) {
            Step s = descend(pos + 1, budget);
            if (s != Step::Fail) return s;
        }
        apply(item, w, -1);
    }
    return Step::Fail;
}

void SearchCore::build_order(const FiniteGraph& g, const SearchConfig& cfg) {
    std::size_t n = g.vertex_count();
    std::size_t m = edges_;
    if (n == 0) return;
    std::size_t root = 0;
    std::optional<std::size_t> requested;
    if (cfg.bfs_root) requested = g.find(*cfg.bfs_root);
    if (requested) {
        root = *requested;
    } else {
        for (std::size_t v = 1; v < n; ++v) {
            if (g.degree(v) > g.degree(root)) root = v;
        }
    }
    std::vector<bool> emitted(m + n, false);
    for (std::size_t item : pinned_) emitted[item] = true;
    std::vector<bool> queued(n, false);
    std::queue<std::size_t> frontier;
    auto emit = [&](std::size_t item) {
        if (emitted[item]) return;
        emitted[item] = true;
        order_.push_back(item);
    };
    // Roots beyond the first only matter for disconnected input.
    for (std::size_t start = 0; start <= n; ++start) {
        std::size_t r = start == 0 ? root : start - 1;
        if (queued[r]) continue;
        queued[r] = true;
        frontier.push(r);
        while (!frontier.empty()) {
            std::size_t x = frontier.front();
            frontier.pop();
            auto nbrs = g.neighbors(x);
            auto inc = g.incident_edges(x);
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                emit(inc[k]);
                if (!queued[nbrs[k]]) {
                    queued[nbrs[k]] = true;
                    frontier.push(nbrs[k]);
                }
            }
            emit(m + x);
        }
    }
}

}  // namespace weightlab::detail
