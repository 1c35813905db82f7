#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

#include "weightlab/errors.hpp"
#include "weightlab/solver.hpp"

namespace weightlab {
namespace {

// Depth-first walk over the items in packed order (edges, then vertices).
// A vertex is complete once its last item is set; a vertex with a singleton
// list is complete at its last incident edge. An edge between two complete
// Finite vertices with equal sums cuts the branch.
class Enumerator {
public:
    Enumerator(const FiniteGraph& g, const ListAssignment& lists) : g_(g) {
        std::size_t m = g.edge_count();
        std::size_t n = g.vertex_count();
        for (const auto& e : g.edges()) lists_.push_back(&lists.edge_list(e));
        for (const auto& v : g.vertices()) lists_.push_back(&lists.vertex_list(v));
        values_.assign(m + n, 0);
        sums_.assign(n, 0);
        fixed_.assign(n, false);
        complete_at_.assign(n, 0);
        closes_.resize(m + n);
        for (std::size_t v = 0; v < n; ++v) {
            const auto& own = *lists_[m + v];
            auto inc = g.incident_edges(v);
            if (own.size() == 1 && !inc.empty()) {
                fixed_[v] = true;
                sums_[v] = own.front();
                complete_at_[v] = *std::max_element(inc.begin(), inc.end());
            } else {
                complete_at_[v] = m + v;
            }
            closes_[complete_at_[v]].push_back(v);
        }
    }

    void run(const std::function<bool(std::span<const Weight>)>& visit) {
        visit_ = &visit;
        stopped_ = false;
        walk(0);
    }

private:
    void walk(std::size_t k) {
        if (stopped_) return;
        if (k == values_.size()) {
            if (!(*visit_)(values_)) stopped_ = true;
            return;
        }
        std::size_t m = g_.edge_count();
        for (Weight w : *lists_[k]) {
            values_[k] = w;
            std::size_t a = 0;
            std::size_t b = 0;
            if (k < m) {
                std::tie(a, b) = g_.endpoints(k);
                sums_[a] += w;
                sums_[b] += w;
            } else {
                a = b = k - m;
                if (!fixed_[a]) sums_[a] += w;
            }
            if (closes_ok(k)) walk(k + 1);
            if (k < m) {
                sums_[a] -= w;
                sums_[b] -= w;
            } else if (!fixed_[a]) {
                sums_[a] -= w;
            }
            if (stopped_) return;
        }
    }

    bool closes_ok(std::size_t k) const {
        for (std::size_t v : closes_[k]) {
            if (g_.tag(v).is_infinite()) continue;
            for (std::size_t u : g_.neighbors(v)) {
                if (complete_at_[u] <= k && g_.tag(u).is_finite() && sums_[u] == sums_[v]) return false;
            }
        }
        return true;
    }

    const FiniteGraph& g_;
    std::vector<const WeightList*> lists_;
    std::vector<Weight> values_;
    std::vector<std::int64_t> sums_;
    std::vector<bool> fixed_;
    std::vector<std::size_t> complete_at_;
    std::vector<std::vector<std::size_t>> closes_;
    const std::function<bool(std::span<const Weight>)>* visit_ = nullptr;
    bool stopped_ = false;
};

}  // namespace

void for_each_valid_weighting(const FiniteGraph& g, const ListAssignment& lists,
                              const std::function<bool(std::span<const Weight>)>& visit,
                              double max_space) {
    lists.require_total_on(g);
    double space = lists.search_space(g);
    if (space > max_space) {
        std::ostringstream msg;
        msg << "enumeration space " << space << " exceeds the limit " << max_space;
        throw EnumerationTooLarge(msg.str());
    }
    Enumerator(g, lists).run(visit);
}

std::vector<Weighting> enumerate_all(const FiniteGraph& g, const ListAssignment& lists,
                                     std::optional<std::size_t> limit) {
    std::vector<Weighting> out;
    if (limit && *limit == 0) return out;
    double cap = limit ? std::numeric_limits<double>::infinity() : kMaxEnumerationSpace;
    for_each_valid_weighting(
        g, lists,
        [&](std::span<const Weight> values) {
            out.push_back(unpack(values, g));
            return !limit || out.size() < *limit;
        },
        cap);
    return out;
}

}  // namespace weightlab
