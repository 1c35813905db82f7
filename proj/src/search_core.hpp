#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "weightlab/graph.hpp"
#include "weightlab/solver.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab::detail {

enum class Step { Found, Fail, Abort };

struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;
    std::function<bool()> cancelled;  // polled every 1024 nodes
};

// Backtracking search over one graph whose set of pinned items is fixed at
// construction, so the variable order and constraint structure are built
// once and reused across runs with different pinned values.
//
// Items 0..E-1 are the edges of the graph in EdgeKey order, E..E+V-1 its
// vertices in VertexId order (the packed layout).
class SearchCore {
public:
    SearchCore(const FiniteGraph& g, const ListAssignment& lists, const SearchConfig& cfg,
               std::vector<std::size_t> pinned_items);

    std::span<const std::size_t> pinned_items() const { return pinned_; }

    // values[k] is the value of pinned_items()[k]. Returns false if the pins
    // alone already force two adjacent Finite sums to coincide.
    bool set_pins(std::span<const Weight> values);
    Step run(Budget& budget);

    // After run() returned Found.
    std::vector<Weight> packed_solution() const { return value_; }
    void write_witness(Weighting& out) const;

private:
    struct Touched {
        std::size_t ids[2];
        std::size_t count;
        const std::size_t* begin() const { return ids; }
        const std::size_t* end() const { return ids + count; }
    };

    Touched touched(std::size_t item) const {
        if (item < edges_) return {{ends_[item].first, ends_[item].second}, 2};
        return {{item - edges_, 0}, 1};
    }

    void apply(std::size_t item, Weight w, int sign);
    std::int64_t lo(std::size_t v) const { return partial_[v] + rem_min_[v]; }
    std::int64_t hi(std::size_t v) const { return partial_[v] + rem_max_[v]; }
    bool point_consistent(std::size_t v) const;
    Step descend(std::size_t pos, Budget& budget);
    void build_order(const FiniteGraph& g, const SearchConfig& cfg);

    const FiniteGraph& g_;
    std::size_t edges_;
    std::vector<std::pair<std::size_t, std::size_t>> ends_;
    std::vector<bool> finite_;
    std::vector<WeightList> values_;  // try order
    std::vector<std::int64_t> bound_lo_;
    std::vector<std::int64_t> bound_hi_;
    std::vector<std::size_t> pinned_;
    std::vector<std::size_t> order_;
    std::vector<Weight> value_;
    std::vector<std::vector<std::size_t>> constrained_;

    std::vector<std::int64_t> base_rem_min_;
    std::vector<std::int64_t> base_rem_max_;
    std::vector<std::int64_t> partial_;
    std::vector<std::int64_t> rem_min_;
    std::vector<std::int64_t> rem_max_;
};

}  // namespace weightlab::detail
