#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weightlab/graph.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab {

struct SearchConfig {
    std::uint64_t node_budget = 10'000'000;
    // When set, each item's values are tried in a seeded shuffled order
    // instead of ascending order.
    std::optional<std::uint64_t> seed;
    // BFS root for the variable order within the component containing it.
    // Otherwise the root is the maximum-degree vertex (ties: smallest id).
    std::optional<VertexId> bfs_root;
};

enum class SolveStatus { Found, Unsat, Aborted };

std::string to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    Weighting witness;       // total on the graph when Found
    std::string diagnostic;  // why Unsat / Aborted
    std::uint64_t nodes = 0;

    bool found() const { return status == SolveStatus::Found; }
};

// Exact backtracking search for a valid weighting from `lists`.
//
// Each connected component is searched separately. Variables are ordered by
// BFS from the component root: when a vertex is dequeued its not yet ordered
// incident edges come first, then its own weight. A Finite vertex whose
// remaining items can only produce one sum is fixed; two adjacent fixed
// Finite vertices with the same sum force a backtrack. Edges with an
// Infinite endpoint carry no constraint.
//
// `pinned` values are fixed and never changed. Throws InputError if `lists`
// misses an item, or a pinned item is unknown or outside its list.
SolveOutcome solve(const FiniteGraph& g, const ListAssignment& lists,
                   const SearchConfig& cfg = {}, const Weighting& pinned = {});

// true = Found, false = Unsat, nullopt = budget exhausted.
std::optional<bool> solvable(const FiniteGraph& g, const ListAssignment& lists,
                             const SearchConfig& cfg = {});

// Runs `runs` searches with seeds cfg.seed (or 0), +1, +2, ... concurrently.
// The lowest-index Found wins, so the result is deterministic; Unsat from any
// run is final since every run is exhaustive.
SolveOutcome solve_portfolio(const FiniteGraph& g, const ListAssignment& lists,
                             const SearchConfig& cfg, unsigned runs,
                             const Weighting& pinned = {});

inline constexpr double kMaxEnumerationSpace = 1e8;

// Visits every valid weighting in lexicographic order of its packed values
// (see pack()). The visitor returns false to stop. Throws EnumerationTooLarge
// when the product of list sizes exceeds `max_space`.
void for_each_valid_weighting(const FiniteGraph& g, const ListAssignment& lists,
                              const std::function<bool(std::span<const Weight>)>& visit,
                              double max_space = kMaxEnumerationSpace);

// Every valid weighting in lexicographic order, truncated at `limit`.
// Without a limit the search space must not exceed kMaxEnumerationSpace.
std::vector<Weighting> enumerate_all(const FiniteGraph& g, const ListAssignment& lists,
                                     std::optional<std::size_t> limit = std::nullopt);

}  // namespace weightlab
