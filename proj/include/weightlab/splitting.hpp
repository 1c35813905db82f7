#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weightlab/graph.hpp"
#include "weightlab/solver.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab {

// Reduction of a graph with Infinite-tagged vertices to finite problems:
//   1. strip every edge whose endpoints are both Infinite,
//   2. replace each Infinite vertex v by one pendant copy v_u per neighbour u,
//      joined only to u and carrying v's list and tag,
//   3. solve the components of the split graph,
//   4. lift the solutions back to the original graph.

// G minus every edge with two Infinite endpoints (any ranks).
FiniteGraph strip_infinite_edges(const FiniteGraph& g);

struct CopyVertex {
    VertexId origin;    // the Infinite vertex v
    VertexId neighbor;  // u
    VertexId copy;      // v_u
};

struct SplitMap {
    FiniteGraph stripped;  // G'
    FiniteGraph split;     // H'
    std::vector<CopyVertex> copies;  // ordered by (origin, neighbor)

    std::optional<CopyVertex> find_copy(const VertexId& copy) const;
};

struct SplitResult {
    FiniteGraph graph;     // H'
    SplitMap map;
    ListAssignment lists;  // L' on H'
};

// Splits every Infinite vertex of `stripped`. Copy ids are "<v>@<u>" (primed
// if that id is taken). Throws InputError if an Infinite-Infinite edge remains
// or `lists` does not cover `stripped`.
SplitResult split_infinite(const FiniteGraph& stripped, const ListAssignment& lists);

struct ComponentOutcome {
    FiniteGraph component;
    // K2 with an Infinite endpoint: the pendant side's only neighbour has an
    // infinite sum, so no search is needed.
    bool exempt = false;
    SolveOutcome outcome;  // meaningful when !exempt
};

// One entry per component of `split`, ordered by smallest vertex.
std::vector<ComponentOutcome> solve_split(const FiniteGraph& split, const ListAssignment& lists,
                                          const SearchConfig& cfg = {});

struct LiftResult {
    Weighting weighting;
    ValidityReport report;
};

// Maps component solutions back onto `original`. Free choices (stripped
// edges, edges of exempt components, weights of Infinite vertices and of
// vertices only in exempt components) take the minimum of their list.
// Throws InputError if a non-exempt component is not Found or an item of
// `original` is left without a value.
LiftResult lift(const std::vector<ComponentOutcome>& outcomes, const SplitMap& map,
                const FiniteGraph& original, const ListAssignment& lists);

struct SplitReport {
    std::vector<EdgeKey> stripped_edges;
    SplitResult split;
    std::vector<ComponentOutcome> outcomes;
    SolveStatus status = SolveStatus::Found;  // Unsat / Aborted if some component is
    std::string diagnostic;
    std::optional<LiftResult> lifted;         // set when status is Found
};

// strip -> split -> solve -> lift.
SplitReport split_and_solve(const FiniteGraph& g, const ListAssignment& lists,
                            const SearchConfig& cfg = {});

}  // namespace weightlab
