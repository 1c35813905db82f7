#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weightlab/presented.hpp"
#include "weightlab/solver.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab {

// Finite approximation of the compactness argument on a presented graph.
//
// H_k is the subgraph induced by ball(P, v, k). For j <= N,
//   S_j^N = { restrict(w, H_j) : w a valid weighting of H_N }.
// Only finitely many N are computable, so "a restriction that survives every
// N" is approximated by the intersection of S_j^N over N = j..Nmax.
//
// All functions take one ListAssignment that must cover the largest ball
// involved; it is restricted to each ball as needed.

enum class RestrictionMethod { Enumeration, PinnedSearch };

std::string to_string(RestrictionMethod m);

struct RestrictionSet {
    std::string family;
    VertexId center;
    unsigned j = 0;
    unsigned n = 0;
    RestrictionMethod method = RestrictionMethod::Enumeration;
    FiniteGraph inner;                        // H_j
    std::vector<std::vector<Weight>> members;  // packed over `inner`, sorted, unique
    // Candidates whose extension status is unknown because the search budget
    // ran out. Zero means `members` is exact.
    std::size_t undecided = 0;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    bool contains(const Weighting& w) const;
    Weighting member(std::size_t i) const { return unpack(members[i], inner); }
};

// S_j^N by enumerating every valid weighting of H_N. Throws
// EnumerationTooLarge when the search space of H_N exceeds `max_space`; use
// restriction_set_by_search in that case.
RestrictionSet restriction_set(const PresentedGraph& p, const VertexId& center, unsigned j,
                               unsigned n, const ListAssignment& lists,
                               double max_space = kMaxEnumerationSpace);

// S_j^N as the set of weightings of H_j that extend to H_N, found by a
// depth-first walk over the items of H_j with a pinned solve on H_N at every
// node.
RestrictionSet restriction_set_by_search(const PresentedGraph& p, const VertexId& center,
                                         unsigned j, unsigned n, const ListAssignment& lists,
                                         const SearchConfig& cfg = {});

// Whether `partial` (any weighting of items inside H_N, typically total on
// some H_j) extends to a valid weighting of H_N. nullopt when the budget ran
// out. Validity of `partial` on its own ball is not required.
std::optional<bool> extends(const PresentedGraph& p, const VertexId& center, const Weighting& partial,
                            unsigned n, const ListAssignment& lists, const SearchConfig& cfg = {});

struct PersistenceOptions {
    // Upper bound on the product of list sizes over H_j.
    double max_candidate_space = kMaxEnumerationSpace;
    // How many persistent restrictions to keep (the smallest, in
    // lexicographic packed order).
    std::size_t sample_limit = 8;
    SearchConfig search;  // node budget applies to each membership test
};

struct LevelSummary {
    unsigned n = 0;
    std::size_t size = 0;       // |S_j^N|
    std::size_t undecided = 0;  // candidates whose test ran out of budget
};

struct PersistenceReport {
    std::string family;
    VertexId center;
    unsigned j = 0;
    unsigned nmax = 0;
    FiniteGraph inner;
    // Weightings of H_j valid on every edge between two vertices at distance
    // < j. Every member of every S_j^N is one of these.
    std::size_t candidates = 0;
    std::vector<LevelSummary> levels;  // N = j..nmax
    std::size_t persistent_count = 0;  // |intersection over all levels|
    std::vector<std::vector<Weight>> persistent_sample;  // packed over `inner`
    // carry_rates[k] = |S_j^N ∩ S_j^{N+1}| / |S_j^N| for N = j + k.
    std::vector<double> carry_rates;
    bool exact = true;  // no membership test ran out of budget

    bool persistent_nonempty() const { return persistent_count > 0; }
    std::string finding() const;
};

// Streams the candidates of H_j in lexicographic order and tests each one for
// membership in every S_j^N, N = j..nmax, with one reusable pinned search per
// level. Nothing proportional to |S_j^N| is stored.
PersistenceReport persistence(const PresentedGraph& p, const VertexId& center, unsigned j,
                              unsigned nmax, const ListAssignment& lists,
                              const PersistenceOptions& options = {});

// w_2 ⊂ w_3 ⊂ ... ⊂ w_nmax: one valid weighting of H_nmax restricted to every
// inner ball. Each element is checked to extend to H_nmax. Throws InputError
// if H_nmax has no valid weighting (a bad list assignment) and
// std::runtime_error if the search budget runs out.
std::vector<Weighting> konig_chain(const PresentedGraph& p, const VertexId& center, unsigned nmax,
                                   const ListAssignment& lists, const SearchConfig& cfg = {});

struct StabilityReport {
    bool stable = true;
    std::size_t sums_checked = 0;
    std::size_t neighborhoods_checked = 0;
    std::vector<VertexId> unstable;
};

// For a weighting `w` of H_{i+1}: every vertex at distance <= i-1 has the
// same weighted degree in H_i (under the restriction of w) as in H_{i+1}, and
// every vertex at distance <= i has the same neighbourhood in H_{i+1} as in
// H_{i+2}. Vertices at distance exactly i lose neighbours in H_i and are not
// compared.
StabilityReport interior_sum_stability(const PresentedGraph& p, const VertexId& center, unsigned i,
                                       const Weighting& w);

}  // namespace weightlab
