#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "oracle.hpp"
#include "weightlab/compactness.hpp"
#include "weightlab/errors.hpp"

using namespace weightlab;

namespace {

using Packed = std::vector<std::vector<Weight>>;

ListAssignment edge123_for(const PresentedGraph& p, const VertexId& c, unsigned r) {
    return ListAssignment::edge123(ball(p, c, r).graph);
}

// Restrictions of every valid weighting of H_n, computed with the odometer
// oracle instead of the library enumerator.
Packed oracle_restrictions(const PresentedGraph& p, const VertexId& c, unsigned j, unsigned n) {
    auto outer = ball(p, c, n).graph;
    auto inner = ball(p, c, j).graph;
    std::set<std::vector<Weight>> out;
    oracle::brute_force_enumerate(outer, ListAssignment::edge123(outer),
                                   [&](const Weighting& w) { out.insert(pack(restrict(w, inner), inner)); });
    return {out.begin(), out.end()};
}

Packed intersect(const Packed& a, const Packed& b) {
    Packed out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Every edge123 weighting of `g` in lexicographic packed order.
Packed all_weightings(const FiniteGraph& g) {
    Packed out;
    std::vector<Weight> x(g.edge_count() + g.vertex_count(), 1);
    while (true) {
        out.push_back(x);
        std::size_t k = g.edge_count();
        while (k > 0) {
            --k;
            if (++x[k] <= 3) break;
            x[k] = 1;
            if (k == 0) return out;
        }
        if (g.edge_count() == 0) return out;
    }
}

struct Case {
    const char* family;
    unsigned n;
};

}  // namespace

TEST(RestrictionSet, PathInnerEqualsOuterIsAllValidWeightings) {
    auto p = PresentedGraph::path();
    auto lists = edge123_for(p, "0", 2);
    auto s = restriction_set(p, "0", 2, 2, lists);
    auto h2 = ball(p, "0", 2).graph;
    auto all = enumerate_all(h2, ListAssignment::edge123(h2));
    ASSERT_EQ(s.size(), all.size());
    for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(s.members[k], pack(all[k], h2));
    EXPECT_EQ(s.members, oracle_restrictions(p, "0", 2, 2));
    EXPECT_EQ(s.method, RestrictionMethod::Enumeration);
    EXPECT_EQ(s.undecided, 0u);
}

TEST(RestrictionSet, JEqualsNIsValidWeightingsForEveryFamily) {
    for (const auto& name : {"path", "ladder", "tree:3"}) {
        auto p = PresentedGraph::parse(name);
        auto c = p.default_center();
        auto h = ball(p, c, 2).graph;
        auto s = restriction_set(p, c, 2, 2, ListAssignment::edge123(h));
        std::size_t valid = oracle::brute_force_count(h, ListAssignment::edge123(h));
        EXPECT_EQ(s.size(), valid) << name;
        for (std::size_t k = 0; k < s.size(); ++k) EXPECT_TRUE(is_valid(h, s.member(k)));
    }
}

TEST(RestrictionSet, PathOuterRadiiAgreeWithOracle) {
    auto p = PresentedGraph::path();
    auto lists = edge123_for(p, "0", 5);
    for (unsigned n = 2; n <= 5; ++n) {
        auto s = restriction_set(p, "0", 2, n, lists);
        EXPECT_FALSE(s.empty());
        EXPECT_EQ(s.members, oracle_restrictions(p, "0", 2, n)) << n;
        EXPECT_TRUE(std::is_sorted(s.members.begin(), s.members.end()));
        EXPECT_TRUE(std::adjacent_find(s.members.begin(), s.members.end()) == s.members.end());
    }
}

TEST(RestrictionSet, SearchRouteMatchesEnumerationRoute) {
    for (Case c : {Case{"path", 2}, Case{"path", 3}, Case{"path", 4}, Case{"ladder", 2}, Case{"tree:3", 2}}) {
        auto p = PresentedGraph::parse(c.family);
        auto center = p.default_center();
        auto lists = edge123_for(p, center, c.n);
        auto a = restriction_set(p, center, 2, c.n, lists);
        auto b = restriction_set_by_search(p, center, 2, c.n, lists);
        EXPECT_EQ(b.method, RestrictionMethod::PinnedSearch);
        EXPECT_EQ(b.undecided, 0u);
        EXPECT_EQ(a.members, b.members) << c.family << " " << c.n;
        EXPECT_EQ(a.inner, b.inner);
    }
}

TEST(RestrictionSet, TooLargeForEnumeration) {
    auto p = PresentedGraph::grid2d();
    auto lists = edge123_for(p, "0,0", 3);
    EXPECT_THROW(restriction_set(p, "0,0", 2, 3, lists), EnumerationTooLarge);
    EXPECT_THROW(restriction_set(p, "0,0", 1, 3, lists), InputError);
    EXPECT_THROW(restriction_set(p, "0,0", 3, 2, lists), InputError);
}

TEST(RestrictionSet, ContainsAndMember) {
    auto p = PresentedGraph::path();
    auto s = restriction_set(p, "0", 2, 3, edge123_for(p, "0", 3));
    ASSERT_FALSE(s.empty());
    EXPECT_TRUE(s.contains(s.member(0)));
    EXPECT_EQ(pack(s.member(s.size() - 1), s.inner), s.members.back());
}

TEST(Extends, MembershipSoundness) {
    for (Case c : {Case{"path", 2}, Case{"path", 3}, Case{"path", 4}, Case{"tree:3", 2}}) {
        auto p = PresentedGraph::parse(c.family);
        auto center = p.default_center();
        auto lists = edge123_for(p, center, c.n);
        auto members = oracle_restrictions(p, center, 2, c.n);
        auto inner = ball(p, center, 2).graph;
        auto candidates = all_weightings(inner);
        std::size_t stride = candidates.size() > 1000 ? 7 : 1;
        for (std::size_t k = 0; k < candidates.size(); k += stride) {
            const auto& x = candidates[k];
            bool expected = std::binary_search(members.begin(), members.end(), x);
            EXPECT_EQ(extends(p, center, unpack(x, inner), c.n, lists), expected) << c.family << " " << c.n;
        }
    }
}

TEST(Extends, JEqualsNMatchesValidity) {
    auto p = PresentedGraph::ladder();
    auto h = ball(p, "0,0", 2).graph;
    auto lists = ListAssignment::edge123(h);
    auto candidates = all_weightings(h);
    for (std::size_t k = 0; k < candidates.size(); k += 7) {
        Weighting w = unpack(candidates[k], h);
        EXPECT_EQ(extends(p, "0,0", w, 2, lists), oracle::brute_force_valid(h, w));
    }
}

TEST(Extends, InteriorViolationNeverExtends) {
    auto p = PresentedGraph::path();
    auto lists = edge123_for(p, "0", 6);
    auto h2 = ball(p, "0", 2).graph;
    // s(-1) = 1 + 1 + 2 = 4 = s(0) = 1 + 2 + 1
    Weighting w;
    for (const auto& v : h2.vertices()) w.set_vertex(v, 1);
    w.set_edge(EdgeKey("-2", "-1"), 1);
    w.set_edge(EdgeKey("-1", "0"), 2);
    w.set_edge(EdgeKey("0", "1"), 1);
    w.set_edge(EdgeKey("1", "2"), 1);
    for (unsigned n = 3; n <= 6; ++n) EXPECT_EQ(extends(p, "0", w, n, lists), false) << n;
}

TEST(Extends, BoundaryFlexibleWeightingExtends) {
    auto p = PresentedGraph::path();
    auto lists = edge123_for(p, "0", 4);
    auto h2 = ball(p, "0", 2).graph;
    auto valid = enumerate_all(h2, ListAssignment::edge123(h2));
    ASSERT_FALSE(valid.empty());
    std::size_t extended = 0;
    for (const auto& w : valid) extended += extends(p, "0", w, 4, lists) == true;
    EXPECT_GT(extended, 0u);
}

TEST(Extends, RejectsItemsOutsideTheBall) {
    auto p = PresentedGraph::path();
    Weighting w;
    w.set_vertex("9", 1);
    EXPECT_THROW(extends(p, "0", w, 3, edge123_for(p, "0", 3)), InputError);
}

TEST(Extends, UnknownUnderTinyBudget) {
    auto p = PresentedGraph::grid2d();
    SearchConfig cfg;
    cfg.node_budget = 3;
    EXPECT_EQ(extends(p, "0,0", Weighting(), 3, edge123_for(p, "0,0", 3), cfg), std::nullopt);
}

TEST(Persistence, MatchesMaterializedSets) {
    for (Case c : {Case{"path", 5}, Case{"ladder", 4}, Case{"tree:3", 3}}) {
        auto p = PresentedGraph::parse(c.family);
        auto center = p.default_center();
        auto lists = edge123_for(p, center, c.n);
        std::vector<Packed> sets;
        for (unsigned n = 2; n <= c.n; ++n) sets.push_back(restriction_set_by_search(p, center, 2, n, lists).members);
        if (std::string(c.family) == "path") {
            for (unsigned n = 2; n <= c.n; ++n) ASSERT_EQ(sets[n - 2], oracle_restrictions(p, center, 2, n));
        }
        PersistenceOptions opt;
        opt.sample_limit = 5;
        auto r = persistence(p, center, 2, c.n, lists, opt);
        ASSERT_EQ(r.levels.size(), sets.size());
        EXPECT_TRUE(r.exact);
        Packed common = sets[0];
        for (std::size_t k = 0; k < sets.size(); ++k) {
            EXPECT_EQ(r.levels[k].n, 2 + k);
            EXPECT_EQ(r.levels[k].size, sets[k].size()) << c.family << " " << k;
            EXPECT_EQ(r.levels[k].undecided, 0u);
            common = intersect(common, sets[k]);
        }
        EXPECT_EQ(r.persistent_count, common.size());
        Packed head(common.begin(), common.begin() + std::min<std::size_t>(5, common.size()));
        EXPECT_EQ(r.persistent_sample, head);
        ASSERT_EQ(r.carry_rates.size(), sets.size() - 1);
        for (std::size_t k = 0; k + 1 < sets.size(); ++k) {
            double expected = static_cast<double>(intersect(sets[k], sets[k + 1]).size()) / sets[k].size();
            EXPECT_DOUBLE_EQ(r.carry_rates[k], expected);
        }
        EXPECT_EQ(r.inner, ball(p, center, 2).graph);
    }
}

TEST(Persistence, CandidatesCoverEveryLevel) {
    auto p = PresentedGraph::ladder();
    auto lists = edge123_for(p, "0,0", 3);
    auto r = persistence(p, "0,0", 2, 3, lists);
    for (const auto& l : r.levels) EXPECT_LE(l.size, r.candidates);
    auto inner = ball(p, "0,0", 2);
    std::size_t interior_valid = 0;
    for (const auto& x : all_weightings(inner.graph)) {
        Weighting w = unpack(x, inner.graph);
        bool ok = true;
        for (const auto& e : inner.graph.edges()) {
            if (inner.distance.at(e.u) < 2 && inner.distance.at(e.v) < 2 &&
                weighted_degree(inner.graph, w, e.u) == weighted_degree(inner.graph, w, e.v)) {
                ok = false;
            }
        }
        interior_valid += ok;
    }
    EXPECT_EQ(r.candidates, interior_valid);
}

TEST(Persistence, SingleLevelIsTheRestrictionSet) {
    auto p = PresentedGraph::regular_tree(3);
    auto lists = edge123_for(p, "r", 2);
    auto r = persistence(p, "r", 2, 2, lists);
    auto s = restriction_set(p, "r", 2, 2, lists);
    EXPECT_EQ(r.persistent_count, s.size());
    EXPECT_TRUE(r.carry_rates.empty());
}

TEST(Persistence, DesignatedExamples) {
    auto path = PresentedGraph::path();
    auto r = persistence(path, "0", 2, 6, edge123_for(path, "0", 6));
    EXPECT_TRUE(r.persistent_nonempty());
    EXPECT_NE(r.finding().find("survived"), std::string::npos);
    for (const auto& x : r.persistent_sample) {
        for (unsigned n = 2; n <= 6; ++n) {
            EXPECT_EQ(extends(path, "0", unpack(x, r.inner), n, edge123_for(path, "0", 6)), true);
        }
    }

    auto tree = PresentedGraph::regular_tree(3);
    auto t = persistence(tree, "r", 2, 4, edge123_for(tree, "r", 4));
    for (const auto& l : t.levels) EXPECT_GT(l.size, 0u);
}

TEST(Persistence, EmptyIntersectionIsReportedAsFinding) {
    PersistenceReport r;
    r.persistent_count = 0;
    EXPECT_FALSE(r.persistent_nonempty());
    EXPECT_NE(r.finding().find("no restriction"), std::string::npos);
    r.exact = false;
    EXPECT_NE(r.finding().find("budget"), std::string::npos);
}

TEST(Persistence, BudgetExhaustionMakesItInexact) {
    auto p = PresentedGraph::ladder();
    PersistenceOptions opt;
    opt.search.node_budget = 2;
    auto r = persistence(p, "0,0", 2, 4, edge123_for(p, "0,0", 4), opt);
    EXPECT_FALSE(r.exact);
    EXPECT_GT(r.levels.back().undecided, 0u);
}

TEST(Persistence, RejectsBadRadii) {
    auto p = PresentedGraph::path();
    EXPECT_THROW(persistence(p, "0", 1, 3, edge123_for(p, "0", 3)), InputError);
    EXPECT_THROW(persistence(p, "0", 3, 2, edge123_for(p, "0", 3)), InputError);
}

TEST(KonigChain, CoherentChains) {
    for (Case c : {Case{"path", 5}, Case{"grid2d", 3}, Case{"ladder", 4}, Case{"tree:3", 2}}) {
        auto p = PresentedGraph::parse(c.family);
        auto center = p.default_center();
        auto lists = edge123_for(p, center, c.n);
        auto chain = konig_chain(p, center, c.n, lists);
        ASSERT_EQ(chain.size(), c.n - 1) << c.family;
        for (unsigned k = 2; k <= c.n; ++k) {
            const auto& w = chain[k - 2];
            auto hk = ball(p, center, k).graph;
            EXPECT_TRUE(w.is_total_on(hk));
            EXPECT_EQ(w.vertex_weights().size(), hk.vertex_count());
            EXPECT_EQ(w.edge_weights().size(), hk.edge_count());
            if (k > 2) EXPECT_EQ(restrict(w, ball(p, center, k - 1).graph), chain[k - 3]);
            EXPECT_EQ(extends(p, center, w, c.n, lists), true);
        }
        EXPECT_TRUE(is_valid(ball(p, center, c.n).graph, chain.back()));
    }
}

TEST(KonigChain, Errors) {
    auto p = PresentedGraph::path();
    EXPECT_THROW(konig_chain(p, "0", 1, edge123_for(p, "0", 1)), InputError);
    auto h = ball(p, "0", 3).graph;
    EXPECT_THROW(konig_chain(p, "0", 3, ListAssignment::edge_k(h, 1)), InputError);
}

TEST(InteriorStability, RandomValidWeightings) {
    for (const auto& name : {"path", "ladder", "tree:3", "grid2d"}) {
        auto p = PresentedGraph::parse(name);
        auto center = p.default_center();
        for (unsigned i = 1; i <= 4; ++i) {
            auto h = ball(p, center, i + 1).graph;
            auto lists = ListAssignment::edge123(h);
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                SearchConfig cfg;
                cfg.seed = seed;
                auto r = solve(h, lists, cfg);
                ASSERT_TRUE(r.found());
                auto s = interior_sum_stability(p, center, i, r.witness);
                EXPECT_TRUE(s.stable) << name << " " << i;
                auto bi = ball(p, center, i);
                EXPECT_EQ(s.sums_checked, bi.within(i - 1).size());
                EXPECT_EQ(s.neighborhoods_checked, bi.members.size());
            }
        }
    }
}

TEST(InteriorStability, BoundarySumsCanDiffer) {
    auto p = PresentedGraph::path();
    auto h3 = ball(p, "0", 3).graph;
    auto h2 = ball(p, "0", 2).graph;
    auto w = solve(h3, ListAssignment::edge123(h3)).witness;
    EXPECT_NE(weighted_degree(h2, restrict(w, h2), "2"), weighted_degree(h3, w, "2"));
    EXPECT_TRUE(interior_sum_stability(p, "0", 2, w).stable);
}
