#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weightlab/graph.hpp"

namespace weightlab {

enum class Family { Path, Grid2d, RegularTree, Ladder };

// A locally finite infinite graph given by a neighbour oracle.
//
// Vertex encodings:
//   path      integer n                      ("-3", "0", "12")
//   grid2d    integer pair "x,y"             ("0,0", "-1,2")
//   ladder    pair "x,s" with s in {0,1}      ("4,1")
//   tree:d    root "r", then ".k" per step    ("r", "r.2", "r.2.0")
// In tree:d the root has children 0..d-1 and every other vertex has
// children 0..d-2, so every vertex has degree d.
class PresentedGraph {
public:
    static PresentedGraph path() { return PresentedGraph(Family::Path, 2); }
    static PresentedGraph grid2d() { return PresentedGraph(Family::Grid2d, 4); }
    static PresentedGraph ladder() { return PresentedGraph(Family::Ladder, 3); }
    static PresentedGraph regular_tree(unsigned d);

    // Parses "path", "grid2d", "ladder" or "tree:<d>".
    static PresentedGraph parse(std::string_view name);

    Family family() const { return family_; }
    unsigned tree_degree() const { return degree_; }
    std::string name() const;

    // Throws InputError unless `v` is a canonical vertex encoding for this family.
    void validate(const VertexId& v) const;
    bool is_vertex(const VertexId& v) const;

    // Oracle neighbourhood in VertexId order.
    std::vector<VertexId> neighbors(const VertexId& v) const;

    VertexId default_center() const;

private:
    PresentedGraph(Family f, unsigned d) : family_(f), degree_(d) {}

    Family family_;
    unsigned degree_;
};

// B(v, r) together with the subgraph it induces.
struct Ball {
    VertexId center;
    unsigned radius = 0;
    std::vector<VertexId> members;           // VertexId order
    std::map<VertexId, unsigned> distance;   // oracle distance from center
    FiniteGraph graph;

    // Members at distance <= r.
    std::vector<VertexId> within(unsigned r) const;
};

Ball ball(const PresentedGraph& p, const VertexId& center, unsigned radius);

}  // namespace weightlab
