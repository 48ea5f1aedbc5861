#pragma once

#include <hamcensus/cycle_engine.hpp>
#include <hamcensus/graph.hpp>

#include <array>
#include <string_view>
#include <vector>

namespace hamcensus
{
    /// Vertices a, b, c, d in cyclic order.
    struct FourCycle
    {
        int a = 0, b = 0, c = 0, d = 0;
    };

    /// Throws GraphError unless abcd is an induced 4-cycle of g.
    void check_induced_four_cycle(const Graph & g, const FourCycle & c);

    /// Disjoint special edges ac and uw, oriented: a and u are the ends the
    /// auxiliary constructions attach to first.
    struct SpecialEdges
    {
        int a = 0, c = 0, u = 0, w = 0;

        auto ac() const -> Edge { return {a, c}; }
        auto uw() const -> Edge { return {u, w}; }
    };

    /// Throws GraphError unless ac and uw are disjoint edges of g.
    void check_special_edges(const Graph & g, const SpecialEdges & s);

    struct GadgetSpec : SpecialEdges
    {
        int k = 3;
        int depth = 1;
    };

    /// One block of a chain: `multiplicity` copies of graph - vw, where v is
    /// edge.u and w is edge.v.
    struct ChainLink
    {
        Graph graph;
        Edge edge;
        int multiplicity = 1;
    };

    auto complete_graph(int n) -> Graph;
    auto complete_bipartite_graph(int p, int q) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    /// P(n, k): outer cycle 0..n-1, spokes i ~ n+i, inner n+i ~ n+(i+k) mod n.
    auto generalized_petersen_graph(int n, int k) -> Graph;
    /// P(5, 2): outer cycle 0-4, spokes to 5-9.
    auto petersen_graph() -> Graph;
    /// Complement of C_n.
    auto antihole_graph(int n) -> Graph;

    /// Family by name (complete, cycle, path, petersen, generalized_petersen,
    /// antihole, complete_bipartite) with integer parameters.
    auto named_generator(std::string_view family, const std::vector<int> & params) -> Graph;

    /// Replaces each target vertex by a triangle. New ids follow the original
    /// vertex order; a target's three vertices face its neighbours in
    /// increasing order.
    auto inflate_triangles(const Graph & g, VertexMask targets) -> Graph;

    /// Id in inflate_triangles(g, targets) of the vertex standing for `v` on
    /// the side facing neighbour `toward` (toward ignored for non-targets).
    auto inflated_vertex(const Graph & g, VertexMask targets, int v, int toward) -> int;

    /// Replaces e by a path through `count` new vertices n, n+1, ...
    auto subdivide(const Graph & g, Edge e, int count = 1) -> Graph;

    /// Removes ad and bc, adds paths a v1..vk d and b w1..wk c with v_i = n +
    /// 2(i-1), w_i = v_i + 1, plus v_i w_i, w_i v_{i+1}, b v1 and d wk.
    auto lemma1_expand(const Graph & g, const FourCycle & c, int k) -> Graph;

    /// Subdivides ac by b_1..b_l and uw by v_11, v_12, ..., v_l2, then adds a
    /// K_k on v_i1 v_i2 and k-2 new vertices, each joined to b_i. Level i
    /// uses ids n + (i-1)(k+1) + {0: b_i, 1: v_i1, 2: v_i2, 3..: the rest}.
    auto lemma2_expand(const Graph & g, const GadgetSpec & spec) -> Graph;

    /// Copies of G_i - v_i w_i in link order, each copy's w joined to the
    /// next copy's v and the last copy's w to the first copy's v. Needs at
    /// least two copies in total.
    auto chain(const std::vector<ChainLink> & links) -> Graph;

    struct ChiaThomassen
    {
        Graph H;                                 // petersen with all but vertex 0 inflated
        std::vector<std::vector<int>> longest_H; // its longest cycles, canonical
        Edge vw;                                 // first edge on exactly one of them
        Graph G;                                 // two copies of H - vw, v1v2 + w1w2
        int x1 = 0, x2 = 0;                      // the copies of the uninflated vertex
    };

    auto chia_thomassen(const SearchOptions & opts = {}) -> ChiaThomassen;

    struct Prop5Graph
    {
        Graph H;                 // petersen, all but x=0, y=2 inflated, x deleted
        int y = 0;               // id of y in H
        std::array<int, 3> x{};  // x1, x2, x3 in H
        Graph G;                 // H' on 0..24, H'' on 25..49, plus the three joins
    };

    /// The first labeling of x's former neighbours (ascending permutation
    /// order) with the required path properties; throws if none qualifies.
    auto prop5_graph(const SearchOptions & opts = {}) -> Prop5Graph;

    struct Gadget
    {
        Graph graph;
        GadgetSpec spec;
    };

    /// 26-vertex 5-regular graph built from three K6-minus-an-edge blocks,
    /// two junction vertices and a top block holding a and u.
    auto gadget_5regular() -> Gadget;

    struct FourCycleSeed
    {
        Graph graph;
        FourCycle cycle;
    };

    /// 20-vertex graph, 4-regular except two cubic vertices b and d on an
    /// induced 4-cycle abcd suitable for lemma1_expand; h = 144.
    auto good_cycle_seed() -> FourCycleSeed;
}
