#pragma once

#include <hamcensus/certificate.hpp>
#include <hamcensus/constructions.hpp>
#include <hamcensus/cycle_engine.hpp>

#include <vector>

namespace hamcensus
{
    struct SpecialEdgeProfile
    {
        Count h00_11 = 0, h01_01 = 0, h01_10 = 0, h10_01 = 0, h10_10 = 0, h11_00 = 0, h11_11 = 0;

        auto operator==(const SpecialEdgeProfile &) const -> bool = default;
    };

    /// g with ac subdivided by b = n, uw subdivided by v = n + 1, plus bv.
    struct SpecialEdgeAuxiliary
    {
        Graph H;
        int b = 0, v = 0;
    };

    auto special_edge_auxiliary(const Graph & g, const SpecialEdges & s) -> SpecialEdgeAuxiliary;

    auto special_edge_profile(const Graph & g, const SpecialEdges & s, const SearchOptions & opts = {})
        -> SpecialEdgeProfile;

    /// Conditions: "two-factor" (no 2-factor with exactly two cycles, one per
    /// special edge) and "h01_01", "h01_10", "h10_01", "h10_10" (each zero).
    /// Throws GraphError unless g is k-regular for some k >= 3.
    auto lemma2_hypothesis(const Graph & g, const SpecialEdges & s, const SearchOptions & opts = {}) -> Certificate;

    /// ((k-2)!)^depth * (h11_11 + (k-2)(h00_11 + h11_00)). Exact at depth 1
    /// under the hypothesis. From depth 2 on it misses cycles of the expansion
    /// built from hamiltonian cycles of g that run a, c, ..., u, w.
    auto lemma2_predicted_count(int k, int depth, const SpecialEdgeProfile & p) -> Count;

    /// Conditions i, ii, iii (hamiltonian path queries), iv (h(g) equals the
    /// count with ad and bc forced) and v (degrees). A non-hamiltonian g
    /// makes iv vacuous and the overall verdict vacuous. A chord ac or bd
    /// fails the certificate outright; a missing cycle edge throws.
    auto good_cycle_certificate(const Graph & g, const FourCycle & c, const SearchOptions & opts = {}) -> Certificate;

    /// Every per-edge hamiltonian count even, and h not 1 or 2. Cubic only.
    auto smith_parity(const Graph & g, const SearchOptions & opts = {}) -> Certificate;

    struct SheehanScan
    {
        int n = 0, k = 0;
        std::size_t graphs = 0;       // connected k-regular classes scanned
        std::size_t hamiltonian = 0;  // of which hamiltonian
        Count minimum = 0;
        Graph argmin;                 // first graph in generation order attaining it
    };

    /// Minimum h over hamiltonian connected k-regular graphs of order n.
    /// Throws GraphError when (n, k) is infeasible or nothing is hamiltonian.
    auto sheehan_scan(int n, int k = 4, const SearchOptions & opts = {}) -> SheehanScan;

    struct EdgeRemovedComponent
    {
        std::vector<int> vertices;
        int on_cycle = 0;   // vertices of the component on the cycle
        bool is_k2 = false;
        bool is_claw = false; // isomorphic to K_{1,3}
    };

    /// Components of g - E(cycle), all vertices kept, in order of smallest vertex.
    auto components_without_cycle_edges(const Graph & g, const std::vector<int> & cycle)
        -> std::vector<EdgeRemovedComponent>;

    /// For a cubic g with a unique longest cycle, at least two components of
    /// g - E(c) meet c in an odd number of vertices. Vacuous when the longest
    /// cycle is not unique. Witnesses: the cycle and every odd component.
    auto theorem5_audit(const Graph & g, const SearchOptions & opts = {}) -> Certificate;

    /// floor(|V1|/2) vertex-disjoint paths of f whose ends are all 1-valent.
    /// f must be connected with maximum degree at most 3 and two or more
    /// 1-valent vertices; throws GraphError otherwise.
    auto leaf_paths(const Graph & f) -> std::vector<std::vector<int>>;

    /// Bipartite, cubic, cyclically 4-edge-connected, with exactly
    /// `expected` hamiltonian cycles.
    auto sixteen_cycle_certificate(const Graph & g, Count expected = 16, const SearchOptions & opts = {})
        -> Certificate;

    struct BoundValues
    {
        int n = 0, k = 0;
        double f = 0;  // (k-1)^2 ((k-2)!)^(n/(k+1))
        double g1 = 0; // 9 * 2^((n+2)/6)
    };

    auto bounds(int n, int k) -> BoundValues;

    /// a > b with at least one ulp to spare; comparisons that land inside
    /// one ulp are treated as ties.
    auto exceeds(double a, double b) -> bool;
    auto within_ulp(double a, double b) -> bool;
}
