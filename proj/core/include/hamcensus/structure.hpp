#pragma once

#include <hamcensus/certificate.hpp>
#include <hamcensus/graph.hpp>

#include <optional>
#include <vector>

namespace hamcensus
{
    struct DegreeProfile
    {
        int min_degree = 0;
        int max_degree = 0;

        auto is_regular(int k) const -> bool { return min_degree == k && max_degree == k; }
        auto regular_degree() const -> std::optional<int>
        {
            return min_degree == max_degree ? std::optional<int>{min_degree} : std::nullopt;
        }
    };

    auto degree_profile(const Graph & g) -> DegreeProfile;
    auto is_regular(const Graph & g, int k) -> bool;

    /// Components as vertex masks, ordered by smallest vertex.
    auto components(const Graph & g) -> std::vector<VertexMask>;
    auto components_within(const Graph & g, VertexMask region) -> std::vector<VertexMask>;
    auto is_connected(const Graph & g) -> bool;
    auto is_connected_within(const Graph & g, VertexMask region) -> bool;

    /// A vertex set of size < j whose removal disconnects g, if any.
    /// By convention a graph on at most j vertices is not j-connected, and
    /// the returned cut is then empty.
    auto find_small_vertex_cut(const Graph & g, int j) -> std::optional<std::vector<int>>;

    /// j in 1..4; exhaustive over all vertex subsets of size < j.
    auto connectivity_at_least(const Graph & g, int j) -> bool;

    struct VertexCut
    {
        std::vector<int> vertices;
        std::vector<VertexMask> fragments; // each fragment includes the cut
    };

    auto vertex_cut_fragments(const Graph & g, VertexMask cut) -> VertexCut;

    struct BipartiteResult
    {
        bool bipartite = false;
        std::vector<int> colouring;  // 0/1 per vertex when bipartite
        std::vector<int> odd_cycle;  // closed vertex sequence when not
    };

    auto is_bipartite(const Graph & g) -> BipartiteResult;

    /// Exhaustive over edge subsets of size < k, k in 2..4. Vacuous unless g
    /// is connected and has two vertex-disjoint cycles.
    auto is_cyclically_k_edge_connected(const Graph & g, int k) -> Certificate;

    auto has_two_disjoint_cycles(const Graph & g) -> bool;
    auto has_cycle_within(const Graph & g, VertexMask region) -> bool;
}
