#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamcensus
{
    using VertexMask = std::uint64_t;

    inline constexpr int max_order = 64;

    constexpr auto bit(int v) -> VertexMask { return VertexMask{1} << v; }

    constexpr auto low_mask(int n) -> VertexMask { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

    /// Calls f(v) for every set bit of mask, lowest first.
    template <typename F>
    constexpr void for_each_vertex(VertexMask mask, F && f)
    {
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            f(v);
        }
    }

    auto mask_to_vertices(VertexMask mask) -> std::vector<int>;

    class GraphError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Unordered vertex pair, stored with u < v.
    struct Edge
    {
        int u = 0;
        int v = 1;

        constexpr Edge() = default;
        constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

        constexpr auto other(int x) const -> int { return x == u ? v : u; }
        constexpr auto touches(int x) const -> bool { return x == u || x == v; }
        constexpr auto shares_endpoint(const Edge & e) const -> bool { return touches(e.u) || touches(e.v); }

        auto operator<=>(const Edge &) const = default;
    };

    auto to_string(const Edge & e) -> std::string;

    /// Parses "u-v". Throws GraphError.
    auto parse_edge(const std::string & text) -> Edge;

    /// Immutable simple undirected graph on at most 64 vertices. Row v of the
    /// adjacency is a single machine word.
    class Graph
    {
    public:
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n);

        /// Rejects loops, duplicates and out-of-range ids with GraphError.
        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
        static auto from_edge_list(int n, std::span<const std::pair<int, int>> pairs) -> Graph;
        static auto from_adjacency(int n, std::span<const VertexMask> rows) -> Graph;

        auto order() const -> int { return order_; }
        auto size() const -> int;
        auto vertices() const -> VertexMask { return low_mask(order_); }
        auto neighbours(int v) const -> VertexMask { return adj_[v]; }
        auto degree(int v) const -> int { return std::popcount(adj_[v]); }
        auto has_edge(int u, int v) const -> bool { return (adj_[u] >> v) & 1; }
        auto has_edge(const Edge & e) const -> bool { return has_edge(e.u, e.v); }

        /// Sorted by (u, v).
        auto edges() const -> std::vector<Edge>;
        auto adjacency() const -> std::span<const VertexMask> { return {adj_.data(), std::size_t(order_)}; }

        auto without_edges(std::span<const Edge> es) const -> Graph;
        auto without_edge(const Edge & e) const -> Graph;
        auto with_edges(std::span<const Edge> es) const -> Graph;

        /// Disjoint union, other's vertices shifted by order().
        auto disjoint_union(const Graph & other) const -> Graph;

        auto operator==(const Graph &) const -> bool = default;

    private:
        int order_ = 0;
        std::array<VertexMask, max_order> adj_{};
    };

    /// G[keep] with vertices renumbered in increasing order.
    struct Subgraph
    {
        Graph graph;
        std::vector<int> to_parent;
        std::vector<int> from_parent; // -1 where removed
    };

    auto induced_subgraph(const Graph & g, VertexMask keep) -> Subgraph;
    auto delete_vertices(const Graph & g, VertexMask remove) -> Subgraph;

    /// Mutable edge accumulator used by constructions.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int n = 0);
        explicit GraphBuilder(const Graph & g);

        auto add_vertex() -> int;
        auto add_vertices(int count) -> int; // returns first new id
        void add_edge(int u, int v);         // throws on loop / duplicate
        void remove_edge(int u, int v);      // throws if absent
        auto has_edge(int u, int v) const -> bool { return (adj_[u] >> v) & 1; }
        auto degree(int v) const -> int { return std::popcount(adj_[v]); }
        auto order() const -> int { return order_; }
        auto build() const -> Graph;

    private:
        int order_ = 0;
        std::array<VertexMask, max_order> adj_{};
    };
}
