#include <hamcensus/graph.hpp>

#include <charconv>

namespace hamcensus
{
    auto mask_to_vertices(VertexMask mask) -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(std::popcount(mask));
        for_each_vertex(mask, [&](int v) { out.push_back(v); });
        return out;
    }

    auto to_string(const Edge & e) -> std::string
    {
        return std::to_string(e.u) + "-" + std::to_string(e.v);
    }

    auto parse_edge(const std::string & text) -> Edge
    {
        auto dash = text.find('-');
        if (dash == std::string::npos)
            throw GraphError("edge must be written u-v: '" + text + "'");
        int u = -1, v = -1;
        auto first = text.data(), mid = text.data() + dash, last = text.data() + text.size();
        auto [p1, e1] = std::from_chars(first, mid, u);
        auto [p2, e2] = std::from_chars(mid + 1, last, v);
        if (e1 != std::errc{} || e2 != std::errc{} || p1 != mid || p2 != last || u < 0 || v < 0)
            throw GraphError("edge must be written u-v: '" + text + "'");
        if (u == v)
            throw GraphError("loop edge '" + text + "'");
        return Edge{u, v};
    }

    namespace
    {
        void check_order(int n)
        {
            if (n < 0 || n > max_order)
                throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_order));
        }
    }

    Graph::Graph(int n) : order_(n)
    {
        check_order(n);
    }

    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        GraphBuilder b(n);
        for (auto & e : edges)
            b.add_edge(e.u, e.v);
        return b.build();
    }

    auto Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) -> Graph
    {
        GraphBuilder b(n);
        for (auto & [u, v] : pairs)
            b.add_edge(u, v);
        return b.build();
    }

    auto Graph::from_adjacency(int n, std::span<const VertexMask> rows) -> Graph
    {
        check_order(n);
        if (rows.size() != std::size_t(n))
            throw GraphError("adjacency row count does not match order");
        Graph g(n);
        for (int v = 0; v < n; ++v) {
            if (rows[v] & ~low_mask(n))
                throw GraphError("adjacency row " + std::to_string(v) + " names a vertex out of range");
            if ((rows[v] >> v) & 1)
                throw GraphError("loop at vertex " + std::to_string(v));
            g.adj_[v] = rows[v];
        }
        for (int v = 0; v < n; ++v)
            for_each_vertex(rows[v], [&](int w) {
                if (! ((rows[w] >> v) & 1))
                    throw GraphError("adjacency is not symmetric at " + std::to_string(v) + "-" + std::to_string(w));
            });
        return g;
    }

    auto Graph::size() const -> int
    {
        int twice = 0;
        for (int v = 0; v < order_; ++v)
            twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for_each_vertex(adj_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    auto Graph::without_edges(std::span<const Edge> es) const -> Graph
    {
        GraphBuilder b(*this);
        for (auto & e : es)
            b.remove_edge(e.u, e.v);
        return b.build();
    }

    auto Graph::without_edge(const Edge & e) const -> Graph
    {
        return without_edges(std::span<const Edge>(&e, 1));
    }

    auto Graph::with_edges(std::span<const Edge> es) const -> Graph
    {
        GraphBuilder b(*this);
        for (auto & e : es)
            b.add_edge(e.u, e.v);
        return b.build();
    }

    auto Graph::disjoint_union(const Graph & other) const -> Graph
    {
        GraphBuilder b(*this);
        int shift = b.add_vertices(other.order());
        for (auto & e : other.edges())
            b.add_edge(e.u + shift, e.v + shift);
        return b.build();
    }

    auto induced_subgraph(const Graph & g, VertexMask keep) -> Subgraph
    {
        keep &= g.vertices();
        Subgraph s;
        s.from_parent.assign(g.order(), -1);
        for_each_vertex(keep, [&](int v) {
            s.from_parent[v] = int(s.to_parent.size());
            s.to_parent.push_back(v);
        });
        GraphBuilder b(int(s.to_parent.size()));
        for (auto & e : g.edges())
            if (s.from_parent[e.u] >= 0 && s.from_parent[e.v] >= 0)
                b.add_edge(s.from_parent[e.u], s.from_parent[e.v]);
        s.graph = b.build();
        return s;
    }

    auto delete_vertices(const Graph & g, VertexMask remove) -> Subgraph
    {
        return induced_subgraph(g, g.vertices() & ~remove);
    }

    GraphBuilder::GraphBuilder(int n) : order_(n)
    {
        check_order(n);
    }

    GraphBuilder::GraphBuilder(const Graph & g) : order_(g.order())
    {
        for (int v = 0; v < order_; ++v)
            adj_[v] = g.neighbours(v);
    }

    auto GraphBuilder::add_vertex() -> int
    {
        return add_vertices(1);
    }

    auto GraphBuilder::add_vertices(int count) -> int
    {
        int first = order_;
        check_order(order_ + count);
        order_ += count;
        return first;
    }

    void GraphBuilder::add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= order_ || v >= order_)
            throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has a vertex id out of range 0.." +
                std::to_string(order_ - 1));
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void GraphBuilder::remove_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= order_ || v >= order_ || ! has_edge(u, v))
            throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    auto GraphBuilder::build() const -> Graph
    {
        return Graph::from_adjacency(order_, std::span<const VertexMask>(adj_.data(), std::size_t(order_)));
    }
}
