#include <hamcensus/constructions.hpp>
#include <hamcensus/structure.hpp>

#include <algorithm>
#include <string>

namespace hamcensus
{
    namespace
    {
        void require(bool ok, const std::string & message)
        {
            if (! ok)
                throw GraphError(message);
        }
    }

    void check_induced_four_cycle(const Graph & g, const FourCycle & c)
    {
        std::array<int, 4> vs{c.a, c.b, c.c, c.d};
        for (int v : vs)
            require(v >= 0 && v < g.order(), "4-cycle vertex " + std::to_string(v) + " out of range");
        auto sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "4-cycle vertices must be distinct");
        require(g.has_edge(c.a, c.b) && g.has_edge(c.b, c.c) && g.has_edge(c.c, c.d) && g.has_edge(c.d, c.a),
            "abcd is not a 4-cycle");
        require(! g.has_edge(c.a, c.c) && ! g.has_edge(c.b, c.d), "4-cycle abcd is not induced");
    }

    void check_special_edges(const Graph & g, const SpecialEdges & s)
    {
        for (int v : {s.a, s.c, s.u, s.w})
            require(v >= 0 && v < g.order(), "special edge vertex " + std::to_string(v) + " out of range");
        require(s.a != s.c && s.u != s.w, "special edges need distinct endpoints");
        require(g.has_edge(s.ac()) && g.has_edge(s.uw()), "special edges must be edges of the graph");
        require(! s.ac().shares_endpoint(s.uw()), "special edges must be disjoint");
    }

    auto complete_graph(int n) -> Graph
    {
        require(n >= 0 && n <= max_order, "complete graph order out of range");
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                b.add_edge(i, j);
        return b.build();
    }

    auto complete_bipartite_graph(int p, int q) -> Graph
    {
        require(p >= 0 && q >= 0 && p + q <= max_order, "complete bipartite order out of range");
        GraphBuilder b(p + q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j)
                b.add_edge(i, p + j);
        return b.build();
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3 && n <= max_order, "cycle needs 3..64 vertices");
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            b.add_edge(i, (i + 1) % n);
        return b.build();
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1 && n <= max_order, "path needs 1..64 vertices");
        GraphBuilder b(n);
        for (int i = 0; i + 1 < n; ++i)
            b.add_edge(i, i + 1);
        return b.build();
    }

    auto generalized_petersen_graph(int n, int k) -> Graph
    {
        require(n >= 3 && 2 * n <= max_order, "generalized petersen needs 3 <= n <= 32");
        require(k >= 1 && 2 * k < n, "generalized petersen needs 1 <= k < n/2");
        GraphBuilder b(2 * n);
        for (int i = 0; i < n; ++i) {
            b.add_edge(i, (i + 1) % n);
            b.add_edge(i, n + i);
            b.add_edge(n + i, n + (i + k) % n);
        }
        return b.build();
    }

    auto petersen_graph() -> Graph
    {
        return generalized_petersen_graph(5, 2);
    }

    auto antihole_graph(int n) -> Graph
    {
        require(n >= 5 && n <= max_order, "antihole needs 5..64 vertices");
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (! (i == 0 && j == n - 1))
                    b.add_edge(i, j);
        return b.build();
    }

    auto named_generator(std::string_view family, const std::vector<int> & params) -> Graph
    {
        auto want = [&](std::size_t count) {
            require(params.size() == count,
                std::string(family) + " takes " + std::to_string(count) + " parameter(s), got " +
                    std::to_string(params.size()));
        };
        if (family == "complete") {
            want(1);
            return complete_graph(params[0]);
        }
        if (family == "complete_bipartite") {
            want(2);
            return complete_bipartite_graph(params[0], params[1]);
        }
        if (family == "cycle") {
            want(1);
            return cycle_graph(params[0]);
        }
        if (family == "path") {
            want(1);
            return path_graph(params[0]);
        }
        if (family == "petersen") {
            want(0);
            return petersen_graph();
        }
        if (family == "generalized_petersen") {
            want(2);
            return generalized_petersen_graph(params[0], params[1]);
        }
        if (family == "antihole") {
            want(1);
            return antihole_graph(params[0]);
        }
        throw GraphError("unknown family '" + std::string(family) + "'");
    }

    namespace
    {
        struct InflationMap
        {
            std::vector<int> first; // first new id of each original vertex
            int order = 0;
        };

        auto inflation_map(const Graph & g, VertexMask targets) -> InflationMap
        {
            InflationMap m;
            for (int v = 0; v < g.order(); ++v) {
                m.first.push_back(m.order);
                m.order += ((targets >> v) & 1) ? 3 : 1;
            }
            return m;
        }

        auto port(const Graph & g, const InflationMap & m, VertexMask targets, int v, int toward) -> int
        {
            if (! ((targets >> v) & 1))
                return m.first[v];
            return m.first[v] + std::popcount(g.neighbours(v) & low_mask(toward));
        }
    }

    auto inflate_triangles(const Graph & g, VertexMask targets) -> Graph
    {
        require((targets & ~g.vertices()) == 0, "inflation target out of range");
        for_each_vertex(targets, [&](int v) {
            require(g.degree(v) == 3, "vertex " + std::to_string(v) + " is not cubic; only cubic vertices inflate");
        });
        auto m = inflation_map(g, targets);
        require(m.order <= max_order, "inflated graph exceeds 64 vertices");
        GraphBuilder b(m.order);
        for_each_vertex(targets, [&](int v) {
            int f = m.first[v];
            b.add_edge(f, f + 1);
            b.add_edge(f, f + 2);
            b.add_edge(f + 1, f + 2);
        });
        for (auto & e : g.edges())
            b.add_edge(port(g, m, targets, e.u, e.v), port(g, m, targets, e.v, e.u));
        return b.build();
    }

    auto inflated_vertex(const Graph & g, VertexMask targets, int v, int toward) -> int
    {
        auto m = inflation_map(g, targets);
        require(v >= 0 && v < g.order(), "vertex out of range");
        if ((targets >> v) & 1)
            require(g.has_edge(v, toward), "inflated vertex needs a neighbour to face");
        return port(g, m, targets, v, toward);
    }

    auto subdivide(const Graph & g, Edge e, int count) -> Graph
    {
        require(e.v < g.order() && g.has_edge(e), "cannot subdivide missing edge " + to_string(e));
        require(count >= 1, "subdivision needs at least one new vertex");
        GraphBuilder b(g);
        b.remove_edge(e.u, e.v);
        int first = b.add_vertices(count);
        int prev = e.u;
        for (int i = 0; i < count; ++i) {
            b.add_edge(prev, first + i);
            prev = first + i;
        }
        b.add_edge(prev, e.v);
        return b.build();
    }

    auto lemma1_expand(const Graph & g, const FourCycle & c, int k) -> Graph
    {
        check_induced_four_cycle(g, c);
        require(k >= 1, "expansion depth must be at least 1");
        GraphBuilder b(g);
        b.remove_edge(c.a, c.d);
        b.remove_edge(c.b, c.c);
        int first = b.add_vertices(2 * k);
        auto v = [&](int i) { return first + 2 * (i - 1); };
        auto w = [&](int i) { return first + 2 * (i - 1) + 1; };
        b.add_edge(c.a, v(1));
        b.add_edge(v(k), c.d);
        b.add_edge(c.b, w(1));
        b.add_edge(w(k), c.c);
        for (int i = 1; i < k; ++i) {
            b.add_edge(v(i), v(i + 1));
            b.add_edge(w(i), w(i + 1));
            b.add_edge(w(i), v(i + 1));
        }
        for (int i = 1; i <= k; ++i)
            b.add_edge(v(i), w(i));
        b.add_edge(c.b, v(1));
        b.add_edge(c.d, w(k));
        return b.build();
    }

    auto lemma2_expand(const Graph & g, const GadgetSpec & spec) -> Graph
    {
        int k = spec.k, depth = spec.depth;
        require(k >= 3, "gadget degree must be at least 3");
        require(depth >= 1, "expansion depth must be at least 1");
        require(is_regular(g, k), "gadget expansion needs a " + std::to_string(k) + "-regular graph");
        check_special_edges(g, spec);
        require(g.order() + depth * (k + 1) <= max_order, "expanded graph exceeds 64 vertices");

        GraphBuilder b(g);
        b.remove_edge(spec.a, spec.c);
        b.remove_edge(spec.u, spec.w);
        int first = b.add_vertices(depth * (k + 1));
        auto level = [&](int i) { return first + (i - 1) * (k + 1); };
        int prev_b = spec.a, prev_v = spec.u;
        for (int i = 1; i <= depth; ++i) {
            int bi = level(i), vi1 = bi + 1, vi2 = bi + 2;
            b.add_edge(prev_b, bi);
            b.add_edge(prev_v, vi1);
            std::vector<int> clique{vi1, vi2};
            for (int j = 0; j < k - 2; ++j)
                clique.push_back(bi + 3 + j);
            for (std::size_t x = 0; x < clique.size(); ++x)
                for (std::size_t y = x + 1; y < clique.size(); ++y)
                    b.add_edge(clique[x], clique[y]);
            for (std::size_t j = 2; j < clique.size(); ++j)
                b.add_edge(bi, clique[j]);
            prev_b = bi;
            prev_v = vi2;
        }
        b.add_edge(prev_b, spec.c);
        b.add_edge(prev_v, spec.w);
        return b.build();
    }

    auto chain(const std::vector<ChainLink> & links) -> Graph
    {
        int fragments = 0, order = 0;
        for (auto & l : links) {
            require(l.multiplicity >= 1, "chain multiplicity must be at least 1");
            require(l.edge.v < l.graph.order() && l.graph.has_edge(l.edge), "chain edge missing from its graph");
            fragments += l.multiplicity;
            order += l.multiplicity * l.graph.order();
        }
        require(fragments >= 2, "chain needs at least two fragments");
        require(order <= max_order, "chain exceeds 64 vertices");

        Graph out;
        std::vector<std::pair<int, int>> ends; // (v, w) of each fragment
        for (auto & l : links) {
            auto piece = l.graph.without_edge(l.edge);
            for (int j = 0; j < l.multiplicity; ++j) {
                int shift = out.order();
                ends.emplace_back(shift + l.edge.u, shift + l.edge.v);
                out = out.disjoint_union(piece);
            }
        }
        GraphBuilder b(out);
        for (std::size_t i = 0; i < ends.size(); ++i)
            b.add_edge(ends[i].second, ends[(i + 1) % ends.size()].first);
        return b.build();
    }

    auto chia_thomassen(const SearchOptions & opts) -> ChiaThomassen
    {
        ChiaThomassen ct;
        auto p = petersen_graph();
        ct.H = inflate_triangles(p, p.vertices() & ~bit(0));
        auto longest = longest_cycles(ct.H, opts);
        ct.longest_H = enumerate_cycles_of_length(ct.H, longest.circumference, opts);

        auto on = [](const std::vector<int> & cycle, const Edge & e) {
            for (std::size_t i = 0; i < cycle.size(); ++i)
                if (Edge(cycle[i], cycle[(i + 1) % cycle.size()]) == e)
                    return true;
            return false;
        };
        bool found = false;
        for (auto & e : ct.H.edges()) {
            int hits = 0;
            for (auto & c : ct.longest_H)
                hits += on(c, e);
            if (hits == 1) {
                ct.vw = e;
                found = true;
                break;
            }
        }
        require(found, "no edge lies on exactly one longest cycle");

        auto piece = ct.H.without_edge(ct.vw);
        int n = piece.order();
        GraphBuilder b(piece.disjoint_union(piece));
        b.add_edge(ct.vw.u, n + ct.vw.u);
        b.add_edge(ct.vw.v, n + ct.vw.v);
        ct.G = b.build();
        ct.x1 = 0;
        ct.x2 = n;
        return ct;
    }

    auto prop5_graph(const SearchOptions & opts) -> Prop5Graph
    {
        auto p = petersen_graph();
        const int x = 0;
        int y = -1;
        for (int v = 1; v < p.order() && y < 0; ++v)
            if (! p.has_edge(x, v))
                y = v;
        VertexMask targets = p.vertices() & ~bit(x) & ~bit(y);
        auto inflated = inflate_triangles(p, targets);
        int x_new = inflated_vertex(p, targets, x, 0);
        auto sub = delete_vertices(inflated, bit(x_new));

        Prop5Graph r;
        r.H = sub.graph;
        r.y = sub.from_parent[inflated_vertex(p, targets, y, 0)];
        std::array<int, 3> ports{};
        int idx = 0;
        for_each_vertex(inflated.neighbours(x_new), [&](int v) { ports[idx++] = sub.from_parent[v]; });

        auto h_y = delete_vertices(r.H, bit(r.y));
        auto paths_without_y = [&](int s, int t) {
            return count_hamiltonian_paths(h_y.graph, h_y.from_parent[s], h_y.from_parent[t], {}, opts);
        };
        bool found = false;
        do {
            if (paths_without_y(ports[0], ports[1]) == 1 && paths_without_y(ports[0], ports[2]) == 1 &&
                paths_without_y(ports[1], ports[2]) == 0) {
                found = true;
                break;
            }
        } while (std::next_permutation(ports.begin(), ports.end()));
        require(found, "no labeling of x's neighbours has the required path counts");
        r.x = ports;

        int n = r.H.order();
        GraphBuilder b(r.H.disjoint_union(r.H));
        b.add_edge(r.x[0], n + r.x[1]);
        b.add_edge(r.x[1], n + r.x[0]);
        b.add_edge(r.x[2], n + r.x[2]);
        r.G = b.build();
        return r;
    }

    auto gadget_5regular() -> Gadget
    {
        GraphBuilder b(26);
        // blocks 0-5, 6-11, 12-17: K6 minus the edge between the block's
        // first two vertices (p_i, q_i)
        for (int blk = 0; blk < 3; ++blk) {
            int base = 6 * blk;
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (! (i == 0 && j == 1))
                        b.add_edge(base + i, base + j);
        }
        const int p1 = 0, q1 = 1, p2 = 6, q2 = 7, p3 = 12, q3 = 13;
        const int s1 = 18, s2 = 19, a = 20, u = 21;
        const int d1 = 22, d2 = 23, d3 = 24, d4 = 25;
        b.add_edge(s1, q1);
        b.add_edge(s1, p2);
        b.add_edge(s2, q2);
        b.add_edge(s2, p3);
        for (int d : {d1, d2, d4})
            b.add_edge(s1, d);
        for (int d : {d1, d3, d4})
            b.add_edge(s2, d);
        for (int d : {d1, d2, d3, d4}) {
            b.add_edge(a, d);
            b.add_edge(u, d);
        }
        b.add_edge(d1, d2);
        b.add_edge(d2, d3);
        b.add_edge(d3, d4);
        // special edges ac and uw with c = q3 and w = p1
        b.add_edge(a, q3);
        b.add_edge(u, p1);
        return {b.build(), GadgetSpec{{a, q3, u, p1}, 5, 1}};
    }

    auto good_cycle_seed() -> FourCycleSeed
    {
        GraphBuilder b(20);
        // two K5 minus an edge: {v=0, w=1, 2, 3, 4} without 0-1 and
        // {v'=5, w'=6, 7, 8, 9} without 5-6
        for (int base : {0, 5})
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (! (i == 0 && j == 1))
                        b.add_edge(base + i, base + j);
        const int v = 0, w = 1, v2 = 5, w2 = 6;
        const int a = 10, bb = 11, c = 12, d = 13, y = 14, x = 15;
        const int x1 = 16, x2 = 17, x3 = 18, x4 = 19;
        b.add_edge(v, a);
        b.add_edge(w, y);
        b.add_edge(v2, y);
        b.add_edge(w2, bb);
        b.add_edge(a, bb);
        b.add_edge(bb, c);
        b.add_edge(c, d);
        b.add_edge(d, a);
        b.add_edge(a, y);
        b.add_edge(c, x);
        b.add_edge(d, x);
        b.add_edge(c, x3);
        b.add_edge(y, x4);
        b.add_edge(x, x1);
        b.add_edge(x, x2);
        // x1..x4 form a K4
        for (int i : {x1, x2, x3, x4})
            for (int j : {x1, x2, x3, x4})
                if (i < j)
                    b.add_edge(i, j);
        return {b.build(), FourCycle{a, bb, c, d}};
    }
}
