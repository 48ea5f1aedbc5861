#include <hamcensus/graph_io.hpp>
#include <hamcensus/structure.hpp>

#include <algorithm>
#include <deque>
#include <functional>

namespace hamcensus
{
    auto degree_profile(const Graph & g) -> DegreeProfile
    {
        if (g.order() == 0)
            return {};
        DegreeProfile p{g.degree(0), g.degree(0)};
        for (int v = 1; v < g.order(); ++v) {
            p.min_degree = std::min(p.min_degree, g.degree(v));
            p.max_degree = std::max(p.max_degree, g.degree(v));
        }
        return p;
    }

    auto is_regular(const Graph & g, int k) -> bool
    {
        return degree_profile(g).is_regular(k);
    }

    namespace
    {
        auto reach(const Graph & g, int from, VertexMask region) -> VertexMask
        {
            VertexMask seen = bit(from), frontier = seen;
            while (frontier) {
                VertexMask next = 0;
                for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v); });
                frontier = next & region & ~seen;
                seen |= frontier;
            }
            return seen;
        }
    }

    auto components_within(const Graph & g, VertexMask region) -> std::vector<VertexMask>
    {
        std::vector<VertexMask> out;
        VertexMask left = region & g.vertices();
        while (left) {
            VertexMask c = reach(g, std::countr_zero(left), left);
            out.push_back(c);
            left &= ~c;
        }
        return out;
    }

    auto components(const Graph & g) -> std::vector<VertexMask>
    {
        return components_within(g, g.vertices());
    }

    auto is_connected_within(const Graph & g, VertexMask region) -> bool
    {
        region &= g.vertices();
        return region == 0 || reach(g, std::countr_zero(region), region) == region;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return is_connected_within(g, g.vertices());
    }

    auto find_small_vertex_cut(const Graph & g, int j) -> std::optional<std::vector<int>>
    {
        int n = g.order();
        if (n <= j)
            return std::vector<int>{};
        std::vector<int> chosen;
        std::optional<std::vector<int>> found;
        std::function<void(int, VertexMask)> rec = [&](int from, VertexMask removed) {
            if (found)
                return;
            if (! is_connected_within(g, g.vertices() & ~removed)) {
                found = chosen;
                return;
            }
            if (int(chosen.size()) == j - 1)
                return;
            for (int v = from; v < n && ! found; ++v) {
                chosen.push_back(v);
                rec(v + 1, removed | bit(v));
                chosen.pop_back();
            }
        };
        rec(0, 0);
        return found;
    }

    auto connectivity_at_least(const Graph & g, int j) -> bool
    {
        if (j < 1 || j > 4)
            throw GraphError("connectivity_at_least supports j in 1..4");
        return ! find_small_vertex_cut(g, j).has_value();
    }

    auto vertex_cut_fragments(const Graph & g, VertexMask cut) -> VertexCut
    {
        VertexCut out;
        out.vertices = mask_to_vertices(cut);
        for (auto c : components_within(g, g.vertices() & ~cut))
            out.fragments.push_back(c | cut);
        return out;
    }

    auto is_bipartite(const Graph & g) -> BipartiteResult
    {
        int n = g.order();
        BipartiteResult r;
        std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
        for (int root = 0; root < n; ++root) {
            if (colour[root] >= 0)
                continue;
            colour[root] = 0;
            std::deque<int> queue{root};
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int w : mask_to_vertices(g.neighbours(v))) {
                    if (colour[w] < 0) {
                        colour[w] = 1 - colour[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    else if (colour[w] == colour[v]) {
                        // walk both tree paths up to the common ancestor
                        std::vector<int> left{v}, right{w};
                        int a = v, b = w;
                        while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                        while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                        while (a != b) {
                            left.push_back(a = parent[a]);
                            right.push_back(b = parent[b]);
                        }
                        right.pop_back();
                        std::reverse(right.begin(), right.end());
                        left.insert(left.end(), right.begin(), right.end());
                        r.odd_cycle = left;
                        return r;
                    }
                }
            }
        }
        r.bipartite = true;
        r.colouring = colour;
        return r;
    }

    auto has_cycle_within(const Graph & g, VertexMask region) -> bool
    {
        int edges = 0;
        for_each_vertex(region, [&](int v) { edges += std::popcount(g.neighbours(v) & region); });
        edges /= 2;
        int verts = std::popcount(region);
        return edges > verts - int(components_within(g, region).size());
    }

    auto has_two_disjoint_cycles(const Graph & g) -> bool
    {
        // Enough to try chordless cycles: a chord gives a cycle on fewer
        // vertices with a larger complement.
        int n = g.order();
        bool found = false;
        std::vector<int> path;
        std::function<void(int, VertexMask, VertexMask)> extend = [&](int cur, VertexMask on_path, VertexMask blocked) {
            if (found)
                return;
            int start = path.front();
            VertexMask nb = g.neighbours(cur);
            if (path.size() >= 3 && (nb & bit(start))) {
                if (has_cycle_within(g, g.vertices() & ~on_path))
                    found = true;
                return;
            }
            for_each_vertex(nb & ~on_path & ~blocked & ~low_mask(start + 1), [&](int nxt) {
                if (found)
                    return;
                // nxt must not see any interior path vertex, and may see start
                // only when closing
                VertexMask interior = on_path & ~bit(cur) & ~bit(start);
                if (g.neighbours(nxt) & interior)
                    return;
                path.push_back(nxt);
                extend(nxt, on_path | bit(nxt), blocked);
                path.pop_back();
            });
        };
        for (int s = 0; s < n && ! found; ++s) {
            path = {s};
            extend(s, bit(s), 0);
        }
        return found;
    }

    auto is_cyclically_k_edge_connected(const Graph & g, int k) -> Certificate
    {
        if (k < 2 || k > 4)
            throw GraphError("cyclic edge connectivity supports k in 2..4");
        Certificate cert;
        cert.name = "cyclically-" + std::to_string(k) + "-edge-connected";
        cert.graph6 = to_graph6(g);
        if (! is_connected(g) || ! has_two_disjoint_cycles(g)) {
            cert.verdict = Verdict::vacuous;
            cert.detail = "graph is disconnected or lacks two vertex-disjoint cycles";
            return cert;
        }
        auto edges = g.edges();
        std::vector<int> chosen;
        std::optional<std::vector<Edge>> cut;
        auto separates = [&]() {
            std::array<VertexMask, max_order> rows{};
            for (int v = 0; v < g.order(); ++v)
                rows[v] = g.neighbours(v);
            for (int i : chosen) {
                rows[edges[i].u] &= ~bit(edges[i].v);
                rows[edges[i].v] &= ~bit(edges[i].u);
            }
            auto h = Graph::from_adjacency(g.order(), std::span<const VertexMask>(rows.data(), std::size_t(g.order())));
            int cyclic = 0;
            for (auto c : components(h))
                if (has_cycle_within(h, c))
                    ++cyclic;
            return cyclic >= 2;
        };
        std::function<void(int)> rec = [&](int from) {
            if (cut)
                return;
            if (! chosen.empty() && separates()) {
                std::vector<Edge> es;
                for (int i : chosen)
                    es.push_back(edges[i]);
                cut = es;
                return;
            }
            if (int(chosen.size()) == k - 1)
                return;
            for (int i = from; i < int(edges.size()) && ! cut; ++i) {
                chosen.push_back(i);
                rec(i + 1);
                chosen.pop_back();
            }
        };
        rec(0);
        Condition c{"cyclic-cut", cut ? Verdict::fail : Verdict::pass, {}, std::nullopt};
        if (cut) {
            Witness w{"edge_cut", {}};
            for (auto & e : *cut)
                w.parts.push_back({e.u, e.v});
            c.witness = w;
            c.detail = "removing " + std::to_string(cut->size()) + " edge(s) leaves two cyclic components";
        }
        else
            c.detail = "no cyclic edge cut of size < " + std::to_string(k);
        cert.conditions.push_back(c);
        cert.settle_from_conditions();
        return cert;
    }
}
