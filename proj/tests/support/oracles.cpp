#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace oracle
{
    namespace
    {
        auto adjacent(const Graph & g, int u, int v) -> bool { return g.has_edge(u, v); }

        auto canonical(Cycle c) -> Cycle
        {
            auto it = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), it, c.end());
            if (c.size() > 2 && c[1] > c.back())
                std::reverse(c.begin() + 1, c.end());
            return c;
        }

        auto components_of(const Graph & g, const std::vector<std::vector<bool>> & keep_edge)
            -> std::vector<std::vector<int>>
        {
            int n = g.order();
            std::vector<int> comp(std::size_t(n), -1);
            std::vector<std::vector<int>> out;
            for (int s = 0; s < n; ++s) {
                if (comp[s] >= 0)
                    continue;
                out.emplace_back();
                std::vector<int> stack{s};
                comp[s] = int(out.size()) - 1;
                while (! stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    out.back().push_back(x);
                    for (int y = 0; y < n; ++y)
                        if (keep_edge[x][y] && comp[y] < 0) {
                            comp[y] = comp[s];
                            stack.push_back(y);
                        }
                }
                std::sort(out.back().begin(), out.back().end());
            }
            return out;
        }
    }

    auto cycle_uses(const Cycle & c, const Edge & e) -> bool
    {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (Edge(c[i], c[(i + 1) % c.size()]) == e)
                return true;
        return false;
    }

    auto hamiltonian_cycles(const Graph & g) -> std::set<Cycle>
    {
        std::set<Cycle> out;
        int n = g.order();
        if (n < 3)
            return out;
        Cycle order(std::size_t(n), 0);
        std::iota(order.begin(), order.end(), 0);
        do {
            if (order[1] > order.back())
                continue;
            bool ok = true;
            for (int i = 0; ok && i < n; ++i)
                ok = adjacent(g, order[i], order[(i + 1) % n]);
            if (ok)
                out.insert(order);
        } while (std::next_permutation(order.begin() + 1, order.end()));
        return out;
    }

    auto hamiltonian_count(const Graph & g, const std::vector<Edge> & forced, const std::vector<Edge> & forbidden)
        -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (auto & c : hamiltonian_cycles(g)) {
            bool ok = true;
            for (auto & e : forced)
                ok = ok && cycle_uses(c, e);
            for (auto & e : forbidden)
                ok = ok && ! cycle_uses(c, e);
            count += ok;
        }
        return count;
    }

    auto hamiltonian_paths(const Graph & g, int s, int t) -> std::uint64_t
    {
        int n = g.order();
        if (s == t)
            return n == 1;
        std::vector<int> inner;
        for (int v = 0; v < n; ++v)
            if (v != s && v != t)
                inner.push_back(v);
        std::uint64_t count = 0;
        do {
            int prev = s;
            bool ok = true;
            for (int v : inner) {
                ok = ok && adjacent(g, prev, v);
                prev = v;
            }
            count += ok && adjacent(g, prev, t);
        } while (std::next_permutation(inner.begin(), inner.end()));
        return count;
    }

    auto cycles_of_length(const Graph & g, int length) -> std::set<Cycle>
    {
        std::set<Cycle> out;
        int n = g.order();
        Cycle path;
        std::vector<bool> used(std::size_t(n), false);
        auto extend = [&](auto && self, int start) -> void {
            int cur = path.back();
            if (int(path.size()) == length) {
                if (adjacent(g, cur, start))
                    out.insert(canonical(path));
                return;
            }
            for (int y = start + 1; y < n; ++y)
                if (! used[y] && adjacent(g, cur, y)) {
                    used[y] = true;
                    path.push_back(y);
                    self(self, start);
                    path.pop_back();
                    used[y] = false;
                }
        };
        if (length < 3)
            return out;
        for (int s = 0; s < n; ++s) {
            path = {s};
            used.assign(std::size_t(n), false);
            used[s] = true;
            extend(extend, s);
        }
        return out;
    }

    auto two_factors(const Graph & g) -> std::vector<std::vector<std::vector<int>>>
    {
        int n = g.order();
        std::vector<Edge> es = g.edges();
        std::vector<int> deg(std::size_t(n), 0);
        std::vector<std::vector<bool>> chosen(std::size_t(n), std::vector<bool>(std::size_t(n), false));
        std::vector<std::vector<std::vector<int>>> out;
        auto pick = [&](auto && self, std::size_t i) -> void {
            if (i == es.size()) {
                if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
                    out.push_back(components_of(g, chosen));
                return;
            }
            auto [u, v] = std::pair{es[i].u, es[i].v};
            self(self, i + 1);
            if (deg[u] < 2 && deg[v] < 2) {
                ++deg[u];
                ++deg[v];
                chosen[u][v] = chosen[v][u] = true;
                self(self, i + 1);
                chosen[u][v] = chosen[v][u] = false;
                --deg[u];
                --deg[v];
            }
        };
        if (n >= 3)
            pick(pick, 0);
        return out;
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        int n = a.order();
        if (n != b.order() || a.size() != b.size())
            return false;
        std::vector<int> da, db;
        for (int v = 0; v < n; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        { // degree sequences
            auto sa = da, sb = db;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return false;
        }
        std::vector<int> map(std::size_t(n), -1);
        std::vector<bool> taken(std::size_t(n), false);
        auto place = [&](auto && self, int i) -> bool {
            if (i == n)
                return true;
            for (int w = 0; w < n; ++w) {
                if (taken[w] || db[w] != da[i])
                    continue;
                bool ok = true;
                for (int j = 0; ok && j < i; ++j)
                    ok = a.has_edge(i, j) == b.has_edge(w, map[j]);
                if (! ok)
                    continue;
                map[i] = w;
                taken[w] = true;
                if (self(self, i + 1))
                    return true;
                taken[w] = false;
            }
            return false;
        };
        return place(place, 0);
    }

    auto connected(const Graph & g, std::uint64_t removed) -> bool
    {
        int n = g.order();
        int start = -1, alive = 0;
        for (int v = 0; v < n; ++v)
            if (! ((removed >> v) & 1)) {
                ++alive;
                if (start < 0)
                    start = v;
            }
        if (alive == 0)
            return true;
        std::vector<bool> seen(std::size_t(n), false);
        std::vector<int> stack{start};
        seen[start] = true;
        int reached = 0;
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int y = 0; y < n; ++y)
                if (! seen[y] && ! ((removed >> y) & 1) && g.has_edge(x, y)) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        return reached == alive;
    }

    auto j_connected(const Graph & g, int j) -> bool
    {
        int n = g.order();
        if (n <= j)
            return false;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
            if (std::popcount(s) < j && ! connected(g, s))
                return false;
        return true;
    }

    auto cyclic_edge_connectivity(const Graph & g) -> int
    {
        int n = g.order();
        auto es = g.edges();
        int m = int(es.size());
        for (int size = 0; size <= m; ++size) {
            std::vector<bool> sel(std::size_t(m), false);
            std::fill(sel.begin(), sel.begin() + size, true);
            do {
                std::vector<std::vector<bool>> keep(std::size_t(n), std::vector<bool>(std::size_t(n), false));
                for (int i = 0; i < m; ++i)
                    if (! sel[i])
                        keep[es[i].u][es[i].v] = keep[es[i].v][es[i].u] = true;
                int cyclic = 0;
                for (auto & comp : components_of(g, keep)) {
                    int inner = 0;
                    for (int x : comp)
                        for (int y : comp)
                            inner += keep[x][y];
                    cyclic += inner / 2 >= int(comp.size());
                }
                if (cyclic >= 2)
                    return size;
            } while (std::prev_permutation(sel.begin(), sel.end()));
        }
        return -1;
    }

    auto regular_classes(int n, int k, bool connected_only) -> std::size_t
    {
        std::vector<int> deg(std::size_t(n), 0);
        std::vector<Edge> es;
        std::map<std::vector<int>, std::vector<Graph>> buckets;
        std::size_t classes = 0;

        auto record = [&] {
            auto g = Graph::from_edges(n, es);
            if (connected_only && ! connected(g))
                return;
            std::vector<int> key;
            for (int v = 0; v < n; ++v) {
                int tri = 0;
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        tri += g.has_edge(v, x) && g.has_edge(v, y) && g.has_edge(x, y);
                key.push_back(tri);
            }
            std::sort(key.begin(), key.end());
            auto & reps = buckets[key];
            for (auto & r : reps)
                if (isomorphic(r, g))
                    return;
            reps.push_back(g);
            ++classes;
        };
        auto fill = [&](auto && self, int v, int from) -> void {
            if (v == n) {
                record();
                return;
            }
            if (deg[v] == k) {
                self(self, v + 1, v + 2);
                return;
            }
            for (int w = std::max(from, v + 1); w < n; ++w) {
                if (deg[w] == k)
                    continue;
                ++deg[v];
                ++deg[w];
                es.emplace_back(v, w);
                self(self, v, w + 1);
                es.pop_back();
                --deg[v];
                --deg[w];
            }
        };
        if (n * k % 2 == 0 && k < n)
            fill(fill, 0, 1);
        return classes;
    }

    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph
    {
        std::vector<Edge> es;
        for (auto & e : g.edges())
            es.emplace_back(perm[e.u], perm[e.v]);
        return Graph::from_edges(g.order(), es);
    }

    auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<int>
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    es.emplace_back(u, v);
        return Graph::from_edges(n, es);
    }
}
