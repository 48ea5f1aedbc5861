#include <hamcensus/certify.hpp>
#include <hamcensus/canonical.hpp>
#include <hamcensus/graph_io.hpp>
#include <hamcensus/structure.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hamcensus
{
    namespace
    {
        auto cycle_witness(const std::string & kind, std::vector<int> cycle) -> Witness
        {
            return Witness{kind, {std::move(cycle)}};
        }

        auto name(char v) -> std::string { return std::string(1, v); }

        /// Hamiltonian s-t path in g - removed, in g's ids.
        auto path_avoiding(const Graph & g, VertexMask removed, int s, int t) -> std::optional<std::vector<int>>
        {
            auto sub = delete_vertices(g, removed);
            auto p = find_hamiltonian_path(sub.graph, sub.from_parent[s], sub.from_parent[t]);
            if (! p)
                return std::nullopt;
            for (auto & v : *p)
                v = sub.to_parent[v];
            return p;
        }

        struct PathQuery
        {
            char s, t;
            std::string removed; // letters of deleted 4-cycle vertices
        };

        auto describe(const PathQuery & q) -> std::string
        {
            std::string out = name(q.s) + name(q.t) + "-path in G";
            for (char r : q.removed)
                out += " - " + name(r);
            return out;
        }

        auto is_cubic(const Graph & g) -> bool
        {
            return g.order() > 0 && is_regular(g, 3);
        }
    }

    auto special_edge_auxiliary(const Graph & g, const SpecialEdges & s) -> SpecialEdgeAuxiliary
    {
        check_special_edges(g, s);
        if (g.order() + 2 > max_order)
            throw GraphError("auxiliary graph exceeds 64 vertices");
        GraphBuilder b(g);
        b.remove_edge(s.a, s.c);
        b.remove_edge(s.u, s.w);
        int bv = b.add_vertices(2);
        int v = bv + 1;
        b.add_edge(s.a, bv);
        b.add_edge(bv, s.c);
        b.add_edge(s.u, v);
        b.add_edge(v, s.w);
        b.add_edge(bv, v);
        return {b.build(), bv, v};
    }

    namespace
    {
        struct ProfileQuery
        {
            std::string id;
            Graph graph;
            EdgeConstraint constraint;
        };

        auto profile_queries(const Graph & g, const SpecialEdges & s) -> std::vector<ProfileQuery>
        {
            auto aux = special_edge_auxiliary(g, s);
            auto & H = aux.H;
            int b = aux.b, v = aux.v;
            auto H_minus = [&](Edge e1, Edge e2) {
                std::vector<Edge> es{e1, e2};
                return H.without_edges(es);
            };
            return {
                {"h00_11", H_minus({b, s.c}, {v, s.w}), {}},
                {"h01_01", g.without_edge(s.ac()), EdgeConstraint::force({s.uw()})},
                {"h01_10", H_minus({b, s.c}, {s.u, v}), {}},
                {"h10_01", H_minus({s.a, b}, {v, s.w}), {}},
                {"h10_10", g.without_edge(s.uw()), EdgeConstraint::force({s.ac()})},
                {"h11_00", H_minus({s.a, b}, {s.u, v}), {}},
                {"h11_11", g, EdgeConstraint::force({s.ac(), s.uw()})},
            };
        }
    }

    auto special_edge_profile(const Graph & g, const SpecialEdges & s, const SearchOptions & opts)
        -> SpecialEdgeProfile
    {
        auto qs = profile_queries(g, s);
        std::array<Count, 7> h{};
        for (std::size_t i = 0; i < qs.size(); ++i)
            h[i] = count_hamiltonian_cycles(qs[i].graph, qs[i].constraint, opts);
        return {h[0], h[1], h[2], h[3], h[4], h[5], h[6]};
    }

    auto lemma2_hypothesis(const Graph & g, const SpecialEdges & s, const SearchOptions & opts) -> Certificate
    {
        auto k = degree_profile(g).regular_degree();
        if (! k || *k < 3)
            throw GraphError("special-edge hypothesis needs a k-regular graph with k >= 3");
        check_special_edges(g, s);

        Certificate cert;
        cert.name = "lemma2";
        cert.graph6 = to_graph6(g);

        Condition tf = Condition::named("two-factor");
        if (auto f = find_two_factor(g, shapes::two_components_separating(s.ac(), s.uw()))) {
            tf.verdict = Verdict::fail;
            tf.detail = "2-factor with two cycles, one through each special edge";
            tf.witness = Witness{"two_factor", f->cycles};
        }
        else
            tf.detail = "no 2-factor of two cycles separating the special edges";
        cert.conditions.push_back(tf);

        for (auto & q : profile_queries(g, s)) {
            if (q.id != "h01_01" && q.id != "h01_10" && q.id != "h10_01" && q.id != "h10_10")
                continue;
            auto r = enumerate_hamiltonian_cycles(q.graph, q.constraint, std::size_t{1}, opts);
            Condition c = Condition::named(q.id);
            c.detail = q.id + " = " + to_decimal(r.count);
            if (r.count) {
                c.verdict = Verdict::fail;
                bool auxiliary = q.graph.order() > g.order();
                c.witness = cycle_witness(auxiliary ? "cycle_in_auxiliary" : "cycle", r.cycles->front());
            }
            cert.conditions.push_back(c);
        }
        cert.settle_from_conditions();
        return cert;
    }

    auto lemma2_predicted_count(int k, int depth, const SpecialEdgeProfile & p) -> Count
    {
        if (k < 3 || depth < 1)
            throw GraphError("gadget count formula needs k >= 3 and depth >= 1");
        Count fact = 1;
        for (int i = 2; i <= k - 2; ++i)
            fact *= Count(i);
        Count scale = 1;
        for (int i = 0; i < depth; ++i)
            scale *= fact;
        return scale * (p.h11_11 + Count(k - 2) * (p.h00_11 + p.h11_00));
    }

    auto good_cycle_certificate(const Graph & g, const FourCycle & fc, const SearchOptions & opts) -> Certificate
    {
        for (int v : {fc.a, fc.b, fc.c, fc.d})
            if (v < 0 || v >= g.order())
                throw GraphError("4-cycle vertex " + std::to_string(v) + " out of range");
        std::vector<Edge> chords;
        if (g.has_edge(fc.a, fc.c))
            chords.emplace_back(fc.a, fc.c);
        if (g.has_edge(fc.b, fc.d))
            chords.emplace_back(fc.b, fc.d);
        check_induced_four_cycle(g.without_edges(chords), fc);
        auto id = [&](char x) {
            switch (x) {
            case 'a': return fc.a;
            case 'b': return fc.b;
            case 'c': return fc.c;
            default: return fc.d;
            }
        };

        Certificate cert;
        cert.name = "good-cycle";
        cert.graph6 = to_graph6(g);

        auto no_paths = [&](const std::string & cid, const std::vector<PathQuery> & qs) {
            Condition c = Condition::named(cid);
            for (auto & q : qs) {
                VertexMask removed = 0;
                for (char r : q.removed)
                    removed |= bit(id(r));
                auto p = path_avoiding(g, removed, id(q.s), id(q.t));
                if (! c.detail.empty())
                    c.detail += "; ";
                c.detail += describe(q) + (p ? ": found" : ": none");
                if (p && c.verdict != Verdict::fail) {
                    c.verdict = Verdict::fail;
                    c.witness = Witness{"path", {*p}};
                }
            }
            cert.conditions.push_back(c);
        };
        no_paths("i", {{'a', 'c', "bd"}, {'b', 'd', "ac"}});
        no_paths("ii", {{'a', 'b', "d"}, {'a', 'd', "b"}, {'a', 'd', "c"}, {'b', 'c', "a"}, {'b', 'c', "d"},
                           {'c', 'd', "b"}});
        no_paths("iii", {{'a', 'c', ""}, {'b', 'd', ""}});

        Edge ad(fc.a, fc.d), bc(fc.b, fc.c);
        Count h = count_hamiltonian_cycles(g, {}, opts);
        Count hf = count_hamiltonian_cycles(g, EdgeConstraint::force({ad, bc}), opts);
        Condition iv = Condition::named("iv");
        iv.detail = "h(G) = " + to_decimal(h) + ", h(G, {ad, bc}) = " + to_decimal(hf);
        if (h == 0)
            iv.verdict = Verdict::vacuous;
        else if (hf != h) {
            iv.verdict = Verdict::fail;
            auto r = enumerate_hamiltonian_cycles(g, EdgeConstraint::forbid({ad}), std::size_t{1}, opts);
            if (! r.count)
                r = enumerate_hamiltonian_cycles(g, EdgeConstraint::forbid({bc}), std::size_t{1}, opts);
            iv.witness = cycle_witness("cycle", r.cycles->front());
        }
        cert.conditions.push_back(iv);

        Condition v = Condition::named("v");
        v.detail = "deg a = " + std::to_string(g.degree(fc.a)) + ", deg b = " + std::to_string(g.degree(fc.b)) +
            ", deg c = " + std::to_string(g.degree(fc.c)) + ", deg d = " + std::to_string(g.degree(fc.d));
        if (g.degree(fc.a) < 4 || g.degree(fc.c) < 4 || g.degree(fc.b) < 3 || g.degree(fc.d) < 3) {
            v.verdict = Verdict::fail;
            v.witness = Witness{"vertices", {{fc.a, fc.b, fc.c, fc.d}}};
        }
        cert.conditions.push_back(v);

        cert.settle_from_conditions();
        if (! chords.empty()) {
            cert.verdict = Verdict::fail;
            cert.detail = "4-cycle abcd is not induced";
        }
        else if (h == 0 && cert.verdict == Verdict::pass) {
            cert.verdict = Verdict::vacuous;
            cert.detail = "graph is not hamiltonian";
        }
        return cert;
    }

    auto smith_parity(const Graph & g, const SearchOptions & opts) -> Certificate
    {
        if (! is_cubic(g))
            throw GraphError("smith parity applies to 3-regular graphs only");
        Certificate cert;
        cert.name = "smith";
        cert.graph6 = to_graph6(g);

        auto profile = edge_traversal_profile(g, opts);
        Count total = 0;
        Condition even = Condition::named("even");
        for (auto & [e, c] : profile) {
            total += c;
            if (c % 2 && even.verdict != Verdict::fail) {
                even.verdict = Verdict::fail;
                even.detail = "edge " + to_string(e) + " lies on " + to_decimal(c) + " hamiltonian cycles";
                even.witness = Witness{"edge", {{e.u, e.v}}};
            }
        }
        if (even.verdict == Verdict::pass)
            even.detail = "every edge lies on an even number of hamiltonian cycles";
        cert.conditions.push_back(even);

        Count h = total / Count(g.order());
        Condition few = Condition::named("h-not-1-or-2");
        few.detail = "h = " + to_decimal(h);
        if (h == 1 || h == 2) {
            few.verdict = Verdict::fail;
            auto r = enumerate_hamiltonian_cycles(g, {}, std::nullopt, opts);
            few.witness = Witness{"cycles", *r.cycles};
        }
        cert.conditions.push_back(few);
        cert.settle_from_conditions();
        return cert;
    }

    auto sheehan_scan(int n, int k, const SearchOptions & opts) -> SheehanScan
    {
        SheehanScan scan;
        scan.n = n;
        scan.k = k;
        bool have = false;
        RegularGraphGenerator gen(n, k);
        while (auto g = gen.next()) {
            ++scan.graphs;
            Count h = count_hamiltonian_cycles(*g, {}, opts);
            if (! h)
                continue;
            ++scan.hamiltonian;
            if (! have || h < scan.minimum) {
                scan.minimum = h;
                scan.argmin = *g;
                have = true;
            }
        }
        if (! scan.graphs)
            throw GraphError("no connected " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices");
        if (! have)
            throw GraphError("no hamiltonian graph in the corpus");
        return scan;
    }

    auto components_without_cycle_edges(const Graph & g, const std::vector<int> & cycle)
        -> std::vector<EdgeRemovedComponent>
    {
        std::vector<Edge> cycle_edges;
        VertexMask on = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            cycle_edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
            on |= bit(cycle[i]);
        }
        auto rest = g.without_edges(cycle_edges);
        std::vector<EdgeRemovedComponent> out;
        for (VertexMask comp : components(rest)) {
            EdgeRemovedComponent c;
            c.vertices = mask_to_vertices(comp);
            c.on_cycle = std::popcount(comp & on);
            int edges = 0, max_deg = 0;
            for_each_vertex(comp, [&](int v) {
                edges += rest.degree(v);
                max_deg = std::max(max_deg, rest.degree(v));
            });
            edges /= 2;
            c.is_k2 = c.vertices.size() == 2 && edges == 1;
            c.is_claw = c.vertices.size() == 4 && edges == 3 && max_deg == 3;
            out.push_back(std::move(c));
        }
        return out;
    }

    auto theorem5_audit(const Graph & g, const SearchOptions & opts) -> Certificate
    {
        if (! is_cubic(g))
            throw GraphError("claw audit applies to 3-regular graphs only");
        Certificate cert;
        cert.name = "theorem5";
        cert.graph6 = to_graph6(g);

        auto longest = longest_cycles(g, opts);
        if (! longest.unique) {
            cert.verdict = Verdict::vacuous;
            cert.detail = std::to_string(int(longest.circumference)) + "-cycles: " + to_decimal(longest.count) +
                "; longest cycle not unique";
            return cert;
        }
        cert.witnesses.push_back(cycle_witness("cycle", longest.witness));

        auto comps = components_without_cycle_edges(g, longest.witness);
        int k2 = 0, claws = 0, other = 0;
        Witness odd{"odd_components", {}};
        for (auto & c : comps) {
            (c.is_k2 ? k2 : c.is_claw ? claws : other)++;
            if (c.on_cycle % 2)
                odd.parts.push_back(c.vertices);
        }
        Condition cond = Condition::named("odd-components");
        cond.detail = "unique longest cycle of length " + std::to_string(longest.circumference) + "; " +
            std::to_string(comps.size()) + " components of G - E(c): " + std::to_string(k2) + " K2, " +
            std::to_string(claws) + " K_{1,3}, " + std::to_string(other) + " other; " +
            std::to_string(odd.parts.size()) + " with an odd number of cycle vertices";
        cond.verdict = odd.parts.size() >= 2 ? Verdict::pass : Verdict::fail;
        cond.witness = odd;
        cert.conditions.push_back(cond);
        cert.witnesses.push_back(odd);
        cert.verdict = cond.verdict;
        cert.detail = cond.detail;
        return cert;
    }

    namespace
    {
        class LeafPathSolver
        {
        public:
            explicit LeafPathSolver(const std::array<VertexMask, max_order> & tree) : tree_(tree) {}

            void solve(VertexMask region, VertexMask terminals, std::vector<std::vector<int>> & out) const
            {
                if (std::popcount(terminals) < 2)
                    return;
                auto q = pick_path(region, terminals);
                VertexMask used = 0;
                for (int v : q)
                    used |= bit(v);
                out.push_back(std::move(q));
                VertexMask rest = region & ~used;
                while (rest) {
                    VertexMask comp = reach(std::countr_zero(rest), rest);
                    rest &= ~comp;
                    solve(comp, terminals & comp, out);
                }
            }

        private:
            const std::array<VertexMask, max_order> & tree_;

            auto reach(int from, VertexMask region) const -> VertexMask
            {
                VertexMask seen = bit(from), frontier = seen;
                while (frontier) {
                    VertexMask next = 0;
                    for_each_vertex(frontier, [&](int v) { next |= tree_[v]; });
                    frontier = next & region & ~seen;
                    seen |= frontier;
                }
                return seen;
            }

            auto tree_path(int s, int t, VertexMask region) const -> std::vector<int>
            {
                std::array<int, max_order> parent{};
                parent[s] = s;
                VertexMask seen = bit(s);
                std::vector<int> queue{s};
                for (std::size_t i = 0; i < queue.size(); ++i)
                    for_each_vertex(tree_[queue[i]] & region & ~seen, [&](int u) {
                        seen |= bit(u);
                        parent[u] = queue[i];
                        queue.push_back(u);
                    });
                std::vector<int> path{t};
                while (path.back() != s)
                    path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }

            /// A terminal-to-terminal path leaving all but at most one
            /// component of the rest with an even number of terminals.
            auto pick_path(VertexMask region, VertexMask terminals) const -> std::vector<int>
            {
                int first = std::countr_zero(terminals);
                int last = 63 - std::countl_zero(terminals);
                auto path = tree_path(first, last, region);
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    int vi = path[i];
                    VertexMask side = tree_[vi] & region & ~bit(path[i - 1]) & ~bit(path[i + 1]);
                    if (! side)
                        continue;
                    VertexMask branch = reach(std::countr_zero(side), region & ~bit(vi));
                    if (std::popcount(branch & terminals) % 2 == 0)
                        continue;
                    std::vector<std::vector<int>> sub;
                    solve(branch | bit(vi), (terminals & branch) | bit(vi), sub);
                    for (auto & p : sub) {
                        if (p.back() == vi)
                            std::reverse(p.begin(), p.end());
                        if (p.front() != vi)
                            continue;
                        std::vector<int> q(path.begin(), path.begin() + std::ptrdiff_t(i) + 1);
                        q.insert(q.end(), p.begin() + 1, p.end());
                        return q;
                    }
                    throw std::logic_error("leaf path recursion lost its anchor");
                }
                return path;
            }
        };
    }

    auto leaf_paths(const Graph & f) -> std::vector<std::vector<int>>
    {
        VertexMask leaves = 0;
        for (int v = 0; v < f.order(); ++v) {
            if (f.degree(v) > 3)
                throw GraphError("leaf paths need maximum degree at most 3");
            if (f.degree(v) == 1)
                leaves |= bit(v);
        }
        if (std::popcount(leaves) < 2)
            throw GraphError("leaf paths need at least two 1-valent vertices");
        if (! is_connected(f))
            throw GraphError("leaf paths need a connected graph");

        std::array<VertexMask, max_order> tree{};
        VertexMask seen = bit(0);
        std::vector<int> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for_each_vertex(f.neighbours(queue[i]) & ~seen, [&](int u) {
                seen |= bit(u);
                tree[queue[i]] |= bit(u);
                tree[u] |= bit(queue[i]);
                queue.push_back(u);
            });

        std::vector<std::vector<int>> out;
        LeafPathSolver(tree).solve(f.vertices(), leaves, out);
        return out;
    }

    auto sixteen_cycle_certificate(const Graph & g, Count expected, const SearchOptions & opts) -> Certificate
    {
        Certificate cert;
        cert.name = "sixteen";
        cert.graph6 = to_graph6(g);

        Condition cubic = Condition::named("cubic");
        cubic.verdict = is_cubic(g) ? Verdict::pass : Verdict::fail;
        auto dp = degree_profile(g);
        cubic.detail = "degrees " + std::to_string(dp.min_degree) + ".." + std::to_string(dp.max_degree);
        cert.conditions.push_back(cubic);

        Condition bip = Condition::named("bipartite");
        auto b = is_bipartite(g);
        if (! b.bipartite) {
            bip.verdict = Verdict::fail;
            bip.detail = "odd cycle found";
            bip.witness = cycle_witness("cycle", b.odd_cycle);
        }
        cert.conditions.push_back(bip);

        Condition cyc = Condition::named("cyclic-4");
        auto cc = is_cyclically_k_edge_connected(g, 4);
        cyc.verdict = cc.verdict == Verdict::fail ? Verdict::fail : Verdict::pass;
        cyc.detail = cc.detail;
        if (! cc.witnesses.empty())
            cyc.witness = cc.witnesses.front();
        cert.conditions.push_back(cyc);

        Condition count = Condition::named("count");
        Count h = count_hamiltonian_cycles(g, {}, opts);
        count.detail = "h = " + to_decimal(h) + ", expected " + to_decimal(expected);
        if (h != expected)
            count.verdict = Verdict::fail;
        cert.conditions.push_back(count);

        cert.settle_from_conditions();
        return cert;
    }

    auto bounds(int n, int k) -> BoundValues
    {
        if (n < 1 || k < 3)
            throw GraphError("bounds need n >= 1 and k >= 3");
        double fact = 1;
        for (int i = 2; i <= k - 2; ++i)
            fact *= i;
        BoundValues b;
        b.n = n;
        b.k = k;
        b.f = double(k - 1) * double(k - 1) * std::pow(fact, double(n) / double(k + 1));
        b.g1 = 9.0 * std::pow(2.0, double(n + 2) / 6.0);
        return b;
    }

    auto exceeds(double a, double b) -> bool
    {
        return a > std::nextafter(b, std::numeric_limits<double>::infinity());
    }

    auto within_ulp(double a, double b) -> bool
    {
        return a == b || std::nextafter(a, b) == b;
    }
}
