#include <hamcensus/cycle_engine.hpp>
#include <hamcensus/structure.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <queue>
#include <set>
#include <string>
#include <thread>

namespace hamcensus
{
    void validate(const Graph & g, const EdgeConstraint & c)
    {
        std::set<Edge> forced(c.forced.begin(), c.forced.end());
        for (auto & e : c.forced)
            if (e.v >= g.order() || ! g.has_edge(e))
                throw GraphError("forced edge " + to_string(e) + " is not an edge of the graph");
        for (auto & e : c.forbidden) {
            if (e.v >= g.order() || ! g.has_edge(e))
                throw GraphError("forbidden edge " + to_string(e) + " is not an edge of the graph");
            if (forced.contains(e))
                throw GraphError("edge " + to_string(e) + " is both forced and forbidden");
        }
    }

    auto resolve_workers(int requested) -> int
    {
        if (requested > 0)
            return requested;
        if (const char * env = std::getenv("HAMCENSUS_WORKERS")) {
            int w = std::atoi(env);
            if (w > 0)
                return w;
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto canonical_cycle(std::vector<int> cycle) -> std::vector<int>
    {
        if (cycle.size() < 3)
            return cycle;
        auto lead = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), lead, cycle.end());
        if (cycle.back() < cycle[1])
            std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
    }

    namespace
    {
        /// Admissible adjacency after forbidden edges are removed, plus the
        /// forced edges. Both symmetric.
        struct Adjacency
        {
            int n = 0;
            std::array<VertexMask, max_order> adj{};
            std::array<VertexMask, max_order> forced{};
        };

        auto make_adjacency(const Graph & g, const EdgeConstraint & c) -> Adjacency
        {
            validate(g, c);
            Adjacency a;
            a.n = g.order();
            for (int v = 0; v < a.n; ++v)
                a.adj[v] = g.neighbours(v);
            for (auto & e : c.forbidden) {
                a.adj[e.u] &= ~bit(e.v);
                a.adj[e.v] &= ~bit(e.u);
            }
            for (auto & e : c.forced) {
                a.forced[e.u] |= bit(e.v);
                a.forced[e.v] |= bit(e.u);
            }
            return a;
        }

        auto over_forced(const Adjacency & a) -> bool
        {
            for (int v = 0; v < a.n; ++v)
                if (std::popcount(a.forced[v]) > 2)
                    return true;
            return false;
        }

        auto reach_within(const Adjacency & a, int from, VertexMask region) -> VertexMask
        {
            VertexMask seen = bit(from), frontier = seen;
            while (frontier) {
                VertexMask next = 0;
                for_each_vertex(frontier, [&](int v) { next |= a.adj[v]; });
                frontier = next & region & ~seen;
                seen |= frontier;
            }
            return seen;
        }

        enum class Step
        {
            leaf,
            dead,
            branch
        };

        struct Expansion
        {
            Step step;
            VertexMask candidates = 0;
        };

        /// A partially built path, the unit of work handed to workers.
        struct Node
        {
            std::vector<int> path; // path[0] is the start; anchor not included
            VertexMask visited = 0;
        };

        /// Spanning paths of `domain` from a fixed start ending in `ends`,
        /// obeying forced edges. For cycles the anchor vertex sits outside the
        /// domain, adjacent to every end vertex, and is stripped from `forced`.
        struct HamiltonianProblem
        {
            const Adjacency * a = nullptr;
            VertexMask domain = 0;
            VertexMask ends = 0;
            bool ends_terminal = false; // an end vertex may only be visited last
            int anchor = -1;

            auto expand(const Node & node) const -> Expansion
            {
                const auto & adj = a->adj;
                const auto & forced = a->forced;
                int cur = node.path.back();
                VertexMask prev = node.path.size() >= 2 ? bit(node.path[node.path.size() - 2]) : 0;
                VertexMask visited = node.visited;
                VertexMask unvisited = domain & ~visited;
                VertexMask onward = forced[cur] & ~prev;

                if (! unvisited)
                    return {((ends >> cur) & 1) && ! onward ? Step::leaf : Step::dead};
                if (ends_terminal && ((ends >> cur) & 1))
                    return {Step::dead};
                if ((onward & visited) || std::popcount(onward) > 1)
                    return {Step::dead};

                VertexMask region = unvisited | bit(cur);
                if (! (region & ends))
                    return {Step::dead};

                VertexMask need = onward;
                VertexMask rest = unvisited;
                while (rest) {
                    int u = std::countr_zero(rest);
                    rest &= rest - 1;
                    VertexMask avail = adj[u] & region;
                    int room = std::popcount(avail) + int((ends >> u) & 1);
                    if (room < 2)
                        return {Step::dead};
                    if (forced[u] & visited & ~bit(cur))
                        return {Step::dead};
                    if ((avail & bit(cur)) && (room == 2 || (forced[u] & bit(cur))))
                        need |= bit(u);
                }
                if (std::popcount(need) > 1)
                    return {Step::dead};

                VertexMask cand = adj[cur] & unvisited;
                if (need)
                    cand &= need;
                if (ends_terminal && std::popcount(unvisited) > 1)
                    cand &= ~ends;
                if (! cand)
                    return {Step::dead};
                if (reach_within(*a, cur, region) != region)
                    return {Step::dead};
                return {Step::branch, cand};
            }
        };

        /// Paths of exactly `target` vertices (start included) inside
        /// `domain`, ending in `ends`; unvisited vertices may be skipped.
        struct FixedLengthProblem
        {
            const Adjacency * a = nullptr;
            VertexMask domain = 0;
            VertexMask ends = 0;
            int target = 0;
            int anchor = -1;

            auto expand(const Node & node) const -> Expansion
            {
                const auto & adj = a->adj;
                int cur = node.path.back();
                int len = int(node.path.size());
                if (len == target)
                    return {((ends >> cur) & 1) ? Step::leaf : Step::dead};
                int needed = target - len;

                VertexMask alive = domain & ~node.visited;
                for (bool changed = true; changed;) {
                    changed = false;
                    VertexMask rest = alive;
                    while (rest) {
                        int u = std::countr_zero(rest);
                        rest &= rest - 1;
                        int room = std::popcount(adj[u] & (alive | bit(cur))) + int((ends >> u) & 1);
                        if (room < 2) {
                            alive &= ~bit(u);
                            changed = true;
                        }
                    }
                }
                if (std::popcount(alive) < needed)
                    return {Step::dead};

                // layered search from cur: prune unreachable vertices, and the
                // nearest end must be within `needed` steps
                VertexMask seen = bit(cur), frontier = seen;
                int dist = 0, end_dist = -1;
                while (frontier) {
                    VertexMask next = 0;
                    for_each_vertex(frontier, [&](int v) { next |= adj[v]; });
                    frontier = next & alive & ~seen;
                    seen |= frontier;
                    ++dist;
                    if (end_dist < 0 && (frontier & ends))
                        end_dist = dist;
                }
                if (end_dist < 0 || end_dist > needed)
                    return {Step::dead};
                alive &= seen;
                int alive_count = std::popcount(alive);
                if (alive_count < needed)
                    return {Step::dead};

                VertexMask cand = adj[cur] & alive;
                if (alive_count == needed) {
                    // every remaining vertex is used: hamiltonian-style forcing
                    VertexMask need = 0;
                    VertexMask rest = alive;
                    while (rest) {
                        int u = std::countr_zero(rest);
                        rest &= rest - 1;
                        VertexMask avail = adj[u] & (alive | bit(cur));
                        int room = std::popcount(avail) + int((ends >> u) & 1);
                        if (room < 2)
                            return {Step::dead};
                        if ((avail & bit(cur)) && room == 2)
                            need |= bit(u);
                    }
                    if (std::popcount(need) > 1)
                        return {Step::dead};
                    if (need)
                        cand &= need;
                }
                if (needed == 1)
                    cand &= ends;
                if (! cand)
                    return {Step::dead};
                return {Step::branch, cand};
            }
        };

        template <typename Problem, typename Sink>
        void search(const Problem & p, Node & node, Sink & sink)
        {
            if (sink.stopped())
                return;
            auto e = p.expand(node);
            if (e.step == Step::leaf) {
                sink.leaf(p.anchor, node.path);
                return;
            }
            if (e.step == Step::dead)
                return;
            for_each_vertex(e.candidates, [&](int nxt) {
                if (sink.stopped())
                    return;
                node.path.push_back(nxt);
                node.visited |= bit(nxt);
                search(p, node, sink);
                node.visited &= ~bit(nxt);
                node.path.pop_back();
            });
        }

        template <typename Problem>
        void split(const Problem & p, Node & node, int depth, std::vector<Node> & out)
        {
            if (depth == 0) {
                out.push_back(node);
                return;
            }
            auto e = p.expand(node);
            if (e.step == Step::dead)
                return;
            if (e.step == Step::leaf) {
                out.push_back(node);
                return;
            }
            for_each_vertex(e.candidates, [&](int nxt) {
                node.path.push_back(nxt);
                node.visited |= bit(nxt);
                split(p, node, depth - 1, out);
                node.visited &= ~bit(nxt);
                node.path.pop_back();
            });
        }

        template <typename Problem>
        struct Task
        {
            const Problem * problem;
            Node node;
        };

        /// Runs every task, each into its own sink, then merges the sinks in
        /// task order so the result does not depend on scheduling.
        template <typename Problem, typename Sink, typename MakeSink>
        auto run_tasks(const std::vector<Problem> & problems, const std::vector<Node> & roots, const SearchOptions & opts,
            MakeSink make_sink) -> Sink
        {
            std::vector<Task<Problem>> tasks;
            for (std::size_t i = 0; i < problems.size(); ++i) {
                std::vector<Node> nodes;
                Node root = roots[i];
                split(problems[i], root, std::max(0, opts.split_depth), nodes);
                for (auto & n : nodes)
                    tasks.push_back({&problems[i], std::move(n)});
            }

            std::vector<Sink> sinks;
            sinks.reserve(tasks.size());
            for (std::size_t i = 0; i < tasks.size(); ++i)
                sinks.push_back(make_sink());

            int workers = std::min<int>(resolve_workers(opts.workers), std::max<std::size_t>(1, tasks.size()));
            std::atomic<std::size_t> next{0};
            auto work = [&]() {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
                    Node node = tasks[i].node;
                    search(*tasks[i].problem, node, sinks[i]);
                }
            };
            if (workers <= 1)
                work();
            else {
                std::vector<std::jthread> pool;
                for (int w = 0; w < workers; ++w)
                    pool.emplace_back(work);
            }

            Sink total = make_sink();
            for (auto & s : sinks)
                total.merge(s);
            return total;
        }

        auto full_cycle(int anchor, const std::vector<int> & path) -> std::vector<int>
        {
            std::vector<int> cycle;
            cycle.reserve(path.size() + 1);
            if (anchor >= 0)
                cycle.push_back(anchor);
            cycle.insert(cycle.end(), path.begin(), path.end());
            return cycle;
        }

        struct CountSink
        {
            Count count = 0;
            auto stopped() const -> bool { return false; }
            void leaf(int, const std::vector<int> &) { ++count; }
            void merge(const CountSink & o) { count += o.count; }
        };

        struct EdgeIndex
        {
            std::array<std::array<short, max_order>, max_order> id{};
            std::vector<Edge> edges;

            explicit EdgeIndex(const Graph & g) : edges(g.edges())
            {
                for (std::size_t i = 0; i < edges.size(); ++i) {
                    id[edges[i].u][edges[i].v] = short(i);
                    id[edges[i].v][edges[i].u] = short(i);
                }
            }
        };

        /// Counts, per-edge traversal counts, and the smallest cycles seen.
        struct ReportSink
        {
            const EdgeIndex * index = nullptr;
            bool per_edge = false;
            bool keep = false;
            std::size_t cap = 0; // 0 = unbounded
            Count count = 0;
            std::vector<Count> edge_counts;
            std::priority_queue<std::vector<int>> kept; // max-heap of smallest
            std::size_t stop_after = 0;                 // 0 = never

            auto stopped() const -> bool { return stop_after && count >= stop_after; }

            void leaf(int anchor, const std::vector<int> & path)
            {
                ++count;
                if (! per_edge && ! keep)
                    return;
                auto cycle = full_cycle(anchor, path);
                if (per_edge) {
                    if (edge_counts.empty())
                        edge_counts.assign(index->edges.size(), 0);
                    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
                        ++edge_counts[index->id[cycle[i]][cycle[i + 1]]];
                    if (anchor >= 0)
                        ++edge_counts[index->id[cycle.back()][cycle.front()]];
                }
                if (keep)
                    offer(anchor >= 0 ? canonical_cycle(std::move(cycle)) : std::move(cycle));
            }

            void offer(std::vector<int> c)
            {
                if (cap && kept.size() == cap) {
                    if (! (c < kept.top()))
                        return;
                    kept.pop();
                }
                kept.push(std::move(c));
            }

            void merge(const ReportSink & o)
            {
                count += o.count;
                if (! o.edge_counts.empty()) {
                    if (edge_counts.empty())
                        edge_counts.assign(o.edge_counts.size(), 0);
                    for (std::size_t i = 0; i < o.edge_counts.size(); ++i)
                        edge_counts[i] += o.edge_counts[i];
                }
                auto copy = o.kept;
                while (! copy.empty()) {
                    offer(copy.top());
                    copy.pop();
                }
            }

            auto sorted() const -> std::vector<std::vector<int>>
            {
                std::vector<std::vector<int>> out;
                auto copy = kept;
                while (! copy.empty()) {
                    out.push_back(copy.top());
                    copy.pop();
                }
                std::reverse(out.begin(), out.end());
                return out;
            }
        };

        struct CycleSetup
        {
            Adjacency adj;
            std::vector<HamiltonianProblem> problems;
            std::vector<Node> roots;
            bool trivially_zero = false;
        };

        /// Picks an anchor vertex and one root per choice of the anchor's
        /// first neighbour, so each undirected cycle is produced once.
        auto setup_cycles(const Graph & g, const EdgeConstraint & c) -> CycleSetup
        {
            CycleSetup s;
            s.adj = make_adjacency(g, c);
            int n = g.order();
            if (n < 3 || over_forced(s.adj)) {
                s.trivially_zero = true;
                return s;
            }
            auto & a = s.adj;
            int anchor = 0;
            for (int v = 1; v < n; ++v) {
                int fv = std::popcount(a.forced[v]), fa = std::popcount(a.forced[anchor]);
                if (fv > fa || (fv == fa && std::popcount(a.adj[v]) < std::popcount(a.adj[anchor])))
                    anchor = v;
            }
            VertexMask fs = a.forced[anchor];
            for_each_vertex(fs, [&](int v) { a.forced[v] &= ~bit(anchor); });
            a.forced[anchor] = 0;

            std::vector<std::pair<int, VertexMask>> starts;
            if (std::popcount(fs) == 2)
                starts.emplace_back(std::countr_zero(fs), fs & (fs - 1));
            else if (std::popcount(fs) == 1)
                starts.emplace_back(std::countr_zero(fs), a.adj[anchor] & ~fs);
            else
                for_each_vertex(a.adj[anchor], [&](int t) { starts.emplace_back(t, a.adj[anchor] & ~low_mask(t + 1)); });

            VertexMask domain = g.vertices() & ~bit(anchor);
            for (auto [first, ends] : starts) {
                if (! ends)
                    continue;
                HamiltonianProblem p;
                p.domain = domain;
                p.ends = ends;
                p.anchor = anchor;
                s.problems.push_back(p);
                s.roots.push_back(Node{{first}, bit(anchor) | bit(first)});
            }
            return s;
        }

        /// Problems hold a pointer into the setup's adjacency; bind after the
        /// setup has reached its final address.
        void bind(CycleSetup & s)
        {
            for (auto & p : s.problems)
                p.a = &s.adj;
        }

        auto make_report_sink(const EdgeIndex * index, const CycleRequest & request)
        {
            return [=]() {
                ReportSink r;
                r.index = index;
                r.per_edge = request.per_edge;
                r.keep = request.list_cycles;
                r.cap = request.limit.value_or(0);
                return r;
            };
        }

        auto edge_map(const EdgeIndex & index, const std::vector<Count> & counts) -> std::map<Edge, Count>
        {
            std::map<Edge, Count> out;
            for (std::size_t i = 0; i < index.edges.size(); ++i)
                out[index.edges[i]] = counts.empty() ? 0 : counts[i];
            return out;
        }
    }

    auto count_hamiltonian_cycles(const Graph & g, const EdgeConstraint & c, const SearchOptions & opts) -> Count
    {
        auto s = setup_cycles(g, c);
        if (s.trivially_zero)
            return 0;
        bind(s);
        return run_tasks<HamiltonianProblem, CountSink>(s.problems, s.roots, opts, [] { return CountSink{}; }).count;
    }

    auto hamiltonian_cycle_report(const Graph & g, const EdgeConstraint & c, const CycleRequest & request,
        const SearchOptions & opts) -> CycleReport
    {
        CycleReport report;
        EdgeIndex index(g);
        auto s = setup_cycles(g, c);
        if (request.list_cycles)
            report.cycles.emplace();
        if (request.per_edge)
            report.per_edge = edge_map(index, {});
        if (s.trivially_zero)
            return report;
        bind(s);
        auto sink = run_tasks<HamiltonianProblem, ReportSink>(s.problems, s.roots, opts, make_report_sink(&index, request));
        report.count = sink.count;
        if (request.per_edge)
            report.per_edge = edge_map(index, sink.edge_counts);
        if (request.list_cycles) {
            report.cycles = sink.sorted();
            report.truncated = request.limit && sink.count > Count(*request.limit);
        }
        return report;
    }

    auto enumerate_hamiltonian_cycles(const Graph & g, const EdgeConstraint & c, std::optional<std::size_t> limit,
        const SearchOptions & opts) -> CycleReport
    {
        return hamiltonian_cycle_report(g, c, CycleRequest{false, true, limit}, opts);
    }

    auto edge_traversal_profile(const Graph & g, const SearchOptions & opts) -> std::map<Edge, Count>
    {
        return *hamiltonian_cycle_report(g, {}, CycleRequest{true, false, std::nullopt}, opts).per_edge;
    }

    namespace
    {
        struct PathSetup
        {
            Adjacency adj;
            HamiltonianProblem problem;
            Node root;
            bool trivially_zero = false;
        };

        auto setup_paths(const Graph & g, int s, int t, const EdgeConstraint & c) -> PathSetup
        {
            if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
                throw GraphError("path endpoint out of range");
            if (s == t)
                throw GraphError("path endpoints must differ");
            PathSetup p;
            p.adj = make_adjacency(g, c);
            p.trivially_zero = over_forced(p.adj);
            p.problem.domain = g.vertices();
            p.problem.ends = bit(t);
            p.problem.ends_terminal = true;
            p.root = Node{{s}, bit(s)};
            return p;
        }
    }

    auto count_hamiltonian_paths(const Graph & g, int s, int t, const EdgeConstraint & c, const SearchOptions & opts)
        -> Count
    {
        auto p = setup_paths(g, s, t, c);
        if (p.trivially_zero)
            return 0;
        p.problem.a = &p.adj;
        std::vector<HamiltonianProblem> problems{p.problem};
        std::vector<Node> roots{p.root};
        return run_tasks<HamiltonianProblem, CountSink>(problems, roots, opts, [] { return CountSink{}; }).count;
    }

    auto find_hamiltonian_path(const Graph & g, int s, int t, const EdgeConstraint & c)
        -> std::optional<std::vector<int>>
    {
        auto p = setup_paths(g, s, t, c);
        if (p.trivially_zero)
            return std::nullopt;
        p.problem.a = &p.adj;
        ReportSink sink;
        sink.keep = true;
        sink.stop_after = 1;
        Node node = p.root;
        search(p.problem, node, sink);
        if (sink.kept.empty())
            return std::nullopt;
        return sink.kept.top();
    }

    auto find_hamiltonian_cycle(const Graph & g, const EdgeConstraint & c) -> std::optional<std::vector<int>>
    {
        auto s = setup_cycles(g, c);
        if (s.trivially_zero)
            return std::nullopt;
        bind(s);
        ReportSink sink;
        sink.keep = true;
        sink.stop_after = 1;
        for (std::size_t i = 0; i < s.problems.size() && sink.kept.empty(); ++i) {
            Node node = s.roots[i];
            search(s.problems[i], node, sink);
        }
        if (sink.kept.empty())
            return std::nullopt;
        return sink.kept.top();
    }

    namespace
    {
        struct LengthSetup
        {
            Adjacency adj;
            std::vector<FixedLengthProblem> problems;
            std::vector<Node> roots;
        };

        /// Each cycle is rooted at its smallest vertex s, with the smaller of
        /// s's two cycle neighbours taken first.
        auto setup_length(const Graph & g, int length) -> LengthSetup
        {
            LengthSetup s;
            s.adj = make_adjacency(g, {});
            int n = g.order();
            for (int anchor = 0; anchor <= n - length; ++anchor) {
                VertexMask domain = g.vertices() & ~low_mask(anchor + 1);
                for_each_vertex(s.adj.adj[anchor] & domain, [&](int first) {
                    VertexMask ends = s.adj.adj[anchor] & ~low_mask(first + 1);
                    if (! ends)
                        return;
                    FixedLengthProblem p;
                    p.domain = domain;
                    p.ends = ends;
                    p.target = length - 1;
                    p.anchor = anchor;
                    s.problems.push_back(p);
                    s.roots.push_back(Node{{first}, bit(anchor) | bit(first)});
                });
            }
            return s;
        }

        void bind(LengthSetup & s)
        {
            for (auto & p : s.problems)
                p.a = &s.adj;
        }

        auto check_length(const Graph & g, int length)
        {
            if (length < 3 || length > g.order())
                throw GraphError("cycle length " + std::to_string(length) + " outside 3..n");
        }

        auto length_report(const Graph & g, int length, const SearchOptions & opts, bool keep, std::size_t cap)
            -> ReportSink
        {
            auto s = setup_length(g, length);
            bind(s);
            CycleRequest request{false, keep, cap ? std::optional<std::size_t>{cap} : std::nullopt};
            return run_tasks<FixedLengthProblem, ReportSink>(s.problems, s.roots, opts, make_report_sink(nullptr, request));
        }

        auto choose(int n, int k) -> double
        {
            double r = 1;
            for (int i = 1; i <= k; ++i)
                r = r * (n - k + i) / i;
            return r;
        }

        /// Sum of h(G - X) over all vertex sets X of size n - length, plus
        /// the smallest canonical cycle among them.
        auto subset_exclusion(const Graph & g, int length, const SearchOptions & opts) -> std::pair<Count, std::vector<int>>
        {
            int n = g.order(), drop = n - length;
            Count total = 0;
            std::vector<int> best;
            std::vector<int> chosen;
            auto visit = [&](VertexMask removed) {
                auto sub = delete_vertices(g, removed);
                auto r = enumerate_hamiltonian_cycles(sub.graph, {}, std::size_t{1}, opts);
                total += r.count;
                if (r.count > 0) {
                    std::vector<int> c;
                    for (int v : r.cycles->front())
                        c.push_back(sub.to_parent[v]);
                    c = canonical_cycle(c);
                    if (best.empty() || c < best)
                        best = c;
                }
            };
            auto rec = [&](auto & self, int from, VertexMask removed) -> void {
                if (int(chosen.size()) == drop) {
                    visit(removed);
                    return;
                }
                for (int v = from; v <= n - (drop - int(chosen.size())); ++v) {
                    chosen.push_back(v);
                    self(self, v + 1, removed | bit(v));
                    chosen.pop_back();
                }
            };
            rec(rec, 0, 0);
            return {total, best};
        }
    }

    auto count_cycles_of_length(const Graph & g, int length, const SearchOptions & opts) -> Count
    {
        check_length(g, length);
        if (length == g.order())
            return count_hamiltonian_cycles(g, {}, opts);
        auto s = setup_length(g, length);
        bind(s);
        return run_tasks<FixedLengthProblem, CountSink>(s.problems, s.roots, opts, [] { return CountSink{}; }).count;
    }

    auto enumerate_cycles_of_length(const Graph & g, int length, const SearchOptions & opts)
        -> std::vector<std::vector<int>>
    {
        check_length(g, length);
        if (length == g.order())
            return *enumerate_hamiltonian_cycles(g, {}, std::nullopt, opts).cycles;
        return length_report(g, length, opts, true, 0).sorted();
    }

    auto longest_cycles(const Graph & g, const SearchOptions & opts, LongestCycleRoute route) -> LongestCycleReport
    {
        int n = g.order();
        if (n < 3 || ! has_cycle_within(g, g.vertices()))
            throw GraphError("no cycle: graph is a forest");

        for (int length = n; length >= 3; --length) {
            LongestCycleReport r;
            bool subsets = route == LongestCycleRoute::subset_exclusion ||
                (route == LongestCycleRoute::automatic && n <= 30 && choose(n, n - length) <= 2000);
            if (length == n) {
                auto rep = enumerate_hamiltonian_cycles(g, {}, std::size_t{1}, opts);
                r.count = rep.count;
                if (rep.count)
                    r.witness = rep.cycles->front();
            }
            else if (subsets) {
                auto [count, best] = subset_exclusion(g, length, opts);
                r.count = count;
                r.witness = best;
            }
            else {
                auto sink = length_report(g, length, opts, true, 1);
                r.count = sink.count;
                if (sink.count)
                    r.witness = sink.sorted().front();
            }
            if (r.count) {
                r.circumference = length;
                r.unique = r.count == 1;
                return r;
            }
        }
        throw GraphError("no cycle: graph is a forest");
    }

    auto TwoFactor::cycle_with_edge(const Edge & e) const -> int
    {
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            auto & c = cycles[i];
            for (std::size_t j = 0; j < c.size(); ++j)
                if (Edge(c[j], c[(j + 1) % c.size()]) == e)
                    return int(i);
        }
        return -1;
    }

    auto TwoFactor::uses_edge(const Edge & e) const -> bool
    {
        return cycle_with_edge(e) >= 0;
    }

    namespace shapes
    {
        auto any() -> TwoFactorShape
        {
            return [](const TwoFactor &) { return true; };
        }

        auto single_cycle() -> TwoFactorShape
        {
            return cycle_count(1);
        }

        auto cycle_count(std::size_t k) -> TwoFactorShape
        {
            return [k](const TwoFactor & f) { return f.cycles.size() == k; };
        }

        auto two_components_separating(Edge e1, Edge e2) -> TwoFactorShape
        {
            return [e1, e2](const TwoFactor & f) {
                if (f.cycles.size() != 2)
                    return false;
                int i = f.cycle_with_edge(e1), j = f.cycle_with_edge(e2);
                return i >= 0 && j >= 0 && i != j;
            };
        }

        auto all_cycles_of_length(std::size_t len) -> TwoFactorShape
        {
            return [len](const TwoFactor & f) {
                return std::all_of(f.cycles.begin(), f.cycles.end(), [&](auto & c) { return c.size() == len; });
            };
        }
    }

    namespace
    {
        /// Spanning 2-regular subgraphs. The lowest vertex still short of
        /// degree 2 picks its remaining partners among unsaturated vertices,
        /// so every edge is decided exactly once.
        class TwoFactorSearch
        {
        public:
            TwoFactorSearch(const Graph & g, const TwoFactorShape & shape, bool first_only) :
                g_(g), shape_(shape), first_only_(first_only)
            {
            }

            void run()
            {
                if (g_.order() < 3)
                    return;
                for (int v = 0; v < g_.order(); ++v)
                    if (g_.degree(v) < 2)
                        return;
                rec(g_.vertices());
            }

            Count count = 0;
            std::optional<TwoFactor> first;

        private:
            const Graph & g_;
            const TwoFactorShape & shape_;
            bool first_only_;
            std::array<VertexMask, max_order> sel_{};

            auto done() const -> bool { return first_only_ && first.has_value(); }

            auto deficit(int v) const -> int { return 2 - std::popcount(sel_[v]); }

            auto feasible(VertexMask unsat) const -> bool
            {
                bool ok = true;
                for_each_vertex(unsat, [&](int u) {
                    if (std::popcount(g_.neighbours(u) & unsat & ~bit(u)) < deficit(u))
                        ok = false;
                });
                return ok;
            }

            auto assemble() const -> TwoFactor
            {
                TwoFactor f;
                VertexMask left = g_.vertices();
                while (left) {
                    int start = std::countr_zero(left);
                    std::vector<int> cycle{start};
                    int prev = start, cur = std::countr_zero(sel_[start]);
                    while (cur != start) {
                        cycle.push_back(cur);
                        int nxt = std::countr_zero(sel_[cur] & ~bit(prev));
                        prev = cur;
                        cur = nxt;
                    }
                    for (int v : cycle)
                        left &= ~bit(v);
                    f.cycles.push_back(canonical_cycle(cycle));
                }
                std::sort(f.cycles.begin(), f.cycles.end());
                return f;
            }

            void rec(VertexMask unsat)
            {
                if (done())
                    return;
                if (! unsat) {
                    auto f = assemble();
                    if (shape_(f)) {
                        ++count;
                        if (first_only_)
                            first = std::move(f);
                    }
                    return;
                }
                int v = std::countr_zero(unsat);
                int need = deficit(v);
                VertexMask cand = g_.neighbours(v) & unsat & ~bit(v);
                auto attach = [&](VertexMask partners) {
                    VertexMask next = unsat & ~bit(v);
                    sel_[v] |= partners;
                    for_each_vertex(partners, [&](int w) {
                        sel_[w] |= bit(v);
                        if (deficit(w) == 0)
                            next &= ~bit(w);
                    });
                    if (feasible(next))
                        rec(next);
                    sel_[v] &= ~partners;
                    for_each_vertex(partners, [&](int w) { sel_[w] &= ~bit(v); });
                };
                if (need == 1)
                    for_each_vertex(cand, [&](int w) { attach(bit(w)); });
                else
                    for_each_vertex(cand, [&](int w) {
                        for_each_vertex(cand & ~low_mask(w + 1), [&](int x) { attach(bit(w) | bit(x)); });
                    });
            }
        };
    }

    auto count_two_factors(const Graph & g, const TwoFactorShape & shape) -> Count
    {
        TwoFactorSearch s(g, shape, false);
        s.run();
        return s.count;
    }

    auto find_two_factor(const Graph & g, const TwoFactorShape & shape) -> std::optional<TwoFactor>
    {
        TwoFactorSearch s(g, shape, true);
        s.run();
        return s.first;
    }
}
