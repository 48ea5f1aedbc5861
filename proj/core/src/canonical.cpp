#include <hamcensus/canonical.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace hamcensus
{
    namespace
    {
        using Partition = std::vector<VertexMask>;

        /// Splits the first cell that is not equitable with respect to some
        /// cell, ordering the pieces by neighbour count. Returns false when
        /// the partition is equitable.
        auto split_once(const Graph & g, Partition & p) -> bool
        {
            for (std::size_t si = 0; si < p.size(); ++si) {
                VertexMask splitter = p[si];
                for (std::size_t ci = 0; ci < p.size(); ++ci) {
                    if (std::popcount(p[ci]) == 1)
                        continue;
                    std::map<int, VertexMask> groups;
                    for_each_vertex(p[ci], [&](int v) { groups[std::popcount(g.neighbours(v) & splitter)] |= bit(v); });
                    if (groups.size() == 1)
                        continue;
                    Partition pieces;
                    for (auto & [count, cell] : groups)
                        pieces.push_back(cell);
                    p.erase(p.begin() + std::ptrdiff_t(ci));
                    p.insert(p.begin() + std::ptrdiff_t(ci), pieces.begin(), pieces.end());
                    return true;
                }
            }
            return false;
        }

        class CanonicalSearch
        {
        public:
            explicit CanonicalSearch(const Graph & g) : g_(g) {}

            auto run() -> CanonicalLabeling
            {
                Partition p;
                if (g_.order() > 0)
                    p.push_back(g_.vertices());
                descend(std::move(p));
                return best_;
            }

        private:
            const Graph & g_;
            CanonicalLabeling best_;
            bool have_ = false;

            void leaf(const Partition & p)
            {
                int n = g_.order();
                std::vector<int> order(static_cast<std::size_t>(n));
                std::vector<int> inverse(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    order[i] = std::countr_zero(p[i]);
                    inverse[order[i]] = i;
                }
                std::vector<VertexMask> code(std::size_t(n), 0);
                for (int i = 0; i < n; ++i)
                    for_each_vertex(g_.neighbours(order[i]), [&](int u) { code[i] |= bit(inverse[u]); });
                if (! have_ || code < best_.code) {
                    best_.order = std::move(order);
                    best_.code = std::move(code);
                    have_ = true;
                }
            }

            void descend(Partition p)
            {
                while (split_once(g_, p)) {
                }
                std::size_t target = p.size();
                for (std::size_t i = 0; i < p.size(); ++i)
                    if (std::popcount(p[i]) > 1 && (target == p.size() || std::popcount(p[i]) < std::popcount(p[target])))
                        target = i;
                if (target == p.size()) {
                    leaf(p);
                    return;
                }
                for_each_vertex(p[target], [&](int v) {
                    Partition q = p;
                    q[target] &= ~bit(v);
                    q.insert(q.begin() + std::ptrdiff_t(target), bit(v));
                    descend(std::move(q));
                });
            }
        };
    }

    auto canonical_labeling(const Graph & g) -> CanonicalLabeling
    {
        return CanonicalSearch(g).run();
    }

    auto canonical_form(const Graph & g) -> Graph
    {
        auto c = canonical_labeling(g);
        return Graph::from_adjacency(g.order(), c.code);
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order() || a.size() != b.size())
            return false;
        return canonical_labeling(a).code == canonical_labeling(b).code;
    }

    /// Vertices are saturated in id order. Vertex i picks its missing
    /// neighbours among later vertices; untouched later vertices are
    /// interchangeable, so only the lowest-numbered ones are offered. A
    /// vertex reached while still untouched would start a new component.
    struct RegularGraphGenerator::State
    {
        struct Frame
        {
            int vertex;
            std::vector<VertexMask> choices;
            std::size_t next = 0;
            VertexMask applied = 0;
        };

        int n = 0, k = 0;
        bool started = false, feasible = false;
        std::array<VertexMask, max_order> adj{};
        std::vector<Frame> stack;
        std::set<std::vector<VertexMask>> seen;

        auto degree(int v) const -> int { return std::popcount(adj[v]); }

        void apply(int v, VertexMask partners, bool add)
        {
            for_each_vertex(partners, [&](int u) {
                if (add) {
                    adj[v] |= bit(u);
                    adj[u] |= bit(v);
                }
                else {
                    adj[v] &= ~bit(u);
                    adj[u] &= ~bit(v);
                }
            });
        }

        /// Every vertex after `i` can still reach degree k.
        auto completable(int i) const -> bool
        {
            VertexMask open = 0;
            for (int j = i + 1; j < n; ++j)
                if (degree(j) < k)
                    open |= bit(j);
            bool ok = true;
            for_each_vertex(open, [&](int j) {
                if (std::popcount(open & ~adj[j] & ~bit(j)) < k - degree(j))
                    ok = false;
            });
            return ok;
        }

        auto choices_for(int i) const -> std::vector<VertexMask>
        {
            int need = k - degree(i);
            VertexMask touched = 0;
            std::vector<int> untouched;
            for (int j = i + 1; j < n; ++j) {
                if (degree(j) == 0)
                    untouched.push_back(j);
                else if (degree(j) < k && ! ((adj[i] >> j) & 1))
                    touched |= bit(j);
            }
            std::vector<VertexMask> out;
            for (VertexMask sub = touched;; sub = (sub - 1) & touched) {
                int taken = std::popcount(sub);
                int rest = need - taken;
                if (taken <= need && rest <= int(untouched.size())) {
                    VertexMask c = sub;
                    for (int r = 0; r < rest; ++r)
                        c |= bit(untouched[r]);
                    out.push_back(c);
                }
                if (sub == 0)
                    break;
            }
            std::reverse(out.begin(), out.end());
            return out;
        }

        /// Pushes a frame for the first unsaturated vertex after `after`;
        /// returns 1 on a complete graph, 0 if pushed, -1 if pruned.
        auto advance(int after) -> int
        {
            int i = after + 1;
            while (i < n && degree(i) == k)
                ++i;
            if (i == n)
                return 1;
            if (i > 0 && degree(i) == 0)
                return -1;
            auto choices = choices_for(i);
            if (choices.empty())
                return -1;
            stack.push_back(Frame{i, std::move(choices)});
            return 0;
        }

        auto emit() -> std::optional<Graph>
        {
            Graph g = Graph::from_adjacency(n, std::span<const VertexMask>(adj.data(), std::size_t(n)));
            auto c = canonical_labeling(g);
            if (! seen.insert(c.code).second)
                return std::nullopt;
            return Graph::from_adjacency(n, c.code);
        }

        auto next() -> std::optional<Graph>
        {
            if (! started) {
                started = true;
                if (! feasible)
                    return std::nullopt;
                if (k == 0)
                    return emit();
                advance(-1);
            }
            while (! stack.empty()) {
                Frame & f = stack.back();
                if (f.applied) {
                    apply(f.vertex, f.applied, false);
                    f.applied = 0;
                }
                if (f.next == f.choices.size()) {
                    stack.pop_back();
                    continue;
                }
                VertexMask choice = f.choices[f.next++];
                int v = f.vertex;
                apply(v, choice, true);
                f.applied = choice;
                if (! completable(v))
                    continue;
                int r = advance(v);
                if (r == 1)
                    if (auto g = emit())
                        return g;
            }
            return std::nullopt;
        }
    };

    RegularGraphGenerator::RegularGraphGenerator(int n, int k) : state_(std::make_unique<State>())
    {
        if (n > 16)
            throw GraphError("regular graph generation is limited to 16 vertices");
        state_->n = n;
        state_->k = k;
        state_->feasible = n >= 1 && k >= 0 && k < n && (n * k) % 2 == 0 && (k > 0 || n == 1);
    }

    RegularGraphGenerator::~RegularGraphGenerator() = default;
    RegularGraphGenerator::RegularGraphGenerator(RegularGraphGenerator &&) noexcept = default;
    auto RegularGraphGenerator::operator=(RegularGraphGenerator &&) noexcept -> RegularGraphGenerator & = default;

    auto RegularGraphGenerator::next() -> std::optional<Graph>
    {
        return state_->next();
    }

    auto generate_regular_graphs(int n, int k) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        RegularGraphGenerator gen(n, k);
        while (auto g = gen.next())
            out.push_back(std::move(*g));
        return out;
    }
}
