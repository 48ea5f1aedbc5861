#include <hamcensus/canonical.hpp>
#include <hamcensus/certify.hpp>
#include <hamcensus/structure.hpp>
#include <hamcensus/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace hamcensus
{
    namespace
    {
        struct Outcome
        {
            bool passed = true;
            std::ostringstream detail;

            void expect(bool ok, const std::string & what)
            {
                if (! ok) {
                    if (! passed)
                        detail << "; ";
                    else
                        detail.str("");
                    passed = false;
                    detail << what;
                }
            }

            void note(const std::string & text)
            {
                if (passed) {
                    if (detail.tellp() > 0)
                        detail << "; ";
                    detail << text;
                }
            }
        };

        using Fixtures = std::map<std::string, Fixture>;

        auto dec(Count c) -> std::string { return to_decimal(c); }

        auto differs(const std::string & what, const std::string & got, const std::string & want) -> std::string
        {
            return what + " = " + got + ", expected " + want;
        }

        void exact_counts(Outcome & o, const Fixtures & fx, const SearchOptions & opts)
        {
            auto check = [&](const std::string & name, Count want) {
                auto got = count_hamiltonian_cycles(fx.at(name).graph, {}, opts);
                o.expect(got == want, differs("h(" + name + ")", dec(got), dec(want)));
            };
            check("k4", 3);
            check("antihole7", 23);
            check("petersen", 0);
            check("generalized_petersen_9_2", 3);

            auto profile = edge_traversal_profile(fx.at("antihole7").graph, opts);
            std::map<Count, int> histogram;
            for (auto & [e, c] : profile)
                histogram[c] += 1;
            std::map<Count, int> want{{11, 7}, {12, 7}};
            std::string shape;
            for (auto & [c, m] : histogram)
                shape += (shape.empty() ? "" : ", ") + dec(c) + "x" + std::to_string(m);
            o.expect(histogram == want, "antihole7 edge profile {" + shape + "}, expected {11x7, 12x7}");
            o.note("h = 3, 23, 0, 3; antihole7 profile {" + shape + "}");
        }

        void sheehan_minima(Outcome & o, VerifyLevel level, const SearchOptions & opts)
        {
            std::vector<std::pair<int, Count>> rows{{5, 12}, {6, 16}, {7, 23}, {8, 29}};
            if (level == VerifyLevel::full) {
                rows.emplace_back(9, 36);
                rows.emplace_back(10, 36);
            }
            std::string seen;
            for (auto [n, want] : rows) {
                auto scan = sheehan_scan(n, 4, opts);
                o.expect(scan.minimum == want,
                    differs("min h over 4-regular n=" + std::to_string(n), dec(scan.minimum), dec(want)));
                seen += (seen.empty() ? "" : ", ") + std::to_string(n) + ":" + dec(scan.minimum) + "/" +
                    std::to_string(scan.graphs);
            }
            o.note("n:min/graphs " + seen);
        }

        void smith_sweep(Outcome & o, const SearchOptions & opts)
        {
            std::size_t total = 0;
            for (int n = 4; n <= 12; n += 2) {
                for (auto & g : generate_regular_graphs(n, 3)) {
                    ++total;
                    auto cert = smith_parity(g, opts);
                    o.expect(cert.passed(), "smith parity fails on n=" + std::to_string(n) + " " + cert.graph6);
                }
            }
            o.note(std::to_string(total) + " connected cubic graphs");
        }

        void lemma1_equivalence(Outcome & o, const Fixtures & fx, const SearchOptions & opts)
        {
            int passing = 0;
            for (auto & [name, f] : fx) {
                if (! f.meta.contains("four_cycle"))
                    continue;
                auto c = four_cycle_of(f);
                auto cert = good_cycle_certificate(f.graph, c, opts);
                if (! cert.passed())
                    continue;
                ++passing;
                auto h = count_hamiltonian_cycles(f.graph, {}, opts);
                bool near_quartic = true;
                for (int v = 0; v < f.graph.order(); ++v)
                    near_quartic &= f.graph.degree(v) == ((v == c.b || v == c.d) ? 3 : 4);
                for (int k = 1; k <= 3; ++k) {
                    auto e = lemma1_expand(f.graph, c, k);
                    auto he = count_hamiltonian_cycles(e, {}, opts);
                    auto tag = name + " k=" + std::to_string(k);
                    o.expect(he == h, differs("h(" + tag + ")", dec(he), dec(h)));
                    o.expect(! is_connected(f.graph) || is_connected(e), tag + " lost connectivity");
                    o.expect(! near_quartic || is_regular(e, 4), tag + " is not 4-regular");
                }
                o.note(name + ": h = " + dec(h) + " for k = 0..3");
            }
            o.expect(passing > 0, "no fixture carries a passing good 4-cycle");
        }

        void lemma2_equivalence(Outcome & o, const Fixtures & fx, const SearchOptions & opts)
        {
            auto & f = fx.at("gadget5");
            auto s = special_edges_of(f);
            int k = f.meta.value("degree", 5);
            auto hyp = lemma2_hypothesis(f.graph, s, opts);
            o.expect(hyp.passed(), "lemma2 hypothesis " + to_string(hyp.verdict));
            auto h = count_hamiltonian_cycles(f.graph, {}, opts);
            o.expect(h == 27648, differs("h(gadget5)", dec(h), "27648"));
            auto expanded = lemma2_expand(f.graph, GadgetSpec{s, k, 1});
            auto he = count_hamiltonian_cycles(expanded, {}, opts);
            o.expect(he == 165888, differs("h(expanded, depth 1)", dec(he), "165888"));
            auto p = special_edge_profile(f.graph, s, opts);
            auto predicted = lemma2_predicted_count(k, 1, p);
            o.expect(predicted == he, differs("predicted depth-1 count", dec(predicted), dec(he)));
            // 2^(t+10) 3^(t+3) at t = 0, 1
            o.expect(h == (Count(1) << 10) * 27 && he == (Count(1) << 11) * 81, "counts off the closed form");
            o.note("h = " + dec(h) + ", depth 1 = " + dec(he));
        }

        void chain_products(Outcome & o, const Fixtures & fx, const SearchOptions & opts)
        {
            auto & ah = fx.at("antihole7").graph;
            auto profile = edge_traversal_profile(ah, opts);
            auto it = std::find_if(profile.begin(), profile.end(), [](auto & kv) { return kv.second == 11; });
            o.expect(it != profile.end(), "antihole7 has no edge on exactly 11 cycles");
            if (it != profile.end()) {
                auto g = chain({{ah, it->first, 1}, {ah, it->first, 1}});
                auto h = count_hamiltonian_cycles(g, {}, opts);
                o.expect(h == 121, differs("h(antihole7 chain x2)", dec(h), "121"));
            }
            auto & k4 = fx.at("k4").graph;
            auto g = chain({{k4, {0, 1}, 1}, {k4, {0, 1}, 1}, {k4, {0, 1}, 1}});
            auto h = count_hamiltonian_cycles(g, {}, opts);
            o.expect(h == 8, differs("h(K4 chain x3)", dec(h), "8"));
            o.note("121 and 8");
        }

        void chia_thomassen_pipeline(Outcome & o, const Fixtures & fx, VerifyLevel level, const SearchOptions & opts)
        {
            auto r = longest_cycles(fx.at("chia_thomassen_H").graph, opts);
            o.expect(r.count == 2, differs("longest cycles of H", dec(r.count), "2"));
            o.note("H: circumference " + std::to_string(r.circumference) + ", " + dec(r.count) + " longest");
            if (level != VerifyLevel::full)
                return;
            auto & g = fx.at("chia_thomassen_G").graph;
            auto lg = longest_cycles(g, opts);
            o.expect(lg.unique, differs("longest cycles of G", dec(lg.count), "1"));
            if (! lg.unique)
                return;
            auto cert = theorem5_audit(g, opts);
            o.expect(cert.passed(), "theorem5 audit " + to_string(cert.verdict));
            int odd = 0, claws = 0;
            for (auto & c : components_without_cycle_edges(g, lg.witness)) {
                if (c.on_cycle % 2 == 1) {
                    ++odd;
                    claws += c.is_claw;
                }
            }
            o.expect(odd == 2 && claws == 2, "odd components " + std::to_string(odd) + " (claws " +
                std::to_string(claws) + "), expected 2 claws");
            o.note("G: unique longest cycle of length " + std::to_string(lg.circumference) + ", 2 odd claws");
        }

        void prop5_properties(Outcome & o, const Fixtures & fx, const SearchOptions & opts)
        {
            auto & f = fx.at("prop5_H");
            auto & h = f.graph;
            int y = f.meta.at("y").get<int>();
            auto xs = f.meta.at("x").get<std::vector<int>>();
            o.expect(xs.size() == 3, "prop5_H sidecar needs three x vertices");
            if (xs.size() != 3)
                return;
            auto paths_without = [&](int removed, int s, int t) {
                auto sub = delete_vertices(h, bit(removed));
                return count_hamiltonian_paths(sub.graph, sub.from_parent[s], sub.from_parent[t], {}, opts);
            };
            const Count want_minus_y[3] = {1, 1, 0}; // x1x2, x1x3, x2x3
            int pair = 0;
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j, ++pair) {
                    auto tag = "x" + std::to_string(i + 1) + "x" + std::to_string(j + 1);
                    auto in_h = count_hamiltonian_paths(h, xs[i], xs[j], {}, opts);
                    o.expect(in_h == 0, differs(tag + "-paths in H", dec(in_h), "0"));
                    auto minus_y = paths_without(y, xs[i], xs[j]);
                    o.expect(minus_y == want_minus_y[pair],
                        differs(tag + "-paths in H-y", dec(minus_y), dec(want_minus_y[pair])));
                    for (int v = 0; v < h.order(); ++v) {
                        if (v == y || v == xs[i] || v == xs[j])
                            continue;
                        auto c = paths_without(v, xs[i], xs[j]);
                        o.expect(c == 0, differs(tag + "-paths in H-" + std::to_string(v), dec(c), "0"));
                    }
                }
            }
            o.note("path counts in H-y: 1, 1, 0; none elsewhere");
        }

        auto path_problem(const Graph & f, const std::vector<std::vector<int>> & paths) -> std::string
        {
            auto leaves = 0;
            for (int v = 0; v < f.order(); ++v)
                leaves += f.degree(v) == 1;
            if (int(paths.size()) != leaves / 2)
                return std::to_string(paths.size()) + " paths for " + std::to_string(leaves) + " leaves";
            VertexMask used = 0;
            for (auto & p : paths) {
                if (p.size() < 2)
                    return "path with fewer than two vertices";
                if (f.degree(p.front()) != 1 || f.degree(p.back()) != 1)
                    return "path end is not 1-valent";
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (p[i] < 0 || p[i] >= f.order() || (used & bit(p[i])))
                        return "paths are not vertex-disjoint";
                    used |= bit(p[i]);
                    if (i > 0 && ! f.has_edge(p[i - 1], p[i]))
                        return "consecutive path vertices not adjacent";
                }
            }
            return {};
        }

        void leaf_path_suite(Outcome & o)
        {
            std::mt19937_64 rng(0x5eed'1eaf'0003ULL);
            int checked = 0;
            for (int trial = 0; trial < 1000; ++trial) {
                auto f = random_subcubic_graph(rng, 40);
                auto problem = path_problem(f, leaf_paths(f));
                o.expect(problem.empty(), "trial " + std::to_string(trial) + ": " + problem);
                checked += problem.empty();
            }
            o.note(std::to_string(checked) + " random graphs");
        }

        void bound_arithmetic(Outcome & o)
        {
            o.expect(within_ulp(bounds(22, 4).g1, 144.0), "g1(22) != 144");
            for (int n = 23; n <= 100; ++n)
                o.expect(exceeds(bounds(n, 4).g1, 144.0), "g1(" + std::to_string(n) + ") <= 144");
            o.expect(exceeds(bounds(26, 5).f, 27648.0), "f(26,5) <= 27648");
            for (int n = 26; n <= 200; ++n) {
                double lower = 128.0 * std::pow(6.0, (n - 8) / 6.0);
                o.expect(exceeds(bounds(n, 5).f, lower), "f(" + std::to_string(n) + ",5) <= 2^7 6^((n-8)/6)");
            }
            std::ostringstream s;
            s.precision(10);
            s << "f(26,5) = " << bounds(26, 5).f;
            o.note(s.str());
        }

        auto small_corpus(const Fixtures & fx) -> std::vector<std::pair<std::string, Graph>>
        {
            std::vector<std::pair<std::string, Graph>> out;
            for (auto & [name, f] : fx)
                if (f.graph.order() <= 10)
                    out.emplace_back(name, f.graph);
            for (int k = 3; k <= 4; ++k)
                for (int n = k + 1; n <= 10; ++n)
                    if ((n * k) % 2 == 0) {
                        int i = 0;
                        for (auto & g : generate_regular_graphs(n, k))
                            out.emplace_back(std::to_string(k) + "-regular n=" + std::to_string(n) + " #" +
                                std::to_string(i++), g);
                    }
            return out;
        }

        void engine_consistency(Outcome & o, const Fixtures & fx, const SearchOptions & opts)
        {
            auto corpus = small_corpus(fx);
            for (auto & [name, g] : corpus) {
                auto fast = count_hamiltonian_cycles(g, {}, opts);
                auto slow = naive_hamiltonian_cycle_count(g);
                o.expect(fast == slow, differs("h(" + name + ")", dec(fast), dec(slow) + " (naive)"));
            }
            CycleRequest req{true, true, std::nullopt};
            auto heavy = corpus;
            heavy.emplace_back("gadget5", fx.at("gadget5").graph);
            heavy.emplace_back("good_cycle_seed", fx.at("good_cycle_seed").graph);
            for (auto & [name, g] : heavy) {
                std::optional<CycleReport> base;
                for (int w : {1, 2, 8}) {
                    SearchOptions so = opts;
                    so.workers = w;
                    so.split_depth = 2;
                    auto r = hamiltonian_cycle_report(g, {}, req, so);
                    if (! base) {
                        base = std::move(r);
                        continue;
                    }
                    bool same = r.count == base->count && r.cycles == base->cycles && r.per_edge == base->per_edge;
                    o.expect(same, "workers=" + std::to_string(w) + " differs on " + name);
                }
            }
            o.note(std::to_string(corpus.size()) + " graphs agree with the naive count; workers 1/2/8 identical on " +
                std::to_string(heavy.size()));
        }

        struct Criterion
        {
            int id;
            const char * title;
            double quick_budget, full_budget;
        };

        constexpr Criterion criteria[] = {
            {1, "exact counts on named fixtures", 5, 5},
            {2, "minimum h over 4-regular graphs", 300, 3600},
            {3, "smith parity sweep, cubic n <= 12", 600, 600},
            {4, "good 4-cycle expansion preserves h", 600, 600},
            {5, "special-edge gadget expansion", 1800, 1800},
            {6, "chain product law", 60, 60},
            {7, "longest-cycle pipeline", 600, 43200},
            {8, "x-path properties of the 25-vertex graph", 1800, 1800},
            {9, "leaf paths on random subcubic graphs", 60, 60},
            {10, "bound arithmetic", 1, 1},
            {11, "engine self-consistency", 600, 600},
        };
    }

    auto naive_hamiltonian_cycle_count(const Graph & g) -> Count
    {
        int n = g.order();
        if (n < 3)
            return 0;
        std::vector<int> rest(std::size_t(n - 1));
        std::iota(rest.begin(), rest.end(), 1);
        Count closed = 0;
        do {
            bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
            for (std::size_t i = 1; ok && i < rest.size(); ++i)
                ok = g.has_edge(rest[i - 1], rest[i]);
            closed += ok;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return closed / 2;
    }

    auto random_subcubic_graph(std::mt19937_64 & rng, int max_order) -> Graph
    {
        std::uniform_int_distribution<int> order_dist(2, std::max(2, max_order));
        int n = order_dist(rng);
        GraphBuilder b{n};
        std::vector<int> open{0};
        for (int v = 1; v < n; ++v) {
            std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
            auto i = pick(rng);
            int p = open[i];
            b.add_edge(p, v);
            if (b.degree(p) == 3) {
                open[i] = open.back();
                open.pop_back();
            }
            open.push_back(v);
        }
        auto leaves = [&] {
            int c = 0;
            for (int v = 0; v < n; ++v)
                c += b.degree(v) == 1;
            return c;
        };
        std::uniform_int_distribution<int> extra_dist(0, n / 2);
        std::uniform_int_distribution<int> vertex(0, n - 1);
        for (int extra = extra_dist(rng), tries = 0; extra > 0 && tries < 8 * n; ++tries) {
            int u = vertex(rng), v = vertex(rng);
            if (u == v || b.has_edge(u, v) || b.degree(u) == 3 || b.degree(v) == 3)
                continue;
            int lost = (b.degree(u) == 1) + (b.degree(v) == 1);
            if (leaves() - lost < 2)
                continue;
            b.add_edge(u, v);
            --extra;
        }
        return b.build();
    }

    auto verify_paper(const VerifyOptions & opts) -> std::vector<CriterionResult>
    {
        Fixtures fx;
        for (auto & name : fixture_names())
            fx.emplace(name, load_fixture(opts.fixtures, name));

        std::vector<CriterionResult> out;
        for (auto & c : criteria) {
            CriterionResult r;
            r.id = c.id;
            r.title = c.title;
            r.budget_seconds = opts.level == VerifyLevel::full ? c.full_budget : c.quick_budget;
            Outcome o;
            auto start = std::chrono::steady_clock::now();
            try {
                switch (c.id) {
                case 1: exact_counts(o, fx, opts.search); break;
                case 2: sheehan_minima(o, opts.level, opts.search); break;
                case 3: smith_sweep(o, opts.search); break;
                case 4: lemma1_equivalence(o, fx, opts.search); break;
                case 5: lemma2_equivalence(o, fx, opts.search); break;
                case 6: chain_products(o, fx, opts.search); break;
                case 7: chia_thomassen_pipeline(o, fx, opts.level, opts.search); break;
                case 8: prop5_properties(o, fx, opts.search); break;
                case 9: leaf_path_suite(o); break;
                case 10: bound_arithmetic(o); break;
                default: engine_consistency(o, fx, opts.search); break;
                }
            }
            catch (const std::exception & e) {
                o.expect(false, std::string("error: ") + e.what());
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::ostringstream over;
            over << "took " << r.seconds << " s, budget " << r.budget_seconds << " s";
            o.expect(r.seconds <= r.budget_seconds, over.str());
            r.passed = o.passed;
            r.detail = o.detail.str();
            if (opts.on_result)
                opts.on_result(r);
            out.push_back(std::move(r));
        }
        return out;
    }
}
