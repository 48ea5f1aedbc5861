#include "oracles.hpp"
#include "test_util.hpp"

#include <hamcensus/canonical.hpp>
#include <hamcensus/certify.hpp>
#include <hamcensus/constructions.hpp>
#include <hamcensus/graph_io.hpp>
#include <hamcensus/structure.hpp>
#include <hamcensus/verify.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace hamcensus;

namespace
{
    struct NaiveProfile
    {
        std::uint64_t h00_11, h01_01, h01_10, h10_01, h10_10, h11_00, h11_11;
    };

    /// Builds H by hand and counts every quantity with the permutation oracle.
    auto naive_profile(const Graph & g, const SpecialEdges & s) -> NaiveProfile
    {
        int n = g.order(), b = n, v = n + 1;
        std::vector<Edge> es;
        for (auto & e : g.edges())
            if (e != s.ac() && e != s.uw())
                es.push_back(e);
        es.insert(es.end(), {{s.a, b}, {b, s.c}, {s.u, v}, {v, s.w}, {b, v}});
        auto H = Graph::from_edges(n + 2, es);
        auto h_minus = [&](Edge x, Edge y) { return oracle::hamiltonian_count(H, {}, {x, y}); };
        return {h_minus({b, s.c}, {v, s.w}), oracle::hamiltonian_count(g, {s.uw()}, {s.ac()}),
            h_minus({b, s.c}, {s.u, v}), h_minus({s.a, b}, {v, s.w}), oracle::hamiltonian_count(g, {s.ac()}, {s.uw()}),
            h_minus({s.a, b}, {s.u, v}), oracle::hamiltonian_count(g, {s.ac(), s.uw()})};
    }

    void check_profile(const Graph & g, const SpecialEdges & s)
    {
        auto p = special_edge_profile(g, s);
        auto q = naive_profile(g, s);
        CHECK(p.h00_11 == as_count(q.h00_11));
        CHECK(p.h01_01 == as_count(q.h01_01));
        CHECK(p.h01_10 == as_count(q.h01_10));
        CHECK(p.h10_01 == as_count(q.h10_01));
        CHECK(p.h10_10 == as_count(q.h10_10));
        CHECK(p.h11_00 == as_count(q.h11_00));
        CHECK(p.h11_11 == as_count(q.h11_11));
    }

    /// True when some 2-factor has exactly two cycles, one through each special edge.
    auto naive_separating_two_factor(const Graph & g, const SpecialEdges & s) -> bool
    {
        for (auto & f : oracle::two_factors(g)) {
            if (f.size() != 2)
                continue;
            auto in = [&](const std::vector<int> & comp, int x) {
                return std::find(comp.begin(), comp.end(), x) != comp.end();
            };
            bool ac0 = in(f[0], s.a) && in(f[0], s.c), uw1 = in(f[1], s.u) && in(f[1], s.w);
            bool ac1 = in(f[1], s.a) && in(f[1], s.c), uw0 = in(f[0], s.u) && in(f[0], s.w);
            if ((ac0 && uw1) || (ac1 && uw0))
                return true;
        }
        return false;
    }

    auto is_path_in(const Graph & g, const std::vector<int> & p) -> bool
    {
        for (std::size_t i = 1; i < p.size(); ++i)
            if (! g.has_edge(p[i - 1], p[i]))
                return false;
        return true;
    }

    auto is_cycle_in(const Graph & g, const std::vector<int> & c) -> bool
    {
        return c.size() >= 3 && is_path_in(g, c) && g.has_edge(c.back(), c.front());
    }

    auto disjoint_special_pairs(const Graph & g) -> std::vector<SpecialEdges>
    {
        std::vector<SpecialEdges> out;
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j)
                if (! es[i].shares_endpoint(es[j])) {
                    out.push_back({es[i].u, es[i].v, es[j].u, es[j].v});
                    out.push_back({es[i].u, es[i].v, es[j].v, es[j].u});
                }
        return out;
    }

    // Hamiltonian cycles through ac and uw that meet u before w after leaving c.
    template <class Cycles>
    auto crossing_cycles(const Cycles & cycles, const SpecialEdges & s) -> int
    {
        int count = 0;
        for (auto & c : cycles) {
            int n = int(c.size());
            if (! oracle::cycle_uses(c, s.ac()) || ! oracle::cycle_uses(c, s.uw()))
                continue;
            int ia = int(std::find(c.begin(), c.end(), s.a) - c.begin());
            int step = c[(ia + 1) % n] == s.c ? 1 : n - 1;
            for (int i = (ia + step) % n;; i = (i + step) % n)
                if (c[i] == s.u || c[i] == s.w) {
                    count += c[i] == s.u;
                    break;
                }
        }
        return count;
    }

    auto subdivided_claw() -> Graph
    {
        std::vector<Edge> es{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
        return Graph::from_edges(7, es);
    }
}

TEST_SUITE("certify")
{
    TEST_CASE("profile of K5")
    {
        auto k5 = complete_graph(5);
        SpecialEdges s{0, 1, 2, 3};
        auto p = special_edge_profile(k5, s);
        CHECK(p.h11_11 == 4);
        CHECK(p.h00_11 == 3);
        CHECK(oracle::hamiltonian_count(k5, {{0, 1}, {2, 3}}) == 4);
        check_profile(k5, s);
        CHECK_THROWS_AS(special_edge_profile(k5, {0, 1, 1, 2}), GraphError);
    }

    TEST_CASE("profile agrees with the oracle on small graphs")
    {
        for (auto & g : {complete_bipartite_graph(3, 3), antihole_graph(7), complete_graph(6)}) {
            auto pairs = disjoint_special_pairs(g);
            for (std::size_t i = 0; i < pairs.size(); i += 7)
                check_profile(g, pairs[i]);
        }
    }

    TEST_CASE("gadget satisfies the special-edge hypothesis")
    {
        auto gadget = gadget_5regular();
        auto p = special_edge_profile(gadget.graph, gadget.spec);
        CHECK(p.h01_01 == 0);
        CHECK(p.h01_10 == 0);
        CHECK(p.h10_01 == 0);
        CHECK(p.h10_10 == 0);
        CHECK(p.h00_11 == 0);
        CHECK(p.h11_00 == 0);
        CHECK(p.h11_11 == 27648);
        auto cert = lemma2_hypothesis(gadget.graph, gadget.spec);
        CHECK(cert.verdict == Verdict::pass);
        CHECK(lemma2_predicted_count(5, 1, p) == 165888);
        auto deeper = gadget.spec;
        deeper.depth = 2;
        CHECK(count_hamiltonian_cycles(lemma2_expand(gadget.graph, deeper)) == lemma2_predicted_count(5, 2, p));
    }

    TEST_CASE("lemma2 hypothesis verdicts and witnesses follow the oracle")
    {
        auto k5 = complete_graph(5);
        auto q = naive_profile(k5, {0, 1, 2, 3});
        CHECK(q.h10_10 > 0);
        CHECK(lemma2_hypothesis(k5, {0, 1, 2, 3}).verdict == Verdict::fail);
        CHECK_THROWS_AS(lemma2_hypothesis(path_graph(4), {0, 1, 2, 3}), GraphError);

        for (auto & g : {complete_bipartite_graph(3, 3), k5, complete_graph(6)}) {
            for (auto & s : disjoint_special_pairs(g)) {
                auto cert = lemma2_hypothesis(g, s);
                auto np = naive_profile(g, s);
                bool want = ! naive_separating_two_factor(g, s) && np.h01_01 == 0 && np.h01_10 == 0 &&
                    np.h10_01 == 0 && np.h10_10 == 0;
                CHECK(cert.passed() == want);
                auto aux = special_edge_auxiliary(g, s).H;
                for (auto & c : cert.conditions) {
                    if (c.verdict != Verdict::fail)
                        continue;
                    REQUIRE(c.witness);
                    if (c.witness->kind == "cycle")
                        CHECK(is_cycle_in(g, c.witness->parts.front()));
                    else if (c.witness->kind == "cycle_in_auxiliary")
                        CHECK(is_cycle_in(aux, c.witness->parts.front()));
                    else {
                        CHECK(c.witness->kind == "two_factor");
                        CHECK(c.witness->parts.size() == 2);
                        std::size_t covered = 0;
                        for (auto & part : c.witness->parts) {
                            CHECK(is_cycle_in(g, part));
                            covered += part.size();
                        }
                        CHECK(int(covered) == g.order());
                    }
                }
            }
        }
    }

    TEST_CASE("lemma2 expansion count matches the formula whenever the hypothesis holds")
    {
        // Depth 2 also admits a cycle crossing the gadgets as an au-path and a
        // cw-path, one for each hamiltonian cycle of g running a, c, ..., u, w.
        int checked = 0;
        for (int n = 6; n <= 8; ++n)
            for (int k = 3; k <= 5; ++k)
                for (auto & g : generate_regular_graphs(n, k))
                    for (auto & s : disjoint_special_pairs(g)) {
                        if (! lemma2_hypothesis(g, s).passed())
                            continue;
                        auto p = special_edge_profile(g, s);
                        int max_depth = crossing_cycles(oracle::hamiltonian_cycles(g), s) == 0 ? 2 : 1;
                        for (int depth = 1; depth <= max_depth; ++depth) {
                            auto e = lemma2_expand(g, GadgetSpec{s, k, depth});
                            CHECK(count_hamiltonian_cycles(e) == lemma2_predicted_count(k, depth, p));
                        }
                        ++checked;
                    }
        MESSAGE("graphs satisfying the hypothesis: " << checked);
    }

    TEST_CASE("lemma2 formula undercounts at depth 2 when g has crossing cycles")
    {
        auto g = from_graph6("GB]DMG");
        SpecialEdges s{1, 7, 6, 2};
        REQUIRE(lemma2_hypothesis(g, s).passed());
        CHECK(crossing_cycles(oracle::hamiltonian_cycles(g), s) == 4);
        auto p = special_edge_profile(g, s);
        CHECK(count_hamiltonian_cycles(lemma2_expand(g, GadgetSpec{s, 3, 1})) == lemma2_predicted_count(3, 1, p));
        CHECK(lemma2_predicted_count(3, 2, p) == 4);
        CHECK(count_hamiltonian_cycles(lemma2_expand(g, GadgetSpec{s, 3, 2})) == 8);
        auto gadget = gadget_5regular();
        auto through = enumerate_hamiltonian_cycles(
            gadget.graph, EdgeConstraint::force({gadget.spec.ac(), gadget.spec.uw()}), std::size_t(1) << 20);
        REQUIRE(through.cycles);
        CHECK(through.cycles->size() == 27648);
        CHECK(crossing_cycles(*through.cycles, gadget.spec) == 0);
    }

    TEST_CASE("predicted count arithmetic")
    {
        SpecialEdgeProfile one;
        one.h11_11 = 1;
        CHECK(lemma2_predicted_count(3, 2, one) == 1);
        SpecialEdgeProfile sides;
        sides.h00_11 = 1;
        sides.h11_00 = 1;
        CHECK(lemma2_predicted_count(6, 1, sides) == 192);
        CHECK_THROWS_AS(lemma2_predicted_count(2, 1, one), GraphError);
    }

    TEST_CASE("good 4-cycle certificate")
    {
        auto k5 = complete_graph(5);
        auto cert = good_cycle_certificate(k5, {0, 1, 2, 3});
        CHECK(cert.verdict == Verdict::fail);
        auto & iv = cert.conditions.at(3);
        CHECK(iv.id == "iv");
        CHECK(iv.verdict == Verdict::fail);
        REQUIRE(iv.witness);
        auto & cyc = iv.witness->parts.front();
        CHECK(int(cyc.size()) == 5);
        CHECK(is_cycle_in(k5, cyc));
        CHECK(! (oracle::cycle_uses(cyc, {0, 3}) && oracle::cycle_uses(cyc, {1, 2})));

        auto c4 = good_cycle_certificate(cycle_graph(4), {0, 1, 2, 3});
        CHECK(c4.verdict == Verdict::fail);
        CHECK(c4.conditions.at(4).id == "v");
        CHECK(c4.conditions.at(4).verdict == Verdict::fail);

        auto seed = good_cycle_seed();
        auto good = good_cycle_certificate(seed.graph, seed.cycle);
        CHECK(good.verdict == Verdict::pass);
        for (auto & c : good.conditions)
            CHECK(c.verdict == Verdict::pass);

        CHECK_THROWS_AS(good_cycle_certificate(cycle_graph(5), {0, 1, 2, 3}), GraphError);
    }

    TEST_CASE("good 4-cycle path witnesses are hamiltonian paths of the deleted graph")
    {
        auto cert = good_cycle_certificate(complete_graph(5), {0, 1, 2, 3});
        for (auto & c : cert.conditions) {
            if (! c.witness || c.witness->kind != "path")
                continue;
            auto & p = c.witness->parts.front();
            CHECK(is_path_in(complete_graph(5), p));
            std::set<int> distinct(p.begin(), p.end());
            CHECK(distinct.size() == p.size());
        }
    }

    TEST_CASE("smith parity")
    {
        CHECK(smith_parity(complete_graph(4)).verdict == Verdict::pass);
        CHECK(smith_parity(petersen_graph()).verdict == Verdict::pass);
        CHECK_THROWS_AS(smith_parity(complete_graph(5)), GraphError);
        for (int n = 4; n <= 10; n += 2)
            for (auto & g : generate_regular_graphs(n, 3)) {
                auto cert = smith_parity(g);
                CHECK(cert.passed());
                auto h = oracle::hamiltonian_count(g);
                CHECK(h != 1);
                CHECK(h != 2);
            }
    }

    TEST_CASE("minimum counts over 4-regular graphs")
    {
        const std::pair<int, Count> rows[] = {{5, 12}, {6, 16}, {7, 23}, {8, 29}};
        for (auto [n, want] : rows) {
            auto scan = sheehan_scan(n);
            CHECK(scan.minimum == want);
            CHECK(count_hamiltonian_cycles(scan.argmin) == want);
            CHECK(is_regular(scan.argmin, 4));
        }
        CHECK_THROWS_AS(sheehan_scan(4), GraphError);
    }

    TEST_CASE("odd-component claw audit")
    {
        CHECK(theorem5_audit(complete_graph(4)).verdict == Verdict::vacuous);
        CHECK_THROWS_AS(theorem5_audit(complete_graph(5)), GraphError);

        auto ct = chia_thomassen();
        auto cert = theorem5_audit(ct.G);
        CHECK(cert.verdict == Verdict::pass);
        auto lc = longest_cycles(ct.G);
        REQUIRE(lc.unique);
        int odd = 0, claws = 0;
        for (auto & c : components_without_cycle_edges(ct.G, lc.witness))
            if (c.on_cycle % 2) {
                ++odd;
                claws += c.is_claw;
            }
        CHECK(odd == 2);
        CHECK(claws == 2);

        auto p5 = prop5_graph();
        CHECK(theorem5_audit(p5.G).verdict == Verdict::pass);
        auto lp = longest_cycles(p5.G);
        CHECK(lp.unique);
        CHECK(lp.circumference == 48);
    }

    TEST_CASE("no small cubic graph fails the claw audit")
    {
        for (int n = 4; n <= 12; n += 2)
            for (auto & g : generate_regular_graphs(n, 3))
                CHECK(theorem5_audit(g).verdict != Verdict::fail);
    }

    TEST_CASE("components after removing cycle edges")
    {
        auto comps = components_without_cycle_edges(complete_graph(4), {0, 1, 2, 3});
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].vertices == std::vector<int>{0, 2});
        CHECK(comps[0].is_k2);
        CHECK(comps[0].on_cycle == 2);
    }

    TEST_CASE("leaf paths")
    {
        std::vector<Edge> k2{{0, 1}};
        auto single = leaf_paths(Graph::from_edges(2, k2));
        REQUIRE(single.size() == 1);
        CHECK(single.front().size() == 2);
        auto claw = subdivided_claw();
        auto paths = leaf_paths(claw);
        REQUIRE(paths.size() == 1);
        CHECK(paths.front().size() == 5);
        CHECK(claw.degree(paths.front().front()) == 1);
        CHECK(claw.degree(paths.front().back()) == 1);
        CHECK_THROWS_AS(leaf_paths(cycle_graph(5)), GraphError);
        CHECK_THROWS_AS(leaf_paths(complete_graph(5)), GraphError);
        std::vector<Edge> split{{0, 1}, {2, 3}};
        CHECK_THROWS_AS(leaf_paths(Graph::from_edges(4, split)), GraphError);
    }

    TEST_CASE("leaf paths on random subcubic graphs and on audited components")
    {
        std::vector<Graph> inputs;
        std::mt19937_64 rng(41);
        for (int i = 0; i < 1000; ++i)
            inputs.push_back(random_subcubic_graph(rng, 40));
        auto ct = chia_thomassen();
        auto lc = longest_cycles(ct.G);
        for (auto & c : components_without_cycle_edges(ct.G, lc.witness)) {
            VertexMask m = 0;
            for (int v : c.vertices)
                m |= bit(v);
            inputs.push_back(induced_subgraph(ct.G.without_edges([&] {
                std::vector<Edge> es;
                for (std::size_t i = 0; i < lc.witness.size(); ++i)
                    es.emplace_back(lc.witness[i], lc.witness[(i + 1) % lc.witness.size()]);
                return es;
            }()), m).graph);
        }
        for (auto & f : inputs) {
            int leaves = 0, maxdeg = 0;
            for (int v = 0; v < f.order(); ++v) {
                leaves += f.degree(v) == 1;
                maxdeg = std::max(maxdeg, f.degree(v));
            }
            REQUIRE(maxdeg <= 3);
            REQUIRE(leaves >= 2);
            REQUIRE(oracle::connected(f));
            auto paths = leaf_paths(f);
            CHECK(int(paths.size()) == leaves / 2);
            std::set<int> used;
            for (auto & p : paths) {
                CHECK(p.size() >= 2);
                CHECK(f.degree(p.front()) == 1);
                CHECK(f.degree(p.back()) == 1);
                CHECK(is_path_in(f, p));
                for (int v : p)
                    CHECK(used.insert(v).second);
            }
        }
    }

    TEST_CASE("bounds")
    {
        CHECK(within_ulp(bounds(22, 4).g1, 144.0));
        CHECK(bounds(23, 4).g1 == doctest::Approx(161.635).epsilon(1e-4));
        CHECK(exceeds(bounds(23, 4).g1, 144.0));
        double f26 = 16.0 * std::pow(6.0, 26.0 / 6.0);
        CHECK(within_ulp(bounds(26, 5).f, f26));
        CHECK(bounds(26, 5).f == doctest::Approx(37679.8).epsilon(1e-5));
        CHECK(exceeds(bounds(26, 5).f, 27648.0));
        for (int k = 5; k <= 8; ++k)
            for (int n = 2; n <= 200; ++n)
                CHECK(bounds(n, k).f < bounds(n + 1, k).f);
        for (int n = 1; n <= 200; ++n)
            CHECK(bounds(n, 4).g1 < bounds(n + 1, 4).g1);
        CHECK(! exceeds(1.0, 1.0));
        CHECK(! exceeds(std::nextafter(1.0, 2.0), 1.0));
        CHECK(within_ulp(1.0, std::nextafter(1.0, 2.0)));
    }

    TEST_CASE("sixteen-cycle certificate")
    {
        auto cube = generalized_petersen_graph(4, 1);
        auto six = sixteen_cycle_certificate(cube, 6);
        CHECK(six.verdict == Verdict::pass);
        CHECK(sixteen_cycle_certificate(cube).verdict == Verdict::fail);
        auto pet = sixteen_cycle_certificate(petersen_graph(), 0);
        CHECK(pet.verdict == Verdict::fail);
        CHECK(pet.conditions.at(1).id == "bipartite");
        CHECK(pet.conditions.at(1).verdict == Verdict::fail);
    }
}
