#include "oracles.hpp"
#include "test_util.hpp"

#include <hamcensus/certify.hpp>
#include <hamcensus/constructions.hpp>
#include <hamcensus/structure.hpp>

using namespace hamcensus;

namespace
{
    auto girth(const Graph & g) -> int
    {
        for (int len = 3; len <= g.order(); ++len)
            if (! oracle::cycles_of_length(g, len).empty())
                return len;
        return 0;
    }

    auto all_vertices(const Graph & g) -> VertexMask { return g.vertices(); }

    auto edge_on(const Graph & g, Count s) -> std::optional<Edge>
    {
        for (auto & [e, c] : edge_traversal_profile(g))
            if (c == s)
                return e;
        return std::nullopt;
    }
}

TEST_SUITE("constructions")
{
    TEST_CASE("named graphs")
    {
        auto p = petersen_graph();
        CHECK(p.order() == 10);
        CHECK(p.size() == 15);
        CHECK(is_regular(p, 3));
        CHECK(girth(p) == 5);
        auto ah = antihole_graph(7);
        CHECK(ah.order() == 7);
        CHECK(ah.size() == 14);
        CHECK(is_regular(ah, 4));
        CHECK(count_hamiltonian_cycles(generalized_petersen_graph(9, 2)) == 3);
        CHECK(oracle::isomorphic(generalized_petersen_graph(5, 2), p));
        CHECK(complete_bipartite_graph(3, 3).size() == 9);
        CHECK(named_generator("cycle", {6}) == cycle_graph(6));
        CHECK(named_generator("generalized_petersen", {9, 2}) == generalized_petersen_graph(9, 2));
        CHECK_THROWS_AS(named_generator("sphere", {3}), GraphError);
        CHECK_THROWS_AS(generalized_petersen_graph(6, 3), GraphError);
    }

    TEST_CASE("generalized petersen counts follow n mod 6")
    {
        // P(n,2) has exactly three hamiltonian cycles iff n = 3 mod 6.
        for (int n = 5; n <= 15; ++n) {
            auto h = count_hamiltonian_cycles(generalized_petersen_graph(n, 2));
            CAPTURE(n);
            if (n % 6 == 3)
                CHECK(h == 3);
            else
                CHECK(h != 3);
        }
    }

    TEST_CASE("triangle inflation")
    {
        auto k4 = inflate_triangles(complete_graph(4), all_vertices(complete_graph(4)));
        CHECK(k4.order() == 12);
        CHECK(is_regular(k4, 3));
        CHECK(count_hamiltonian_cycles(k4) == 3);
        auto p = petersen_graph();
        auto h = inflate_triangles(p, p.vertices() & ~bit(0));
        CHECK(h.order() == 28);
        CHECK(is_regular(h, 3));
        CHECK_THROWS_AS(inflate_triangles(complete_graph(5), bit(0)), GraphError);
        int v = inflated_vertex(p, p.vertices() & ~bit(0), 1, 0);
        CHECK(h.has_edge(v, inflated_vertex(p, p.vertices() & ~bit(0), 0, 1)));
    }

    TEST_CASE("subdivision")
    {
        CHECK(oracle::isomorphic(subdivide(cycle_graph(3), {0, 1}), cycle_graph(4)));
        auto g = subdivide(complete_graph(4), {0, 1}, 2);
        CHECK(g.order() == 6);
        CHECK(g.size() == 8);
        CHECK_THROWS_AS(subdivide(cycle_graph(5), {0, 2}), GraphError);
    }

    TEST_CASE("good 4-cycle expansion")
    {
        auto seed = good_cycle_seed();
        auto & g = seed.graph;
        auto c = seed.cycle;
        CHECK(g.order() == 20);
        auto h = count_hamiltonian_cycles(g);
        CHECK(h == 144);
        REQUIRE(good_cycle_certificate(g, c).passed());
        bool three = connectivity_at_least(g, 3), four = connectivity_at_least(g, 4);
        for (int k = 1; k <= 3; ++k) {
            auto e = lemma1_expand(g, c, k);
            CAPTURE(k);
            CHECK(e.order() == g.order() + 2 * k);
            for (int v = g.order(); v < e.order(); ++v)
                CHECK(e.degree(v) == 4);
            CHECK(e.degree(c.b) == g.degree(c.b) + 1);
            CHECK(e.degree(c.d) == g.degree(c.d) + 1);
            CHECK(is_regular(e, 4));
            CHECK(count_hamiltonian_cycles(e) == h);
            CHECK(! (three && ! connectivity_at_least(e, 3)));
            CHECK(! (four && ! connectivity_at_least(e, 4)));
        }
        auto k5 = complete_graph(5);
        CHECK_THROWS_AS(lemma1_expand(k5, {0, 1, 2, 3}, 1), GraphError);
        CHECK_THROWS_AS(lemma1_expand(g, c, 0), GraphError);
        // 144 = 24 * 6 is the only form of the 24 h(G, e) relation checked.
        CHECK(h == 24 * 6);
    }

    TEST_CASE("gadget and its expansion")
    {
        auto gadget = gadget_5regular();
        auto & g = gadget.graph;
        CHECK(g.order() == 26);
        CHECK(is_regular(g, 5));
        CHECK(count_hamiltonian_cycles(g) == 27648);
        CHECK(Count(27648) == 2 * 24 * 24 * 24);
        for (int depth = 1; depth <= 2; ++depth) {
            auto spec = gadget.spec;
            spec.depth = depth;
            auto e = lemma2_expand(g, spec);
            CHECK(e.order() == 26 + depth * 6);
            CHECK(is_regular(e, 5));
        }
        auto spec = gadget.spec;
        spec.depth = 1;
        CHECK(count_hamiltonian_cycles(lemma2_expand(g, spec)) == 165888);
        CHECK_THROWS_AS(lemma2_expand(petersen_graph().with_edges(std::vector<Edge>{{0, 2}}), {{0, 1, 5, 7}, 3, 1}),
            GraphError);
        CHECK_THROWS_AS(lemma2_expand(complete_graph(6), {{0, 1, 1, 2}, 5, 1}), GraphError);
    }

    TEST_CASE("lemma2 expansion of K6 follows the subdivision layout")
    {
        // K6 with ac = 0-1, uw = 2-3, depth 2: b_i at 6 + 6(i-1),
        // v_i1, v_i2 right after, then the k-2 other clique vertices.
        auto e = lemma2_expand(complete_graph(6), {{0, 1, 2, 3}, 5, 2});
        CHECK(e.order() == 18);
        CHECK(is_regular(e, 5));
        CHECK(e.has_edge(0, 6));
        CHECK(e.has_edge(6, 12));
        CHECK(e.has_edge(12, 1));
        CHECK(e.has_edge(2, 7));
        CHECK(e.has_edge(8, 13));
        CHECK(e.has_edge(14, 3));
        CHECK(! e.has_edge(0, 1));
        CHECK(! e.has_edge(2, 3));
    }

    TEST_CASE("chains multiply per-edge counts")
    {
        auto ah = antihole_graph(7);
        auto e11 = edge_on(ah, 11);
        REQUIRE(e11);
        auto two = chain({{ah, *e11, 2}});
        CHECK(two.order() == 14);
        CHECK(is_regular(two, 4));
        CHECK(count_hamiltonian_cycles(two) == 121);
        auto e12 = edge_on(ah, 12);
        REQUIRE(e12);
        CHECK(count_hamiltonian_cycles(chain({{ah, *e11, 1}, {ah, *e12, 1}})) == 132);

        auto k4 = complete_graph(4);
        auto three = chain({{k4, {0, 1}, 3}});
        CHECK(three.order() == 12);
        CHECK(is_regular(three, 3));
        CHECK(count_hamiltonian_cycles(three) == 8);
        CHECK(as_count(oracle::hamiltonian_count(chain({{k4, {0, 1}, 2}}))) == 4);

        auto mixed = chain({{k4, {2, 3}, 1}, {complete_graph(5), {0, 4}, 1}});
        auto s5 = edge_traversal_profile(complete_graph(5)).at({0, 4});
        CHECK(count_hamiltonian_cycles(mixed) == 2 * s5);
        CHECK_THROWS_AS(chain({{k4, {0, 1}, 1}}), GraphError);
    }

    TEST_CASE("chia-thomassen graphs")
    {
        auto ct = chia_thomassen();
        CHECK(ct.H.order() == 28);
        CHECK(ct.G.order() == 56);
        CHECK(is_regular(ct.G, 3));
        CHECK(ct.longest_H.size() == 2);
        CHECK(count_hamiltonian_cycles(ct.G) == 0);
        int on = 0;
        for (auto & c : ct.longest_H)
            on += oracle::cycle_uses(c, ct.vw);
        CHECK(on == 1);
    }

    TEST_CASE("25-vertex x-path graphs")
    {
        auto p5 = prop5_graph();
        CHECK(p5.H.order() == 25);
        CHECK(p5.G.order() == 50);
        CHECK(is_regular(p5.G, 3));
        CHECK(connectivity_at_least(p5.G, 3));
        for (int x : p5.x)
            CHECK(p5.H.degree(x) == 2);
    }
}
