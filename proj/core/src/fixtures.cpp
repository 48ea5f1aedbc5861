#include <hamcensus/fixtures.hpp>
#include <hamcensus/graph_io.hpp>
#include <hamcensus/structure.hpp>

#include <cstdlib>
#include <fstream>

#ifndef HAMCENSUS_SOURCE_FIXTURE_DIR
#define HAMCENSUS_SOURCE_FIXTURE_DIR "fixtures"
#endif

namespace hamcensus
{
    namespace
    {
        auto basic_meta(const std::string & name, const Graph & g, const std::string & construction) -> Json
        {
            auto dp = degree_profile(g);
            Json j;
            j["name"] = name;
            j["construction"] = construction;
            j["graph6"] = to_graph6(g);
            j["order"] = g.order();
            j["size"] = g.size();
            j["min_degree"] = dp.min_degree;
            j["max_degree"] = dp.max_degree;
            return j;
        }

        auto make(const std::string & name, const Graph & g, const std::string & construction, const SearchOptions & opts,
            bool count = true) -> Fixture
        {
            Fixture f{name, g, basic_meta(name, g, construction)};
            if (count)
                f.meta["hamiltonian_cycles"] = to_decimal(count_hamiltonian_cycles(g, {}, opts));
            return f;
        }

        auto cycle_json(const FourCycle & c) -> Json
        {
            return Json{{"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", c.d}};
        }

        auto special_json(const SpecialEdges & s) -> Json
        {
            return Json{{"a", s.a}, {"c", s.c}, {"u", s.u}, {"w", s.w}};
        }

        auto longest_json(const Graph & g, const SearchOptions & opts) -> Json
        {
            auto r = longest_cycles(g, opts);
            return Json{{"circumference", r.circumference}, {"count", to_decimal(r.count)}};
        }
    }

    auto fixture_names() -> std::vector<std::string>
    {
        return {"k4", "k5", "petersen", "antihole7", "generalized_petersen_9_2", "gadget5", "good_cycle_seed",
            "chia_thomassen_H", "chia_thomassen_G", "prop5_H", "prop5_G"};
    }

    auto build_fixtures(const SearchOptions & opts) -> std::vector<Fixture>
    {
        std::vector<Fixture> out;
        out.push_back(make("k4", complete_graph(4), "complete graph K4", opts));
        out.push_back(make("k5", complete_graph(5), "complete graph K5", opts));

        auto pet = make("petersen", petersen_graph(), "P(5,2): outer cycle 0-4, spokes i~i+5, inner i+5~(i+2 mod 5)+5",
            opts);
        pet.meta["longest_cycles"] = longest_json(pet.graph, opts);
        out.push_back(pet);

        auto ah = make("antihole7", antihole_graph(7), "complement of the 7-cycle 0-1-...-6", opts);
        auto profile = edge_traversal_profile(ah.graph, opts);
        Json orbits = Json::object();
        for (auto & [e, c] : profile) {
            int d = std::min(e.v - e.u, 7 - (e.v - e.u));
            orbits["distance_" + std::to_string(d)] = to_decimal(c);
        }
        ah.meta["edge_traversal_by_chord_distance"] = orbits;
        out.push_back(ah);

        out.push_back(make("generalized_petersen_9_2", generalized_petersen_graph(9, 2),
            "P(9,2): outer cycle 0-8, spokes i~i+9, inner i+9~(i+2 mod 9)+9", opts));

        auto gadget = gadget_5regular();
        auto gd = make("gadget5", gadget.graph,
            "three K6-minus-an-edge blocks (0-5, 6-11, 12-17), junctions 18 and 19, top block a=20, u=21, "
            "path 22-23-24-25",
            opts);
        gd.meta["special_edges"] = special_json(gadget.spec);
        gd.meta["degree"] = 5;
        out.push_back(gd);

        auto seed = good_cycle_seed();
        auto sd = make("good_cycle_seed", seed.graph,
            "two K5-minus-an-edge blocks, a K4 on 16-19, induced 4-cycle a=10 b=11 c=12 d=13", opts);
        sd.meta["four_cycle"] = cycle_json(seed.cycle);
        out.push_back(sd);

        auto ct = chia_thomassen(opts);
        auto cth = make("chia_thomassen_H", ct.H, "petersen with every vertex but 0 inflated to a triangle", opts);
        cth.meta["longest_cycles"] = longest_json(ct.H, opts);
        cth.meta["x"] = 0;
        cth.meta["vw"] = to_string(ct.vw);
        out.push_back(cth);
        auto ctg = make("chia_thomassen_G", ct.G,
            "two copies of chia_thomassen_H minus vw (0-27, 28-55) joined by v1v2 and w1w2", opts, false);
        ctg.meta["vw"] = to_string(ct.vw);
        ctg.meta["x"] = Json::array({ct.x1, ct.x2});
        out.push_back(ctg);

        auto p5 = prop5_graph(opts);
        auto ph = make("prop5_H", p5.H, "petersen with every vertex but x=0 and y=2 inflated, then x deleted", opts);
        ph.meta["y"] = p5.y;
        ph.meta["x"] = Json::array({p5.x[0], p5.x[1], p5.x[2]});
        out.push_back(ph);
        auto pg = make("prop5_G", p5.G, "two copies of prop5_H (0-24, 25-49) joined by x1'x2'', x2'x1'', x3'x3''",
            opts, false);
        pg.meta["x"] = ph.meta["x"];
        out.push_back(pg);
        return out;
    }

    void write_fixture(const std::filesystem::path & dir, const Fixture & f)
    {
        std::filesystem::create_directories(dir);
        std::ofstream g6(dir / (f.name + ".g6"));
        g6 << to_graph6(f.graph) << '\n';
        std::ofstream js(dir / (f.name + ".json"));
        js << f.meta.dump(2) << '\n';
        if (! g6 || ! js)
            throw FixtureError("cannot write fixture " + f.name + " to " + dir.string());
    }

    auto load_fixture(const std::filesystem::path & dir, const std::string & name) -> Fixture
    {
        auto g6 = dir / (name + ".g6");
        if (! std::filesystem::exists(g6))
            throw FixtureError("fixture '" + name + "' not found in " + dir.string());
        Fixture f;
        f.name = name;
        f.graph = read_graph_file(g6.string());
        auto side = dir / (name + ".json");
        if (std::filesystem::exists(side)) {
            std::ifstream in(side);
            try {
                f.meta = Json::parse(in);
            }
            catch (const Json::parse_error & e) {
                throw FixtureError("malformed sidecar " + side.string() + ": " + e.what());
            }
        }
        return f;
    }

    auto default_fixture_dir() -> std::filesystem::path
    {
        if (const char * env = std::getenv("HAMCENSUS_FIXTURES"); env && *env)
            return env;
        return HAMCENSUS_SOURCE_FIXTURE_DIR;
    }

    auto four_cycle_of(const Fixture & f) -> FourCycle
    {
        if (! f.meta.contains("four_cycle"))
            throw FixtureError("fixture '" + f.name + "' has no four_cycle");
        auto & j = f.meta.at("four_cycle");
        return {j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>(), j.at("d").get<int>()};
    }

    auto special_edges_of(const Fixture & f) -> SpecialEdges
    {
        if (! f.meta.contains("special_edges"))
            throw FixtureError("fixture '" + f.name + "' has no special_edges");
        auto & j = f.meta.at("special_edges");
        return {j.at("a").get<int>(), j.at("c").get<int>(), j.at("u").get<int>(), j.at("w").get<int>()};
    }
}
