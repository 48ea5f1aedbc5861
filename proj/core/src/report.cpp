#include <hamcensus/graph_io.hpp>
#include <hamcensus/report.hpp>

#include <cstdio>

namespace hamcensus
{
    namespace
    {
        auto edge_list(const std::vector<Edge> & es) -> Json
        {
            Json out = Json::array();
            for (auto & e : es)
                out.push_back(to_string(e));
            return out;
        }
    }

    auto to_json(const Witness & w) -> Json
    {
        return Json{{"kind", w.kind}, {"parts", w.parts}};
    }

    auto to_json(const Certificate & c) -> Json
    {
        Json conditions = Json::array();
        for (auto & cond : c.conditions) {
            Json j{{"id", cond.id}, {"verdict", to_string(cond.verdict)}, {"detail", cond.detail}};
            j["witness"] = cond.witness ? to_json(*cond.witness) : Json(nullptr);
            conditions.push_back(std::move(j));
        }
        Json witnesses = Json::array();
        for (auto & w : c.witnesses)
            witnesses.push_back(to_json(w));
        Json out{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"conditions", std::move(conditions)},
            {"witnesses", std::move(witnesses)}, {"graph", c.graph6}};
        if (! c.detail.empty())
            out["detail"] = c.detail;
        return out;
    }

    auto to_json(const EdgeConstraint & c) -> Json
    {
        return Json{{"forced", edge_list(c.forced)}, {"forbidden", edge_list(c.forbidden)}};
    }

    auto to_json(const Graph & g, const EdgeConstraint & c, const CycleReport & r) -> Json
    {
        Json out{{"graph", to_graph6(g)}, {"count", to_decimal(r.count)}, {"constraint", to_json(c)}};
        if (r.cycles) {
            out["cycles"] = *r.cycles;
            out["truncated"] = r.truncated;
        }
        if (r.per_edge) {
            Json pe = Json::object();
            for (auto & [e, n] : *r.per_edge)
                pe[to_string(e)] = to_decimal(n);
            out["per_edge"] = std::move(pe);
        }
        return out;
    }

    auto to_json(const LongestCycleReport & r) -> Json
    {
        return Json{{"circumference", r.circumference}, {"count", to_decimal(r.count)}, {"unique", r.unique},
            {"witness", r.witness}};
    }

    auto to_json(const SpecialEdgeProfile & p) -> Json
    {
        return Json{{"h00_11", to_decimal(p.h00_11)}, {"h01_01", to_decimal(p.h01_01)}, {"h01_10", to_decimal(p.h01_10)},
            {"h10_01", to_decimal(p.h10_01)}, {"h10_10", to_decimal(p.h10_10)}, {"h11_00", to_decimal(p.h11_00)},
            {"h11_11", to_decimal(p.h11_11)}};
    }

    auto edges_from_json(const Json & j) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (auto & e : j)
            out.push_back(parse_edge(e.get<std::string>()));
        return out;
    }

    auto digest(const std::string & text) -> std::string
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
}
