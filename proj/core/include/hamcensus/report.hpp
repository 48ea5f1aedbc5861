#pragma once

#include <hamcensus/certificate.hpp>
#include <hamcensus/certify.hpp>
#include <hamcensus/cycle_engine.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace hamcensus
{
    using Json = nlohmann::ordered_json;

    /// Counts are emitted as decimal strings.
    auto to_json(const Certificate & c) -> Json;
    auto to_json(const Witness & w) -> Json;
    auto to_json(const Graph & g, const EdgeConstraint & c, const CycleReport & r) -> Json;
    auto to_json(const EdgeConstraint & c) -> Json;
    auto to_json(const LongestCycleReport & r) -> Json;
    auto to_json(const SpecialEdgeProfile & p) -> Json;

    auto edges_from_json(const Json & j) -> std::vector<Edge>;

    /// 64-bit FNV-1a of the text, as 16 hex digits.
    auto digest(const std::string & text) -> std::string;
}
