#pragma once

#include <hamcensus/constructions.hpp>
#include <hamcensus/report.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcensus
{
    /// A named graph stored as NAME.g6 with a NAME.json sidecar describing
    /// how it was built and the properties measured at build time.
    struct Fixture
    {
        std::string name;
        Graph graph;
        Json meta;
    };

    class FixtureError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto fixture_names() -> std::vector<std::string>;

    /// Builds every named fixture from its construction.
    auto build_fixtures(const SearchOptions & opts = {}) -> std::vector<Fixture>;

    void write_fixture(const std::filesystem::path & dir, const Fixture & f);

    /// Throws FixtureError when NAME.g6 is absent and ParseError when it is
    /// malformed. A missing sidecar yields empty meta.
    auto load_fixture(const std::filesystem::path & dir, const std::string & name) -> Fixture;

    /// HAMCENSUS_FIXTURES if set, else the fixtures directory of the source tree.
    auto default_fixture_dir() -> std::filesystem::path;

    /// Sidecar accessors; throw FixtureError when the field is missing.
    auto four_cycle_of(const Fixture & f) -> FourCycle;
    auto special_edges_of(const Fixture & f) -> SpecialEdges;
}
