#pragma once

#include <hamcensus/cycle_engine.hpp>
#include <hamcensus/fixtures.hpp>

#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hamcensus
{
    enum class VerifyLevel
    {
        quick,
        full
    };

    struct CriterionResult
    {
        int id = 0;
        std::string title;
        bool passed = false;
        std::string detail;
        double seconds = 0;
        double budget_seconds = 0;
    };

    struct VerifyOptions
    {
        VerifyLevel level = VerifyLevel::quick;
        std::filesystem::path fixtures;
        SearchOptions search;
        /// Called after each criterion finishes.
        std::function<void(const CriterionResult &)> on_result;
    };

    /// Runs the eleven checks against the fixture directory. Every fixture
    /// is loaded first, so a missing one throws FixtureError before any
    /// check runs. A criterion fails when its assertion fails, when it
    /// throws, or when it overruns its time budget.
    auto verify_paper(const VerifyOptions & opts) -> std::vector<CriterionResult>;

    /// Connected graph on 2..max_order vertices with maximum degree 3 and at
    /// least two 1-valent vertices: a random tree plus random extra edges.
    auto random_subcubic_graph(std::mt19937_64 & rng, int max_order) -> Graph;

    /// Counts by scanning every vertex order that starts at vertex 0.
    auto naive_hamiltonian_cycle_count(const Graph & g) -> Count;
}
