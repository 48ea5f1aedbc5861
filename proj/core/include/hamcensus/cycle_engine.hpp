#pragma once

#include <hamcensus/count.hpp>
#include <hamcensus/graph.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hamcensus
{
    /// Edges every counted cycle (or path) must use, and edges none may use.
    struct EdgeConstraint
    {
        std::vector<Edge> forced;
        std::vector<Edge> forbidden;

        static auto force(std::vector<Edge> es) -> EdgeConstraint { return {std::move(es), {}}; }
        static auto forbid(std::vector<Edge> es) -> EdgeConstraint { return {{}, std::move(es)}; }
    };

    /// Throws GraphError if a constraint edge is missing from g or appears in
    /// both sets. A vertex with three or more forced edges is legal and
    /// simply yields count 0.
    void validate(const Graph & g, const EdgeConstraint & c);

    struct SearchOptions
    {
        /// 0 means std::thread::hardware_concurrency (or HAMCENSUS_WORKERS).
        int workers = 0;
        /// Depth at which the search tree is cut into independent subtasks.
        int split_depth = 3;
    };

    auto resolve_workers(int requested) -> int;

    struct CycleReport
    {
        Count count = 0;
        std::optional<std::vector<std::vector<int>>> cycles;
        bool truncated = false;
        std::optional<std::map<Edge, Count>> per_edge;
    };

    struct CycleRequest
    {
        bool per_edge = false;
        bool list_cycles = false;
        std::optional<std::size_t> limit;
    };

    /// Rotate so the smallest vertex leads, then take the direction whose
    /// second vertex is smaller.
    auto canonical_cycle(std::vector<int> cycle) -> std::vector<int>;

    auto count_hamiltonian_cycles(const Graph & g, const EdgeConstraint & c = {}, const SearchOptions & opts = {})
        -> Count;

    auto hamiltonian_cycle_report(const Graph & g, const EdgeConstraint & c, const CycleRequest & request,
        const SearchOptions & opts = {}) -> CycleReport;

    /// Cycles in canonical form, sorted. With a limit, the smallest `limit`
    /// canonical cycles are returned and `truncated` is set when more exist;
    /// `count` is exact either way.
    auto enumerate_hamiltonian_cycles(const Graph & g, const EdgeConstraint & c = {},
        std::optional<std::size_t> limit = std::nullopt, const SearchOptions & opts = {}) -> CycleReport;

    /// h(g, e) for every edge. Values sum to h(g) * n.
    auto edge_traversal_profile(const Graph & g, const SearchOptions & opts = {}) -> std::map<Edge, Count>;

    /// Spanning s-t paths respecting the constraint.
    auto count_hamiltonian_paths(const Graph & g, int s, int t, const EdgeConstraint & c = {},
        const SearchOptions & opts = {}) -> Count;

    auto find_hamiltonian_path(const Graph & g, int s, int t, const EdgeConstraint & c = {})
        -> std::optional<std::vector<int>>;

    auto find_hamiltonian_cycle(const Graph & g, const EdgeConstraint & c = {}) -> std::optional<std::vector<int>>;

    struct LongestCycleReport
    {
        int circumference = 0;
        Count count = 0;
        bool unique = false;
        std::vector<int> witness; // smallest canonical longest cycle
    };

    enum class LongestCycleRoute
    {
        automatic,
        subset_exclusion,
        branch_and_bound
    };

    /// Throws GraphError("no cycle") on forests.
    auto longest_cycles(const Graph & g, const SearchOptions & opts = {},
        LongestCycleRoute route = LongestCycleRoute::automatic) -> LongestCycleReport;

    /// Number of cycles of exactly `length` vertices, 3 <= length <= n.
    auto count_cycles_of_length(const Graph & g, int length, const SearchOptions & opts = {}) -> Count;

    /// All cycles of the given length in canonical form, sorted.
    auto enumerate_cycles_of_length(const Graph & g, int length, const SearchOptions & opts = {})
        -> std::vector<std::vector<int>>;

    /// A spanning 2-regular subgraph, as its cycles (each canonical, sorted).
    struct TwoFactor
    {
        std::vector<std::vector<int>> cycles;

        auto uses_edge(const Edge & e) const -> bool;
        /// Index of the cycle containing edge e, or -1.
        auto cycle_with_edge(const Edge & e) const -> int;
    };

    using TwoFactorShape = std::function<bool(const TwoFactor &)>;

    namespace shapes
    {
        auto any() -> TwoFactorShape;
        auto single_cycle() -> TwoFactorShape;
        auto cycle_count(std::size_t k) -> TwoFactorShape;
        /// Exactly two cycles, one through e1 and the other through e2.
        auto two_components_separating(Edge e1, Edge e2) -> TwoFactorShape;
        /// Every cycle has the given length (e.g. two triangles on six vertices).
        auto all_cycles_of_length(std::size_t len) -> TwoFactorShape;
    }

    auto count_two_factors(const Graph & g, const TwoFactorShape & shape = shapes::any()) -> Count;
    auto find_two_factor(const Graph & g, const TwoFactorShape & shape) -> std::optional<TwoFactor>;
}
