#pragma once

#include <hamcensus/graph.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace hamcensus
{
    struct CanonicalLabeling
    {
        /// order[i] is the original vertex given canonical id i.
        std::vector<int> order;
        /// Adjacency rows of the relabeled graph; equal codes iff isomorphic.
        std::vector<VertexMask> code;
    };

    /// Lexicographically smallest relabeled adjacency over the leaves of an
    /// individualization-refinement search. Leaves are only labelings that
    /// respect equitable refinement of the degree partition, so the search
    /// is far below n! on graphs with few automorphisms.
    auto canonical_labeling(const Graph & g) -> CanonicalLabeling;

    auto canonical_form(const Graph & g) -> Graph;
    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Connected k-regular graphs on n vertices, one per isomorphism class,
    /// each in canonical form. Single consumer; call next() until empty.
    class RegularGraphGenerator
    {
    public:
        RegularGraphGenerator(int n, int k);
        ~RegularGraphGenerator();
        RegularGraphGenerator(RegularGraphGenerator &&) noexcept;
        auto operator=(RegularGraphGenerator &&) noexcept -> RegularGraphGenerator &;

        auto next() -> std::optional<Graph>;

    private:
        struct State;
        std::unique_ptr<State> state_;
    };

    /// Drains a RegularGraphGenerator. Empty for infeasible (n, k).
    auto generate_regular_graphs(int n, int k) -> std::vector<Graph>;
}
