#pragma once

#include <hamcensus/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hamcensus
{
    enum class Verdict
    {
        pass,
        fail,
        vacuous
    };

    auto to_string(Verdict v) -> std::string;

    /// A re-checkable object backing a verdict: a cycle, a path, the cycles
    /// of a 2-factor, an edge cut, or a list of components.
    struct Witness
    {
        std::string kind;
        std::vector<std::vector<int>> parts;
    };

    struct Condition
    {
        std::string id;
        Verdict verdict = Verdict::pass;
        std::string detail;
        std::optional<Witness> witness;

        static auto named(std::string id) -> Condition
        {
            Condition c;
            c.id = std::move(id);
            return c;
        }
    };

    struct Certificate
    {
        std::string name;
        Verdict verdict = Verdict::pass;
        std::vector<Condition> conditions;
        std::vector<Witness> witnesses;
        std::string graph6;
        std::string detail;

        auto passed() const -> bool { return verdict == Verdict::pass; }

        /// Overall verdict: fail if any condition failed, else pass.
        void settle_from_conditions();
    };
}
