#pragma once

#include <hamcensus/graph.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hamcensus
{
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, std::size_t offset);

        auto offset() const -> std::size_t { return offset_; }

    private:
        std::size_t offset_;
    };

    /// graph6 record, optionally preceded by ">>graph6<<". Trailing
    /// whitespace is ignored.
    auto from_graph6(std::string_view text) -> Graph;
    auto to_graph6(const Graph & g) -> std::string;

    /// "n m" header line followed by m lines "u v", 0-indexed.
    auto from_edge_list_text(std::string_view text) -> Graph;
    auto to_edge_list_text(const Graph & g) -> std::string;

    /// Reads either format; a first line of two integers selects edge-list.
    auto parse_graph_text(std::string_view text) -> Graph;
    auto read_graph_file(const std::string & path) -> Graph;
}
