#include <hamcensus/graph_io.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace hamcensus
{
    ParseError::ParseError(const std::string & message, std::size_t offset) :
        std::runtime_error(message + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset)
    {
    }

    namespace
    {
        constexpr std::string_view graph6_header = ">>graph6<<";

        auto trim_right(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        auto sextet(std::string_view text, std::size_t pos, std::size_t base) -> int
        {
            unsigned char ch = static_cast<unsigned char>(text[pos]);
            if (ch < 63 || ch > 126)
                throw ParseError("graph6 byte outside 63..126", base + pos);
            return ch - 63;
        }
    }

    auto from_graph6(std::string_view text) -> Graph
    {
        std::size_t base = 0;
        if (text.starts_with(graph6_header)) {
            text.remove_prefix(graph6_header.size());
            base = graph6_header.size();
        }
        text = trim_right(text);
        if (text.empty())
            throw ParseError("empty graph6 record", base);

        std::size_t pos = 0;
        long n = 0;
        if (static_cast<unsigned char>(text[0]) != 126) {
            n = sextet(text, 0, base);
            pos = 1;
        }
        else {
            if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
                throw ParseError("graph6 order above 64 unsupported", base + 1);
            if (text.size() < 4)
                throw ParseError("truncated graph6 order field", base + text.size());
            n = (long(sextet(text, 1, base)) << 12) | (long(sextet(text, 2, base)) << 6) | sextet(text, 3, base);
            pos = 4;
            if (n <= 62)
                throw ParseError("non-minimal graph6 order field", base + 1);
        }
        if (n > max_order)
            throw ParseError("graph6 order " + std::to_string(n) + " above 64 unsupported", base);

        std::size_t bits = std::size_t(n) * std::size_t(n > 0 ? n - 1 : 0) / 2;
        std::size_t bytes = (bits + 5) / 6;
        if (text.size() - pos != bytes)
            throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                    std::to_string(bytes),
                base + std::min(text.size(), pos + bytes));

        GraphBuilder b{int(n)};
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = sextet(text, pos + k / 6, base);
                if ((byte >> (5 - int(k % 6))) & 1)
                    b.add_edge(i, j);
            }
        if (bytes > 0) {
            int last = sextet(text, pos + bytes - 1, base);
            int pad = int(bytes * 6 - bits);
            if (last & ((1 << pad) - 1))
                throw ParseError("graph6 padding bits are not zero", base + pos + bytes - 1);
        }
        return b.build();
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        std::string out;
        int n = g.order();
        if (n <= 62)
            out.push_back(char(n + 63));
        else {
            out.push_back(char(126));
            out.push_back(char(((n >> 12) & 63) + 63));
            out.push_back(char(((n >> 6) & 63) + 63));
            out.push_back(char((n & 63) + 63));
        }
        int acc = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(char(acc + 63));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(char((acc << (6 - filled)) + 63));
        return out;
    }

    auto from_edge_list_text(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        long n = -1, m = -1;
        if (! (in >> n >> m) || n < 0 || m < 0)
            throw ParseError("edge list must start with 'n m'", 0);
        if (n > max_order)
            throw ParseError("edge list order " + std::to_string(n) + " above 64 unsupported", 0);
        GraphBuilder b{int(n)};
        for (long i = 0; i < m; ++i) {
            long u = -1, v = -1;
            auto at = std::size_t(in.tellg() < 0 ? text.size() : std::size_t(in.tellg()));
            if (! (in >> u >> v))
                throw ParseError("edge list truncated at edge " + std::to_string(i), at);
            try {
                b.add_edge(int(u), int(v));
            }
            catch (const GraphError & e) {
                throw ParseError(e.what(), at);
            }
        }
        std::string rest;
        if (in >> rest)
            throw ParseError("trailing data after edge list", std::size_t(in.tellg()) - rest.size());
        return b.build();
    }

    auto to_edge_list_text(const Graph & g) -> std::string
    {
        std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
        for (auto & e : g.edges())
            out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
        return out;
    }

    auto parse_graph_text(std::string_view text) -> Graph
    {
        auto eol = text.find('\n');
        auto first = text.substr(0, eol);
        std::istringstream line{std::string(first)};
        long a, b;
        std::string extra;
        if ((line >> a >> b) && ! (line >> extra))
            return from_edge_list_text(text);
        return from_graph6(first);
    }

    auto read_graph_file(const std::string & path) -> Graph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_graph_text(buffer.str());
    }
}
