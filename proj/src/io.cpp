#include <hypertrans/error.hpp>
#include <hypertrans/io.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace ht {

namespace {
    auto is_blank_or_comment(std::string_view line) -> bool
    {
        auto p = line.find_first_not_of(" \t\r\f\v");
        return p == std::string_view::npos || line[p] == '#';
    }

    auto parse_line(std::string_view line, std::size_t line_no) -> VertexSet
    {
        std::vector<Vertex> labels;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'
                        || line[i] == '\f' || line[i] == '\v'))
                ++i;
            if (i == line.size())
                break;
            auto j = i;
            while (j < line.size() && ! (line[j] == ' ' || line[j] == '\t' || line[j] == '\r'
                        || line[j] == '\f' || line[j] == '\v'))
                ++j;
            auto token = line.substr(i, j - i);
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError("invalid vertex label '" + std::string(token) + "'", line_no);
            labels.push_back(v);
            i = j;
        }
        return VertexSet(std::move(labels));
    }

    template <typename F_>
    auto for_each_data_line(std::istream & in, F_ && f) -> void
    {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (is_blank_or_comment(line))
                continue;
            f(parse_line(line, line_no), line_no);
        }
    }
}

auto parse_hypergraph(std::istream & in) -> Hypergraph
{
    std::vector<VertexSet> edges;
    for_each_data_line(in, [&](VertexSet e, std::size_t line_no) {
        if (e.empty())
            throw ParseError("edge has no vertices", line_no);
        edges.push_back(std::move(e));
    });
    if (edges.empty())
        throw ParseError("input contains no edges");
    return Hypergraph(std::move(edges));
}

auto parse_hypergraph(std::string_view text) -> Hypergraph
{
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

auto serialize_hypergraph(const Hypergraph & h) -> std::string
{
    std::string out;
    for (const auto & e : h.edges()) {
        out += e.to_string();
        out += '\n';
    }
    return out;
}

auto parse_vertex_sets(std::istream & in) -> std::vector<VertexSet>
{
    std::vector<VertexSet> sets;
    for_each_data_line(in, [&](VertexSet s, std::size_t) { sets.push_back(std::move(s)); });
    return sets;
}

auto write_mts(std::ostream & out, const MtSet & mts) -> void
{
    for (const auto & t : mts)
        out << t.to_string() << '\n';
}

} // namespace ht
