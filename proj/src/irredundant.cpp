#include <hypertrans/error.hpp>
#include <hypertrans/irredundant.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

namespace ht {

auto GeneralizedNodes::group_of(Vertex v) const -> const NodeGroup *
{
    for (const auto & g : groups)
        if (g.members.contains(v))
            return &g;
    return nullptr;
}

auto GeneralizedNodes::representatives() const -> VertexSet
{
    std::vector<Vertex> reps;
    for (const auto & g : groups)
        reps.push_back(g.representative);
    return VertexSet(std::move(reps));
}

auto search_substitution(const Hypergraph & h) -> GeneralizedNodes
{
    std::unordered_map<Bitset, std::size_t, BitsetHash> index;
    std::vector<std::vector<Vertex>> members;
    std::vector<EdgeIndexSet> extents;
    for (std::size_t v = 0; v < h.order(); ++v) {
        auto [it, fresh] = index.try_emplace(h.extent_bits(v), members.size());
        if (fresh) {
            members.emplace_back();
            extents.push_back(h.extent_bits(v).indices());
        }
        members[it->second].push_back(h.label(v));
    }

    // vertices are visited in ascending label order, so groups already come
    // out sorted by representative
    GeneralizedNodes gn;
    for (std::size_t i = 0; i < members.size(); ++i)
        gn.groups.push_back({members[i].front(), VertexSet(std::move(members[i])), std::move(extents[i])});
    return gn;
}

auto build_irredundant(const Hypergraph & h, const GeneralizedNodes & gn) -> Hypergraph
{
    std::size_t covered = 0;
    for (const auto & g : gn.groups) {
        if (g.members.empty() || g.members.front() != g.representative)
            throw PreconditionError("group representative is not its smallest member");
        for (auto v : g.members) {
            auto vi = h.index_of(v);
            if (! vi)
                throw PreconditionError("group member " + std::to_string(v) + " is not a vertex");
            if (! g.extent.empty() && h.extent_bits(*vi).indices() != g.extent)
                throw PreconditionError("group member " + std::to_string(v) + " has a different extent");
        }
        covered += g.members.size();
    }
    if (covered != h.order())
        throw PreconditionError("groups do not partition the vertices");

    auto reps = h.to_bits(gn.representatives());
    std::vector<VertexSet> edges;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto r = h.edge_bits(e) & reps;
        if (r.none())
            throw PreconditionError("edge " + std::to_string(e + 1) + " holds no representative");
        edges.push_back(h.to_labels(r));
    }
    return Hypergraph(std::move(edges));
}

auto imt_extract(const Hypergraph & h, Backend backend) -> ImtResult
{
    ImtResult r;
    r.generalized = search_substitution(h);
    r.irredundant_h = build_irredundant(h, r.generalized);
    r.irredundant_mts = enumerate(r.irredundant_h, backend);
    return r;
}

namespace {
    auto touched_groups(const VertexSet & t, const GeneralizedNodes & gn) -> std::vector<const NodeGroup *>
    {
        std::vector<const NodeGroup *> out;
        for (auto v : t) {
            auto g = gn.group_of(v);
            if (! g || g->representative != v)
                throw DomainError("vertex " + std::to_string(v) + " is not a representative");
            out.push_back(g);
        }
        return out;
    }
}

auto expand_mts(const MtSet & irredundant_mts, const GeneralizedNodes & gn) -> MtSet
{
    std::vector<VertexSet> out;
    for (const auto & t : irredundant_mts) {
        auto groups = touched_groups(t, gn);
        std::vector<std::size_t> pos(groups.size(), 0);
        std::vector<Vertex> pick(groups.size());
        while (true) {
            for (std::size_t i = 0; i < groups.size(); ++i)
                pick[i] = groups[i]->members[pos[i]];
            out.emplace_back(pick);

            std::size_t i = 0;
            while (i < groups.size() && ++pos[i] == groups[i]->members.size())
                pos[i++] = 0;
            if (i == groups.size())
                break;
        }
    }
    return MtSet(std::move(out));
}

auto expansion_count(const MtSet & irredundant_mts, const GeneralizedNodes & gn) -> std::uint64_t
{
    std::uint64_t total = 0;
    for (const auto & t : irredundant_mts) {
        std::uint64_t p = 1;
        for (auto g : touched_groups(t, gn))
            p *= g->members.size();
        total += p;
    }
    return total;
}

auto compaction_rate(std::uint64_t full_count, std::uint64_t irredundant_count) -> double
{
    if (full_count == 0)
        throw DomainError("compaction rate needs a non-zero MT count");
    if (irredundant_count == 0 || irredundant_count > full_count)
        throw DomainError("irredundant count must lie in 1..full count");
    return static_cast<double>(full_count - irredundant_count) / static_cast<double>(full_count);
}

auto write_generalized_nodes(std::ostream & out, const GeneralizedNodes & gn) -> void
{
    for (const auto & g : gn.groups)
        out << g.representative << ": " << g.members.to_string() << '\n';
}

auto parse_generalized_nodes(std::istream & in) -> GeneralizedNodes
{
    GeneralizedNodes gn;
    std::set<Vertex> seen;
    std::string line;
    std::size_t line_no = 0;

    auto parse_label = [&](std::string_view tok) {
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("invalid vertex label '" + std::string(tok) + "'", line_no);
        return v;
    };
    auto tokens = [](std::string_view s) {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                ++i;
            auto j = i;
            while (j < s.size() && ! std::isspace(static_cast<unsigned char>(s[j])))
                ++j;
            if (j > i)
                out.push_back(s.substr(i, j - i));
            i = j;
        }
        return out;
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'rep: members'", line_no);

        auto rep_tokens = tokens(std::string_view(line).substr(0, colon));
        if (rep_tokens.size() != 1)
            throw ParseError("expected one representative before ':'", line_no);
        auto rep = parse_label(rep_tokens.front());

        std::vector<Vertex> members;
        for (auto tok : tokens(std::string_view(line).substr(colon + 1)))
            members.push_back(parse_label(tok));
        VertexSet ms(std::move(members));
        if (ms.empty() || ms.front() != rep)
            throw ParseError("representative must be the smallest member", line_no);
        for (auto v : ms)
            if (! seen.insert(v).second)
                throw ParseError("vertex " + std::to_string(v) + " in two groups", line_no);
        gn.groups.push_back({rep, std::move(ms), {}});
    }
    std::sort(gn.groups.begin(), gn.groups.end(),
            [](const NodeGroup & a, const NodeGroup & b) { return a.representative < b.representative; });
    return gn;
}

} // namespace ht
