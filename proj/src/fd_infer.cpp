#include <hypertrans/error.hpp>
#include <hypertrans/fd_infer.hpp>

#include <algorithm>
#include <istream>
#include <set>

namespace ht {

auto Relation::attribute_index(std::string_view name) const -> std::size_t
{
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i] == name)
            return i;
    throw DomainError("unknown attribute '" + std::string(name) + "'");
}

auto Relation::format(const AttrSet & s) const -> std::string
{
    if (s.empty())
        return "{}";
    std::string out;
    for (auto a : s) {
        if (! out.empty())
            out += ',';
        out += attributes.at(a);
    }
    return out;
}

namespace {
    auto split_csv_line(const std::string & line, std::size_t line_no) -> std::vector<std::string>
    {
        std::vector<std::string> fields(1);
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        fields.back() += '"';
                        ++i;
                    }
                    else
                        quoted = false;
                }
                else
                    fields.back() += c;
            }
            else if (c == '"')
                quoted = true;
            else if (c == ',')
                fields.emplace_back();
            else
                fields.back() += c;
        }
        if (quoted)
            throw ParseError("unterminated quote", line_no);
        return fields;
    }
}

auto parse_relation(std::istream & in) -> Relation
{
    Relation r;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto fields = split_csv_line(line, line_no);
        if (! have_header) {
            std::set<std::string> names;
            for (const auto & f : fields) {
                if (f.empty())
                    throw ParseError("empty attribute name", line_no);
                if (! names.insert(f).second)
                    throw ParseError("duplicate attribute name '" + f + "'", line_no);
            }
            r.attributes = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != r.arity())
            throw ParseError("expected " + std::to_string(r.arity()) + " fields, got " + std::to_string(fields.size()),
                    line_no);
        r.tuples.push_back(std::move(fields));
    }
    if (! have_header)
        throw ParseError("missing header row");
    return r;
}

auto agree_sets(const Relation & r) -> AgreeSetTable
{
    if (r.tuples.size() < 2)
        throw DomainError("agree sets need at least two tuples");
    AgreeSetTable ag;
    for (std::size_t i = 0; i < r.tuples.size(); ++i)
        for (std::size_t j = i + 1; j < r.tuples.size(); ++j) {
            std::vector<Vertex> same;
            for (std::size_t a = 0; a < r.arity(); ++a)
                if (r.tuples[i][a] == r.tuples[j][a])
                    same.push_back(a);
            ag.entries[AttrSet(std::move(same))].emplace_back(i, j);
        }
    return ag;
}

auto max_sets(const AgreeSetTable & ag, std::size_t a) -> std::vector<AttrSet>
{
    std::vector<AttrSet> without;
    for (const auto & [s, pairs] : ag.entries)
        if (! s.contains(a))
            without.push_back(s);
    std::vector<AttrSet> out;
    for (const auto & s : without) {
        bool maximal = true;
        for (const auto & t : without)
            if (t != s && s.is_subset_of(t)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(s);
    }
    return out;
}

auto cmax_sets(const std::vector<AttrSet> & maxs, std::size_t a, std::size_t arity) -> std::vector<AttrSet>
{
    std::set<AttrSet> out;
    for (const auto & x : maxs) {
        std::vector<Vertex> c;
        for (std::size_t b = 0; b < arity; ++b)
            if (b != a && ! x.contains(b))
                c.push_back(b);
        out.insert(AttrSet(std::move(c)));
    }
    return {out.begin(), out.end()};
}

auto attribute_hypergraph(const std::vector<AttrSet> & cmax) -> std::optional<Hypergraph>
{
    if (cmax.empty())
        return std::nullopt;
    for (const auto & c : cmax)
        if (c.empty())
            return std::nullopt;
    return min_reduce(Hypergraph(cmax));
}

auto satisfies(const Relation & r, const Fd & fd) -> bool
{
    for (std::size_t i = 0; i < r.tuples.size(); ++i)
        for (std::size_t j = i + 1; j < r.tuples.size(); ++j) {
            bool agree = true;
            for (auto a : fd.premise)
                if (r.tuples[i][a] != r.tuples[j][a]) {
                    agree = false;
                    break;
                }
            if (agree && r.tuples[i][fd.conclusion] != r.tuples[j][fd.conclusion])
                return false;
        }
    return true;
}

namespace {
    auto finish(FdCover c) -> FdCover
    {
        std::sort(c.fds.begin(), c.fds.end());
        c.fds.erase(std::unique(c.fds.begin(), c.fds.end()), c.fds.end());
        return c;
    }

    // Calls f(a, hypergraph) for each attribute that some premise determines;
    // records the constant and skipped cases on the way.
    template <typename F_>
    auto for_each_attribute(const Relation & r, FdCover & cover, F_ && f) -> void
    {
        auto ag = agree_sets(r);
        for (std::size_t a = 0; a < r.arity(); ++a) {
            auto maxs = max_sets(ag, a);
            if (maxs.empty()) {
                // every pair agrees on a: it is constant
                cover.fds.push_back({{}, a});
                continue;
            }
            auto h = attribute_hypergraph(cmax_sets(maxs, a, r.arity()));
            if (! h) {
                cover.diagnostics.push_back("attribute " + r.attributes[a] + " is determined by no other attribute set");
                continue;
            }
            f(a, *h);
        }
    }
}

auto minimal_cover(const Relation & r, Backend backend) -> FdCover
{
    FdCover cover;
    for_each_attribute(r, cover, [&](std::size_t a, const Hypergraph & h) {
        for (const auto & t : enumerate(h, backend))
            cover.fds.push_back({t, a});
    });
    return finish(std::move(cover));
}

auto concise_cover(const Relation & r, Backend backend) -> FdCover
{
    FdCover cover;
    for_each_attribute(r, cover, [&](std::size_t a, const Hypergraph & h) {
        auto imt = imt_extract(h, backend);
        for (const auto & t : imt.irredundant_mts)
            cover.fds.push_back({t, a});
        cover.per_attribute_gn.emplace(a, std::move(imt.generalized));
    });
    return finish(std::move(cover));
}

auto expand_cover(const FdCover & concise) -> FdCover
{
    FdCover out;
    out.diagnostics = concise.diagnostics;
    std::map<std::size_t, std::vector<AttrSet>> by_attr;
    for (const auto & fd : concise.fds) {
        auto it = concise.per_attribute_gn.find(fd.conclusion);
        if (it == concise.per_attribute_gn.end()) {
            if (! fd.premise.empty())
                throw PreconditionError("no generalized nodes for a conclusion attribute");
            out.fds.push_back(fd);
            continue;
        }
        by_attr[fd.conclusion].push_back(fd.premise);
    }
    for (auto & [a, premises] : by_attr)
        for (const auto & t : expand_mts(MtSet(std::move(premises)), concise.per_attribute_gn.at(a)))
            out.fds.push_back({t, a});
    return finish(std::move(out));
}

auto conditional_fds(const Relation & r, std::size_t a, const GeneralizedNodes & gn, const AgreeSetTable & ag)
        -> std::vector<ConditionalFd>
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::set<std::size_t> tuples;
    for (const auto & x : max_sets(ag, a))
        for (const auto & p : ag.entries.at(x)) {
            pairs.push_back(p);
            tuples.insert(p.first);
            tuples.insert(p.second);
        }

    Relation sub;
    sub.attributes = r.attributes;
    for (auto t : tuples)
        sub.tuples.push_back(r.tuples[t]);

    std::vector<ConditionalFd> out;
    for (const auto & g : gn.groups)
        for (auto y : g.members) {
            if (y == g.representative)
                continue;
            ConditionalFd c;
            c.attribute = a;
            c.fd = {{y}, static_cast<std::size_t>(g.representative)};
            c.tuples.assign(tuples.begin(), tuples.end());
            c.holds_per_pair = std::all_of(pairs.begin(), pairs.end(), [&](const auto & p) {
                const auto & ti = r.tuples[p.first];
                const auto & tj = r.tuples[p.second];
                return ti[y] != tj[y] || ti[g.representative] == tj[g.representative];
            });
            c.holds_on_union = satisfies(sub, c.fd);
            out.push_back(std::move(c));
        }
    return out;
}

auto format_fd(const Relation & r, const Fd & fd) -> std::string
{
    return r.format(fd.premise) + " -> " + r.attributes.at(fd.conclusion);
}

} // namespace ht
