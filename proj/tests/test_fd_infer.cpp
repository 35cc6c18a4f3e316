#include "fixtures.hpp"
#include "oracle.hpp"

#include <hypertrans/error.hpp>
#include <hypertrans/fd_infer.hpp>

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace ht;
using fixtures::attrs;

namespace {
    auto formatted(const Relation & r, const FdCover & c) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (const auto & fd : c.fds)
            out.insert(format_fd(r, fd));
        return out;
    }

    auto random_relation(std::uint64_t seed) -> Relation
    {
        std::mt19937_64 rng(seed);
        Relation r;
        auto arity = 3 + rng() % 6;
        auto rows = 2 + rng() % 11;
        auto domain = 2 + rng() % 3;
        for (std::size_t a = 0; a < arity; ++a)
            r.attributes.push_back(std::string(1, static_cast<char>('A' + a)));
        for (std::size_t t = 0; t < rows; ++t) {
            std::vector<std::string> row;
            for (std::size_t a = 0; a < arity; ++a)
                row.push_back(std::to_string(rng() % domain));
            r.tuples.push_back(std::move(row));
        }
        return r;
    }
}

TEST_CASE("parse relation")
{
    auto r = fixtures::rel();
    CHECK(r.attributes == std::vector<std::string>{"A", "B", "C", "D", "E"});
    CHECK(r.tuples.size() == 7);
    CHECK(r.tuples[4][4] == "100");

    std::istringstream header_only("X,Y\n");
    CHECK(parse_relation(header_only).tuples.empty());

    std::istringstream dup_rows("A,B\n1,2\n1,2\n");
    CHECK(parse_relation(dup_rows).tuples.size() == 2);

    std::istringstream quoted("A,B\n\"x,y\",\"a\"\"b\"\n");
    auto q = parse_relation(quoted);
    CHECK(q.tuples[0][0] == "x,y");
    CHECK(q.tuples[0][1] == "a\"b");

    std::istringstream ragged("A,B\n1\n");
    CHECK_THROWS_AS(parse_relation(ragged), ParseError);
    std::istringstream dup_names("A,A\n1,2\n");
    CHECK_THROWS_AS(parse_relation(dup_names), ParseError);
}

TEST_CASE("agree sets of rel")
{
    auto ag = agree_sets(fixtures::rel());
    std::set<AttrSet> got;
    for (const auto & [s, pairs] : ag.entries)
        got.insert(s);
    std::set<AttrSet> expected;
    for (auto n : {"CDE", "AD", "D", "ACDE", "B", "C", "E", "BC", "ABDE", "DE", "ADE", ""})
        expected.insert(attrs(n));
    CHECK(got == expected);

    using P = std::pair<std::size_t, std::size_t>;
    CHECK(ag.entries.at(attrs("CDE")) == std::vector<P>{{0, 1}, {1, 3}});
    CHECK(ag.entries.at(attrs("")) == std::vector<P>{{0, 4}, {2, 4}, {3, 4}, {5, 6}});

    Relation one{{"A"}, {{"1"}}};
    CHECK_THROWS_AS(agree_sets(one), DomainError);
    Relation apart{{"A", "B"}, {{"1", "2"}, {"3", "4"}}};
    CHECK(agree_sets(apart).entries.count(AttrSet{}) == 1);
}

TEST_CASE("max and cmax sets of rel")
{
    auto ag = agree_sets(fixtures::rel());
    auto sorted = [](std::vector<AttrSet> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(max_sets(ag, 0)) == sorted({attrs("CDE"), attrs("BC")}));
    CHECK(sorted(max_sets(ag, 1)) == sorted({attrs("ACDE")}));
    CHECK(sorted(max_sets(ag, 2)) == sorted({attrs("ABDE")}));
    CHECK(sorted(max_sets(ag, 3)) == sorted({attrs("E"), attrs("BC")}));
    CHECK(sorted(max_sets(ag, 4)) == sorted({attrs("AD"), attrs("BC")}));

    CHECK(cmax_sets(max_sets(ag, 0), 0, 5) == sorted({attrs("B"), attrs("DE")}));
    CHECK(cmax_sets(max_sets(ag, 3), 3, 5) == sorted({attrs("ABC"), attrs("AE")}));
    CHECK(cmax_sets(max_sets(ag, 4), 4, 5) == sorted({attrs("BC"), attrs("AD")}));
    CHECK(cmax_sets(max_sets(ag, 1), 1, 5) == std::vector<AttrSet>{AttrSet{}});
}

TEST_CASE("attribute hypergraphs")
{
    auto h1 = attribute_hypergraph({attrs("B"), attrs("DE")});
    REQUIRE(h1);
    CHECK(h1->edges() == std::vector<VertexSet>{attrs("B"), attrs("DE")});
    CHECK_FALSE(attribute_hypergraph({AttrSet{}}).has_value());
}

TEST_CASE("minimal cover of rel")
{
    auto r = fixtures::rel();
    auto c = minimal_cover(r);
    CHECK(formatted(r, c)
            == std::set<std::string>{"B,E -> A", "B,D -> A", "A -> D", "C,E -> D", "B,E -> D", "A,B -> E", "B,D -> E",
                    "A,C -> E", "C,D -> E"});
    for (const auto & fd : c.fds)
        CHECK(satisfies(r, fd));
}

TEST_CASE("concise cover, expansion and conditional FDs of rel")
{
    auto r = fixtures::rel();
    auto c = concise_cover(r);
    CHECK(formatted(r, c) == std::set<std::string>{"B,D -> A", "A -> D", "B,E -> D", "A,B -> E"});
    CHECK(formatted(r, expand_cover(c)) == formatted(r, minimal_cover(r)));
    CHECK_THROWS_AS(expand_cover(minimal_cover(r)), PreconditionError);

    auto ag = agree_sets(r);
    auto for_a = conditional_fds(r, 0, c.per_attribute_gn.at(0), ag);
    REQUIRE(for_a.size() == 1);
    CHECK(format_fd(r, for_a[0].fd) == "E -> D");
    CHECK(for_a[0].tuples == std::vector<std::size_t>{0, 1, 3, 5});
    CHECK(for_a[0].holds_per_pair);
    CHECK(for_a[0].holds_on_union);

    auto for_e = conditional_fds(r, 4, c.per_attribute_gn.at(4), ag);
    std::set<std::string> names;
    for (const auto & cf : for_e) {
        names.insert(format_fd(r, cf.fd));
        CHECK(cf.holds_per_pair);
    }
    CHECK(names == std::set<std::string>{"C -> B", "D -> A"});
}

TEST_CASE("FD properties on random relations")
{
    for (std::uint64_t s = 1; s <= 80; ++s) {
        auto r = random_relation(s);
        auto full = minimal_cover(r);
        auto concise = concise_cover(r);
        CHECK(concise.fds.size() <= full.fds.size());
        CHECK(formatted(r, expand_cover(concise)) == formatted(r, full));

        for (std::size_t a = 0; a < r.arity(); ++a) {
            std::vector<AttrSet> got;
            for (const auto & fd : full.fds)
                if (fd.conclusion == a)
                    got.push_back(fd.premise);
            REQUIRE(got == oracle::minimal_premises(r, a));
        }
        for (const auto & fd : full.fds) {
            CHECK(satisfies(r, fd));
            for (auto x : fd.premise)
                CHECK_FALSE(satisfies(r, {fd.premise.without(x), fd.conclusion}));
        }

        auto ag = agree_sets(r);
        for (const auto & [a, gn] : concise.per_attribute_gn)
            for (const auto & cf : conditional_fds(r, a, gn, ag))
                CHECK(cf.holds_per_pair);
    }
}
