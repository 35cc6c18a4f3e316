#ifndef HYPERTRANS_TESTS_FIXTURES_HPP
#define HYPERTRANS_TESTS_FIXTURES_HPP

#include <hypertrans/fd_infer.hpp>
#include <hypertrans/genbench.hpp>
#include <hypertrans/hypergraph.hpp>
#include <hypertrans/io.hpp>

#include <sstream>

namespace fixtures {

inline auto chain() -> ht::Hypergraph { return ht::parse_hypergraph("1 2\n2 3 4\n3 4 5 6 7\n7 8 9\n"); }

inline auto hub() -> ht::Hypergraph { return ht::parse_hypergraph("1 2\n2 3 7\n3 4 5\n4 6\n6 7 8\n7\n"); }

inline auto hub_open() -> ht::Hypergraph { return ht::parse_hypergraph("1 2\n2 3 7\n3 4 5\n4 6\n6 7 8\n7 9\n"); }

inline auto clone_example() -> ht::Hypergraph
{
    return ht::parse_hypergraph("1 3 4\n1 3 5\n1 4 5\n3 4 5\n2 3 4\n2 4 5\n");
}

inline auto chain_mts() -> ht::MtSet
{
    return {{2, 7}, {1, 3, 7}, {1, 4, 7}, {1, 3, 8}, {1, 4, 8}, {1, 3, 9}, {1, 4, 9}, {2, 3, 8}, {2, 4, 8},
        {2, 3, 9}, {2, 4, 9}, {2, 5, 8}, {2, 5, 9}, {2, 6, 8}, {2, 6, 9}};
}

inline auto hub_mts() -> ht::MtSet
{
    return {{1, 4, 7}, {2, 4, 7}, {1, 3, 6, 7}, {1, 5, 6, 7}, {2, 3, 6, 7}, {2, 5, 6, 7}};
}

inline constexpr const char * rel_csv = "A,B,C,D,E\n"
                                        "1,100,1,2,50\n"
                                        "4,101,1,2,50\n"
                                        "1,102,2,2,70\n"
                                        "1,200,1,2,50\n"
                                        "2,101,3,3,100\n"
                                        "2,200,1,3,70\n"
                                        "1,100,3,2,50\n";

inline auto rel() -> ht::Relation
{
    std::istringstream in(rel_csv);
    return ht::parse_relation(in);
}

/// Attribute set of rel from a string of names such as "CDE".
inline auto attrs(std::string_view names) -> ht::AttrSet
{
    std::vector<ht::Vertex> v;
    for (char c : names)
        v.push_back(static_cast<ht::Vertex>(c - 'A'));
    return ht::AttrSet(std::move(v));
}

/// Simple random instance for seed s: n in 5..20, m in 3..15, p in [0.1, 0.4].
inline auto random_simple(std::uint64_t s, std::size_t max_n = 20, std::size_t max_m = 15) -> ht::Hypergraph
{
    ht::RandomSpec spec;
    spec.n = 5 + s % (max_n - 4);
    spec.m = 3 + (s / 7) % (max_m - 2);
    spec.p_l = 0.1;
    spec.p_u = 0.4;
    spec.seed = s;
    return ht::min_reduce(ht::gen_random(spec));
}

} // namespace fixtures

#endif
