#ifndef HYPERTRANS_TESTS_ORACLE_HPP
#define HYPERTRANS_TESTS_ORACLE_HPP

// Brute-force references that share no code with the library beyond the
// value types used to report results.

#include <hypertrans/fd_infer.hpp>
#include <hypertrans/hypergraph.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Masks
{
    std::vector<ht::Vertex> labels;
    std::vector<std::uint32_t> edges;
};

inline auto to_masks(const ht::Hypergraph & h) -> Masks
{
    Masks m;
    for (const auto & e : h.edges())
        for (auto v : e)
            if (std::find(m.labels.begin(), m.labels.end(), v) == m.labels.end())
                m.labels.push_back(v);
    std::sort(m.labels.begin(), m.labels.end());
    if (m.labels.size() > 22)
        throw std::invalid_argument("oracle limited to 22 vertices");
    for (const auto & e : h.edges()) {
        std::uint32_t mask = 0;
        for (auto v : e)
            mask |= 1u << (std::find(m.labels.begin(), m.labels.end(), v) - m.labels.begin());
        m.edges.push_back(mask);
    }
    return m;
}

inline auto hits_all(const std::vector<std::uint32_t> & edges, std::uint32_t s) -> bool
{
    for (auto e : edges)
        if (! (e & s))
            return false;
    return true;
}

inline auto to_set(const Masks & m, std::uint32_t s) -> ht::VertexSet
{
    std::vector<ht::Vertex> v;
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        if (s >> i & 1u)
            v.push_back(m.labels[i]);
    return ht::VertexSet(std::move(v));
}

/// Every minimal hitting set, by testing all subsets.
inline auto minimal_transversals(const ht::Hypergraph & h) -> ht::MtSet
{
    auto m = to_masks(h);
    const std::uint32_t limit = 1u << m.labels.size();
    std::vector<ht::VertexSet> out;
    for (std::uint32_t s = 0; s < limit; ++s) {
        if (! hits_all(m.edges, s))
            continue;
        bool minimal = true;
        for (std::uint32_t r = s; r && minimal; r &= r - 1)
            if (hits_all(m.edges, s & ~(r & -r)))
                minimal = false;
        if (minimal)
            out.push_back(to_set(m, s));
    }
    return ht::MtSet(std::move(out));
}

/// Size of a smallest hitting set.
inline auto tau(const ht::Hypergraph & h) -> std::size_t
{
    auto m = to_masks(h);
    std::size_t best = m.labels.size();
    const std::uint32_t limit = 1u << m.labels.size();
    for (std::uint32_t s = 0; s < limit; ++s)
        if (static_cast<std::size_t>(__builtin_popcount(s)) < best && hits_all(m.edges, s))
            best = static_cast<std::size_t>(__builtin_popcount(s));
    return best;
}

/// Does premise (bitmask over columns) determine column a on r?
inline auto determines(const ht::Relation & r, std::uint32_t premise, std::size_t a) -> bool
{
    for (std::size_t i = 0; i < r.tuples.size(); ++i)
        for (std::size_t j = i + 1; j < r.tuples.size(); ++j) {
            bool agree = true;
            for (std::size_t b = 0; b < r.arity() && agree; ++b)
                if ((premise >> b & 1u) && r.tuples[i][b] != r.tuples[j][b])
                    agree = false;
            if (agree && r.tuples[i][a] != r.tuples[j][a])
                return false;
        }
    return true;
}

/// Minimal premises X (a not in X) with X -> a, by testing all subsets.
inline auto minimal_premises(const ht::Relation & r, std::size_t a) -> std::vector<ht::AttrSet>
{
    const std::uint32_t limit = 1u << r.arity();
    std::vector<std::uint32_t> found;
    for (std::uint32_t s = 0; s < limit; ++s) {
        if (s >> a & 1u || ! determines(r, s, a))
            continue;
        bool minimal = true;
        for (std::uint32_t q = s; q && minimal; q &= q - 1)
            if (determines(r, s & ~(q & -q), a))
                minimal = false;
        if (minimal)
            found.push_back(s);
    }
    std::vector<ht::AttrSet> out;
    for (auto s : found) {
        std::vector<ht::Vertex> v;
        for (std::size_t b = 0; b < r.arity(); ++b)
            if (s >> b & 1u)
                v.push_back(b);
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle

#endif
