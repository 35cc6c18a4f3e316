#include <hypertrans/error.hpp>
#include <hypertrans/hypergraph.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ht {

auto VertexSet::to_string() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < _items.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(_items[i]);
    }
    return out;
}

auto MtSet::is_antichain() const -> bool
{
    for (std::size_t i = 0; i < _sets.size(); ++i)
        for (std::size_t j = 0; j < _sets.size(); ++j)
            if (i != j && _sets[i].is_subset_of(_sets[j]))
                return false;
    return true;
}

Hypergraph::Hypergraph(std::vector<VertexSet> edges) : _edges(std::move(edges))
{
    for (std::size_t i = 0; i < _edges.size(); ++i)
        if (_edges[i].empty())
            throw PreconditionError("edge " + std::to_string(i + 1) + " is empty");

    for (const auto & e : _edges)
        _vertices.insert(_vertices.end(), e.begin(), e.end());
    std::sort(_vertices.begin(), _vertices.end());
    _vertices.erase(std::unique(_vertices.begin(), _vertices.end()), _vertices.end());

    const auto n = _vertices.size();
    const auto m = _edges.size();
    _edge_bits.assign(m, Bitset(n));
    _extent_bits.assign(n, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (auto v : _edges[i]) {
            auto vi = *index_of(v);
            _edge_bits[i].set(vi);
            _extent_bits[vi].set(i);
        }
}

auto Hypergraph::index_of(Vertex v) const -> std::optional<std::size_t>
{
    auto it = std::lower_bound(_vertices.begin(), _vertices.end(), v);
    if (it == _vertices.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - _vertices.begin());
}

auto Hypergraph::require_index(Vertex v) const -> std::size_t
{
    auto i = index_of(v);
    if (! i)
        throw DomainError("unknown vertex " + std::to_string(v));
    return *i;
}

auto Hypergraph::to_bits(const VertexSet & s) const -> Bitset
{
    Bitset b(order());
    for (auto v : s)
        b.set(require_index(v));
    return b;
}

auto Hypergraph::to_labels(const Bitset & bits) const -> VertexSet
{
    std::vector<Vertex> out;
    bits.for_each([&](std::size_t i) { out.push_back(_vertices[i]); });
    return VertexSet(std::move(out));
}

namespace {
    auto covered_edges(const Hypergraph & h, const Bitset & x) -> Bitset
    {
        Bitset covered(h.edge_count());
        x.for_each([&](std::size_t v) { covered |= h.extent_bits(v); });
        return covered;
    }
}

auto support(const Hypergraph & h, const VertexSet & x) -> std::size_t
{
    return covered_edges(h, h.to_bits(x)).count();
}

auto extent(const Hypergraph & h, Vertex x) -> EdgeIndexSet
{
    return h.extent_bits(h.require_index(x)).indices();
}

auto is_traverse(const Hypergraph & h, const VertexSet & t) -> bool
{
    return support(h, t) == h.edge_count();
}

auto is_minimal_traverse(const Hypergraph & h, const VertexSet & t) -> bool
{
    const auto m = h.edge_count();
    if (support(h, t) != m)
        return false;
    for (auto x : t)
        if (support(h, t.without(x)) >= m)
            return false;
    return true;
}

auto is_minimal_traverse_crit(const Hypergraph & h, const VertexSet & t) -> bool
{
    auto bits = h.to_bits(t);
    std::vector<bool> has_crit(h.order(), false);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto hit = h.edge_bits(e) & bits;
        auto c = hit.count();
        if (c == 0)
            return false;
        if (c == 1)
            has_crit[hit.find_first()] = true;
    }
    bool ok = true;
    bits.for_each([&](std::size_t v) { ok = ok && has_crit[v]; });
    return ok;
}

auto is_simple(const Hypergraph & h) -> bool
{
    const auto m = h.edge_count();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && h.edge_bits(i).is_subset_of(h.edge_bits(j)))
                return false;
    return true;
}

auto min_reduce(const Hypergraph & h) -> Hypergraph
{
    const auto m = h.edge_count();
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < m; ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < m && ! drop; ++j) {
            if (i == j || ! h.edge_bits(j).is_subset_of(h.edge_bits(i)))
                continue;
            // e_j ⊆ e_i: drop e_i if the inclusion is strict, or if it is an
            // earlier duplicate of e_i
            drop = h.edge_bits(j) != h.edge_bits(i) || j < i;
        }
        if (! drop)
            kept.push_back(h.edge(i));
    }
    return Hypergraph(std::move(kept));
}

auto dual(const Hypergraph & h) -> Hypergraph
{
    std::vector<VertexSet> edges;
    edges.reserve(h.order());
    for (std::size_t v = 0; v < h.order(); ++v) {
        std::vector<Vertex> e;
        h.extent_bits(v).for_each([&](std::size_t i) { e.push_back(static_cast<Vertex>(i + 1)); });
        edges.emplace_back(std::move(e));
    }
    return Hypergraph(std::move(edges));
}

auto partial_hypergraph(const Hypergraph & h, std::span<const std::size_t> edge_indices) -> Hypergraph
{
    if (edge_indices.empty())
        throw DomainError("partial hypergraph needs at least one edge index");
    std::vector<VertexSet> edges;
    edges.reserve(edge_indices.size());
    for (auto i : edge_indices) {
        if (i >= h.edge_count())
            throw DomainError("edge index " + std::to_string(i) + " out of range");
        edges.push_back(h.edge(i));
    }
    return Hypergraph(std::move(edges));
}

auto profile(const Hypergraph & h) -> HypergraphProfile
{
    HypergraphProfile p;
    p.n = h.order();
    p.m = h.edge_count();
    if (p.m) {
        p.antirank = h.edge(0).size();
        for (const auto & e : h.edges()) {
            p.rank = std::max(p.rank, e.size());
            p.antirank = std::min(p.antirank, e.size());
        }
    }
    p.simple = is_simple(h);
    return p;
}

auto satisfies_sperner_bound(const Hypergraph & h) -> bool
{
    // C(n, n/2) in floating point; only the comparison matters and m is small
    // next to the point where doubles lose integer precision.
    const auto n = h.order();
    const auto k = n / 2;
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return static_cast<double>(h.edge_count()) <= std::round(c);
}

auto canonical_form(const Hypergraph & h) -> Hypergraph
{
    std::vector<VertexSet> edges;
    edges.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::vector<Vertex> e;
        h.edge_bits(i).for_each([&](std::size_t v) { e.push_back(static_cast<Vertex>(v + 1)); });
        edges.emplace_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph(std::move(edges));
}

} // namespace ht
