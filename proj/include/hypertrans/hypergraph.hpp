#ifndef HYPERTRANS_HYPERGRAPH_HPP
#define HYPERTRANS_HYPERGRAPH_HPP

#include <hypertrans/bitset.hpp>
#include <hypertrans/vertex_set.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ht {

/// Sorted set of 0-based edge indices.
using EdgeIndexSet = std::vector<std::size_t>;

/**
 * A hypergraph: a sequence of non-empty edges over vertex labels. The vertex
 * set is the union of the edges, so no vertex is isolated.
 *
 * Labels are mapped to dense indices 0..n-1 in ascending label order. The
 * incidence matrix is kept both ways, as one bitset per edge (over vertex
 * indices) and one per vertex (its extent, over edge indices).
 *
 * Duplicate edges are allowed; min_reduce() removes them.
 */
class Hypergraph
{
    public:
        Hypergraph() = default;

        /// Throws PreconditionError if any edge is empty.
        explicit Hypergraph(std::vector<VertexSet> edges);

        auto vertices() const -> const std::vector<Vertex> & { return _vertices; }
        auto edges() const -> const std::vector<VertexSet> & { return _edges; }
        auto edge(std::size_t i) const -> const VertexSet & { return _edges[i]; }

        /// n
        auto order() const -> std::size_t { return _vertices.size(); }
        /// m
        auto edge_count() const -> std::size_t { return _edges.size(); }
        auto empty() const -> bool { return _edges.empty(); }

        auto index_of(Vertex v) const -> std::optional<std::size_t>;
        /// Throws DomainError for an unknown label.
        auto require_index(Vertex v) const -> std::size_t;
        auto label(std::size_t index) const -> Vertex { return _vertices[index]; }

        /// Edge i as a bitset over vertex indices.
        auto edge_bits(std::size_t i) const -> const Bitset & { return _edge_bits[i]; }
        /// Extent of vertex index v as a bitset over edge indices.
        auto extent_bits(std::size_t v) const -> const Bitset & { return _extent_bits[v]; }

        /// Throws DomainError if a label is unknown.
        auto to_bits(const VertexSet & s) const -> Bitset;
        auto to_labels(const Bitset & bits) const -> VertexSet;

        friend auto operator==(const Hypergraph & a, const Hypergraph & b) -> bool
        {
            return a._edges == b._edges;
        }

    private:
        std::vector<Vertex> _vertices;
        std::vector<VertexSet> _edges;
        std::vector<Bitset> _edge_bits;
        std::vector<Bitset> _extent_bits;
};

struct HypergraphProfile
{
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t rank = 0;
    std::size_t antirank = 0;
    bool simple = true;

    friend auto operator==(const HypergraphProfile &, const HypergraphProfile &) -> bool = default;
};

/// Number of edges meeting x.
auto support(const Hypergraph & h, const VertexSet & x) -> std::size_t;

/// Indices of the edges containing x.
auto extent(const Hypergraph & h, Vertex x) -> EdgeIndexSet;

auto is_traverse(const Hypergraph & h, const VertexSet & t) -> bool;

/// Support characterisation: support(t) = m and every direct subset loses support.
auto is_minimal_traverse(const Hypergraph & h, const VertexSet & t) -> bool;

/// Critical-edge characterisation: t hits every edge and each x in t owns an
/// edge e with t ∩ e = {x}.
auto is_minimal_traverse_crit(const Hypergraph & h, const VertexSet & t) -> bool;

auto is_simple(const Hypergraph & h) -> bool;

/// Drops duplicate edges and every edge containing another one. The first
/// occurrence of each surviving edge keeps its relative order.
auto min_reduce(const Hypergraph & h) -> Hypergraph;

/// Transpose of the incidence matrix. Vertices of the result are the 1-based
/// edge indices of h; one edge per vertex of h, in ascending label order.
auto dual(const Hypergraph & h) -> Hypergraph;

/// Restriction to the given edge indices. Throws DomainError on an empty or
/// out-of-range index set.
auto partial_hypergraph(const Hypergraph & h, std::span<const std::size_t> edge_indices) -> Hypergraph;

auto profile(const Hypergraph & h) -> HypergraphProfile;

/// Sperner bound m <= C(n, floor(n/2)), which every simple hypergraph obeys.
auto satisfies_sperner_bound(const Hypergraph & h) -> bool;

/// Relabels vertices to 1..n by ascending label rank and sorts the edge list.
/// Two hypergraphs with the same incidence structure up to an order-preserving
/// relabeling and edge permutation compare equal after this.
auto canonical_form(const Hypergraph & h) -> Hypergraph;

} // namespace ht

#endif
