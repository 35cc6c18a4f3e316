#ifndef HYPERTRANS_LOCALGEN_HPP
#define HYPERTRANS_LOCALGEN_HPP

#include <hypertrans/hypergraph.hpp>
#include <hypertrans/mt_enum.hpp>

#include <cstdint>

namespace ht {

/**
 * Split of the edges of h along a smallest minimal traverse. The pivot is
 * ordered by decreasing support (ties by ascending label); part i takes the
 * not yet assigned edges containing pivot vertex i.
 */
struct Decomposition
{
    std::vector<Vertex> pivot_mt;
    std::vector<Hypergraph> parts;
    std::vector<EdgeIndexSet> part_edge_indices;
};

struct LocalStats
{
    /// Complete unions reached, before deduplication.
    std::uint64_t unions_total = 0;
    /// Distinct unions of size tau, accepted as is.
    std::uint64_t accepted_without_test = 0;
    /// Distinct larger unions checked for minimality.
    std::uint64_t tested = 0;
    /// Partial unions cut because one of their vertices lost every private edge.
    std::uint64_t pruned_partial = 0;
};

struct LocalResult
{
    MtSet mts;
    LocalStats stats;
    /// Unions accepted without a test; filled only on request.
    std::vector<VertexSet> untested;
};

/// Throws DomainError unless pivot is a traverse of size exact_tau(h).
auto decompose(const Hypergraph & h, const VertexSet & pivot) -> Decomposition;

/// Throws DomainError when local_mts.size() != tau.
auto combine_local(const Hypergraph & h, const std::vector<MtSet> & local_mts, std::size_t tau,
        bool record_untested = false) -> LocalResult;

auto enumerate_local(const Hypergraph & h, Backend backend = Backend::mmcs) -> MtSet;

/// Full pipeline with statistics, optionally on a caller-chosen pivot.
auto enumerate_local_detailed(const Hypergraph & h, Backend backend, const VertexSet * pivot = nullptr,
        bool record_untested = false) -> LocalResult;

} // namespace ht

#endif
