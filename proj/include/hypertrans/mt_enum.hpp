#ifndef HYPERTRANS_MT_ENUM_HPP
#define HYPERTRANS_MT_ENUM_HPP

#include <hypertrans/hypergraph.hpp>
#include <hypertrans/vertex_set.hpp>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>

namespace ht {

enum class Backend
{
    berge,
    mtminer,
    mmcs
};

auto backend_name(Backend b) -> std::string_view;
auto parse_backend(std::string_view name) -> std::optional<Backend>;

/// Receives each minimal traverse once, in discovery order.
using MtSink = std::function<void(const VertexSet &)>;

/**
 * Streams every minimal traverse of h to sink and returns how many were
 * emitted. All backends require a simple hypergraph and throw
 * PreconditionError otherwise.
 *
 * Only mmcs streams as it searches; berge and mtminer keep their per-level
 * state and emit once a traverse is known to be minimal.
 */
auto enumerate(const Hypergraph & h, Backend backend, const MtSink & sink) -> std::size_t;
auto enumerate(const Hypergraph & h, Backend backend) -> MtSet;

auto enumerate_berge(const Hypergraph & h) -> MtSet;
auto enumerate_mtminer(const Hypergraph & h) -> MtSet;
auto enumerate_mmcs(const Hypergraph & h) -> MtSet;

/// Edges disjoint from x.
auto gh(const Hypergraph & h, const VertexSet & x) -> EdgeIndexSet;

/// Joins k-sets sharing their first k-1 members, keeping a candidate only
/// when all of its k-subsets are in level. Throws DomainError on mixed sizes.
auto apriori_gen(std::span<const VertexSet> level) -> std::vector<VertexSet>;

/// Search state of mmcs for a partial solution x.
struct CritState
{
    EdgeIndexSet uncov;
    VertexSet cand;
    std::map<Vertex, EdgeIndexSet> crit;
};

/// uncov and crit for x; cand is every vertex outside x.
auto crit_state(const Hypergraph & h, const VertexSet & x) -> CritState;

} // namespace ht

#endif
