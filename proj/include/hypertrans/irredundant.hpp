#ifndef HYPERTRANS_IRREDUNDANT_HPP
#define HYPERTRANS_IRREDUNDANT_HPP

#include <hypertrans/hypergraph.hpp>
#include <hypertrans/mt_enum.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace ht {

struct NodeGroup
{
    Vertex representative = 0;
    VertexSet members;
    /// Empty when the groups were read from a file.
    EdgeIndexSet extent;

    friend auto operator==(const NodeGroup &, const NodeGroup &) -> bool = default;
};

/// Partition of the vertices into groups of equal extent, ordered by
/// representative. The representative is the smallest member.
struct GeneralizedNodes
{
    std::vector<NodeGroup> groups;

    /// Group holding v, or nullptr.
    auto group_of(Vertex v) const -> const NodeGroup *;
    auto representatives() const -> VertexSet;

    friend auto operator==(const GeneralizedNodes &, const GeneralizedNodes &) -> bool = default;
};

struct ImtResult
{
    GeneralizedNodes generalized;
    Hypergraph irredundant_h;
    MtSet irredundant_mts;
    std::optional<double> compaction;
};

auto search_substitution(const Hypergraph & h) -> GeneralizedNodes;

/// Edge i becomes e_i restricted to the representatives. Throws
/// PreconditionError if gn does not describe h.
auto build_irredundant(const Hypergraph & h, const GeneralizedNodes & gn) -> Hypergraph;

auto imt_extract(const Hypergraph & h, Backend backend = Backend::mmcs) -> ImtResult;

/// Replaces each representative by every member of its group. Throws
/// DomainError on a vertex that is not a representative.
auto expand_mts(const MtSet & irredundant_mts, const GeneralizedNodes & gn) -> MtSet;

/// Size of the expansion without building it: sum over T of the product of
/// the sizes of the groups T touches.
auto expansion_count(const MtSet & irredundant_mts, const GeneralizedNodes & gn) -> std::uint64_t;

/// (full - irredundant) / full. Throws DomainError unless
/// 0 < irredundant <= full.
auto compaction_rate(std::uint64_t full_count, std::uint64_t irredundant_count) -> double;

/// "rep: m1 m2 ..." per group; members include the representative.
auto write_generalized_nodes(std::ostream & out, const GeneralizedNodes & gn) -> void;
auto parse_generalized_nodes(std::istream & in) -> GeneralizedNodes;

} // namespace ht

#endif
