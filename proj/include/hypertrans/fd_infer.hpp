#ifndef HYPERTRANS_FD_INFER_HPP
#define HYPERTRANS_FD_INFER_HPP

#include <hypertrans/irredundant.hpp>
#include <hypertrans/mt_enum.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ht {

/// Attribute sets are VertexSets over 0-based header positions.
using AttrSet = VertexSet;

struct Relation
{
    std::vector<std::string> attributes;
    std::vector<std::vector<std::string>> tuples;

    auto arity() const -> std::size_t { return attributes.size(); }
    /// Throws DomainError for an unknown name.
    auto attribute_index(std::string_view name) const -> std::size_t;
    /// Names of the members, comma-joined in header order; "{}" when empty.
    auto format(const AttrSet & s) const -> std::string;
};

/// First row is the header. Fields are split on ',', with optional double
/// quotes ("" inside quotes is a literal quote). Throws ParseError on ragged
/// rows, duplicate or empty header names, or a missing header.
auto parse_relation(std::istream & in) -> Relation;

/// Agree set of each unordered tuple pair, with the pairs (0-based, i < j)
/// that produced it. The empty set is recorded like any other.
struct AgreeSetTable
{
    std::map<AttrSet, std::vector<std::pair<std::size_t, std::size_t>>> entries;
};

struct Fd
{
    AttrSet premise;
    std::size_t conclusion = 0;

    friend auto operator<=>(const Fd &, const Fd &) = default;
    friend auto operator==(const Fd &, const Fd &) -> bool = default;
};

struct FdCover
{
    /// Sorted, duplicate-free.
    std::vector<Fd> fds;
    /// Present for concise covers: groups of each attribute's hypergraph.
    std::map<std::size_t, GeneralizedNodes> per_attribute_gn;
    std::vector<std::string> diagnostics;
};

struct ConditionalFd
{
    std::size_t attribute = 0;
    Fd fd;
    /// r': tuples (0-based) of every pair that generated a max set of attribute.
    std::vector<std::size_t> tuples;
    /// Holds on every generating pair taken alone.
    bool holds_per_pair = false;
    /// Holds on r' taken as one relation.
    bool holds_on_union = false;
};

/// Throws DomainError with fewer than two tuples.
auto agree_sets(const Relation & r) -> AgreeSetTable;

/// Inclusion-maximal agree sets not containing a.
auto max_sets(const AgreeSetTable & ag, std::size_t a) -> std::vector<AttrSet>;

/// (R \ X) \ {a} for each X in maxs, sorted and deduplicated.
auto cmax_sets(const std::vector<AttrSet> & maxs, std::size_t a, std::size_t arity) -> std::vector<AttrSet>;

/// Min-reduced hypergraph whose edges are the cmax sets, or nullopt when one
/// of them is empty (nothing determines the attribute) or there are none.
auto attribute_hypergraph(const std::vector<AttrSet> & cmax) -> std::optional<Hypergraph>;

/// True when every pair of tuples agreeing on fd.premise agrees on the conclusion.
auto satisfies(const Relation & r, const Fd & fd) -> bool;

auto minimal_cover(const Relation & r, Backend backend = Backend::mmcs) -> FdCover;
auto concise_cover(const Relation & r, Backend backend = Backend::mmcs) -> FdCover;

/// Throws PreconditionError when the cover carries no groups.
auto expand_cover(const FdCover & concise) -> FdCover;

auto conditional_fds(const Relation & r, std::size_t a, const GeneralizedNodes & gn, const AgreeSetTable & ag)
        -> std::vector<ConditionalFd>;

/// "B,E -> A"
auto format_fd(const Relation & r, const Fd & fd) -> std::string;

} // namespace ht

#endif
