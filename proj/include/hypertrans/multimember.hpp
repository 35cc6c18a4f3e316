#ifndef HYPERTRANS_MULTIMEMBER_HPP
#define HYPERTRANS_MULTIMEMBER_HPP

#include <hypertrans/hypergraph.hpp>

#include <map>
#include <optional>
#include <string_view>

namespace ht {

enum class TmmMode
{
    m2d,
    om2d
};

auto parse_tmm_mode(std::string_view name) -> std::optional<TmmMode>;

struct TmmResult
{
    std::size_t tau = 0;
    MtSet smallest_mts;
    std::map<VertexSet, std::size_t> coverage;
    MtSet tmms;

    friend auto operator==(const TmmResult &, const TmmResult &) -> bool = default;
};

/// Sum over x in t of sum over edges e containing x of (|e| - 1).
auto recouvrement(const Hypergraph & h, const VertexSet & t) -> std::size_t;

/// True when every member of x owns an edge that x meets only there.
auto is_essential(const Hypergraph & h, const VertexSet & x) -> bool;

/// Smallest minimal traverses and those of maximal coverage among them.
/// m2d sweeps essential sets level by level; om2d goes straight to level tau.
/// h need not be simple: the traverses are those of min_reduce(h), but the
/// coverage counts every edge of h.
auto extract_tmm(const Hypergraph & h, TmmMode mode) -> TmmResult;

} // namespace ht

#endif
