#ifndef HYPERTRANS_TRANSVERSALITY_HPP
#define HYPERTRANS_TRANSVERSALITY_HPP

#include <hypertrans/hypergraph.hpp>

namespace ht {

struct GreedyResult
{
    std::size_t k = 0;
    VertexSet traverse;
};

struct TransversalityResult
{
    std::size_t greedy_k = 0;
    VertexSet greedy_traverse;
    std::size_t exact_tau = 0;
    bool tight = false;
};

/// Upper bound on tau. From every start vertex, repeatedly removes the edges
/// hit by each maximum-support vertex of the residual edges, branching over
/// all ties, and keeps the shortest run (first found on ties).
auto greedy_transversality(const Hypergraph & h) -> GreedyResult;

/// Size of a smallest traverse, by branch and bound seeded with the greedy.
auto exact_tau(const Hypergraph & h) -> std::size_t;

/// Lexicographically smallest traverse of size exact_tau(h).
auto min_traverse_witness(const Hypergraph & h) -> VertexSet;

auto transversality_report(const Hypergraph & h) -> TransversalityResult;

/// Number of pairwise disjoint edges picked greedily among `edges`; a lower
/// bound on the vertices needed to hit them all.
auto disjoint_edge_bound(const Hypergraph & h, const Bitset & edges) -> std::size_t;

} // namespace ht

#endif
