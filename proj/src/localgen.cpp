#include <hypertrans/error.hpp>
#include <hypertrans/localgen.hpp>
#include <hypertrans/transversality.hpp>

#include <algorithm>
#include <unordered_set>

namespace ht {

auto decompose(const Hypergraph & h, const VertexSet & pivot) -> Decomposition
{
    if (! is_traverse(h, pivot))
        throw DomainError("pivot is not a traverse");
    if (pivot.size() != exact_tau(h))
        throw DomainError("pivot size differs from the transversality number");

    Decomposition d;
    d.pivot_mt = pivot.values();
    std::stable_sort(d.pivot_mt.begin(), d.pivot_mt.end(), [&](Vertex a, Vertex b) {
        return support(h, {a}) > support(h, {b});
    });

    Bitset assigned(h.edge_count());
    for (auto x : d.pivot_mt) {
        auto part = h.extent_bits(h.require_index(x));
        part.subtract(assigned);
        assigned |= part;
        auto idx = part.indices();
        d.parts.push_back(partial_hypergraph(h, idx));
        d.part_edge_indices.push_back(std::move(idx));
    }
    return d;
}

namespace {
    class Combiner
    {
        public:
            Combiner(const Hypergraph & h, const std::vector<MtSet> & local, std::size_t tau, bool record) :
                _h(h), _tau(tau), _record(record)
            {
                for (const auto & mts : local) {
                    std::vector<Bitset> bits;
                    for (const auto & t : mts)
                        bits.push_back(h.to_bits(t));
                    _local.push_back(std::move(bits));
                }
            }

            auto run() -> LocalResult
            {
                Bitset u(_h.order());
                step(0, u);
                std::vector<VertexSet> out;
                for (const auto & b : _accepted)
                    out.push_back(_h.to_labels(b));
                _result.mts = MtSet(std::move(out));
                return std::move(_result);
            }

        private:
            // every vertex of u owns an edge that u meets only there
            auto keeps_private_edges(const Bitset & u) const -> bool
            {
                Bitset owns(_h.order());
                for (std::size_t e = 0; e < _h.edge_count(); ++e) {
                    auto hit = _h.edge_bits(e) & u;
                    if (hit.count() == 1)
                        owns |= hit;
                }
                return u.is_subset_of(owns);
            }

            auto step(std::size_t part, const Bitset & u) -> void
            {
                if (part == _local.size()) {
                    ++_result.stats.unions_total;
                    if (! _seen.insert(u).second)
                        return;
                    if (u.count() == _tau) {
                        ++_result.stats.accepted_without_test;
                        if (_record)
                            _result.untested.push_back(_h.to_labels(u));
                        _accepted.push_back(u);
                        return;
                    }
                    ++_result.stats.tested;
                    if (keeps_private_edges(u))
                        _accepted.push_back(u);
                    return;
                }

                for (const auto & t : _local[part]) {
                    auto next = u | t;
                    if (part + 1 < _local.size() && ! keeps_private_edges(next)) {
                        ++_result.stats.pruned_partial;
                        continue;
                    }
                    step(part + 1, next);
                }
            }

            const Hypergraph & _h;
            std::size_t _tau;
            bool _record;
            std::vector<std::vector<Bitset>> _local;
            std::unordered_set<Bitset, BitsetHash> _seen;
            std::vector<Bitset> _accepted;
            LocalResult _result;
    };
}

auto combine_local(const Hypergraph & h, const std::vector<MtSet> & local_mts, std::size_t tau,
        bool record_untested) -> LocalResult
{
    if (local_mts.size() != tau)
        throw DomainError("expected one local MT set per part");
    return Combiner(h, local_mts, tau, record_untested).run();
}

auto enumerate_local_detailed(const Hypergraph & h, Backend backend, const VertexSet * pivot,
        bool record_untested) -> LocalResult
{
    if (! is_simple(h))
        throw PreconditionError("enumeration requires a simple hypergraph");
    auto p = pivot ? *pivot : min_traverse_witness(h);
    auto d = decompose(h, p);
    std::vector<MtSet> local;
    for (const auto & part : d.parts)
        local.push_back(enumerate(part, backend));
    return combine_local(h, local, d.parts.size(), record_untested);
}

auto enumerate_local(const Hypergraph & h, Backend backend) -> MtSet
{
    return enumerate_local_detailed(h, backend).mts;
}

} // namespace ht
