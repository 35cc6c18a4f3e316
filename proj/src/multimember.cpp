#include <hypertrans/error.hpp>
#include <hypertrans/multimember.hpp>
#include <hypertrans/mt_enum.hpp>
#include <hypertrans/transversality.hpp>

#include <algorithm>

namespace ht {

auto parse_tmm_mode(std::string_view name) -> std::optional<TmmMode>
{
    if (name == "m2d")
        return TmmMode::m2d;
    if (name == "om2d")
        return TmmMode::om2d;
    return std::nullopt;
}

auto recouvrement(const Hypergraph & h, const VertexSet & t) -> std::size_t
{
    std::size_t total = 0;
    for (auto x : t) {
        auto xi = h.require_index(x);
        h.extent_bits(xi).for_each([&](std::size_t e) { total += h.edge(e).size() - 1; });
    }
    return total;
}

namespace {
    auto essential_bits(const Hypergraph & h, const Bitset & x) -> bool
    {
        Bitset owns(h.order());
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            auto hit = h.edge_bits(e) & x;
            if (hit.count() == 1)
                owns |= hit;
        }
        return x.is_subset_of(owns);
    }

    auto smallest_by_m2d(const Hypergraph & h) -> std::vector<VertexSet>
    {
        const auto m = h.edge_count();
        std::vector<VertexSet> found;
        for (auto v : h.vertices())
            if (support(h, {v}) == m)
                found.push_back({v});
        if (! found.empty())
            return found;

        std::vector<VertexSet> level;
        for (auto v : h.vertices())
            level.push_back({v});

        while (! level.empty()) {
            std::vector<VertexSet> next;
            for (auto & z : apriori_gen(level)) {
                if (! essential_bits(h, h.to_bits(z)))
                    continue;
                if (support(h, z) == m)
                    found.push_back(z);
                next.push_back(std::move(z));
            }
            if (! found.empty())
                return found;
            level = std::move(next);
        }
        throw PreconditionError("no traverse found");
    }

    class SizedSearch
    {
        public:
            SizedSearch(const Hypergraph & h, std::size_t size) : _h(h), _size(size) {}

            auto run() -> std::vector<VertexSet>
            {
                Bitset uncov(_h.edge_count());
                uncov.set_all();
                Bitset x(_h.order());
                search(x, uncov, 0, 0);
                return std::move(_found);
            }

        private:
            auto search(Bitset & x, const Bitset & uncov, std::size_t chosen, std::size_t start) -> void
            {
                if (chosen == _size) {
                    if (uncov.none())
                        _found.push_back(_h.to_labels(x));
                    return;
                }
                const auto slots = _size - chosen;
                if (disjoint_edge_bound(_h, uncov) > slots)
                    return;

                for (std::size_t v = start; v + slots <= _h.order(); ++v) {
                    x.set(v);
                    if (essential_bits(_h, x)) {
                        auto next = uncov;
                        next.subtract(_h.extent_bits(v));
                        search(x, next, chosen + 1, v + 1);
                    }
                    x.reset(v);
                }
            }

            const Hypergraph & _h;
            std::size_t _size;
            std::vector<VertexSet> _found;
    };
}

auto is_essential(const Hypergraph & h, const VertexSet & x) -> bool
{
    return essential_bits(h, h.to_bits(x));
}

auto extract_tmm(const Hypergraph & h, TmmMode mode) -> TmmResult
{
    if (h.empty())
        throw PreconditionError("TMM extraction needs at least one edge");

    TmmResult r;
    if (mode == TmmMode::m2d)
        r.smallest_mts = MtSet(smallest_by_m2d(h));
    else
        r.smallest_mts = MtSet(SizedSearch(h, exact_tau(h)).run());
    r.tau = r.smallest_mts[0].size();

    std::size_t best = 0;
    for (const auto & t : r.smallest_mts) {
        auto c = recouvrement(h, t);
        r.coverage.emplace(t, c);
        best = std::max(best, c);
    }
    std::vector<VertexSet> top;
    for (const auto & [t, c] : r.coverage)
        if (c == best)
            top.push_back(t);
    r.tmms = MtSet(std::move(top));
    return r;
}

} // namespace ht
