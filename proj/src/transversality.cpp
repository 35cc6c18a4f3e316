#include <hypertrans/error.hpp>
#include <hypertrans/transversality.hpp>

#include <limits>
#include <unordered_map>

namespace ht {

auto disjoint_edge_bound(const Hypergraph & h, const Bitset & edges) -> std::size_t
{
    Bitset used(h.order());
    std::size_t count = 0;
    edges.for_each([&](std::size_t e) {
        if (! h.edge_bits(e).intersects(used)) {
            used |= h.edge_bits(e);
            ++count;
        }
    });
    return count;
}

namespace {
    auto require_non_empty(const Hypergraph & h) -> void
    {
        if (h.empty())
            throw PreconditionError("transversality needs at least one edge");
    }

    auto all_edges(const Hypergraph & h) -> Bitset
    {
        Bitset b(h.edge_count());
        b.set_all();
        return b;
    }

    class Greedy
    {
        public:
            explicit Greedy(const Hypergraph & h) : _h(h) {}

            auto run() -> GreedyResult
            {
                for (std::size_t x = 0; x < _h.order(); ++x) {
                    auto residual = all_edges(_h);
                    residual.subtract(_h.extent_bits(x));
                    _path.assign(1, x);
                    hyp_empty(residual);
                }
                Bitset t(_h.order());
                for (auto v : _best_path)
                    t.set(v);
                return {_best, _h.to_labels(t)};
            }

        private:
            auto hyp_empty(const Bitset & residual) -> void
            {
                const auto depth = _path.size();
                if (residual.none()) {
                    if (depth < _best) {
                        _best = depth;
                        _best_path = _path;
                    }
                    return;
                }
                // A residual already reached at no greater depth cannot yield
                // a strictly better run, nor can one whose bound reaches best.
                auto [it, fresh] = _seen.try_emplace(residual, depth);
                if (! fresh) {
                    if (it->second <= depth)
                        return;
                    it->second = depth;
                }
                if (depth + disjoint_edge_bound(_h, residual) >= _best)
                    return;

                std::size_t max_support = 0;
                std::vector<std::size_t> support(_h.order(), 0);
                for (std::size_t v = 0; v < _h.order(); ++v) {
                    support[v] = _h.extent_bits(v).intersection_count(residual);
                    max_support = std::max(max_support, support[v]);
                }
                for (std::size_t v = 0; v < _h.order(); ++v) {
                    if (support[v] != max_support)
                        continue;
                    auto next = residual;
                    next.subtract(_h.extent_bits(v));
                    _path.push_back(v);
                    hyp_empty(next);
                    _path.pop_back();
                }
            }

            const Hypergraph & _h;
            std::size_t _best = std::numeric_limits<std::size_t>::max();
            std::vector<std::size_t> _path, _best_path;
            std::unordered_map<Bitset, std::size_t, BitsetHash> _seen;
    };

    class ExactSearch
    {
        public:
            ExactSearch(const Hypergraph & h, std::size_t upper) : _h(h), _best(upper) {}

            auto run() -> std::size_t
            {
                search(all_edges(_h), 0);
                return _best;
            }

        private:
            auto search(const Bitset & uncov, std::size_t depth) -> void
            {
                if (uncov.none()) {
                    _best = std::min(_best, depth);
                    return;
                }
                if (depth + disjoint_edge_bound(_h, uncov) >= _best)
                    return;

                std::size_t pick = Bitset::npos, pick_size = Bitset::npos;
                uncov.for_each([&](std::size_t e) {
                    auto s = _h.edge(e).size();
                    if (s < pick_size) {
                        pick_size = s;
                        pick = e;
                    }
                });
                _h.edge_bits(pick).for_each([&](std::size_t v) {
                    auto next = uncov;
                    next.subtract(_h.extent_bits(v));
                    search(next, depth + 1);
                });
            }

            const Hypergraph & _h;
            std::size_t _best;
    };

    class WitnessSearch
    {
        public:
            WitnessSearch(const Hypergraph & h, std::size_t tau) : _h(h), _tau(tau) {}

            auto run() -> std::vector<std::size_t>
            {
                search(all_edges(_h), 0);
                return _found;
            }

        private:
            auto search(const Bitset & uncov, std::size_t start) -> bool
            {
                if (uncov.none()) {
                    _found = _chosen;
                    return true;
                }
                const auto slots = _tau - _chosen.size();
                if (slots == 0 || disjoint_edge_bound(_h, uncov) > slots)
                    return false;

                Bitset available(_h.order());
                for (std::size_t v = start; v < _h.order(); ++v)
                    available.set(v);
                bool feasible = true;
                uncov.for_each([&](std::size_t e) { feasible = feasible && _h.edge_bits(e).intersects(available); });
                if (! feasible)
                    return false;

                for (std::size_t v = start; v < _h.order(); ++v) {
                    if (! _h.extent_bits(v).intersects(uncov))
                        continue;
                    auto next = uncov;
                    next.subtract(_h.extent_bits(v));
                    _chosen.push_back(v);
                    if (search(next, v + 1))
                        return true;
                    _chosen.pop_back();
                }
                return false;
            }

            const Hypergraph & _h;
            std::size_t _tau;
            std::vector<std::size_t> _chosen, _found;
    };
}

auto greedy_transversality(const Hypergraph & h) -> GreedyResult
{
    require_non_empty(h);
    return Greedy(h).run();
}

auto exact_tau(const Hypergraph & h) -> std::size_t
{
    require_non_empty(h);
    return ExactSearch(h, greedy_transversality(h).k).run();
}

auto min_traverse_witness(const Hypergraph & h) -> VertexSet
{
    auto found = WitnessSearch(h, exact_tau(h)).run();
    Bitset b(h.order());
    for (auto v : found)
        b.set(v);
    return h.to_labels(b);
}

auto transversality_report(const Hypergraph & h) -> TransversalityResult
{
    TransversalityResult r;
    auto g = greedy_transversality(h);
    r.greedy_k = g.k;
    r.greedy_traverse = std::move(g.traverse);
    r.exact_tau = ExactSearch(h, r.greedy_k).run();
    r.tight = r.greedy_k == r.exact_tau;
    return r;
}

} // namespace ht
