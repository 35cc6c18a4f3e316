#include <hypertrans/error.hpp>
#include <hypertrans/mt_enum.hpp>

#include <algorithm>
#include <unordered_set>

namespace ht {

auto backend_name(Backend b) -> std::string_view
{
    switch (b) {
        case Backend::berge: return "berge";
        case Backend::mtminer: return "mtminer";
        case Backend::mmcs: return "mmcs";
    }
    return "?";
}

auto parse_backend(std::string_view name) -> std::optional<Backend>
{
    if (name == "berge")
        return Backend::berge;
    if (name == "mtminer")
        return Backend::mtminer;
    if (name == "mmcs")
        return Backend::mmcs;
    return std::nullopt;
}

namespace {
    auto require_simple(const Hypergraph & h) -> void
    {
        if (! is_simple(h))
            throw PreconditionError("enumeration requires a simple hypergraph");
    }

    auto complement_of_extent(const Hypergraph & h, std::size_t v) -> Bitset
    {
        Bitset all(h.edge_count());
        all.set_all();
        return all.subtract(h.extent_bits(v));
    }

    auto berge(const Hypergraph & h, const MtSink & sink) -> std::size_t
    {
        const auto n = h.order();
        std::vector<Bitset> level{Bitset(n)};

        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            const auto & edge = h.edge_bits(e);
            std::vector<Bitset> next;
            std::unordered_set<Bitset, BitsetHash> seen;
            for (const auto & t : level) {
                if (t.intersects(edge)) {
                    if (seen.insert(t).second)
                        next.push_back(t);
                    continue;
                }
                edge.for_each([&](std::size_t x) {
                    auto u = t;
                    u.set(x);
                    if (seen.insert(u).second)
                        next.push_back(std::move(u));
                });
            }

            // Min: drop every set containing another one
            std::stable_sort(next.begin(), next.end(),
                    [](const Bitset & a, const Bitset & b) { return a.count() < b.count(); });
            level.clear();
            for (auto & t : next) {
                bool minimal = true;
                for (const auto & k : level)
                    if (k.is_subset_of(t)) {
                        minimal = false;
                        break;
                    }
                if (minimal)
                    level.push_back(std::move(t));
            }
        }

        for (const auto & t : level)
            sink(h.to_labels(t));
        return level.size();
    }

    struct Generator
    {
        std::vector<std::size_t> items;
        Bitset gh;
    };

    auto mtminer(const Hypergraph & h, const MtSink & sink) -> std::size_t
    {
        const auto m = h.edge_count();
        std::size_t emitted = 0;

        auto emit = [&](const std::vector<std::size_t> & items) {
            Bitset b(h.order());
            for (auto i : items)
                b.set(i);
            sink(h.to_labels(b));
            ++emitted;
        };

        std::vector<Generator> gens;
        for (std::size_t v = 0; v < h.order(); ++v) {
            auto g = complement_of_extent(h, v);
            auto c = g.count();
            if (c == 0)
                emit({v});
            else if (c < m)
                gens.push_back({{v}, std::move(g)});
            else
                throw PreconditionError("vertex belongs to no edge");
        }

        auto by_items = [](const Generator & a, const Generator & b) { return a.items < b.items; };

        while (! gens.empty()) {
            std::sort(gens.begin(), gens.end(), by_items);
            std::vector<Generator> next;

            auto find = [&](const std::vector<std::size_t> & items) -> const Generator * {
                Generator probe{items, {}};
                auto it = std::lower_bound(gens.begin(), gens.end(), probe, by_items);
                return (it != gens.end() && it->items == items) ? &*it : nullptr;
            };

            for (std::size_t i = 0; i < gens.size(); ++i) {
                for (std::size_t j = i + 1; j < gens.size(); ++j) {
                    const auto & a = gens[i].items;
                    const auto & b = gens[j].items;
                    if (! std::equal(a.begin(), a.end() - 1, b.begin()))
                        break;

                    std::vector<std::size_t> z = a;
                    z.push_back(b.back());
                    auto zgh = gens[i].gh & gens[j].gh;
                    auto zc = zgh.count();

                    bool keep = true;
                    std::vector<std::size_t> sub;
                    for (std::size_t drop = 0; drop < z.size() && keep; ++drop) {
                        sub.clear();
                        for (std::size_t p = 0; p < z.size(); ++p)
                            if (p != drop)
                                sub.push_back(z[p]);
                        auto g = find(sub);
                        keep = g && zc < g->gh.count();
                    }
                    if (! keep)
                        continue;

                    if (zc == 0)
                        emit(z);
                    else
                        next.push_back({std::move(z), std::move(zgh)});
                }
            }
            gens = std::move(next);
        }
        return emitted;
    }

    class Mmcs
    {
        public:
            Mmcs(const Hypergraph & h, const MtSink & sink) :
                _h(h), _sink(sink), _crit(h.order(), Bitset(h.edge_count()))
            {
            }

            auto run() -> std::size_t
            {
                Bitset cand(_h.order());
                cand.set_all();
                Bitset uncov(_h.edge_count());
                uncov.set_all();
                search(cand, uncov);
                return _emitted;
            }

        private:
            auto search(Bitset & cand, Bitset & uncov) -> void
            {
                if (uncov.none()) {
                    Bitset b(_h.order());
                    for (auto x : _x)
                        b.set(x);
                    _sink(_h.to_labels(b));
                    ++_emitted;
                    return;
                }

                std::size_t best_e = Bitset::npos, best_c = Bitset::npos;
                uncov.for_each([&](std::size_t e) {
                    auto c = _h.edge_bits(e).intersection_count(cand);
                    if (c < best_c) {
                        best_c = c;
                        best_e = e;
                    }
                });

                auto c = cand & _h.edge_bits(best_e);
                cand.subtract(c);

                c.for_each([&](std::size_t x) {
                    const auto & ext = _h.extent_bits(x);
                    auto saved_uncov = uncov;
                    std::vector<Bitset> saved_crit;
                    saved_crit.reserve(_x.size());
                    for (auto f : _x)
                        saved_crit.push_back(_crit[f]);

                    _crit[x] = ext & uncov;
                    bool ok = true;
                    for (auto f : _x) {
                        _crit[f].subtract(ext);
                        ok = ok && _crit[f].any();
                    }
                    uncov.subtract(ext);

                    if (ok) {
                        _x.push_back(x);
                        search(cand, uncov);
                        _x.pop_back();
                    }

                    uncov = std::move(saved_uncov);
                    for (std::size_t i = 0; i < _x.size(); ++i)
                        _crit[_x[i]] = std::move(saved_crit[i]);
                    cand.set(x);
                });
            }

            const Hypergraph & _h;
            const MtSink & _sink;
            std::vector<Bitset> _crit;
            std::vector<std::size_t> _x;
            std::size_t _emitted = 0;
    };
}

auto enumerate(const Hypergraph & h, Backend backend, const MtSink & sink) -> std::size_t
{
    require_simple(h);
    if (h.empty()) {
        sink(VertexSet{});
        return 1;
    }
    switch (backend) {
        case Backend::berge: return berge(h, sink);
        case Backend::mtminer: return mtminer(h, sink);
        case Backend::mmcs: return Mmcs(h, sink).run();
    }
    return 0;
}

auto enumerate(const Hypergraph & h, Backend backend) -> MtSet
{
    std::vector<VertexSet> out;
    enumerate(h, backend, [&](const VertexSet & t) { out.push_back(t); });
    return MtSet(std::move(out));
}

auto enumerate_berge(const Hypergraph & h) -> MtSet { return enumerate(h, Backend::berge); }
auto enumerate_mtminer(const Hypergraph & h) -> MtSet { return enumerate(h, Backend::mtminer); }
auto enumerate_mmcs(const Hypergraph & h) -> MtSet { return enumerate(h, Backend::mmcs); }

auto gh(const Hypergraph & h, const VertexSet & x) -> EdgeIndexSet
{
    auto bits = h.to_bits(x);
    EdgeIndexSet out;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (! h.edge_bits(e).intersects(bits))
            out.push_back(e);
    return out;
}

auto apriori_gen(std::span<const VertexSet> level) -> std::vector<VertexSet>
{
    if (level.empty())
        return {};
    const auto k = level.front().size();
    for (const auto & s : level)
        if (s.size() != k)
            throw DomainError("apriori_gen needs sets of one size");
    if (k == 0)
        throw DomainError("apriori_gen needs non-empty sets");

    std::vector<VertexSet> sorted(level.begin(), level.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const auto & a = sorted[i].values();
            const auto & b = sorted[j].values();
            if (! std::equal(a.begin(), a.end() - 1, b.begin()))
                break;
            auto z = sorted[i].with(b.back());
            bool keep = true;
            for (auto x : z)
                if (! std::binary_search(sorted.begin(), sorted.end(), z.without(x))) {
                    keep = false;
                    break;
                }
            if (keep)
                out.push_back(std::move(z));
        }
    return out;
}

auto crit_state(const Hypergraph & h, const VertexSet & x) -> CritState
{
    auto bits = h.to_bits(x);
    CritState s;
    for (auto v : x)
        s.crit[v];
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto hit = h.edge_bits(e) & bits;
        auto c = hit.count();
        if (c == 0)
            s.uncov.push_back(e);
        else if (c == 1)
            s.crit[h.label(hit.find_first())].push_back(e);
    }
    std::vector<Vertex> cand;
    for (auto v : h.vertices())
        if (! x.contains(v))
            cand.push_back(v);
    s.cand = VertexSet(std::move(cand));
    return s;
}

} // namespace ht
