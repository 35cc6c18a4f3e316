#ifndef HYPERTRANS_VERTEX_SET_HPP
#define HYPERTRANS_VERTEX_SET_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ht {

/// Vertex labels are arbitrary non-negative integers.
using Vertex = std::uint64_t;

/// Sorted, duplicate-free set of vertex labels.
class VertexSet
{
    public:
        using const_iterator = std::vector<Vertex>::const_iterator;

        VertexSet() = default;

        VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

        explicit VertexSet(std::vector<Vertex> vs) : _items(std::move(vs))
        {
            std::sort(_items.begin(), _items.end());
            _items.erase(std::unique(_items.begin(), _items.end()), _items.end());
        }

        auto size() const -> std::size_t { return _items.size(); }
        auto empty() const -> bool { return _items.empty(); }
        auto begin() const -> const_iterator { return _items.begin(); }
        auto end() const -> const_iterator { return _items.end(); }
        auto front() const -> Vertex { return _items.front(); }
        auto operator[](std::size_t i) const -> Vertex { return _items[i]; }
        auto values() const -> const std::vector<Vertex> & { return _items; }

        auto contains(Vertex v) const -> bool
        {
            return std::binary_search(_items.begin(), _items.end(), v);
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            return std::includes(other._items.begin(), other._items.end(), _items.begin(), _items.end());
        }

        auto without(Vertex v) const -> VertexSet
        {
            VertexSet r;
            r._items.reserve(_items.size());
            for (auto x : _items)
                if (x != v)
                    r._items.push_back(x);
            return r;
        }

        auto with(Vertex v) const -> VertexSet
        {
            VertexSet r = *this;
            auto it = std::lower_bound(r._items.begin(), r._items.end(), v);
            if (it == r._items.end() || *it != v)
                r._items.insert(it, v);
            return r;
        }

        auto united(const VertexSet & other) const -> VertexSet
        {
            VertexSet r;
            r._items.reserve(_items.size() + other._items.size());
            std::set_union(_items.begin(), _items.end(), other._items.begin(), other._items.end(),
                    std::back_inserter(r._items));
            return r;
        }

        /// Space-separated ascending labels, no trailing newline.
        auto to_string() const -> std::string;

        friend auto operator<=>(const VertexSet &, const VertexSet &) = default;
        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    private:
        std::vector<Vertex> _items;
};

/// A canonical family of vertex sets: no duplicates, ordered lexicographically
/// (element-wise numeric comparison of the sorted members).
class MtSet
{
    public:
        using const_iterator = std::vector<VertexSet>::const_iterator;

        MtSet() = default;

        MtSet(std::initializer_list<VertexSet> sets) : MtSet(std::vector<VertexSet>(sets)) {}

        explicit MtSet(std::vector<VertexSet> sets) : _sets(std::move(sets))
        {
            std::sort(_sets.begin(), _sets.end());
            _sets.erase(std::unique(_sets.begin(), _sets.end()), _sets.end());
        }

        auto size() const -> std::size_t { return _sets.size(); }
        auto empty() const -> bool { return _sets.empty(); }
        auto begin() const -> const_iterator { return _sets.begin(); }
        auto end() const -> const_iterator { return _sets.end(); }
        auto operator[](std::size_t i) const -> const VertexSet & { return _sets[i]; }
        auto sets() const -> const std::vector<VertexSet> & { return _sets; }

        auto contains(const VertexSet & s) const -> bool
        {
            return std::binary_search(_sets.begin(), _sets.end(), s);
        }

        /// True when no member is a proper subset of another.
        auto is_antichain() const -> bool;

        friend auto operator==(const MtSet &, const MtSet &) -> bool = default;

    private:
        std::vector<VertexSet> _sets;
};

} // namespace ht

#endif
