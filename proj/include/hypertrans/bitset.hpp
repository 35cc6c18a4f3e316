#ifndef HYPERTRANS_BITSET_HPP
#define HYPERTRANS_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ht {

/// Dynamically sized bitset used for incidence rows and columns.
///
/// Two bitsets taking part in a binary operation must have the same size;
/// this is the caller's responsibility and is only checked in debug builds.
class Bitset
{
    public:
        using Word = std::uint64_t;
        static constexpr std::size_t bits_per_word = 64;
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        Bitset() = default;

        explicit Bitset(std::size_t size) :
            _words((size + bits_per_word - 1) / bits_per_word, 0),
            _size(size)
        {
        }

        auto size() const -> std::size_t { return _size; }

        auto set(std::size_t i) -> void
        {
            _words[i / bits_per_word] |= Word{1} << (i % bits_per_word);
        }

        auto reset(std::size_t i) -> void
        {
            _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
        }

        auto test(std::size_t i) const -> bool
        {
            return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1u;
        }

        auto set_all() -> void
        {
            for (auto & w : _words)
                w = ~Word{0};
            trim();
        }

        auto clear() -> void
        {
            for (auto & w : _words)
                w = 0;
        }

        auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : _words)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        auto any() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return true;
            return false;
        }

        auto none() const -> bool { return ! any(); }

        auto intersects(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        /// Number of bits set in both.
        auto intersection_count(const Bitset & other) const -> std::size_t
        {
            std::size_t c = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                c += static_cast<std::size_t>(std::popcount(_words[i] & other._words[i]));
            return c;
        }

        auto is_subset_of(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        /// this &= ~other
        auto subtract(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
        friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }

        /// First set bit at or after `from`, or npos.
        auto find_next(std::size_t from) const -> std::size_t
        {
            if (from >= _size)
                return npos;
            std::size_t wi = from / bits_per_word;
            Word w = _words[wi] & (~Word{0} << (from % bits_per_word));
            while (true) {
                if (w)
                    return wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w));
                if (++wi == _words.size())
                    return npos;
                w = _words[wi];
            }
        }

        auto find_first() const -> std::size_t { return find_next(0); }

        template <typename F_>
        auto for_each(F_ && f) const -> void
        {
            for (std::size_t wi = 0; wi < _words.size(); ++wi) {
                Word w = _words[wi];
                while (w) {
                    f(wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
                    w &= w - 1;
                }
            }
        }

        auto indices() const -> std::vector<std::size_t>
        {
            std::vector<std::size_t> out;
            for_each([&](std::size_t i) { out.push_back(i); });
            return out;
        }

        auto hash() const -> std::size_t
        {
            std::size_t h = std::hash<std::size_t>{}(_size);
            for (auto w : _words)
                h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }

        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

    private:
        auto trim() -> void
        {
            if (_size % bits_per_word && ! _words.empty())
                _words.back() &= (Word{1} << (_size % bits_per_word)) - 1;
        }

        std::vector<Word> _words;
        std::size_t _size = 0;
};

struct BitsetHash
{
    auto operator()(const Bitset & b) const -> std::size_t { return b.hash(); }
};

} // namespace ht

#endif
