#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace erlab {

/// Bitmask over the vertices [0, n) of some graph.
///
/// All binary operations require both operands to share the same universe
/// size; this is checked only in debug builds.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, std::span<const int> members);

    static VertexSet full(int universe);

    static constexpr int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

    int universe() const noexcept { return universe_; }

    bool test(int v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) noexcept { words_[v >> 6] |= Word{1} << (v & 63); }
    void reset(int v) noexcept { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
    void clear() noexcept;

    int count() const noexcept;
    bool empty() const noexcept;
    /// Smallest member, or -1.
    int first() const noexcept;
    /// Smallest member strictly greater than v, or -1.
    int next(int v) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// |this ∩ other| without materializing the intersection.
    int intersection_count(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    bool subset_of(const VertexSet& other) const noexcept;

    std::vector<int> to_vector() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                fn(static_cast<int>(w) * kWordBits + b);
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    /// Lexicographic order on sorted member lists (smaller first element wins).
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

private:
    int universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace erlab
