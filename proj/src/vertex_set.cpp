#include "erlab/vertex_set.hpp"

#include "erlab/errors.hpp"

#include <algorithm>
#include <string>

namespace erlab {

namespace {

void check_member(int universe, int v) {
    if (v < 0 || v >= universe)
        throw DomainError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe) + ")");
}

}  // namespace

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) {
        check_member(universe, v);
        set(v);
    }
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
    for (int v : members) {
        check_member(universe, v);
        set(v);
    }
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    if (universe % kWordBits != 0 && !s.words_.empty())
        s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
    return s;
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

int VertexSet::count() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

int VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w) * kWordBits + std::countr_zero(words_[w]);
    return -1;
}

int VertexSet::next(int v) const noexcept {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t w = static_cast<std::size_t>(start >> 6);
    Word bits = words_[w] & (~Word{0} << (start & 63));
    while (true) {
        if (bits != 0) return static_cast<int>(w) * kWordBits + std::countr_zero(bits);
        if (++w >= words_.size()) return -1;
        bits = words_[w];
    }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

int VertexSet::intersection_count(const VertexSet& other) const noexcept {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & other.words_[w]);
    return c;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

bool VertexSet::subset_of(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace erlab
