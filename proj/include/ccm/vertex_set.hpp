#ifndef CCM_VERTEX_SET_HPP
#define CCM_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace ccm {

/// Set of vertices over a fixed universe [0, universe), bitset-backed.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
    void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// True iff o is a subset of *this.
    bool contains_all(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    /// Complement within the universe.
    VertexSet complement() const {
        VertexSet s(universe_);
        for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    /// Smallest element, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Smallest element > v, or -1 when none.
    int next(int v) const {
        ++v;
        if (v >= universe_) return -1;
        size_t i = v >> 6;
        uint64_t w = words_[i] & (~0ULL << (v & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    /// Drop all elements < v.
    VertexSet& clear_below(int v) {
        if (v <= 0) return *this;
        size_t full_words = std::min(static_cast<size_t>(v >> 6), words_.size());
        for (size_t i = 0; i < full_words; ++i) words_[i] = 0;
        if (full_words < words_.size() && (v & 63))
            words_[full_words] &= ~0ULL << (v & 63);
        return *this;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    size_t word_count() const { return words_.size(); }
    uint64_t word(size_t i) const { return words_[i]; }

private:
    void trim() {
        if (universe_ & 63) words_.back() &= ~0ULL >> (64 - (universe_ & 63));
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

inline VertexSet make_vertex_set(int universe, std::initializer_list<int> elems) {
    VertexSet s(universe);
    for (int v : elems) s.set(v);
    return s;
}

}  // namespace ccm

#endif
