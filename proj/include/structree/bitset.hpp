#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace structree {

// Fixed-universe bitset for vertex sets of one window.
class Bitset {
public:
    Bitset() : size_(0) {}
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    // this ∪ other covers the whole universe
    bool union_is_all(const Bitset& other) const {
        for (std::size_t i = 0; i + 1 < words_.size(); ++i)
            if (~(words_[i] | other.words_[i])) return false;
        if (words_.empty()) return size_ == 0;
        std::uint64_t last = words_.back() | other.words_.back();
        std::size_t used = size_ & 63;
        std::uint64_t mask = used ? ((std::uint64_t{1} << used) - 1) : ~std::uint64_t{0};
        return (last & mask) == mask;
    }

    Bitset operator&(const Bitset& other) const {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
        return r;
    }
    Bitset operator|(const Bitset& other) const {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
        return r;
    }
    Bitset complement() const {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        std::size_t used = size_ & 63;
        if (used && !r.words_.empty()) r.words_.back() &= (std::uint64_t{1} << used) - 1;
        return r;
    }

    bool operator==(const Bitset& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator<(const Bitset& other) const { return words_ < other.words_; }

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h = h * 1099511628211ull + w;
        return h;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace structree
