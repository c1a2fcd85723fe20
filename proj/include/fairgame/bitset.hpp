#pragma once

#include <cstdint>
#include <vector>

namespace fairgame {

// Fixed-size bitset over vertex ids [0, n). The qualitative analysis lives on
// set operations, so this is kept small and inlineable instead of reaching for
// std::vector<bool>.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    bool test(int v) const {
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) { words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w != 0) return true;
        }
        return false;
    }
    bool none() const { return !any(); }

    // Set complement within the universe [0, n).
    VertexSet complement() const {
        VertexSet out(n_);
        for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.trim();
        return out;
    }

    bool operator==(const VertexSet& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }

    // Ascending list of member ids, the canonical order for serialization.
    std::vector<int> to_ids() const {
        std::vector<int> ids;
        ids.reserve(static_cast<size_t>(count()));
        for (int v = 0; v < n_; ++v) {
            if (test(v)) ids.push_back(v);
        }
        return ids;
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

  private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace fairgame
