#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "asca/engine.hpp"

namespace asca {

// Fixed-universe bit set over states 0..size-1.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }
    bool test(State s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }

    // Returns true when the bit was newly set.
    bool insert(State s) {
        std::uint64_t& w = words_[s >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (s & 63);
        const bool fresh = !(w & bit);
        w |= bit;
        return fresh;
    }

    // Union in place; returns the number of newly set bits.
    std::size_t merge(const StateSet& other) {
        std::size_t fresh = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            fresh += std::size_t(std::popcount(other.words_[i] & ~words_[i]));
            words_[i] |= other.words_[i];
        }
        return fresh;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::size_t(std::popcount(w));
        return c;
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::vector<State> elements() const {
        std::vector<State> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(State(i * 64 + std::size_t(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace asca
