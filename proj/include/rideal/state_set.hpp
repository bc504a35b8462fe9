#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "rideal/error.hpp"

namespace rideal {

/// 0-based state index. Rendered 1-based in anything a human reads.
using StateId = std::uint32_t;

/// Fixed-universe set of states, stored as a dense bit vector.
///
/// Two sets compare equal only when their universes agree. Ordering treats
/// the set as a binary number (bit i has weight 2^i), which gives atoms and
/// subset states a stable, reproducible order in reports.
class StateSet {
public:
    StateSet() = default;

    explicit StateSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    StateSet(std::size_t universe, std::initializer_list<StateId> members) : StateSet(universe) {
        for (StateId q : members) insert(q);
    }

    static StateSet full(std::size_t universe) {
        StateSet s(universe);
        for (std::size_t q = 0; q < universe; ++q) s.insert(static_cast<StateId>(q));
        return s;
    }

    static StateSet singleton(std::size_t universe, StateId q) {
        StateSet s(universe);
        s.insert(q);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(StateId q) const noexcept {
        return q < universe_ && ((words_[q >> 6] >> (q & 63)) & 1u) != 0;
    }

    void insert(StateId q) {
        check(q);
        words_[q >> 6] |= std::uint64_t{1} << (q & 63);
    }

    void erase(StateId q) {
        check(q);
        words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    StateSet& operator|=(const StateSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    StateSet& operator&=(const StateSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    StateSet& operator-=(const StateSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

    StateSet complement() const { return full(universe_) - *this; }

    bool subset_of(const StateSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    bool intersects(const StateSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }

    /// Members in increasing order.
    std::vector<StateId> members() const {
        std::vector<StateId> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<StateId>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                f(static_cast<StateId>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    /// "{1,3,4}" with 1-based ids.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](StateId q) {
            if (!first) s += ',';
            s += std::to_string(q + 1);
            first = false;
        });
        return s + "}";
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const StateSet& a, const StateSet& b) = default;

    friend bool operator<(const StateSet& a, const StateSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        }
        return false;
    }

private:
    void check(StateId q) const {
        if (q >= universe_)
            throw InputError("state " + std::to_string(q + 1) + " outside universe of size " +
                             std::to_string(universe_));
    }

    void same_universe(const StateSet& o) const {
        if (o.universe_ != universe_) throw InputError("state sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace rideal
