#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "rideal/algorithms.hpp"
#include "rideal/automata.hpp"
#include "rideal/operations.hpp"

namespace rideal {

/// Uniformly random complete DFA with `n` states; initial state 0.
template <class Rng>
Dfa random_dfa(Rng& rng, std::size_t n, const Alphabet& sigma) {
    std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
    std::bernoulli_distribution coin(0.5);
    std::vector<Transformation> delta;
    for (std::size_t l = 0; l < sigma.size(); ++l) {
        std::vector<StateId> img(n);
        for (auto& p : img) p = state(rng);
        delta.emplace_back(std::move(img));
    }
    StateSet finals(n);
    for (StateId q = 0; q < n; ++q)
        if (coin(rng)) finals.insert(q);
    return Dfa(sigma, std::move(delta), 0, std::move(finals));
}

/// Every word over `sigma` of length at most `max_len`, shortest first.
inline std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() == max_len) continue;
        for (char c : sigma) out.push_back(out[i] + c);
    }
    return out;
}

struct SampleReport {
    std::uint64_t seed = 0;
    std::size_t pairs = 0;
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
};

namespace detail {

/// Membership in L1·L2 from membership in L1 and L2 over every split point.
inline bool in_concat(const Dfa& x, const Dfa& y, const Word& w) {
    for (std::size_t i = 0; i <= w.size(); ++i)
        if (accepts(x, w.substr(0, i)) && accepts(y, w.substr(i))) return true;
    return false;
}

/// Membership in L* by splitting off non-empty prefixes in L.
inline bool in_star(const Dfa& d, const Word& w, std::unordered_map<std::size_t, bool>& memo, std::size_t from = 0) {
    if (from == w.size()) return true;
    if (auto it = memo.find(from); it != memo.end()) return it->second;
    bool ok = false;
    for (std::size_t to = from + 1; to <= w.size() && !ok; ++to)
        ok = accepts(d, w.substr(from, to - from)) && in_star(d, w, memo, to);
    memo[from] = ok;
    return ok;
}

}  // namespace detail

/// Compares boolean, concatenation and star outputs against word-set
/// arithmetic on random DFA pairs, word by word.
inline SampleReport sample_operations(std::uint64_t seed, std::size_t pairs, std::size_t max_states = 4,
                                      std::size_t max_len = 6, const Alphabet& sigma = "ab") {
    SampleReport rep;
    rep.seed = seed;
    rep.pairs = pairs;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, max_states);
    const auto words = all_words(sigma, max_len);
    auto check = [&](bool got, bool want, const std::string& what, const Word& w) {
        ++rep.checks;
        if (got != want && rep.mismatches++ == 0) rep.first_mismatch = what + " on \"" + w + "\"";
    };
    for (std::size_t i = 0; i < pairs; ++i) {
        Dfa x = random_dfa(rng, size(rng), sigma);
        Dfa y = random_dfa(rng, size(rng), sigma);
        const std::string tag = "pair " + std::to_string(i) + ": ";
        for (auto op : {BooleanOp::Union, BooleanOp::Intersection, BooleanOp::Difference,
                        BooleanOp::SymmetricDifference}) {
            Dfa out = boolean(x, y, op);
            for (const auto& w : words)
                check(accepts(out, w), select(op, accepts(x, w), accepts(y, w)), tag + std::string(op_name(op)), w);
        }
        Dfa cat = concat(x, y);
        Dfa st = star(x);
        for (const auto& w : words) {
            check(accepts(cat, w), detail::in_concat(x, y, w), tag + "concat", w);
            std::unordered_map<std::size_t, bool> memo;
            check(accepts(st, w), detail::in_star(x, w, memo), tag + "star", w);
        }
    }
    return rep;
}

}  // namespace rideal
