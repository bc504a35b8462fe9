#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rideal/algorithms.hpp"
#include "rideal/automata.hpp"
#include "rideal/error.hpp"

namespace rideal {

enum class BooleanOp { Union, Intersection, Difference, SymmetricDifference };

inline bool select(BooleanOp op, bool left, bool right) {
    switch (op) {
        case BooleanOp::Union: return left || right;
        case BooleanOp::Intersection: return left && right;
        case BooleanOp::Difference: return left && !right;
        case BooleanOp::SymmetricDifference: return left != right;
    }
    return false;
}

inline std::string_view op_name(BooleanOp op) {
    switch (op) {
        case BooleanOp::Union: return "union";
        case BooleanOp::Intersection: return "intersect";
        case BooleanOp::Difference: return "diff";
        case BooleanOp::SymmetricDifference: return "symdiff";
    }
    return "?";
}

inline std::optional<BooleanOp> parse_op(std::string_view s) {
    for (auto op : {BooleanOp::Union, BooleanOp::Intersection, BooleanOp::Difference,
                    BooleanOp::SymmetricDifference})
        if (op_name(op) == s) return op;
    return std::nullopt;
}

/// Pair-state automaton of two DFAs over the same alphabet. Pair (i, j) is
/// state i * right_size + j; (initial, initial) is the initial state.
struct DirectProduct {
    Dfa left, right;
    std::vector<Transformation> delta;
    /// Last row {(m, j)} and last column {(i, n)}, present only when both
    /// factors have a single final state that is a sink.
    std::optional<StateSet> row_h, column_v;

    std::size_t size() const noexcept { return left.size() * right.size(); }
    StateId pair(StateId i, StateId j) const { return static_cast<StateId>(i * right.size() + j); }
    StateId initial() const { return pair(left.initial(), right.initial()); }

    /// The product with finals chosen by `op` on (final-in-left, final-in-right).
    Dfa with_finals(BooleanOp op) const {
        StateSet finals(size());
        for (StateId i = 0; i < left.size(); ++i)
            for (StateId j = 0; j < right.size(); ++j)
                if (select(op, left.is_final(i), right.is_final(j))) finals.insert(pair(i, j));
        return Dfa(left.alphabet(), delta, initial(), std::move(finals));
    }
};

namespace detail {

inline std::optional<StateId> final_sink(const Dfa& d) {
    if (d.finals().size() != 1) return std::nullopt;
    StateId f = d.finals().members().front();
    for (const auto& t : d.transformations())
        if (t.image()[f] != f) return std::nullopt;
    return f;
}

}  // namespace detail

inline DirectProduct direct_product(const Dfa& left, const Dfa& right) {
    require_same_alphabet(left, right);
    const std::size_t m = left.size(), n = right.size();
    DirectProduct p{left, right, {}, std::nullopt, std::nullopt};
    for (std::size_t l = 0; l < left.alphabet().size(); ++l) {
        std::vector<StateId> img(m * n);
        for (StateId i = 0; i < m; ++i)
            for (StateId j = 0; j < n; ++j) img[p.pair(i, j)] = p.pair(left.next(i, l), right.next(j, l));
        p.delta.emplace_back(std::move(img));
    }
    auto fm = detail::final_sink(left), fn = detail::final_sink(right);
    if (fm && fn) {
        StateSet h(m * n), v(m * n);
        for (StateId j = 0; j < n; ++j) h.insert(p.pair(*fm, j));
        for (StateId i = 0; i < m; ++i) v.insert(p.pair(i, *fn));
        p.row_h = std::move(h);
        p.column_v = std::move(v);
    }
    return p;
}

/// Minimal DFA of L(left) op L(right).
inline Dfa boolean(const Dfa& left, const Dfa& right, BooleanOp op) {
    return minimize(direct_product(left, right).with_finals(op));
}

/// Minimal DFA of L(left)·L(right): the disjoint union of both DFAs with an
/// ε-move from every final state of `left` to the initial state of `right`.
inline Dfa concat(const Dfa& left, const Dfa& right, std::size_t cap = kDefaultSubsetCap) {
    require_same_alphabet(left, right);
    const std::size_t m = left.size(), n = right.size();
    auto shift = [m](StateId q) { return static_cast<StateId>(q + m); };
    auto nfa = Nfa::empty(m + n, left.alphabet(), true);
    for (std::size_t l = 0; l < left.alphabet().size(); ++l) {
        for (StateId q = 0; q < m; ++q) nfa.add(q, l, left.next(q, l));
        for (StateId q = 0; q < n; ++q) nfa.add(shift(q), l, shift(right.next(q, l)));
    }
    left.finals().for_each([&](StateId q) { nfa.add_epsilon(q, shift(right.initial())); });
    nfa.set_initial(left.initial());
    right.finals().for_each([&](StateId q) { nfa.set_final(shift(q)); });
    return minimize(determinize(nfa, cap).dfa);
}

/// Minimal DFA of L(d)*: a fresh initial state s, also final, copies the
/// outgoing transitions of the old initial state; every final state gets an
/// ε-move back to the old initial state.
inline Dfa star(const Dfa& d, std::size_t cap = kDefaultSubsetCap) {
    const std::size_t n = d.size();
    const auto s = static_cast<StateId>(n);
    auto nfa = Nfa::empty(n + 1, d.alphabet(), true);
    for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
        for (StateId q = 0; q < n; ++q) nfa.add(q, l, d.next(q, l));
        nfa.add(s, l, d.next(d.initial(), l));
    }
    d.finals().for_each([&](StateId q) {
        nfa.add_epsilon(q, d.initial());
        nfa.set_final(q);
    });
    nfa.set_initial(s);
    nfa.set_final(s);
    return minimize(determinize(nfa, cap).dfa);
}

/// Complexity of the reverse language.
inline std::size_t reverse_complexity(const Dfa& d, std::size_t cap = kDefaultSubsetCap) {
    return complexity(determinize(reverse(minimize(d)), cap).dfa);
}

}  // namespace rideal
