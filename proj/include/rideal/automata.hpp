#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rideal/error.hpp"
#include "rideal/state_set.hpp"
#include "rideal/transformation.hpp"

namespace rideal {

/// Letters are single characters; alphabet order is declaration order.
using Alphabet = std::string;
using Word = std::string;

namespace detail {

inline void check_alphabet(const Alphabet& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] == sigma[j])
                throw InputError(std::string("letter '") + sigma[i] + "' declared twice");
}

inline std::size_t letter_index(const Alphabet& sigma, char letter) {
    auto pos = sigma.find(letter);
    if (pos == Alphabet::npos) throw InputError(std::string("unknown letter '") + letter + "'");
    return pos;
}

}  // namespace detail

/// Complete DFA (Q, Σ, δ, q1, F) with δ given as one transformation per letter.
class Dfa {
public:
    Dfa(Alphabet alphabet, std::vector<Transformation> delta, StateId initial, StateSet finals)
        : alphabet_(std::move(alphabet)), delta_(std::move(delta)), initial_(initial),
          finals_(std::move(finals)) {
        detail::check_alphabet(alphabet_);
        if (delta_.size() != alphabet_.size())
            throw InputError("need exactly one transformation per letter");
        n_ = finals_.universe();
        if (n_ == 0) throw InputError("a DFA needs at least one state");
        for (const auto& t : delta_)
            if (t.degree() != n_) throw InputError("transformation degree differs from state count");
        if (initial_ >= n_) throw InputError("initial state out of range");
    }

    std::size_t size() const noexcept { return n_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    StateId initial() const noexcept { return initial_; }
    const StateSet& finals() const noexcept { return finals_; }
    bool is_final(StateId q) const { return finals_.contains(q); }

    std::size_t letter_index(char letter) const { return detail::letter_index(alphabet_, letter); }

    const Transformation& delta(std::size_t letter_idx) const { return delta_.at(letter_idx); }
    const Transformation& delta_of(char letter) const { return delta_[letter_index(letter)]; }
    const std::vector<Transformation>& transformations() const noexcept { return delta_; }

    StateId next(StateId q, std::size_t letter_idx) const { return delta_[letter_idx].image()[q]; }

    /// δ(q, w).
    StateId run(StateId q, std::string_view w) const {
        for (char c : w) q = next(q, letter_index(c));
        return q;
    }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    std::vector<Transformation> delta_;
    StateId initial_;
    StateSet finals_;
    std::size_t n_ = 0;
};

/// NFA (Q, Σ, η, Q1, F), optionally with ε-transitions.
///
/// `eta[letter][q]` is η(q, letter). `eps[q]` is η(q, ε); an NFA built without
/// an ε table reports `has_epsilon() == false`.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::vector<std::vector<StateSet>> eta, std::vector<StateSet> eps,
        StateSet initials, StateSet finals)
        : alphabet_(std::move(alphabet)), eta_(std::move(eta)), eps_(std::move(eps)),
          initials_(std::move(initials)), finals_(std::move(finals)) {
        detail::check_alphabet(alphabet_);
        n_ = finals_.universe();
        if (initials_.universe() != n_) throw InputError("initial set has the wrong universe");
        if (eta_.size() != alphabet_.size()) throw InputError("need one transition row per letter");
        for (const auto& row : eta_) {
            if (row.size() != n_) throw InputError("transition row has the wrong length");
            for (const auto& s : row)
                if (s.universe() != n_) throw InputError("transition target has the wrong universe");
        }
        if (!eps_.empty()) {
            if (eps_.size() != n_) throw InputError("epsilon row has the wrong length");
            for (const auto& s : eps_)
                if (s.universe() != n_) throw InputError("epsilon target has the wrong universe");
        }
    }

    /// An NFA with no transitions at all, to be filled through `add`.
    static Nfa empty(std::size_t n, Alphabet alphabet, bool with_epsilon = false) {
        std::vector<std::vector<StateSet>> eta(alphabet.size(), std::vector<StateSet>(n, StateSet(n)));
        std::vector<StateSet> eps;
        if (with_epsilon) eps.assign(n, StateSet(n));
        return Nfa(std::move(alphabet), std::move(eta), std::move(eps), StateSet(n), StateSet(n));
    }

    std::size_t size() const noexcept { return n_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const StateSet& initials() const noexcept { return initials_; }
    const StateSet& finals() const noexcept { return finals_; }
    bool has_epsilon() const noexcept { return !eps_.empty(); }

    std::size_t letter_index(char letter) const { return detail::letter_index(alphabet_, letter); }

    const StateSet& successors(StateId q, std::size_t letter_idx) const { return eta_.at(letter_idx).at(q); }

    /// η(q, ε); the empty set when the NFA has no ε table.
    StateSet epsilon(StateId q) const { return has_epsilon() ? eps_.at(q) : StateSet(n_); }

    /// Smallest superset of s closed under ε-moves.
    StateSet closure(StateSet s) const {
        if (!has_epsilon()) return s;
        std::vector<StateId> stack = s.members();
        while (!stack.empty()) {
            StateId q = stack.back();
            stack.pop_back();
            eps_[q].for_each([&](StateId p) {
                if (!s.contains(p)) {
                    s.insert(p);
                    stack.push_back(p);
                }
            });
        }
        return s;
    }

    /// ε-closure of ⋃_{q∈s} η(q, letter).
    StateSet step(const StateSet& s, std::size_t letter_idx) const {
        StateSet out(n_);
        const auto& row = eta_.at(letter_idx);
        s.for_each([&](StateId q) { out |= row[q]; });
        return closure(std::move(out));
    }

    bool accepts(std::string_view w) const {
        StateSet cur = closure(initials_);
        for (char c : w) cur = step(cur, letter_index(c));
        return cur.intersects(finals_);
    }

    /// Copy with a different initial set.
    Nfa with_initials(StateSet initials) const {
        if (initials.universe() != n_) throw InputError("initial set has the wrong universe");
        Nfa c(*this);
        c.initials_ = std::move(initials);
        return c;
    }

    // Builders, used while assembling an NFA before it is shared.
    void add(StateId from, std::size_t letter_idx, StateId to) { eta_.at(letter_idx).at(from).insert(to); }
    void add_epsilon(StateId from, StateId to) {
        if (!has_epsilon()) eps_.assign(n_, StateSet(n_));
        eps_.at(from).insert(to);
    }
    void set_initial(StateId q) { initials_.insert(q); }
    void set_final(StateId q) { finals_.insert(q); }

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    Alphabet alphabet_;
    std::vector<std::vector<StateSet>> eta_;
    std::vector<StateSet> eps_;
    StateSet initials_;
    StateSet finals_;
    std::size_t n_ = 0;
};

/// The DFA viewed as an NFA (no ε table).
inline Nfa to_nfa(const Dfa& d) {
    auto nfa = Nfa::empty(d.size(), d.alphabet());
    for (std::size_t l = 0; l < d.alphabet().size(); ++l)
        for (StateId q = 0; q < d.size(); ++q) nfa.add(q, l, d.next(q, l));
    nfa.set_initial(d.initial());
    d.finals().for_each([&](StateId q) { nfa.set_final(q); });
    return nfa;
}

}  // namespace rideal
