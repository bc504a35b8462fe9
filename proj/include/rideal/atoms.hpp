#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rideal/algorithms.hpp"
#include "rideal/automata.hpp"
#include "rideal/error.hpp"
#include "rideal/state_set.hpp"
#include "rideal/transformation.hpp"
#include "rideal/witnesses.hpp"

namespace rideal {

/// An atom, identified by its basis: the set of states of the minimal DFA
/// whose quotients occur uncomplemented in the atomic intersection.
struct Atom {
    StateSet basis;
    std::size_t complexity = 0;

    StateSet cobasis() const { return basis.complement(); }
    std::size_t cobasis_size() const { return basis.universe() - basis.size(); }
};

/// NFA whose states are the atoms, each labelled by its basis.
struct Atomaton {
    Nfa nfa;
    std::vector<StateSet> labels;

    std::optional<StateId> state_of(const StateSet& label) const {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) return std::nullopt;
        return static_cast<StateId>(it - labels.begin());
    }

    std::set<StateSet> initial_labels() const {
        std::set<StateSet> out;
        nfa.initials().for_each([&](StateId q) { out.insert(labels[q]); });
        return out;
    }

    std::set<StateSet> final_labels() const {
        std::set<StateSet> out;
        nfa.finals().for_each([&](StateId q) { out.insert(labels[q]); });
        return out;
    }

    std::set<StateSet> successor_labels(StateId q, std::size_t letter_idx) const {
        std::set<StateSet> out;
        nfa.successors(q, letter_idx).for_each([&](StateId p) { out.insert(labels[p]); });
        return out;
    }
};

/// Reverse, determinize, reverse. Labels are subsets of the states of
/// minimize(d), which is what the atom bases refer to.
inline Atomaton atomaton(const Dfa& d, std::size_t cap = kDefaultSubsetCap) {
    Dfa m = minimize(d);
    auto det = determinize(reverse(m), cap);
    return {reverse(to_nfa(det.dfa)), std::move(det.subsets)};
}

/// A_S^D: the átomaton restarted at atom state `s`, then determinized.
/// Its subsets are collections of átomaton states.
inline Determinized atom_dfa(const Atomaton& at, StateId s, std::size_t cap = kDefaultSubsetCap) {
    return determinize(at.nfa.with_initials(StateSet::singleton(at.nfa.size(), s)), cap);
}

/// State count of A_S^D. The átomaton has no empty states and a
/// deterministic reverse, so A_S^D is already minimal.
inline std::size_t atom_complexity(const Atomaton& at, const StateSet& basis,
                                   std::size_t cap = kDefaultSubsetCap) {
    auto s = at.state_of(basis);
    if (!s) throw InputError("basis " + basis.to_string() + " is not an atom");
    return atom_dfa(at, *s, cap).dfa.size();
}

inline std::size_t atom_complexity(const Dfa& d, const StateSet& basis, std::size_t cap = kDefaultSubsetCap) {
    return atom_complexity(atomaton(d, cap), basis, cap);
}

/// Atoms ordered by basis read as a binary number.
inline std::vector<Atom> atoms_of(const Dfa& d, bool with_complexity = true,
                                  std::size_t cap = kDefaultSubsetCap) {
    Atomaton at = atomaton(d, cap);
    std::vector<Atom> out;
    out.reserve(at.labels.size());
    for (StateId q = 0; q < at.labels.size(); ++q) {
        Atom a{at.labels[q], 0};
        if (with_complexity) a.complexity = atom_dfa(at, q, cap).dfa.size();
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end(), [](const Atom& x, const Atom& y) { return x.basis < y.basis; });
    return out;
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("atom bound overflows 64 bits", 0);
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("atom bound overflows 64 bits", 0);
    return r;
}

}  // namespace detail

/// Binomial coefficient; zero outside 0 <= k <= n. Throws on overflow.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step.
        std::uint64_t num = detail::checked_mul(r, static_cast<std::uint64_t>(n - k + i));
        r = num / static_cast<std::uint64_t>(i);
    }
    return r;
}

/// Upper bound on the complexity of an atom with co-basis size r of a right
/// ideal of complexity n: 2^(n-1) for r = 0, otherwise
/// 1 + sum_{k=1}^{r} sum_{h=k+1}^{k+n-r} C(n-1, h-1) C(h-1, k).
inline std::uint64_t atom_bound(std::size_t n, std::size_t r) {
    if (n == 0) throw InputError("atom_bound needs n >= 1");
    if (r > n - 1) throw InputError("co-basis size must satisfy 0 <= r <= n-1");
    if (r == 0) {
        if (n - 1 >= 64) throw ResourceError("atom bound overflows 64 bits", 0);
        return std::uint64_t{1} << (n - 1);
    }
    const auto N = static_cast<std::int64_t>(n), R = static_cast<std::int64_t>(r);
    std::uint64_t sum = 1;
    for (std::int64_t k = 1; k <= R; ++k)
        for (std::int64_t h = k + 1; h <= k + N - R; ++h)
            sum = detail::checked_add(sum, detail::checked_mul(binomial(N - 1, h - 1), binomial(h - 1, k)));
    return sum;
}

/// Átomaton of R_n(a,b,c,d) written down directly from its transition rules,
/// without going through reversal and determinization.
inline Atomaton closed_form_atomaton_rn(std::size_t n) {
    if (n < 3) throw InputError("closed-form átomaton needs n >= 3");
    const auto last = static_cast<StateId>(n - 1);
    const auto pen = static_cast<StateId>(n - 2);
    const StateSet first_pen(n, {0, pen});
    const Dfa r = build_rn(n, Family::RnAbcd);

    std::vector<StateSet> labels;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        StateSet s = StateSet::singleton(n, last);
        for (StateId q = 0; q < last; ++q)
            if ((bits >> q) & 1u) s.insert(q);
        labels.push_back(std::move(s));
    }
    std::sort(labels.begin(), labels.end());
    auto id = [&](const StateSet& s) {
        return static_cast<StateId>(std::lower_bound(labels.begin(), labels.end(), s) - labels.begin());
    };

    const std::size_t size = labels.size();
    auto nfa = Nfa::empty(size, "abcd");
    for (StateId q = 0; q < size; ++q) {
        const StateSet& s = labels[q];
        // a and b act as the image of S under the letter.
        nfa.add(q, 0, id(r.delta(0).apply(s)));
        nfa.add(q, 1, id(r.delta(1).apply(s)));

        // c: with T = S \ {1, n-1}, T -> {T, T∪{n-1}}, T∪{1,n-1} -> {T∪{1}, T∪{1,n-1}},
        // and T∪{n-1}, T∪{1} have no c-successor.
        StateSet core = s - first_pen;
        bool has1 = s.contains(0), has_pen = s.contains(pen);
        if (!has1 && !has_pen) {
            StateSet up = core;
            up.insert(pen);
            nfa.add(q, 2, id(core));
            nfa.add(q, 2, id(up));
        } else if (has1 && has_pen) {
            StateSet with1 = core;
            with1.insert(0);
            nfa.add(q, 2, id(with1));
            nfa.add(q, 2, id(s));
        }

        // d: S∪{n-1} -> {S, S∪{n-1}}; sets without n-1 have no d-successor.
        if (has_pen) {
            StateSet down = s;
            down.erase(pen);
            nfa.add(q, 3, id(down));
            nfa.add(q, 3, id(s));
        }

        if (s.contains(0)) nfa.set_initial(q);
    }
    nfa.set_final(id(StateSet::singleton(n, last)));
    return {std::move(nfa), std::move(labels)};
}

/// Same labels, same labelled transitions, same initial and final labels.
inline bool label_isomorphic(const Atomaton& x, const Atomaton& y) {
    if (x.nfa.alphabet() != y.nfa.alphabet()) return false;
    if (x.labels.size() != y.labels.size()) return false;
    if (std::set<StateSet>(x.labels.begin(), x.labels.end()) != std::set<StateSet>(y.labels.begin(), y.labels.end()))
        return false;
    if (x.initial_labels() != y.initial_labels() || x.final_labels() != y.final_labels()) return false;
    for (StateId q = 0; q < x.labels.size(); ++q) {
        auto p = y.state_of(x.labels[q]);
        if (!p) return false;
        for (std::size_t l = 0; l < x.nfa.alphabet().size(); ++l)
            if (x.successor_labels(q, l) != y.successor_labels(*p, l)) return false;
    }
    return true;
}

/// [V, U]: every subset of U that contains V. `empty` marks the empty
/// collection, which is the dead state of an atom DFA.
struct Interval {
    StateSet lower;
    StateSet upper;
    bool empty = false;

    /// (|V|, |U|); meaningless for the empty interval.
    std::pair<std::size_t, std::size_t> type() const { return {lower.size(), upper.size()}; }

    std::string to_string() const {
        return empty ? std::string("[]") : "[" + lower.to_string() + "," + upper.to_string() + "]";
    }

    bool operator==(const Interval&) const = default;
};

/// The interval a collection of sets forms, if it forms one.
inline std::optional<Interval> recognize_interval(std::span<const StateSet> members, std::size_t universe) {
    std::set<StateSet> distinct(members.begin(), members.end());
    if (distinct.empty()) return Interval{StateSet(universe), StateSet(universe), true};
    StateSet lower = StateSet::full(universe), upper(universe);
    for (const auto& s : distinct) {
        if (s.universe() != universe) throw InputError("collection members over different universes");
        lower &= s;
        upper |= s;
    }
    const std::size_t free = upper.size() - lower.size();
    if (free >= 63 || distinct.size() != (std::size_t{1} << free)) return std::nullopt;
    // Every member lies between lower and upper by construction, and the
    // count matches, so the collection is the whole interval.
    return Interval{std::move(lower), std::move(upper), false};
}

/// The collection of átomaton labels behind each state of A_S^D.
inline std::vector<std::vector<StateSet>> atom_dfa_collections(const Atomaton& at, const Determinized& det) {
    std::vector<std::vector<StateSet>> out;
    out.reserve(det.subsets.size());
    for (const auto& sub : det.subsets) {
        std::vector<StateSet> coll;
        sub.for_each([&](StateId q) { coll.push_back(at.labels[q]); });
        out.push_back(std::move(coll));
    }
    return out;
}

struct IntervalCheck {
    std::size_t states = 0;     ///< states of all atom DFAs examined
    std::size_t conforming = 0; ///< of those, empty or an interval whose lower end holds `sink`
};

/// For every atom, classify each state of its atom DFA.
inline IntervalCheck check_interval_property(const Atomaton& at, StateId sink, std::size_t cap = kDefaultSubsetCap) {
    IntervalCheck out;
    const std::size_t universe = at.labels.empty() ? 0 : at.labels.front().universe();
    for (StateId s = 0; s < at.labels.size(); ++s) {
        auto det = atom_dfa(at, s, cap);
        for (const auto& coll : atom_dfa_collections(at, det)) {
            ++out.states;
            auto iv = recognize_interval(coll, universe);
            if (iv && (iv->empty || iv->lower.contains(sink))) ++out.conforming;
        }
    }
    return out;
}

/// In the atom DFA for state `s`, do the non-empty interval states of each
/// type form a single strongly connected group under the given letters?
inline bool same_type_strongly_connected(const Atomaton& at, StateId s, std::string_view letters,
                                         std::size_t cap = kDefaultSubsetCap) {
    auto det = atom_dfa(at, s, cap);
    const std::size_t universe = at.labels.front().universe();
    const auto colls = atom_dfa_collections(at, det);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<StateId>> by_type;
    for (StateId q = 0; q < colls.size(); ++q) {
        auto iv = recognize_interval(colls[q], universe);
        if (!iv) return false;
        if (!iv->empty) by_type[iv->type()].push_back(q);
    }
    std::vector<std::size_t> idx;
    for (char c : letters) idx.push_back(det.dfa.letter_index(c));
    auto reach = [&](StateId from) {
        std::vector<bool> seen(det.dfa.size(), false);
        std::vector<StateId> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            StateId q = stack.back();
            stack.pop_back();
            for (auto l : idx) {
                StateId p = det.dfa.next(q, l);
                if (!seen[p]) {
                    seen[p] = true;
                    stack.push_back(p);
                }
            }
        }
        return seen;
    };
    for (const auto& [type, group] : by_type) {
        for (StateId q : group) {
            auto seen = reach(q);
            for (StateId p : group)
                if (!seen[p]) return false;
        }
    }
    return true;
}

/// One column of the atom-complexity table: for each co-basis size r in
/// 0..n, the largest measured atom complexity, or nothing when no atom has
/// that co-basis size.
struct AtomTableColumn {
    std::size_t n = 0;
    std::vector<std::optional<std::size_t>> right_ideal;
    std::vector<std::optional<std::size_t>> regular;

    std::size_t right_ideal_max() const { return column_max(right_ideal); }
    std::size_t regular_max() const { return column_max(regular); }

private:
    static std::size_t column_max(const std::vector<std::optional<std::size_t>>& col) {
        std::size_t m = 0;
        for (const auto& v : col)
            if (v) m = std::max(m, *v);
        return m;
    }
};

/// Per-r maximum atom complexity of d, indexed r = 0..minimal size.
inline std::vector<std::optional<std::size_t>> atom_complexity_by_cobasis(const Dfa& d,
                                                                         std::size_t cap = kDefaultSubsetCap) {
    auto atoms = atoms_of(d, true, cap);
    const std::size_t n = atoms.empty() ? 0 : atoms.front().basis.universe();
    std::vector<std::optional<std::size_t>> col(n + 1);
    for (const auto& a : atoms) {
        auto& cell = col[a.cobasis_size()];
        cell = std::max(cell.value_or(0), a.complexity);
    }
    return col;
}

/// Measured atom complexities of R_n(a,b,c,d) (right ideals) and of L_n
/// (regular languages) for n = 1..n_max. For n = 1 the regular column is
/// measured over the two one-state languages, Σ* and ∅.
inline std::vector<AtomTableColumn> atom_table(std::size_t n_max, std::size_t cap = kDefaultSubsetCap) {
    if (n_max == 0) throw InputError("atom table needs n_max >= 1");
    std::vector<AtomTableColumn> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        AtomTableColumn col;
        col.n = n;
        col.right_ideal = atom_complexity_by_cobasis(build_rn(n, Family::RnAbcd), cap);
        col.right_ideal.resize(n + 1);
        if (n == 1) {
            auto id = identity(1);
            Dfa all("abc", {id, id, id}, 0, StateSet::full(1));
            Dfa none("abc", {id, id, id}, 0, StateSet(1));
            auto x = atom_complexity_by_cobasis(all, cap), y = atom_complexity_by_cobasis(none, cap);
            col.regular.resize(2);
            for (std::size_t r = 0; r < 2; ++r) {
                if (x[r] || y[r]) col.regular[r] = std::max(x[r].value_or(0), y[r].value_or(0));
            }
        } else {
            col.regular = atom_complexity_by_cobasis(build_ln(n), cap);
            col.regular.resize(n + 1);
        }
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace rideal
