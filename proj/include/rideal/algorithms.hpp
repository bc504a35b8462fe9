#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rideal/automata.hpp"
#include "rideal/error.hpp"
#include "rideal/state_set.hpp"
#include "rideal/transformation.hpp"

namespace rideal {

/// Default bound on the number of subsets a determinization may create.
inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 22;

inline bool accepts(const Dfa& d, std::string_view w) { return d.is_final(d.run(d.initial(), w)); }

/// The same automaton started from q.
inline Dfa with_initial(const Dfa& d, StateId q) {
    return Dfa(d.alphabet(), d.transformations(), q, d.finals());
}

/// Keep only the given letters, in the given order.
inline Dfa restrict_alphabet(const Dfa& d, std::string_view letters) {
    std::vector<Transformation> delta;
    for (char c : letters) delta.push_back(d.delta_of(c));
    return Dfa(Alphabet(letters), std::move(delta), d.initial(), d.finals());
}

struct Determinized {
    Dfa dfa;
    /// subsets[i] is the NFA state set behind DFA state i.
    std::vector<StateSet> subsets;
};

/// Subset construction over the subsets reachable from the (ε-closed)
/// initial set. States are numbered in breadth-first discovery order with
/// letters taken in alphabet order; the empty subset, when reachable, is an
/// ordinary dead state.
inline Determinized determinize(const Nfa& nfa, std::size_t cap = kDefaultSubsetCap) {
    const std::size_t k = nfa.alphabet().size();
    std::vector<StateSet> subsets;
    std::unordered_map<StateSet, StateId, StateSetHash> index;
    std::vector<std::vector<StateId>> images(k);

    auto intern = [&](StateSet s) -> StateId {
        auto [it, inserted] = index.try_emplace(s, static_cast<StateId>(subsets.size()));
        if (inserted) {
            if (subsets.size() >= cap)
                throw ResourceError("determinization exceeded the cap of " + std::to_string(cap) +
                                        " subsets",
                                    subsets.size());
            subsets.push_back(std::move(s));
        }
        return it->second;
    };

    intern(nfa.closure(nfa.initials()));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            StateId target = intern(nfa.step(subsets[i], l));
            images[l].push_back(target);
        }
    }

    const std::size_t n = subsets.size();
    std::vector<Transformation> delta;
    delta.reserve(k);
    for (auto& img : images) delta.emplace_back(std::move(img));
    StateSet finals(n);
    for (std::size_t i = 0; i < n; ++i)
        if (subsets[i].intersects(nfa.finals())) finals.insert(static_cast<StateId>(i));
    return {Dfa(nfa.alphabet(), std::move(delta), 0, std::move(finals)), std::move(subsets)};
}

/// Initial and final sets swap; every transition (ε ones included) is reversed.
inline Nfa reverse(const Nfa& nfa) {
    const std::size_t n = nfa.size();
    auto out = Nfa::empty(n, nfa.alphabet(), nfa.has_epsilon());
    for (std::size_t l = 0; l < nfa.alphabet().size(); ++l)
        for (StateId q = 0; q < n; ++q) nfa.successors(q, l).for_each([&](StateId p) { out.add(p, l, q); });
    if (nfa.has_epsilon())
        for (StateId q = 0; q < n; ++q) nfa.epsilon(q).for_each([&](StateId p) { out.add_epsilon(p, q); });
    nfa.finals().for_each([&](StateId q) { out.set_initial(q); });
    nfa.initials().for_each([&](StateId q) { out.set_final(q); });
    return out;
}

inline Nfa reverse(const Dfa& d) { return reverse(to_nfa(d)); }

/// Restriction to states reachable from the initial state, renumbered in BFS
/// order (letters in alphabet order). Applied to a minimal DFA this is the
/// canonical numbering.
inline Dfa reachable_part(const Dfa& d) {
    const std::size_t k = d.alphabet().size();
    constexpr StateId kUnseen = static_cast<StateId>(-1);
    std::vector<StateId> renum(d.size(), kUnseen);
    std::vector<StateId> order;
    renum[d.initial()] = 0;
    order.push_back(d.initial());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            StateId p = d.next(order[i], l);
            if (renum[p] == kUnseen) {
                renum[p] = static_cast<StateId>(order.size());
                order.push_back(p);
            }
        }
    }
    const std::size_t m = order.size();
    std::vector<Transformation> delta;
    for (std::size_t l = 0; l < k; ++l) {
        std::vector<StateId> img(m);
        for (std::size_t i = 0; i < m; ++i) img[i] = renum[d.next(order[i], l)];
        delta.emplace_back(std::move(img));
    }
    StateSet finals(m);
    for (std::size_t i = 0; i < m; ++i)
        if (d.is_final(order[i])) finals.insert(static_cast<StateId>(i));
    return Dfa(d.alphabet(), std::move(delta), 0, std::move(finals));
}

namespace detail {

/// Hopcroft's partition refinement. Returns the block index of every state;
/// states share a block iff they are equivalent.
inline std::vector<StateId> hopcroft_blocks(const Dfa& d) {
    const std::size_t n = d.size();
    const std::size_t k = d.alphabet().size();

    // Inverse transitions in CSR form, one table per letter.
    std::vector<std::vector<std::size_t>> pre_start(k, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<StateId>> pre(k, std::vector<StateId>(n));
    for (std::size_t l = 0; l < k; ++l) {
        auto& start = pre_start[l];
        for (StateId q = 0; q < n; ++q) ++start[d.next(q, l) + 1];
        for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
        std::vector<std::size_t> fill(start.begin(), start.end() - 1);
        for (StateId q = 0; q < n; ++q) pre[l][fill[d.next(q, l)]++] = q;
    }

    std::vector<StateId> elems(n), loc(n), block_of(n);
    std::vector<std::size_t> first, end, marked;
    std::vector<char> in_work;
    std::vector<StateId> work;

    // Initial partition: finals first, then non-finals.
    std::size_t pos = 0;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t begin = pos;
        for (StateId q = 0; q < n; ++q) {
            if (d.is_final(q) == (pass == 0)) {
                elems[pos] = q;
                loc[q] = static_cast<StateId>(pos);
                block_of[q] = static_cast<StateId>(first.size());
                ++pos;
            }
        }
        if (pos > begin) {
            first.push_back(begin);
            end.push_back(pos);
            marked.push_back(0);
            in_work.push_back(0);
        }
    }
    if (first.size() == 2) {
        StateId smaller = (end[0] - first[0] <= end[1] - first[1]) ? 0 : 1;
        work.push_back(smaller);
        in_work[smaller] = 1;
    }

    std::vector<StateId> splitter;
    std::vector<StateId> touched;
    while (!work.empty()) {
        StateId b = work.back();
        work.pop_back();
        in_work[b] = 0;
        splitter.assign(elems.begin() + static_cast<std::ptrdiff_t>(first[b]),
                        elems.begin() + static_cast<std::ptrdiff_t>(end[b]));
        for (std::size_t l = 0; l < k; ++l) {
            touched.clear();
            for (StateId t : splitter) {
                for (std::size_t i = pre_start[l][t]; i < pre_start[l][t + 1]; ++i) {
                    StateId p = pre[l][i];
                    StateId y = block_of[p];
                    std::size_t target = first[y] + marked[y];
                    StateId other = elems[target];
                    std::swap(elems[loc[p]], elems[target]);
                    loc[other] = loc[p];
                    loc[p] = static_cast<StateId>(target);
                    if (marked[y]++ == 0) touched.push_back(y);
                }
            }
            for (StateId y : touched) {
                std::size_t m = marked[y];
                marked[y] = 0;
                if (m == end[y] - first[y]) continue;
                auto z = static_cast<StateId>(first.size());
                first.push_back(first[y]);
                end.push_back(first[y] + m);
                marked.push_back(0);
                in_work.push_back(0);
                first[y] += m;
                for (std::size_t i = first[z]; i < end[z]; ++i) block_of[elems[i]] = z;
                if (in_work[y]) {
                    work.push_back(z);
                    in_work[z] = 1;
                } else {
                    StateId add = (end[z] - first[z] <= end[y] - first[y]) ? z : y;
                    work.push_back(add);
                    in_work[add] = 1;
                }
            }
        }
    }
    return block_of;
}

}  // namespace detail

/// Minimal DFA of the same language, canonically numbered (BFS from the
/// initial state, letters in alphabet order). Isomorphic minimal DFAs come
/// out identical.
inline Dfa minimize(const Dfa& d) {
    Dfa r = reachable_part(d);
    auto block_of = detail::hopcroft_blocks(r);
    std::size_t blocks = 0;
    for (StateId b : block_of) blocks = std::max<std::size_t>(blocks, b + 1);

    // Blocks are numbered arbitrarily; the BFS pass below fixes the order.
    std::vector<Transformation> delta;
    for (std::size_t l = 0; l < r.alphabet().size(); ++l) {
        std::vector<StateId> img(blocks);
        for (StateId q = 0; q < r.size(); ++q) img[block_of[q]] = block_of[r.next(q, l)];
        delta.emplace_back(std::move(img));
    }
    StateSet finals(blocks);
    r.finals().for_each([&](StateId q) { finals.insert(block_of[q]); });
    return reachable_part(Dfa(r.alphabet(), std::move(delta), block_of[r.initial()], std::move(finals)));
}

/// State complexity: the number of states of the minimal DFA.
inline std::size_t complexity(const Dfa& d) { return minimize(d).size(); }

/// Complexity of the language of every state of minimize(d), in canonical
/// state order.
inline std::vector<std::size_t> state_complexities(const Dfa& d) {
    Dfa m = minimize(d);
    std::vector<std::size_t> out;
    out.reserve(m.size());
    for (StateId q = 0; q < m.size(); ++q) out.push_back(complexity(with_initial(m, q)));
    return out;
}

/// Shortest word w (lexicographically least among the shortest) with exactly
/// one of δ(p,w), δ(q,w) in `wrt`. Empty optional iff no such word exists.
inline std::optional<Word> distinguishing_word(const Dfa& d, StateId p, StateId q, const StateSet& wrt) {
    const std::size_t n = d.size();
    if (p >= n || q >= n) throw InputError("state out of range");
    if (wrt.universe() != n) throw InputError("target set has the wrong universe");
    if (p == q) return std::nullopt;

    struct Visit {
        std::size_t parent;
        char letter;
    };
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::unordered_map<std::size_t, Visit> seen;
    std::deque<std::size_t> queue;
    auto key = [n](StateId x, StateId y) { return static_cast<std::size_t>(x) * n + y; };
    seen.emplace(key(p, q), Visit{kNone, 0});
    queue.push_back(key(p, q));
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        auto x = static_cast<StateId>(cur / n), y = static_cast<StateId>(cur % n);
        if (wrt.contains(x) != wrt.contains(y)) {
            Word w;
            for (std::size_t at = cur; seen.at(at).parent != kNone; at = seen.at(at).parent)
                w.push_back(seen.at(at).letter);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
            std::size_t nxt = key(d.next(x, l), d.next(y, l));
            if (seen.emplace(nxt, Visit{cur, d.alphabet()[l]}).second) queue.push_back(nxt);
        }
    }
    return std::nullopt;
}

/// L = LΣ*. In the minimal DFA of a non-empty right ideal every final state
/// accepts Σ*, so there is exactly one final state and it is a sink. The
/// empty language also satisfies the identity.
inline bool is_right_ideal(const Dfa& d) {
    Dfa m = minimize(d);
    if (m.finals().empty()) return true;
    if (m.finals().size() != 1) return false;
    StateId f = m.finals().members().front();
    for (const auto& t : m.transformations())
        if (t.image()[f] != f) return false;
    return true;
}

inline void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet())
        throw InputError("alphabet mismatch: \"" + a.alphabet() + "\" vs \"" + b.alphabet() + "\"");
}

/// Isomorphism of the reachable parts (same alphabet order required).
inline bool isomorphic(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    return reachable_part(a) == reachable_part(b);
}

inline bool equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    return minimize(a) == minimize(b);
}

}  // namespace rideal
