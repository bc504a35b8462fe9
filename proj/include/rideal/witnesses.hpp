#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rideal/automata.hpp"
#include "rideal/error.hpp"
#include "rideal/transformation.hpp"

namespace rideal {

/// The automaton streams this library knows how to build.
enum class Family {
    RnAbcd,  ///< the right-ideal witness over {a,b,c,d}
    RnAd,    ///< restricted to {a,d}
    RnAbd,   ///< restricted to {a,b,d}
    RnBad,   ///< {a,b,d} with the roles of a and b exchanged
    Pn,      ///< b is the transposition (1,2) instead of a cycle
    Ln,      ///< the regular-language comparison stream over {a,b,c}
};

struct WitnessSpec {
    Family family;
    std::size_t n;
};

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::RnAbcd: return "r:abcd";
        case Family::RnAd: return "r:ad";
        case Family::RnAbd: return "r:abd";
        case Family::RnBad: return "r:bad";
        case Family::Pn: return "p";
        case Family::Ln: return "l";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::RnAbcd, Family::RnAd, Family::RnAbd, Family::RnBad, Family::Pn, Family::Ln})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

namespace detail {

/// Letter transformations a, b, c, d of the right-ideal witness on n states.
/// n = 1: everything is the identity. n = 2: only d moves (1 -> 2).
/// n = 3: b degenerates to the identity.
struct RnLetters {
    Transformation a, b, c, d;
};

inline RnLetters rn_letters(std::size_t n) {
    if (n == 0) throw InputError("witness needs n >= 1");
    auto id = identity(n);
    if (n == 1) return {id, id, id, id};
    const auto last = static_cast<StateId>(n - 1);  // state n
    const auto pen = static_cast<StateId>(n - 2);   // state n-1
    if (n == 2) return {id, id, id, unitary(pen, last, n)};
    return {cycle_range(0, pen, n), cycle_range(1, pen, n), unitary(pen, 0, n), unitary(pen, last, n)};
}

}  // namespace detail

/// R_n for the R-families. Initial state 1, single final state n.
inline Dfa build_rn(std::size_t n, Family family = Family::RnAbcd) {
    auto [a, b, c, d] = detail::rn_letters(n);
    StateSet finals = StateSet::singleton(n, static_cast<StateId>(n - 1));
    switch (family) {
        case Family::RnAbcd: return Dfa("abcd", {a, b, c, d}, 0, finals);
        case Family::RnAd: return Dfa("ad", {a, d}, 0, finals);
        case Family::RnAbd: return Dfa("abd", {a, b, d}, 0, finals);
        case Family::RnBad: return Dfa("abd", {b, a, d}, 0, finals);
        default: throw InputError("build_rn: not an R family: " + std::string(family_name(family)));
    }
}

/// P_n: like R_n(a,b,c,d) except b is the transposition (1,2). Defined for
/// n >= 4; n = 3 is accepted but carries no claims.
inline Dfa build_pn(std::size_t n) {
    if (n < 3) throw InputError("P_n needs n >= 3");
    auto [a, b, c, d] = detail::rn_letters(n);
    return Dfa("abcd", {a, transposition(0, 1, n), c, d}, 0,
               StateSet::singleton(n, static_cast<StateId>(n - 1)));
}

/// L_n over {a,b,c}: a is the cycle (1,...,n), b the transposition (1,2),
/// c the unitary (n -> 1); the only final state is n.
inline Dfa build_ln(std::size_t n) {
    if (n < 2) throw InputError("L_n needs n >= 2");
    const auto last = static_cast<StateId>(n - 1);
    return Dfa("abc", {cycle_range(0, last, n), transposition(0, 1, n), unitary(last, 0, n)}, 0,
               StateSet::singleton(n, last));
}

inline Dfa build(const WitnessSpec& spec) {
    switch (spec.family) {
        case Family::Pn: return build_pn(spec.n);
        case Family::Ln: return build_ln(spec.n);
        default: return build_rn(spec.n, spec.family);
    }
}

}  // namespace rideal
