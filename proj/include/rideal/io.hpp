#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rideal/automata.hpp"
#include "rideal/error.hpp"

namespace rideal {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json ids_json(const StateSet& s) {
    auto arr = ordered_json::array();
    s.for_each([&](StateId q) { arr.push_back(q + 1); });
    return arr;
}

inline ordered_json alphabet_json(const Alphabet& sigma) {
    auto arr = ordered_json::array();
    for (char c : sigma) arr.push_back(std::string(1, c));
    return arr;
}

inline StateId parse_id(const ordered_json& j, std::size_t n) {
    if (!j.is_number_integer()) throw InputError("state ids must be integers");
    auto v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw InputError("state id " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<StateId>(v - 1);
}

inline StateSet parse_ids(const ordered_json& j, std::size_t n) {
    if (!j.is_array()) throw InputError("expected an array of state ids");
    StateSet s(n);
    for (const auto& v : j) s.insert(parse_id(v, n));
    return s;
}

inline Alphabet parse_alphabet(const ordered_json& j) {
    if (!j.is_array()) throw InputError("alphabet must be an array of one-character strings");
    Alphabet sigma;
    for (const auto& v : j) {
        if (!v.is_string() || v.get<std::string>().size() != 1)
            throw InputError("letters must be one-character strings");
        sigma += v.get<std::string>()[0];
    }
    return sigma;
}

inline const ordered_json& field(const ordered_json& j, const char* name) {
    if (!j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

/// Letters of `sigma` joined by commas, in alphabet order.
inline std::string letter_list(const std::vector<char>& letters) {
    std::string s;
    for (char c : letters) {
        if (!s.empty()) s += ',';
        s += c;
    }
    return s;
}

}  // namespace detail

/// {"type":"dfa","n","alphabet","delta":{letter:[targets]},"initial","finals"}, 1-based ids.
inline ordered_json to_json(const Dfa& d) {
    ordered_json j;
    j["type"] = "dfa";
    j["n"] = d.size();
    j["alphabet"] = detail::alphabet_json(d.alphabet());
    ordered_json delta = ordered_json::object();
    for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
        auto row = ordered_json::array();
        for (StateId p : d.delta(l).image()) row.push_back(p + 1);
        delta[std::string(1, d.alphabet()[l])] = std::move(row);
    }
    j["delta"] = std::move(delta);
    j["initial"] = d.initial() + 1;
    j["finals"] = detail::ids_json(d.finals());
    return j;
}

/// {"type":"nfa","n","alphabet","eta":{letter:[[targets] per state]},
///  "epsilon":[[targets] per state] (only with ε-moves),"initials","finals"}.
inline ordered_json to_json(const Nfa& a) {
    ordered_json j;
    j["type"] = "nfa";
    j["n"] = a.size();
    j["alphabet"] = detail::alphabet_json(a.alphabet());
    ordered_json eta = ordered_json::object();
    for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
        auto rows = ordered_json::array();
        for (StateId q = 0; q < a.size(); ++q) rows.push_back(detail::ids_json(a.successors(q, l)));
        eta[std::string(1, a.alphabet()[l])] = std::move(rows);
    }
    j["eta"] = std::move(eta);
    if (a.has_epsilon()) {
        auto rows = ordered_json::array();
        for (StateId q = 0; q < a.size(); ++q) rows.push_back(detail::ids_json(a.epsilon(q)));
        j["epsilon"] = std::move(rows);
    }
    j["initials"] = detail::ids_json(a.initials());
    j["finals"] = detail::ids_json(a.finals());
    return j;
}

inline Dfa dfa_from_json(const ordered_json& j) {
    if (!j.is_object()) throw InputError("automaton JSON must be an object");
    const auto& nj = detail::field(j, "n");
    if (!nj.is_number_integer() || nj.get<long long>() < 1) throw InputError("n must be a positive integer");
    const auto n = nj.get<std::size_t>();
    Alphabet sigma = detail::parse_alphabet(detail::field(j, "alphabet"));
    const auto& delta = detail::field(j, "delta");
    if (!delta.is_object()) throw InputError("delta must map letters to target arrays");
    std::vector<Transformation> ts;
    for (char c : sigma) {
        std::string key(1, c);
        if (!delta.contains(key)) throw InputError("delta has no row for letter '" + key + "'");
        const auto& row = delta.at(key);
        if (!row.is_array() || row.size() != n) throw InputError("delta row for '" + key + "' must have n entries");
        std::vector<StateId> img;
        for (const auto& v : row) img.push_back(detail::parse_id(v, n));
        ts.emplace_back(std::move(img));
    }
    if (delta.size() != sigma.size()) throw InputError("delta has rows for letters outside the alphabet");
    return Dfa(std::move(sigma), std::move(ts), detail::parse_id(detail::field(j, "initial"), n),
               detail::parse_ids(detail::field(j, "finals"), n));
}

inline Nfa nfa_from_json(const ordered_json& j) {
    if (!j.is_object()) throw InputError("automaton JSON must be an object");
    const auto& nj = detail::field(j, "n");
    if (!nj.is_number_integer() || nj.get<long long>() < 1) throw InputError("n must be a positive integer");
    const auto n = nj.get<std::size_t>();
    Alphabet sigma = detail::parse_alphabet(detail::field(j, "alphabet"));
    const auto& eta = detail::field(j, "eta");
    if (!eta.is_object()) throw InputError("eta must map letters to per-state target arrays");
    auto out = Nfa::empty(n, sigma, j.contains("epsilon"));
    for (std::size_t l = 0; l < sigma.size(); ++l) {
        std::string key(1, sigma[l]);
        if (!eta.contains(key)) continue;  // no transitions on this letter
        const auto& rows = eta.at(key);
        if (!rows.is_array() || rows.size() != n) throw InputError("eta row for '" + key + "' must have n entries");
        for (StateId q = 0; q < n; ++q) detail::parse_ids(rows[q], n).for_each([&](StateId p) { out.add(q, l, p); });
    }
    if (j.contains("epsilon")) {
        const auto& rows = j.at("epsilon");
        if (!rows.is_array() || rows.size() != n) throw InputError("epsilon must have n entries");
        for (StateId q = 0; q < n; ++q) detail::parse_ids(rows[q], n).for_each([&](StateId p) { out.add_epsilon(q, p); });
    }
    detail::parse_ids(detail::field(j, "initials"), n).for_each([&](StateId q) { out.set_initial(q); });
    detail::parse_ids(detail::field(j, "finals"), n).for_each([&](StateId q) { out.set_final(q); });
    return out;
}

using Automaton = std::variant<Dfa, Nfa>;

/// A DFA when the object has "delta", an NFA when it has "eta".
inline Automaton automaton_from_json(const ordered_json& j) {
    if (j.is_object() && j.contains("delta")) return dfa_from_json(j);
    if (j.is_object() && j.contains("eta")) return nfa_from_json(j);
    throw InputError("automaton JSON needs either \"delta\" or \"eta\"");
}

inline Automaton parse_automaton(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return automaton_from_json(j);
}

/// Graphviz rendering: 1-based node names, double circles for finals, one
/// edge per (source, target) labelled with its letters in alphabet order.
inline std::string to_dot(const Dfa& d, const std::string& name = "dfa") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
    os << "  start [shape=point];\n  start -> " << d.initial() + 1 << ";\n";
    for (StateId q = 0; q < d.size(); ++q)
        os << "  " << q + 1 << (d.is_final(q) ? " [shape=doublecircle]" : "") << ";\n";
    for (StateId q = 0; q < d.size(); ++q) {
        std::map<StateId, std::vector<char>> edges;
        for (std::size_t l = 0; l < d.alphabet().size(); ++l) edges[d.next(q, l)].push_back(d.alphabet()[l]);
        for (const auto& [p, letters] : edges)
            os << "  " << q + 1 << " -> " << p + 1 << " [label=\"" << detail::letter_list(letters) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const Nfa& a, const std::string& name = "nfa") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
    os << "  start [shape=point];\n";
    a.initials().for_each([&](StateId q) { os << "  start -> " << q + 1 << ";\n"; });
    for (StateId q = 0; q < a.size(); ++q)
        os << "  " << q + 1 << (a.finals().contains(q) ? " [shape=doublecircle]" : "") << ";\n";
    for (StateId q = 0; q < a.size(); ++q) {
        std::map<StateId, std::vector<std::string>> edges;
        for (std::size_t l = 0; l < a.alphabet().size(); ++l)
            a.successors(q, l).for_each([&](StateId p) { edges[p].push_back(std::string(1, a.alphabet()[l])); });
        a.epsilon(q).for_each([&](StateId p) { edges[p].push_back("ε"); });
        for (const auto& [p, labels] : edges) {
            std::string joined;
            for (const auto& s : labels) joined += (joined.empty() ? "" : ",") + s;
            os << "  " << q + 1 << " -> " << p + 1 << " [label=\"" << joined << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace rideal
