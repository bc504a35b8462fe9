#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rideal/algorithms.hpp"
#include "rideal/automata.hpp"
#include "rideal/error.hpp"
#include "rideal/transformation.hpp"

namespace rideal {

inline constexpr std::size_t kDefaultSemigroupCap = 5'000'000;

/// Labelled generators of equal degree.
class GeneratorSet {
public:
    GeneratorSet(std::string labels, std::vector<Transformation> gens)
        : labels_(std::move(labels)), gens_(std::move(gens)) {
        if (gens_.empty()) throw InputError("a generator set needs at least one generator");
        if (labels_.size() != gens_.size()) throw InputError("one label per generator");
        for (const auto& g : gens_)
            if (g.degree() != gens_.front().degree()) throw InputError("generators of mixed degree");
    }

    static GeneratorSet of(const Dfa& d) { return GeneratorSet(d.alphabet(), d.transformations()); }

    std::size_t degree() const noexcept { return gens_.front().degree(); }
    std::size_t size() const noexcept { return gens_.size(); }
    char label(std::size_t i) const { return labels_.at(i); }
    const Transformation& operator[](std::size_t i) const { return gens_.at(i); }

private:
    std::string labels_;
    std::vector<Transformation> gens_;
};

/// All transformations induced by non-empty generator words, with a shortest
/// witness word for each (ties broken by generator order).
class SemigroupClosure {
public:
    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t degree() const noexcept { return degree_; }

    Transformation element(std::size_t i) const {
        auto b = flat_.begin() + static_cast<std::ptrdiff_t>(i * degree_);
        return Transformation(std::vector<StateId>(b, b + static_cast<std::ptrdiff_t>(degree_)));
    }

    bool contains(const Transformation& t) const {
        return t.degree() == degree_ && index_.contains(key(t.image()));
    }

    Word witness(std::size_t i) const {
        Word w;
        for (std::size_t at = i; at != kRoot; at = parent_[at]) w.push_back(letter_[at]);
        return {w.rbegin(), w.rend()};
    }

private:
    friend SemigroupClosure generate_semigroup(const GeneratorSet&, std::size_t);
    static constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

    // Degree <= 16 packs into 4-bit nibbles; larger degrees fall back to a
    // byte string key.
    struct Key {
        std::uint64_t packed = 0;
        std::string wide;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return k.wide.empty() ? std::hash<std::uint64_t>{}(k.packed * 0x9e3779b97f4a7c15ull)
                                  : std::hash<std::string>{}(k.wide);
        }
    };

    Key key(std::span<const StateId> img) const {
        Key k;
        if (degree_ <= 16) {
            for (std::size_t q = 0; q < img.size(); ++q) k.packed |= std::uint64_t{img[q]} << (4 * q);
        } else {
            k.wide.reserve(img.size() * 4);
            for (StateId p : img) k.wide.append(reinterpret_cast<const char*>(&p), sizeof p);
        }
        return k;
    }

    std::size_t degree_ = 0;
    std::vector<StateId> flat_;
    std::vector<std::size_t> parent_;
    std::vector<char> letter_;
    std::unordered_map<Key, std::size_t, KeyHash> index_;
};

/// Breadth-first closure: start from the generators and right-multiply by
/// every generator until nothing new appears.
inline SemigroupClosure generate_semigroup(const GeneratorSet& gens, std::size_t cap = kDefaultSemigroupCap) {
    if (cap == 0) throw InputError("semigroup cap must be positive");
    SemigroupClosure sg;
    const std::size_t n = gens.degree();
    sg.degree_ = n;

    std::vector<StateId> scratch(n);
    auto intern = [&](std::span<const StateId> img, std::size_t parent, char letter) {
        auto [it, inserted] = sg.index_.try_emplace(sg.key(img), sg.parent_.size());
        if (!inserted) return;
        if (sg.parent_.size() >= cap)
            throw ResourceError("semigroup closure exceeded the cap of " + std::to_string(cap) + " elements",
                                sg.parent_.size());
        sg.flat_.insert(sg.flat_.end(), img.begin(), img.end());
        sg.parent_.push_back(parent);
        sg.letter_.push_back(letter);
    };

    for (std::size_t g = 0; g < gens.size(); ++g) intern(gens[g].image(), SemigroupClosure::kRoot, gens.label(g));
    for (std::size_t i = 0; i < sg.parent_.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            auto gi = gens[g].image();
            for (std::size_t q = 0; q < n; ++q) scratch[q] = gi[sg.flat_[i * n + q]];
            intern(scratch, i, gens.label(g));
        }
    }
    return sg;
}

/// t_w for a non-empty word w.
inline Transformation transformation_of_word(const Dfa& d, std::string_view w) {
    if (w.empty()) throw InputError("t_w is defined for non-empty words only");
    Transformation t = d.delta_of(w.front());
    for (char c : w.substr(1)) t = compose(t, d.delta_of(c));
    return t;
}

/// Size of the transition semigroup of the minimal DFA, which is the size of
/// the syntactic semigroup of the language.
inline std::size_t syntactic_semigroup_size(const Dfa& d, std::size_t cap = kDefaultSemigroupCap) {
    Dfa m = minimize(d);
    if (m.alphabet().empty()) return 0;
    return generate_semigroup(GeneratorSet::of(m), cap).size();
}

}  // namespace rideal
