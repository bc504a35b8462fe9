#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rideal/error.hpp"
#include "rideal/state_set.hpp"

namespace rideal {

/// Total map on {0, ..., n-1}; `image()[q]` is the state q is sent to.
///
/// Transformations act on the right: for a word w, q·t_w = δ(q, w). So
/// `compose(s, t)` means "apply s, then t", and the transformation of uv is
/// compose(t_u, t_v). Every function in this library uses that order.
class Transformation {
public:
    Transformation() = default;

    explicit Transformation(std::vector<StateId> image) : image_(std::move(image)) {
        for (StateId p : image_)
            if (p >= image_.size())
                throw InputError("transformation entry " + std::to_string(p + 1) +
                                 " out of range for degree " + std::to_string(image_.size()));
    }

    std::size_t degree() const noexcept { return image_.size(); }
    std::span<const StateId> image() const noexcept { return image_; }
    StateId operator()(StateId q) const { return image_.at(q); }

    /// Image of a set of states.
    StateSet apply(const StateSet& s) const {
        StateSet out(s.universe());
        s.for_each([&](StateId q) { out.insert(image_.at(q)); });
        return out;
    }

    /// Preimage {p | p·t ∈ s}.
    StateSet preimage(const StateSet& s) const {
        StateSet out(degree());
        for (std::size_t p = 0; p < image_.size(); ++p)
            if (s.contains(image_[p])) out.insert(static_cast<StateId>(p));
        return out;
    }

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation&, const Transformation&) = default;

private:
    std::vector<StateId> image_;
};

inline Transformation identity(std::size_t n) {
    std::vector<StateId> img(n);
    for (std::size_t q = 0; q < n; ++q) img[q] = static_cast<StateId>(q);
    return Transformation(std::move(img));
}

/// Cycle (p1, p2, ..., pk): p1 -> p2 -> ... -> pk -> p1, everything else fixed.
inline Transformation cycle(std::span<const StateId> elems, std::size_t n) {
    std::vector<StateId> img(n);
    for (std::size_t q = 0; q < n; ++q) img[q] = static_cast<StateId>(q);
    StateSet seen(n);
    for (StateId e : elems) {
        if (e >= n) throw InputError("cycle element " + std::to_string(e + 1) + " out of range");
        if (seen.contains(e)) throw InputError("cycle element " + std::to_string(e + 1) + " repeated");
        seen.insert(e);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) img[elems[i]] = elems[(i + 1) % elems.size()];
    return Transformation(std::move(img));
}

inline Transformation cycle(std::initializer_list<StateId> elems, std::size_t n) {
    return cycle(std::span<const StateId>(elems.begin(), elems.size()), n);
}

/// Cycle on the contiguous run first, first+1, ..., last (0-based, inclusive).
/// A one-element run is the identity.
inline Transformation cycle_range(StateId first, StateId last, std::size_t n) {
    if (last < first) throw InputError("empty cycle range");
    std::vector<StateId> elems;
    for (StateId q = first; q <= last; ++q) elems.push_back(q);
    return cycle(std::span<const StateId>(elems), n);
}

inline Transformation transposition(StateId p, StateId q, std::size_t n) {
    if (p == q) throw InputError("transposition needs two distinct states");
    const StateId e[] = {p, q};
    return cycle(std::span<const StateId>(e), n);
}

/// (p -> q): p is sent to q, every other state is fixed.
inline Transformation unitary(StateId p, StateId q, std::size_t n) {
    if (p >= n || q >= n) throw InputError("unitary transformation endpoint out of range");
    auto t = identity(n);
    std::vector<StateId> img(t.image().begin(), t.image().end());
    img[p] = q;
    return Transformation(std::move(img));
}

/// Apply s, then t.
inline Transformation compose(const Transformation& s, const Transformation& t) {
    if (s.degree() != t.degree())
        throw InputError("cannot compose transformations of degree " + std::to_string(s.degree()) +
                         " and " + std::to_string(t.degree()));
    std::vector<StateId> img(s.degree());
    for (std::size_t q = 0; q < s.degree(); ++q) img[q] = t.image()[s.image()[q]];
    return Transformation(std::move(img));
}

inline bool is_permutation(const Transformation& t) {
    std::vector<bool> hit(t.degree(), false);
    for (StateId p : t.image()) {
        if (hit[p]) return false;
        hit[p] = true;
    }
    return true;
}

/// One-line image notation, 1-based: "[2,3,1,4]".
inline std::string to_image_string(const Transformation& t) {
    std::string s = "[";
    for (std::size_t q = 0; q < t.degree(); ++q) {
        if (q) s += ',';
        s += std::to_string(t.image()[q] + 1);
    }
    return s + "]";
}

/// Cycle notation for permutations, 1-based, fixed points omitted:
/// "(1,2,3)(4,5)". The identity renders as "()". Throws for non-permutations.
inline std::string to_cycle_string(const Transformation& t) {
    if (!is_permutation(t)) throw InputError("cycle notation requires a permutation");
    std::string s;
    std::vector<bool> done(t.degree(), false);
    for (std::size_t q = 0; q < t.degree(); ++q) {
        if (done[q] || t.image()[q] == q) {
            done[q] = true;
            continue;
        }
        s += '(';
        std::size_t p = q;
        bool first = true;
        while (!done[p]) {
            if (!first) s += ',';
            s += std::to_string(p + 1);
            done[p] = true;
            first = false;
            p = t.image()[p];
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

}  // namespace rideal
