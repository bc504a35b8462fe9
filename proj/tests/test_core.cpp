#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rideal/rideal.hpp"

using namespace rideal;

TEST(StateSet, BasicsAndOrder) {
    StateSet s(5, {0, 2});
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.to_string(), "{1,3}");
    EXPECT_EQ(s.complement().to_string(), "{2,4,5}");
    EXPECT_EQ((s | StateSet(5, {1})).size(), 3u);
    EXPECT_TRUE((s & StateSet(5, {1})).empty());
    EXPECT_TRUE(StateSet(5, {2}).subset_of(s));
    EXPECT_TRUE(StateSet(5, {0}) < StateSet(5, {1}));
    EXPECT_TRUE(StateSet(5, {0, 1}) < StateSet(5, {2}));
    EXPECT_THROW(s.insert(5), InputError);
    EXPECT_THROW(s |= StateSet(6), InputError);
}

TEST(StateSet, WideUniverse) {
    StateSet s(130, {0, 64, 129});
    EXPECT_EQ(s.members(), (std::vector<StateId>{0, 64, 129}));
    EXPECT_EQ(s.complement().size(), 127u);
    EXPECT_TRUE(StateSet(130, {63}) < StateSet(130, {64}));
}

TEST(Transformation, Constructors) {
    EXPECT_EQ(to_image_string(cycle({0, 1, 2}, 4)), "[2,3,1,4]");
    EXPECT_EQ(to_cycle_string(cycle({0, 1, 2}, 4)), "(1,2,3)");
    EXPECT_EQ(to_image_string(unitary(2, 0, 4)), "[1,2,1,4]");
    EXPECT_EQ(to_image_string(transposition(0, 1, 3)), "[2,1,3]");
    EXPECT_EQ(cycle_range(1, 1, 3), identity(3));
    EXPECT_THROW(cycle({0, 0}, 3), InputError);
    EXPECT_THROW(cycle({0, 3}, 3), InputError);
    EXPECT_THROW(cycle_range(2, 1, 3), InputError);
    EXPECT_THROW(Transformation({0, 3, 1}), InputError);
}

TEST(Transformation, ComposeActsOnTheRight) {
    auto a = cycle({0, 1, 2}, 3), t = transposition(0, 1, 3);
    // q(at) = (qa)t
    auto at = compose(a, t);
    for (StateId q = 0; q < 3; ++q) EXPECT_EQ(at(q), t(a(q)));
    EXPECT_NE(compose(a, t), compose(t, a));
    EXPECT_THROW(compose(a, identity(4)), InputError);
    EXPECT_TRUE(is_permutation(a));
    EXPECT_FALSE(is_permutation(unitary(0, 1, 3)));
}

TEST(Transformation, ApplyAndPreimage) {
    auto c = unitary(2, 0, 4);
    EXPECT_EQ(c.apply(StateSet(4, {0, 2})).to_string(), "{1}");
    EXPECT_EQ(c.preimage(StateSet(4, {0})).to_string(), "{1,3}");
}

namespace {

Dfa parity() {
    // even number of a's
    return Dfa("ab", {transposition(0, 1, 2), identity(2)}, 0, StateSet(2, {0}));
}

}  // namespace

TEST(Dfa, RunAndValidation) {
    Dfa d = parity();
    EXPECT_TRUE(accepts(d, ""));
    EXPECT_TRUE(accepts(d, "abab"));
    EXPECT_FALSE(accepts(d, "ab"));
    EXPECT_THROW(d.letter_index('c'), InputError);
    EXPECT_THROW(Dfa("aa", {identity(2), identity(2)}, 0, StateSet(2)), InputError);
    EXPECT_THROW(Dfa("ab", {identity(2)}, 0, StateSet(2)), InputError);
    EXPECT_THROW(Dfa("ab", {identity(2), identity(3)}, 0, StateSet(2)), InputError);
    EXPECT_THROW(Dfa("ab", {identity(2), identity(2)}, 2, StateSet(2)), InputError);
}

TEST(Nfa, EpsilonClosure) {
    auto a = Nfa::empty(3, "a", true);
    a.add_epsilon(0, 1);
    a.add_epsilon(1, 2);
    a.add(2, 0, 0);
    a.set_initial(0);
    a.set_final(2);
    EXPECT_EQ(a.closure(StateSet(3, {0})).size(), 3u);
    EXPECT_TRUE(a.accepts(""));
    EXPECT_TRUE(a.accepts("aaa"));
}

TEST(Determinize, KeepsEmptySubsetAsDeadState) {
    auto a = Nfa::empty(2, "ab");
    a.add(0, 0, 1);
    a.set_initial(0);
    a.set_final(1);
    auto det = determinize(a);
    EXPECT_EQ(det.dfa.size(), 3u);
    EXPECT_EQ(det.subsets[0].to_string(), "{1}");
    EXPECT_EQ(det.subsets[1].to_string(), "{2}");
    EXPECT_TRUE(det.subsets[2].empty());
    EXPECT_THROW(determinize(a, 2), ResourceError);
}

TEST(Determinize, CapReportsPartialCount) {
    auto a = to_nfa(build_rn(6, Family::RnAd));
    try {
        determinize(reverse(a), 5);
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_GE(e.partial(), 5u);
    }
}

TEST(Minimize, MatchesMooreOracle) {
    Dfa d("ab", {Transformation({1, 2, 3, 3}), Transformation({0, 0, 0, 3})}, 0, StateSet(4, {3}));
    EXPECT_EQ(complexity(d), oracle::complexity(d));
    EXPECT_EQ(complexity(parity()), 2u);
    // unreachable states are dropped
    Dfa u("a", {Transformation({0, 0})}, 0, StateSet(2, {1}));
    EXPECT_EQ(minimize(u).size(), 1u);
}

TEST(Minimize, AllFinalOrNoneFinal) {
    Dfa all("ab", {cycle({0, 1, 2}, 3), identity(3)}, 0, StateSet::full(3));
    Dfa none("ab", {cycle({0, 1, 2}, 3), identity(3)}, 0, StateSet(3));
    EXPECT_EQ(complexity(all), 1u);
    EXPECT_EQ(complexity(none), 1u);
}

TEST(Minimize, WitnessStateComplexities) {
    Dfa d = build_rn(5, Family::RnAd);
    EXPECT_EQ(state_complexities(d), (std::vector<std::size_t>{5, 5, 5, 5, 1}));
    for (StateId q = 0; q < 5; ++q) EXPECT_EQ(state_complexities(d)[q], oracle::complexity_from(d, q));
}

TEST(Reverse, ReversalAcceptsReversedWords) {
    Dfa d = build_rn(4, Family::RnAbd);
    Nfa r = reverse(d);
    for (const auto& w : all_words("abd", 5)) {
        Word rev(w.rbegin(), w.rend());
        EXPECT_EQ(r.accepts(rev), accepts(d, w)) << w;
    }
}

TEST(DistinguishingWord, ShortestLeast) {
    Dfa d = build_rn(4, Family::RnAd);
    auto w = distinguishing_word(d, 0, 1, d.finals());
    ASSERT_TRUE(w);
    EXPECT_NE(accepts(with_initial(d, 0), *w), accepts(with_initial(d, 1), *w));
    EXPECT_EQ(*w, "ad");
    EXPECT_EQ(distinguishing_word(d, 2, 3, d.finals()), std::optional<Word>(""));
    EXPECT_FALSE(distinguishing_word(d, 1, 1, d.finals()));
}

TEST(RightIdeal, Predicate) {
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_right_ideal(build_rn(n)));
    EXPECT_FALSE(is_right_ideal(parity()));
    EXPECT_FALSE(is_right_ideal(build_ln(4)));
    Dfa empty("a", {identity(1)}, 0, StateSet(1));
    EXPECT_TRUE(is_right_ideal(empty));
}

TEST(Equivalence, IsomorphicAndEquivalent) {
    Dfa d = build_rn(4, Family::RnAd);
    // an unreachable extra state
    Dfa padded("ad", {Transformation({1, 2, 0, 3, 4}), Transformation({0, 1, 3, 3, 4})}, 0, StateSet(5, {3}));
    EXPECT_TRUE(isomorphic(d, padded));
    // the final sink split in two
    Dfa split("ad", {Transformation({1, 2, 0, 4, 3}), Transformation({0, 1, 3, 3, 4})}, 0, StateSet(5, {3, 4}));
    EXPECT_FALSE(isomorphic(d, split));
    EXPECT_TRUE(equivalent(d, split));
    EXPECT_THROW(equivalent(d, build_rn(4, Family::RnAbd)), InputError);
}

TEST(Restrict, Alphabet) {
    Dfa d = build_rn(5);
    Dfa ad = restrict_alphabet(d, "ad");
    EXPECT_TRUE(isomorphic(ad, build_rn(5, Family::RnAd)));
    EXPECT_THROW(restrict_alphabet(d, "ax"), InputError);
}
