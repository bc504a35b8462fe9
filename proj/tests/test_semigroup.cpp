#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rideal/rideal.hpp"

using namespace rideal;

TEST(Semigroup, SmallClosureMatchesOracle) {
    for (std::size_t n = 2; n <= 5; ++n) {
        Dfa d = build_rn(n);
        auto sg = generate_semigroup(GeneratorSet::of(d));
        EXPECT_EQ(sg.size(), oracle::semigroup_size(oracle::generators(d), n)) << n;
    }
}

TEST(Semigroup, WitnessWordsProduceTheirElements) {
    Dfa d = build_rn(4);
    auto sg = generate_semigroup(GeneratorSet::of(d));
    for (std::size_t i = 0; i < sg.size(); ++i) {
        auto w = sg.witness(i);
        ASSERT_FALSE(w.empty());
        EXPECT_EQ(transformation_of_word(d, w), sg.element(i)) << w;
    }
    // BFS order: witnesses never get shorter
    for (std::size_t i = 1; i < sg.size(); ++i) EXPECT_LE(sg.witness(i - 1).size(), sg.witness(i).size());
}

TEST(Semigroup, IdentityOnlyWhenSomeWordActsAsIt) {
    Dfa d("a", {unitary(0, 1, 2)}, 0, StateSet(2, {1}));
    auto sg = generate_semigroup(GeneratorSet::of(d));
    EXPECT_EQ(sg.size(), 1u);
    EXPECT_FALSE(sg.contains(identity(2)));
    Dfa p("a", {transposition(0, 1, 2)}, 0, StateSet(2, {1}));
    EXPECT_TRUE(generate_semigroup(GeneratorSet::of(p)).contains(identity(2)));
}

TEST(Semigroup, SymmetricAndFullTransformationMonoids) {
    std::size_t fact = 2, power = 1;
    for (std::size_t n = 3; n <= 6; ++n) {
        fact *= n;
        power = 1;
        for (std::size_t i = 0; i < n; ++i) power *= n;
        auto a = cycle_range(0, static_cast<StateId>(n - 1), n), b = transposition(0, 1, n);
        auto c = unitary(static_cast<StateId>(n - 1), 0, n);
        EXPECT_EQ(generate_semigroup(GeneratorSet("ab", {a, b})).size(), fact);
        EXPECT_EQ(generate_semigroup(GeneratorSet("abc", {a, b, c})).size(), power);
    }
}

TEST(Semigroup, CapThrowsWithPartialCount) {
    Dfa d = build_rn(6);
    try {
        generate_semigroup(GeneratorSet::of(d), 1000);
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_GE(e.partial(), 1000u);
    }
}

TEST(Semigroup, Validation) {
    EXPECT_THROW(GeneratorSet("a", {}), InputError);
    EXPECT_THROW(GeneratorSet("ab", {identity(2), identity(3)}), InputError);
    EXPECT_THROW(transformation_of_word(build_rn(3), ""), InputError);
    EXPECT_THROW(transformation_of_word(build_rn(3), "x"), InputError);
}

TEST(Semigroup, SyntacticUsesMinimalDfa) {
    // two copies of the final sink collapse
    Dfa split("ad", {Transformation({1, 2, 0, 4, 3}), Transformation({0, 1, 3, 3, 4})}, 0, StateSet(5, {3, 4}));
    EXPECT_EQ(syntactic_semigroup_size(split), syntactic_semigroup_size(build_rn(4, Family::RnAd)));
}

TEST(Witness, Definitions) {
    Dfa r = build_rn(5);
    EXPECT_EQ(r.alphabet(), "abcd");
    EXPECT_EQ(to_cycle_string(r.delta_of('a')), "(1,2,3,4)");
    EXPECT_EQ(to_cycle_string(r.delta_of('b')), "(2,3,4)");
    EXPECT_EQ(to_image_string(r.delta_of('c')), "[1,2,3,1,5]");
    EXPECT_EQ(to_image_string(r.delta_of('d')), "[1,2,3,5,5]");
    EXPECT_EQ(r.finals().to_string(), "{5}");
    EXPECT_EQ(r.initial(), 0u);

    Dfa bad = build_rn(5, Family::RnBad);
    EXPECT_EQ(bad.alphabet(), "abd");
    EXPECT_EQ(bad.delta_of('a'), r.delta_of('b'));
    EXPECT_EQ(bad.delta_of('b'), r.delta_of('a'));

    Dfa p = build_pn(5);
    EXPECT_EQ(to_cycle_string(p.delta_of('b')), "(1,2)");
    EXPECT_THROW(build_pn(2), InputError);
    EXPECT_THROW(build_rn(0), InputError);
}

TEST(Witness, SmallCases) {
    Dfa r1 = build_rn(1);
    for (const auto& t : r1.transformations()) EXPECT_EQ(t, identity(1));
    EXPECT_TRUE(r1.is_final(0));
    Dfa r2 = build_rn(2);
    EXPECT_EQ(r2.delta_of('a'), identity(2));
    EXPECT_EQ(to_image_string(r2.delta_of('d')), "[2,2]");
}

TEST(Witness, RegularComparisonFamily) {
    Dfa l = build_ln(4);
    EXPECT_EQ(l.alphabet(), "abc");
    EXPECT_EQ(to_cycle_string(l.delta_of('a')), "(1,2,3,4)");
    EXPECT_EQ(to_cycle_string(l.delta_of('b')), "(1,2)");
    EXPECT_EQ(to_image_string(l.delta_of('c')), "[1,2,3,1]");
    for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(oracle::complexity(build_ln(n)), n);
}

TEST(Witness, FamilyNames) {
    for (auto f : {Family::RnAbcd, Family::RnAd, Family::RnAbd, Family::RnBad, Family::Pn, Family::Ln})
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_FALSE(parse_family("q"));
}

TEST(Witness, MinimalForEveryFamily) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (auto f : {Family::RnAbcd, Family::RnAd, Family::RnAbd, Family::RnBad})
            EXPECT_EQ(oracle::complexity(build_rn(n, f)), n) << family_name(f) << n;
    }
}

TEST(Witness, WordActingAsTransposition) {
    for (std::size_t n = 3; n <= 8; ++n) {
        Word w(n - 2, 'a');
        w += 'b';
        EXPECT_EQ(transformation_of_word(build_rn(n), w), transposition(0, 1, n)) << n;
    }
}
