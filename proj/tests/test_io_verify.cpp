#include <gtest/gtest.h>

#include "rideal/rideal.hpp"

using namespace rideal;

TEST(Json, DfaRoundTrip) {
    Dfa d = build_rn(4);
    auto j = to_json(d);
    EXPECT_EQ(j["type"], "dfa");
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["delta"]["a"], ordered_json::parse("[2,3,1,4]"));
    EXPECT_EQ(j["finals"], ordered_json::parse("[4]"));
    auto back = parse_automaton(j.dump());
    ASSERT_TRUE(std::holds_alternative<Dfa>(back));
    EXPECT_EQ(std::get<Dfa>(back), d);
}

TEST(Json, NfaRoundTrip) {
    Nfa r = reverse(build_rn(3, Family::RnAd));
    auto back = parse_automaton(to_json(r).dump());
    ASSERT_TRUE(std::holds_alternative<Nfa>(back));
    const Nfa& n = std::get<Nfa>(back);
    EXPECT_EQ(to_json(n), to_json(r));
    for (const auto& w : all_words("ad", 5)) EXPECT_EQ(n.accepts(w), r.accepts(w));

    auto e = Nfa::empty(2, "a", true);
    e.add_epsilon(0, 1);
    e.set_initial(0);
    e.set_final(1);
    auto eb = std::get<Nfa>(parse_automaton(to_json(e).dump()));
    EXPECT_TRUE(eb.accepts(""));
}

TEST(Json, RejectsBadInput) {
    EXPECT_THROW(parse_automaton("{"), InputError);
    EXPECT_THROW(parse_automaton("[]"), InputError);
    EXPECT_THROW(parse_automaton(R"({"n":2,"alphabet":["a"],"delta":{"a":[1,3]},"initial":1,"finals":[]})"),
                 InputError);
    EXPECT_THROW(parse_automaton(R"({"n":2,"alphabet":["a"],"delta":{"a":[1]},"initial":1,"finals":[]})"),
                 InputError);
    EXPECT_THROW(parse_automaton(R"({"n":2,"alphabet":["ab"],"delta":{},"initial":1,"finals":[]})"), InputError);
    EXPECT_THROW(parse_automaton(R"({"n":1,"alphabet":["a"],"delta":{"a":[1],"b":[1]},"initial":1,"finals":[]})"),
                 InputError);
    EXPECT_THROW(parse_automaton(R"({"n":1,"alphabet":["a"],"delta":{"a":[1]},"finals":[]})"), InputError);
}

TEST(Dot, DfaLayout) {
    auto dot = to_dot(build_rn(3, Family::RnAd));
    EXPECT_NE(dot.find("start -> 1;"), std::string::npos);
    EXPECT_NE(dot.find("3 [shape=doublecircle];"), std::string::npos);
    EXPECT_NE(dot.find("2 -> 1 [label=\"a\"];"), std::string::npos);
    EXPECT_NE(dot.find("3 -> 3 [label=\"a,d\"];"), std::string::npos);
}

TEST(Dot, NfaEpsilon) {
    auto e = Nfa::empty(2, "a", true);
    e.add_epsilon(0, 1);
    e.add(0, 0, 1);
    e.set_initial(0);
    e.set_final(1);
    auto dot = to_dot(e);
    EXPECT_NE(dot.find("1 -> 2 [label=\"a,ε\"];"), std::string::npos);
}

namespace {

VerifyOptions small_options() {
    VerifyOptions o;
    o.n_min = 3;
    o.n_max = 5;
    o.m_max = 4;
    o.semigroup_n_max = 5;
    o.workers = 4;
    return o;
}

}  // namespace

TEST(Verify, AllPassOnSmallGrid) {
    auto reports = verify_main_results(small_options());
    EXPECT_EQ(exit_code(reports), 0);
    std::size_t pass = 0;
    for (const auto& r : reports) {
        if (r.status == Status::Pass) ++pass;
        EXPECT_NE(r.status, Status::Fail) << claim_name(r.claim) << ' ' << r.note;
    }
    EXPECT_GT(pass, 50u);
}

TEST(Verify, EveryClaimHasACell) {
    VerifyOptions o;
    std::set<std::string_view> seen;
    for (const auto& r : verify_main_results(o)) seen.insert(claim_name(r.claim));
    EXPECT_EQ(seen.size(), 17u);
}

TEST(Verify, DeterministicJson) {
    auto o = small_options();
    auto a = reports_to_json(verify_main_results(o)).dump();
    o.workers = 1;
    auto b = reports_to_json(verify_main_results(o)).dump();
    EXPECT_EQ(a, b);
}

TEST(Verify, CorruptedWitnessFails) {
    WitnessFactory broken = [](Family f, std::size_t n) {
        Dfa d = build({f, n});
        // send state 1 on the first letter to state 1 instead of 2
        auto delta = d.transformations();
        std::vector<StateId> img(delta[0].image().begin(), delta[0].image().end());
        img[0] = 0;
        delta[0] = Transformation(img);
        return Dfa(d.alphabet(), delta, d.initial(), d.finals());
    };
    auto reports = verify_main_results(small_options(), broken);
    EXPECT_EQ(exit_code(reports), 1);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.status == Status::Fail;
    EXPECT_GT(failed, 0u);
}

TEST(Verify, ResourceCapIsIsolated) {
    auto o = small_options();
    o.semigroup_cap = 100;
    auto reports = verify_main_results(o);
    EXPECT_EQ(exit_code(reports), 3);
    bool skipped = false, passed = false;
    for (const auto& r : reports) {
        if (r.claim == ClaimId::Semigroup && r.n == 5u) skipped = r.status == Status::SkippedResource;
        if (r.claim == ClaimId::Quotients) passed = r.status == Status::Pass;
    }
    EXPECT_TRUE(skipped);
    EXPECT_TRUE(passed);
}

TEST(Verify, DegenerateSection) {
    VerifyOptions o;
    o.n_min = 1;
    o.n_max = 3;
    o.m_max = 3;
    auto reports = verify_main_results(o);
    EXPECT_EQ(exit_code(reports), 0);
    bool star_skipped = false;
    for (const auto& r : reports) {
        if (r.claim == ClaimId::Star && r.n == 1u) star_skipped = r.status == Status::Skipped;
        if (r.m == 1u || r.n == 1u) {
            EXPECT_NE(r.status, Status::Fail) << claim_name(r.claim);
        }
    }
    EXPECT_TRUE(star_skipped);
    EXPECT_THROW(verify_main_results(VerifyOptions{.n_min = 4, .n_max = 3}), InputError);
}

TEST(Verify, JsonSchema) {
    auto j = reports_to_json(verify_main_results(small_options()));
    ASSERT_TRUE(j["reports"].is_array());
    const auto& r = j["reports"][0];
    for (const char* k : {"claim", "params", "expected", "measured", "pass", "elapsed_ms", "note"})
        EXPECT_TRUE(r.contains(k)) << k;
    EXPECT_TRUE(r["elapsed_ms"].is_null());
    EXPECT_TRUE(r["params"].contains("m"));
    EXPECT_EQ(j["summary"]["fail"], 0);
    auto t = reports_to_json(verify_main_results(small_options()), true);
    EXPECT_TRUE(t["reports"][0]["elapsed_ms"].is_number());
}

TEST(Table, MarkdownLayout) {
    auto md = emit_table1(4, TableFormat::Markdown);
    EXPECT_NE(md.find("| r=1 | ∗/**1** | **2**/**3** | **5**/**10** | 13/29 |"), std::string::npos) << md;
    EXPECT_NE(md.find("| max | 1/1 | 2/3 | 5/10 | 16/43 |"), std::string::npos);
    EXPECT_NE(md.find("| ratio | - | 2/3 | 2.50/3.33 | 3.20/4.30 |"), std::string::npos);
}

TEST(Table, Json) {
    auto j = ordered_json::parse(emit_table1(3, TableFormat::Json));
    bool found = false;
    for (const auto& rec : j["records"])
        if (rec["n"] == 3 && rec["r"] == 1) {
            found = true;
            EXPECT_EQ(rec["right_ideal"], 5);
            EXPECT_EQ(rec["regular"], 10);
        }
    EXPECT_TRUE(found);
    EXPECT_EQ(j["max"][2]["right_ideal"], 5);
}

TEST(Sampling, AgreesOnSmallRun) {
    auto rep = sample_operations(7, 20);
    EXPECT_EQ(rep.mismatches, 0u) << rep.first_mismatch;
    EXPECT_GT(rep.checks, 0u);
}

TEST(Sampling, WordEnumeration) {
    auto w = all_words("ab", 2);
    EXPECT_EQ(w, (std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"}));
}
