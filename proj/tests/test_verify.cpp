#include "doctest.h"
#include "helpers.hpp"
#include "whitney/families.hpp"
#include "whitney/verify.hpp"

using namespace whitney;

TEST_CASE("standard labelings verify") {
    for (int n = 3; n <= 4; ++n) {
        for (auto* fam : {"pi", "nc"}) {
            LabeledPoset lp = make_family(fam, n);
            WhitneyVerdict v = verify_whitney(lp.poset, *lp.labeling);
            CHECK_MESSAGE(v.verdict == Verdict::EW, fam, " ", n, ": ", v.reason);
            CHECK(verify_ER(lp.poset, *lp.labeling).pass);
        }
        LabeledPoset c = make_family("piw", n, "lambda_c");
        CHECK(verify_whitney(c.poset, *c.labeling).verdict == Verdict::CW);
        CHECK(verify_ER(c.poset, *c.labeling).property == "CR");
    }
    LabeledPoset e = make_family("piw", 3, "lambda_e");
    CHECK(verify_EW(e.poset, *e.labeling).verdict == Verdict::EW);
}

TEST_CASE("dual labelings are ER-star") {
    for (auto* fam : {"isf", "sf", "ncdyck"}) {
        LabeledPoset lp = make_family(fam, 3);
        CHECK_MESSAGE(verify_ER_star(lp.poset, *lp.labeling).pass, fam);
    }
    LabeledPoset pi = make_family("pi", 3);
    CHECK_FALSE(verify_ER_star(pi.poset, *pi.labeling).pass);
    LabeledPoset c = make_family("piw", 3, "lambda_c");
    CHECK_THROWS_AS(verify_ER_star(c.poset, *c.labeling), WhitneyError);
}

TEST_CASE("a constant labeling is not ER and the report carries a counterexample") {
    LabeledPoset pi = make_family("pi", 3);
    EdgeLabeling constant(LabelOrder::lex(), "constant");
    for (auto [a, b] : pi.poset.cover_pairs()) constant.set(a, b, Label{1});
    VerificationReport r = verify_ER(pi.poset, constant);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK_FALSE(r.counterexample->describe(pi.poset).empty());
    CHECK(verify_EW(pi.poset, constant).verdict == Verdict::Fail);
}

TEST_CASE("increasing forests fail rank-two switching") {
    LabeledPoset isf = make_family("isf", 3);
    VerificationReport r = verify_rank_two_switching(isf.poset, *isf.labeling);
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample.has_value());
}

TEST_CASE("quadratic exchanges on the partition lattice") {
    LabeledPoset pi = make_family("pi", 3);
    const Poset& P = pi.poset;
    SaturatedChain inc{by_name(P, "1/2/3"), by_name(P, "12/3"), by_name(P, "123")};
    CHECK(is_increasing(pi.labeling->word(inc), pi.labeling->order()));
    SaturatedChain ex = quadratic_exchange(P, *pi.labeling, inc, 1);
    CHECK(ex == SaturatedChain{by_name(P, "1/2/3"), by_name(P, "13/2"), by_name(P, "123")});
    CHECK(quadratic_exchange(P, *pi.labeling, ex, 1) == ex);
    CHECK(letter_multiset(pi.labeling->word(ex)) == letter_multiset(pi.labeling->word(inc)));
    CHECK_THROWS_AS(quadratic_exchange(P, *pi.labeling, inc, 0), WhitneyError);
    CHECK_THROWS_AS(quadratic_exchange(P, *pi.labeling, inc, 2), WhitneyError);

    SaturatedChain c = inc;
    LabelWord w = pi.labeling->word(c);
    exchange_to_sink(P, *pi.labeling, c, w);
    CHECK(is_ascent_free(w, pi.labeling->order()));
    CHECK(w == sort_word(pi.labeling->word(inc), pi.labeling->order()));
}

TEST_CASE("the noncrossing exchange example") {
    LabeledPoset nc = make_family("nc", 4);
    const Poset& P = nc.poset;
    SaturatedChain c{by_name(P, "1/2/3/4"), by_name(P, "13/2/4"), by_name(P, "123/4"), by_name(P, "1234")};
    CHECK(quadratic_exchange(P, *nc.labeling, c, 1) == c);
    SaturatedChain d = quadratic_exchange(P, *nc.labeling, c, 2);
    CHECK(d == SaturatedChain{c[0], c[1], by_name(P, "134/2"), c[3]});
    CHECK(exchange_candidates(P, *nc.labeling, c, 2, nc.labeling->word(c)) == std::vector<ElementId>{d[2]});
}

TEST_CASE("exchange sinks reach sorted words on every maximal chain") {
    for (auto* fam : {"pi", "nc"}) {
        LabeledPoset lp = make_family(fam, 4);
        const Poset& P = lp.poset;
        for (const auto& chain : saturated_chains(P, P.bottom(), P.top().value())) {
            SaturatedChain c = chain;
            LabelWord w = lp.labeling->word(c);
            exchange_to_sink(P, *lp.labeling, c, w);
            CHECK(w == sort_word(lp.labeling->word(chain), lp.labeling->order()));
            CHECK(c.back() == chain.back());
        }
    }
}

TEST_CASE("braid, cancellative and uniqueness checks") {
    LabeledPoset pi = make_family("pi", 4);
    CHECK(verify_braid(pi.poset, *pi.labeling).pass);
    CHECK(verify_cancellative(pi.poset, *pi.labeling).pass);
    CHECK(verify_word_uniqueness(pi.poset, *pi.labeling).pass);
    CHECK(verify_ascent_free_word_uniqueness(pi.poset, *pi.labeling).pass);
    CancellativeOptions tiny;
    tiny.max_chains = 3;
    CHECK(verify_cancellative(pi.poset, *pi.labeling, tiny).skipped);
    tiny.force = true;
    CHECK_FALSE(verify_cancellative(pi.poset, *pi.labeling, tiny).skipped);
    LabeledPoset c = make_family("piw", 3, "lambda_c");
    CHECK(verify_bottom_consistency(c.poset, *c.labeling).pass);
}

TEST_CASE("a lying word fast path is caught by bottom consistency") {
    LabeledPoset pi = make_family("pi", 3);
    auto edge = pi.labeling;
    ChainEdgeLabeling cheat(
        LabelOrder::lex(), "cheat", [edge](std::span<const ElementId> p) { return edge->label(p); },
        [edge](std::span<const ElementId> c) {
            LabelWord w = edge->word(c);
            if (!w.empty()) w.back() = Label{9, 9};
            return w;
        });
    CHECK_FALSE(verify_bottom_consistency(pi.poset, cheat).pass);
    CHECK(verify_CW(pi.poset, cheat).verdict == Verdict::Fail);
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(Verdict::EW)) == "EW");
    CHECK(std::string(verdict_name(Verdict::CW)) == "CW");
}

TEST_CASE("descent and ascent sets of maximal chains") {
    LabeledPoset pi = make_family("pi", 3);
    const Poset& P = pi.poset;
    SaturatedChain inc{by_name(P, "1/2/3"), by_name(P, "12/3"), by_name(P, "123")};
    SaturatedChain af1{by_name(P, "1/2/3"), by_name(P, "13/2"), by_name(P, "123")};
    SaturatedChain af2{by_name(P, "1/2/3"), by_name(P, "1/23"), by_name(P, "123")};
    CHECK(descent_set(*pi.labeling, inc).empty());
    CHECK(ascent_set(*pi.labeling, inc) == std::vector<int>{1});
    CHECK(descent_set(*pi.labeling, af1) == std::vector<int>{1});
    CHECK(descent_set(*pi.labeling, af2) == std::vector<int>{1});

    LabeledPoset nc = make_family("nc", 4);
    bool found = false;
    for (const auto& c : saturated_chains(nc.poset, nc.poset.bottom(), nc.poset.top().value()))
        if (nc.labeling->word(c) == LabelWord{Label{3}, Label{2}, Label{1}}) {
            found = true;
            CHECK(descent_set(*nc.labeling, c) == std::vector<int>{1, 2});
        }
    CHECK(found);
}
