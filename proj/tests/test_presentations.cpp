#include "dihedral/presentations.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dihedral;
using testutil::make_set;
using testutil::reflections;

TEST_CASE("predictions per family") {
    const PresentationClass card2 = classify(reflections(7, {0, 1}));
    const PredictedBounds p7 = predict(card2, 7);
    CHECK(p7.lambda1.kind == BoundKind::Exact);
    CHECK(p7.lambda1.value == 7);
    CHECK(p7.lambda2.value == 2);

    const PredictedBounds p8 = predict(classify(reflections(8, {0, 1})), 8);
    CHECK(p8.lambda1.value == 7);

    const Group d8 = Group::dihedral(8);
    const PresentationClass chiral8 = classify(make_set(d8, {"f", "r", "r^7"}));
    const PredictedBounds c8 = predict(chiral8, 8);
    CHECK(c8.lambda1.value == 5);
    CHECK(c8.lambda2.value == 4);

    const Group d6 = Group::dihedral(6);
    const PresentationClass chiral6 = classify(make_set(d6, {"f", "r", "r^5"}));
    const PredictedBounds c6 = predict(chiral6, 6);
    CHECK(c6.lambda1.value == 3);
    CHECK(c6.lambda2.value == 4);

    const PresentationClass chiral7 = classify(make_set(Group::dihedral(7), {"f", "r", "r^6"}));
    const PredictedBounds c7 = predict(chiral7, 7);
    CHECK(c7.lambda1.value == 4);
    CHECK(c7.lambda2.value == 4);

    const PresentationClass central6 = classify(make_set(d6, {"f", "r^1*f", "r^3"}));
    const PredictedBounds mid = predict(central6, 6);
    CHECK(mid.lambda1.value == 3);
    CHECK(mid.lambda2.value == 3);

    const Group d4 = Group::dihedral(4);
    const PredictedBounds small = predict(classify(make_set(d4, {"f", "r^1*f", "r^2"})), 4);
    CHECK(small.lambda1.value == 2);
    CHECK(small.lambda2.value == 2);

    const PredictedBounds three = predict(classify(reflections(3, {0, 1, 2})), 3);
    CHECK(three.lambda1.kind == BoundKind::UpperBound);
    CHECK(three.lambda1.value == 2);
    CHECK_FALSE(three.lambda1.conjectural);  // consecutive triple, proved
    CHECK(three.lambda2.kind == BoundKind::Exact);
    CHECK(three.lambda2.value == 2);
}

TEST_CASE("the proved tag covers exactly the two lemma families") {
    // translates of {0,1,2} and {0,1,3} stay proved
    CHECK_FALSE(predict(classify(reflections(9, {0, 1, 3})), 9).lambda1.conjectural);
    CHECK_FALSE(predict(classify(reflections(9, {2, 3, 5})), 9).lambda1.conjectural);
    CHECK_FALSE(predict(classify(reflections(9, {0, 1, 8})), 9).lambda1.conjectural);
    CHECK_FALSE(predict(classify(reflections(12, {0, 1, 2})), 12).lambda1.conjectural);
    // anything else is conjectural
    CHECK(predict(classify(reflections(9, {0, 2, 5})), 9).lambda1.conjectural);
    CHECK(predict(classify(reflections(30, {0, 3, 5})), 30).lambda1.conjectural);
}

TEST_CASE("no prediction for non-generating sets") {
    CHECK_THROWS_AS(predict(classify(reflections(4, {0, 2})), 4), UnsupportedClass);
}

TEST_CASE("judging predictions") {
    const GenSet s = reflections(7, {0, 1});
    const LambdaReport observed = lambda_report(s);
    PredictedBounds predicted = predict(classify(s), 7);
    CHECK(judge(predicted, observed) == Verdict::Match);

    PredictedBounds wrong = predicted;
    wrong.lambda1.value = 6;
    CHECK(judge(wrong, observed) == Verdict::Violation);

    PredictedBounds bound = predicted;
    bound.lambda1 = Bound{BoundKind::UpperBound, 7, false};
    CHECK(judge(bound, observed) == Verdict::BoundSatisfied);
    bound.lambda1.value = 5;
    CHECK(judge(bound, observed) == Verdict::Violation);
}

TEST_CASE("verify card2 family") {
    const auto records = verify_family({3, 40, FamilyFilter::Card2, 1});
    CHECK(!records.empty());
    for (const VerificationRecord& rec : records) {
        CHECK(rec.verdict == Verdict::Match);
        CHECK(rec.observed.lambda2 == 2);
        CHECK(rec.observed.lambda1 == (rec.n % 2 == 1 ? rec.n : rec.n - 1));
    }
}

TEST_CASE("verify central family; lambda2 always equals lambda1") {
    const auto records = verify_family({4, 40, FamilyFilter::Central, 1});
    CHECK(!records.empty());
    for (const VerificationRecord& rec : records) {
        CHECK(rec.verdict == Verdict::Match);
        CHECK(rec.observed.lambda2 == rec.observed.lambda1);
    }
}

TEST_CASE("verify chiral family") {
    const auto records = verify_family({3, 40, FamilyFilter::Chiral, 1});
    CHECK(!records.empty());
    for (const VerificationRecord& rec : records) CHECK(rec.verdict == Verdict::Match);
}

TEST_CASE("verify three-reflection family") {
    const auto records = verify_family({3, 24, FamilyFilter::ThreeInv, 1});
    CHECK(!records.empty());
    for (const VerificationRecord& rec : records) {
        CHECK(rec.verdict == Verdict::BoundSatisfied);
        CHECK(rec.observed.lambda2 == 2);
    }
}

TEST_CASE("verification records are ordered and parallelism does not change them") {
    const VerifyOptions serial{3, 20, FamilyFilter::All, 1};
    const VerifyOptions threaded{3, 20, FamilyFilter::All, 2};
    const auto a = verify_family(serial);
    const auto b = verify_family(threaded);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].genset == b[i].genset);
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].observed.lambda1 == b[i].observed.lambda1);
    }
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const VerificationRecord& x, const VerificationRecord& y) {
                             return genset_less(x.genset, y.genset);
                         }));
}

TEST_CASE("verify_family validates its range") {
    CHECK_THROWS_AS(verify_family({2, 10, FamilyFilter::All, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_family({5, 4, FamilyFilter::All, 1}), std::invalid_argument);
}

TEST_CASE("conjecture-1 sweep finds no counterexample") {
    const SweepReport report = sweep_conjecture1(12, 1);
    CHECK(report.counterexamples.empty());
    CHECK(report.total_checked > 0);
    REQUIRE(!report.per_n.empty());
    // n = 3: the single generating triple is all three reflections, whose
    // conjugated generators are again generators, so max lambda1 is 1.
    CHECK(report.per_n[0].n == 3);
    CHECK(report.per_n[0].sets_checked == 1);
    CHECK(report.per_n[0].stat == 1);
    for (const SweepPerN& entry : report.per_n) CHECK(entry.stat <= entry.n / 2 + 1);
}

TEST_CASE("conjecture-2 sweep reports the real counterexamples") {
    // The conjectured inequality l(r^m f) <= max_k l(r^k) fails, first at
    // n = 4: over {f, rf, r^2 f} the reflection r^3 f has length 3 while every
    // rotation has length at most 2. The sweep's job is to surface these.
    const SweepReport report = sweep_conjecture2(12, 1);
    CHECK(report.total_checked == sweep_conjecture1(12, 1).total_checked);
    CHECK(report.counterexamples.size() == 114);
    REQUIRE(!report.counterexamples.empty());
    const SweepCounterexample& first = report.counterexamples.front();
    CHECK(first.n == 4);
    CHECK(first.genset.brace_string() == "{f, r^1*f, r^2*f}");
    CHECK(first.detail.find("l(r^3*f) = 3") != std::string::npos);
    CHECK(first.detail.find("max rotation length 2") != std::string::npos);

    // n = 3 is the all-reflections set: reflections are generators, so the
    // inequality holds with slack there.
    REQUIRE(report.per_n[0].n == 3);
    CHECK(report.per_n[0].stat == -1);
    // Reflections exceed the rotation maximum by at most one letter: peeling
    // one generator off any reflection lands on a rotation.
    for (const SweepPerN& entry : report.per_n) CHECK(entry.stat <= 1);
}

TEST_CASE("the excess of a reflection over the rotation maximum is at most one") {
    for (int n = 3; n <= 20; ++n)
        for (GenSet& s : normalized_reflection_triples(n)) {
            if (!generates(s)) continue;
            const LengthTable t = compute_lengths(s);
            int max_rot = 0;
            int max_refl = 0;
            for (int k = 0; k < n; ++k) max_rot = std::max(max_rot, t.length_at(k));
            for (int m = 0; m < n; ++m) max_refl = std::max(max_refl, t.length_at(n + m));
            CHECK(max_refl <= max_rot + 1);
        }
}

TEST_CASE("sweeps are deterministic under parallelism and can emit rows") {
    const SweepReport serial = sweep_conjecture1(16, 1, true);
    const SweepReport threaded = sweep_conjecture1(16, 2, true);
    CHECK(serial.total_checked == threaded.total_checked);
    REQUIRE(serial.csv_rows.size() == threaded.csv_rows.size());
    CHECK(serial.csv_rows == threaded.csv_rows);
    CHECK(static_cast<long>(serial.csv_rows.size()) == serial.total_checked);
    CHECK(sweep_conjecture1(16, 1).csv_rows.empty());
    CHECK_THROWS_AS(sweep_conjecture1(2, 1), std::invalid_argument);
}

TEST_CASE("equality case of the odd-n lambda1 formula") {
    // for n = 3 mod 4 the conjugate r^{(n+1)/2} f of f by r^{-(n+1)/4} has
    // length n, so the reflection pair attains lambda1 = n
    for (const int n : {3, 7, 11, 15, 19, 23}) {
        const LengthTable t = compute_lengths(reflections(n, {0, 1}));
        CHECK(t.length(Element{(n + 1) / 2, true}) == n);
        CHECK(lambda1(t).first == n);
    }
}

TEST_CASE("family filter names") {
    CHECK(family_filter_name(FamilyFilter::Card2) == "card2");
    CHECK(family_filter_name(FamilyFilter::All) == "all");
    CHECK(verdict_name(Verdict::Violation) == "VIOLATION");
    CHECK(verdict_name(Verdict::Match) == "match");
    CHECK(verdict_name(Verdict::BoundSatisfied) == "bound_satisfied");
}
