#include "dihedral/genset.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace dihedral;
using testutil::make_set;
using testutil::reflections;

TEST_CASE("validation accepts symmetric sets and sorts them") {
    const Group d6 = Group::dihedral(6);
    const GenSet s = make_set(d6, {"f", "r^1*f", "r^3"});
    REQUIRE(s.size() == 3);
    // rotations first, then reflections by exponent
    CHECK(s.at(0) == Element{3, false});
    CHECK(s.at(1) == Element{0, true});
    CHECK(s.at(2) == Element{1, true});
    CHECK(s.to_string() == "n=6; S={r^3, f, r^1*f}");
    CHECK(s.brace_string() == "{r^3, f, r^1*f}");
}

TEST_CASE("validation rejects bad sets") {
    const Group d5 = Group::dihedral(5);
    // {f, r}: r^4 missing
    try {
        GenSet::validate(d5, {Element{0, true}, Element{1, false}});
        FAIL("expected NotInverseClosed");
    } catch (const NotInverseClosed& e) {
        CHECK(e.offending == Element{1, false});
        CHECK(std::string(e.what()).find("r^1") != std::string::npos);
    }
    CHECK_THROWS_AS(GenSet::validate(d5, {identity(), Element{0, true}}), ContainsIdentity);
    CHECK_THROWS_AS(GenSet::validate(d5, {Element{0, true}, Element{0, true}}),
                    DuplicateElement);
    CHECK_THROWS_AS(GenSet::validate(d5, {}), std::invalid_argument);
    // raw elements are canonicalized before validation
    const GenSet s = GenSet::validate(d5, {Element{7, false}, Element{-2 + 5, false},
                                           Element{0, true}, Element{2, true}});
    CHECK(s.at(0) == Element{2, false});
    CHECK(s.size() == 4);
}

TEST_CASE("generation by closure") {
    CHECK_FALSE(generates(reflections(4, {0, 2})));
    CHECK(generates(reflections(30, {0, 3, 5})));
    CHECK(generates(reflections(5, {0, 1})));
    const Group d4 = Group::dihedral(4);
    const GenSet stuck = reflections(4, {0, 2});
    CHECK(generated_subgroup_order(d4, stuck.elements()) == 4);
}

TEST_CASE("gcd criterion for pairs") {
    CHECK_FALSE(pair_generates_by_gcd(4, 2));
    CHECK_FALSE(pair_generates_by_gcd(30, 2));
    CHECK(pair_generates_by_gcd(7, 3));
    CHECK(pair_generates_by_gcd(9, -2));  // reduced mod n first
}

TEST_CASE("classification of the worked examples") {
    CHECK(classify(reflections(5, {0, 1, 2})).family == PresentationFamily::ThreeInvA);
    CHECK(classify(reflections(6, {0, 1, 2})).family == PresentationFamily::ThreeInvB);
    CHECK(classify(reflections(6, {0, 1, 4})).family == PresentationFamily::ThreeInvC);
    CHECK(classify(reflections(30, {0, 3, 5})).family == PresentationFamily::ThreeInvD);

    const Group d6 = Group::dihedral(6);
    CHECK(classify(make_set(d6, {"f", "r^1*f", "r^3"})).family ==
          PresentationFamily::TwoInvOneCentral);
    CHECK(classify(make_set(d6, {"f", "r", "r^5"})).family ==
          PresentationFamily::OneInvTwoCyclic);
    CHECK(classify(reflections(5, {0, 1})).family == PresentationFamily::Card2);
    CHECK(classify(reflections(4, {0, 2})).family == PresentationFamily::NonGenerating);

    const PresentationClass b = classify(reflections(6, {0, 1, 2}));
    REQUIRE(b.reflections.has_value());
    CHECK(b.reflections->generating_pairs == std::vector<int>{0, 2});
    const PresentationClass c = classify(reflections(6, {0, 1, 4}));
    CHECK(c.reflections->generating_pairs == std::vector<int>{0});

    CHECK(classify(reflections(5, {0, 1})).name() == "Card2");
    CHECK(classify(reflections(30, {0, 3, 5})).name() == "ThreeInv_D");
}

TEST_CASE("classification requires |S| in {2, 3}") {
    CHECK_THROWS_AS(classify(reflections(7, {0, 1, 2, 3})), std::invalid_argument);
    const Group c5 = Group::cyclic(5);
    CHECK_THROWS_AS(classify(make_set(c5, {"r", "r^4"})), std::invalid_argument);
}

TEST_CASE("classification is invariant under translation") {
    const PresentationClass moved = classify(reflections(7, {2, 3, 5}));
    const PresentationClass base = classify(reflections(7, {0, 1, 3}));
    CHECK(moved.family == base.family);
    REQUIRE(moved.reflections.has_value());
    CHECK(moved.reflections->translation == 2);
    CHECK(moved.reflections->a == 1);
    CHECK(moved.reflections->b == 3);
    CHECK(moved.reflections->canonical == base.reflections->canonical);
}

TEST_CASE("subgroup orders for three-reflection sets") {
    const SubgroupOrders big = pair_subgroups(reflections(30, {0, 3, 5}));
    CHECK(big.h1 == 10);
    CHECK(big.h2 == 6);
    CHECK(big.h3 == 15);
    CHECK(big.h12 == 30);

    const SubgroupOrders six = pair_subgroups(reflections(6, {0, 1, 2}));
    CHECK(six.h1 == 6);
    CHECK(six.h2 == 3);
    CHECK(six.h3 == 6);
    CHECK(six.h12 == 6);

    const SubgroupOrders prime = pair_subgroups(reflections(5, {0, 1, 2}));
    CHECK(prime.h1 == 5);
    CHECK(prime.h2 == 5);
    CHECK(prime.h3 == 5);
    CHECK(prime.h12 == 5);

    CHECK_THROWS_AS(pair_subgroups(reflections(5, {0, 1})), WrongShape);
    CHECK_THROWS_AS(pair_subgroups(make_set(Group::dihedral(6), {"f", "r^1*f", "r^3"})),
                    WrongShape);
}

TEST_CASE("subgroup orders match brute-force product sets") {
    // |H1 H2| computed by enumerating {h1 h2} over the permutation oracle.
    for (const auto& [n, a, b] : {std::tuple{30, 3, 5}, {6, 1, 2}, {12, 2, 3}, {9, 3, 6}}) {
        std::set<int> h1, h2;
        for (int k = 0; k * a % n != 0 || h1.empty(); ++k) h1.insert(k * a % n);
        for (int k = 0; k * b % n != 0 || h2.empty(); ++k) h2.insert(k * b % n);
        std::set<int> product;
        for (const int x : h1)
            for (const int y : h2) product.insert((x + y) % n);
        const SubgroupOrders orders = pair_subgroups(reflections(n, {0, a, b}));
        CHECK(orders.h1 == static_cast<long>(h1.size()));
        CHECK(orders.h2 == static_cast<long>(h2.size()));
        CHECK(orders.h12 == static_cast<long>(product.size()));
        CHECK(generates(reflections(n, {0, a, b})) == (product.size() == static_cast<size_t>(n)));
    }
}

TEST_CASE("generation of reflection triples is |H1 H2| = n") {
    for (int n = 3; n <= 40; ++n)
        for (GenSet& s : normalized_reflection_triples(n)) {
            const SubgroupOrders orders = pair_subgroups(s);
            CHECK(generates(s) == (orders.h12 == n));
        }
}

TEST_CASE("gcd and closure classification agree everywhere") {
    // classify() cross-checks internally and throws ClassificationMismatch on
    // any disagreement, so a sweep is the agreement test.
    for (int n = 3; n <= 40; ++n) {
        for (GenSet& s : normalized_reflection_triples(n)) CHECK_NOTHROW(classify(s));
        for (GenSet& s : reflection_pairs(n)) CHECK_NOTHROW(classify(s));
        for (GenSet& s : chiral_triples(n)) CHECK_NOTHROW(classify(s));
        for (GenSet& s : central_triples(n)) CHECK_NOTHROW(classify(s));
    }
}

TEST_CASE("class D needs at least two distinct prime factors") {
    for (int n = 3; n <= 64; ++n) {
        if (!testutil::is_prime_power(n)) continue;
        for (GenSet& s : normalized_reflection_triples(n))
            CHECK(classify(s).family != PresentationFamily::ThreeInvD);
    }
    // {f, r^2*f, r^3*f} in D_6 is class C: the pair difference 1 generates
    CHECK(classify(reflections(6, {0, 2, 3})).family == PresentationFamily::ThreeInvC);
    // the smallest class-D instance needs three distinct primes dividing n
    CHECK(classify(reflections(30, {0, 3, 5})).family == PresentationFamily::ThreeInvD);
    for (int n = 3; n < 30; ++n)
        for (GenSet& s : normalized_reflection_triples(n))
            CHECK(classify(s).family != PresentationFamily::ThreeInvD);
}

TEST_CASE("card2 classification matches the gcd rule for all pairs") {
    for (int n = 3; n <= 64; ++n)
        for (int a = 1; a < n; ++a) {
            const bool expected = std::gcd(a, n) == 1;
            CHECK((classify(reflections(n, {0, a})).family == PresentationFamily::Card2) ==
                  expected);
        }
}

TEST_CASE("central-augmented sets classify by their reflection pair") {
    const Group d6 = Group::dihedral(6);
    // pair difference 3 shares a factor with 6; nothing generates
    const GenSet dead = make_set(d6, {"f", "r^3*f", "r^3"});
    CHECK(classify(dead).family == PresentationFamily::NonGenerating);
    CHECK_FALSE(generates(dead));
    // pair difference 2: the pair stays in a proper subgroup, so the set is
    // outside the classified families even though the triple generates D_6.
    const GenSet corner = make_set(d6, {"f", "r^2*f", "r^3"});
    CHECK(classify(corner).family == PresentationFamily::NonGenerating);
    CHECK(generates(corner));
}

TEST_CASE("enumerators produce valid, deterministic families") {
    CHECK(reflection_pairs(5).size() == 10);
    CHECK(central_triples(5).empty());
    CHECK(central_triples(6).size() == 15);
    CHECK(chiral_triples(6).size() == 12);   // a in [0,6), b in {1,2}
    CHECK(reflection_triples(5).size() == 10);
    CHECK(normalized_reflection_triples(5).size() == 6);
    for (const GenSet& s : chiral_triples(7)) CHECK(s.size() == 3);
    const auto twice_a = normalized_reflection_triples(9);
    const auto twice_b = normalized_reflection_triples(9);
    CHECK(std::equal(twice_a.begin(), twice_a.end(), twice_b.begin(),
                     [](const GenSet& x, const GenSet& y) { return x == y; }));
}
