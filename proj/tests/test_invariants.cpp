#include "doctest.h"

#include "strata/invariants.hpp"
#include "strata/monodromy.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

Signature sig_of(const std::string& text) {
    ValidationResult v = parse_signature(text);
    REQUIRE_MESSAGE(v.ok(), text);
    return *v.signature;
}

ComponentDescriptor only_component(const std::string& text) {
    auto comps = components(sig_of(text));
    REQUIRE(comps.size() == 1);
    return comps[0];
}

GroupElement elem(const GroupSpec& s, std::initializer_list<long> coords) {
    std::vector<Int> c;
    for (long v : coords) c.push_back(Int(v));
    return reduce(s, std::move(c));
}

}  // namespace

TEST_CASE("pair gcd moduli") {
    PairModuli pm = PairModuli::compute(sig_of("2,2,-3,-3"));
    CHECK(pm.modulus(0, 1) == 3);
    CHECK(pm.modulus(2, 3) == 2);
    CHECK(pm.modulus(0, 2) == 1);
    CHECK(pm.modulus(1, 3) == 1);
    CHECK(pm.modulus(3, 1) == 1);  // symmetric access
    CHECK(pm.product() == 6);

    pm = PairModuli::compute(sig_of("1,1,1,-5"));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(pm.modulus(i, j) == 1);
    CHECK(pm.product() == 1);

    pm = PairModuli::compute(sig_of("4,4,-10"));
    CHECK(pm.modulus(0, 1) == 5);
    CHECK(pm.modulus(0, 2) == 1);
    CHECK(pm.modulus(1, 2) == 1);
    CHECK(pm.product() == 5);

    CHECK_THROWS_AS(PairModuli::compute(sig_of("4,-2")), std::invalid_argument);      // genus 2
    CHECK_THROWS_AS(PairModuli::compute(sig_of("2,-1,-3")), std::invalid_argument);   // simple pole
}

TEST_CASE("pairwise coprime moduli over a genus-zero sweep") {
    enumerate_signatures(5, 7, 0, [&](const Signature& s) {
        if (predicates(s).has_simple_pole) return;
        PairModuli pm = PairModuli::compute(s);  // construction asserts coprimality
        const int r = s.size();
        Int prod = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) prod *= pm.modulus(i, j);
        CHECK(prod == pm.product());
    });
}

TEST_CASE("closed-form counts") {
    CHECK(closed_form_count(only_component("2,2,-3,-3")) == 6);
    CHECK(closed_form_count(only_component("1,1,1,-5")) == 2);  // four odd degrees: 2N with N = 1
    CHECK(closed_form_count(only_component("2,-1,-3")) == 1);   // simple pole

    auto comps = components(sig_of("4,-2"));
    CHECK(closed_form_count(comps[0]) == 1);
    CHECK(closed_form_count(comps[1]) == 1);

    comps = components(sig_of("3,3,-2,-2"));
    CHECK(closed_form_count(comps[0]) == 4);  // (n+1)|p+1|
    CHECK(closed_form_count(comps[1]) == 2);

    comps = components(sig_of("2,2,-1,-1"));
    CHECK(closed_form_count(comps[0]) == 3);  // (n+1) with a pair of simple poles
    CHECK(closed_form_count(comps[1]) == 1);  // even zeroes

    comps = components(sig_of("3,1,-1,-1"));
    CHECK(closed_form_count(comps[0]) == 2);  // odd zeroes with a pair of simple poles

    Signature s = sig_of("3,3,-4,-4");
    ComponentDescriptor hyp{s, ComponentKind::Hyperelliptic, 0, -1, std::nullopt, HypFlag::Yes};
    CHECK(closed_form_count(hyp) == 12);

    comps = components(sig_of("3,3,-6"));
    CHECK(closed_form_count(comps[1]) == 4);
    CHECK_THROWS_AS(closed_form_count(comps[0]), unknown_component);
}

TEST_CASE("difference images") {
    Signature s = sig_of("2,2,-3,-3");
    PairModuli pm = PairModuli::compute(s);
    GroupSpec g = frame_group(s).spec;

    auto img = difference_image(pm, elem(g, {1, 0, 0, 0}));
    CHECK(img == std::vector<Int>{2, 0, 0, 0, 0, 0});  // -1 mod 3 in the (1,2) factor

    CHECK(difference_image(pm, full_turn(s)) == std::vector<Int>(6, 0));
    CHECK(difference_image(pm, pair_twist(s, 2, 3)) == std::vector<Int>(6, 0));

    InvariantImage ii = invariant_image(pm, elem(g, {0, 0, 1, 0}));
    REQUIRE(ii.spin_part.has_value());
    CHECK(*ii.spin_part == 1);

    // no odd degrees, no spin part
    Signature even = sig_of("2,2,-6");
    PairModuli pme = PairModuli::compute(even);
    InvariantImage ie = invariant_image(pme, full_turn(even));
    CHECK_FALSE(ie.spin_part.has_value());
}

TEST_CASE("spin parity shifts") {
    Signature s = sig_of("2,2,-3,-3");
    GroupSpec g = frame_group(s).spec;
    CHECK(spin_parity_delta(s, elem(g, {0, 0, 1, 0})) == 1);
    CHECK(spin_parity_delta(s, full_turn(s)) == 0);

    Signature t = sig_of("1,1,1,-5");
    CHECK(spin_parity_delta(t, pair_twist(t, 0, 1)) == 0);

    Signature even = sig_of("2,2,-2,-2");
    CHECK_THROWS_AS(spin_parity_delta(even, full_turn(even)), std::invalid_argument);
}

TEST_CASE("kernel of the distinguishing invariant equals the monodromy subgroup") {
    CHECK(invariant_kernel_matches_monodromy(only_component("2,2,-3,-3")));
    CHECK(invariant_kernel_matches_monodromy(only_component("1,1,1,-5")));
    CHECK(invariant_kernel_matches_monodromy(only_component("-2")));
    CHECK_THROWS_AS(invariant_kernel_matches_monodromy(only_component("2,-1,-3")), std::invalid_argument);
}

TEST_CASE("coordinate gcd identities") {
    Signature s = sig_of("2,2,-3,-3");
    CoordinateGcdIdentity id = coordinate_gcd_check(s, 0);
    CHECK(id.gcd_value == 3);  // gcd(12,12,18,6,6,6,3)
    CHECK(id.parity_factor == 1);
    CHECK(id.pair_product == 3);
    CHECK(id.holds);

    id = coordinate_gcd_check(s, 2);
    CHECK(id.gcd_value == 2);
    CHECK(id.parity_factor == 1);  // only one other odd degree
    CHECK(id.pair_product == 2);
    CHECK(id.holds);

    Signature t = sig_of("1,1,1,-5");
    id = coordinate_gcd_check(t, 3);
    CHECK(id.gcd_value == 2);  // gcd(2,2,4)
    CHECK(id.parity_factor == 2);
    CHECK(id.pair_product == 1);
    CHECK(id.holds);

    CHECK_THROWS_AS(coordinate_gcd_check(sig_of("4,-6"), 0), std::invalid_argument);  // r < 3
}

TEST_CASE("difference images of coordinate shifts generate the target") {
    enumerate_signatures(5, 7, 0, [&](const Signature& s) {
        if (predicates(s).has_simple_pole) return;
        PairModuli pm = PairModuli::compute(s);
        const int r = s.size();
        std::vector<Int> tmod;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) tmod.push_back(pm.modulus(i, j));
        GroupSpec target(tmod);
        GroupSpec g = frame_group(s).spec;
        std::vector<GroupElement> images;
        for (int i = 0; i < r; ++i) {
            if (g.modulus(i) == 1) continue;
            images.push_back(reduce(target, difference_image(pm, delta(g, i))));
        }
        CHECK(subgroup_from_generators(target, images).index() == 1);
    });
}

TEST_CASE("master identity on a small sweep") {
    enumerate_signatures(4, 6, std::nullopt, [&](const Signature& s) {
        for (const ComponentDescriptor& c : components(s)) {
            if (c.hyperelliptic == HypFlag::Unknown) continue;
            CHECK(closed_form_count(c) == framed_component_count(c));
        }
    });
}

TEST_CASE("coordinate gcd identity on a small sweep") {
    enumerate_signatures(5, 8, 0, [&](const Signature& s) {
        if (predicates(s).has_simple_pole || s.size() < 3) return;
        for (int k = 0; k < s.size(); ++k) CHECK(coordinate_gcd_check(s, k).holds);
    });
}

TEST_CASE("odd pairings") {
    Signature s = sig_of("1,1,1,-5");
    OddPairing p = OddPairing::consecutive(s);
    REQUIRE(p.pairs().size() == 2);
    CHECK(p.pairs()[0] == std::pair<int, int>{0, 1});
    CHECK(p.pairs()[1] == std::pair<int, int>{2, 3});

    auto before = p.pairs();
    CHECK(p.swap_within(0) == 1);
    CHECK(p.pairs()[0] == std::pair<int, int>{1, 0});
    CHECK(p.swap_within(0) == 1);  // net change (1 + 1) mod 2 = 0
    CHECK(p.pairs() == before);

    CHECK(p.swap_across(0, 1) == 1);
    CHECK(p.pairs()[0] == std::pair<int, int>{2, 1});
    CHECK(p.pairs()[1] == std::pair<int, int>{0, 3});
    CHECK_THROWS_AS(p.swap_across(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(p.swap_within(5), std::invalid_argument);
}

TEST_CASE("spin parity gluing") {
    CHECK(spin_parity_glue(0, 1, GlueKind::Simple) == 1);
    CHECK(spin_parity_glue(1, std::nullopt, GlueKind::Self) == 1);
    CHECK(spin_parity_glue(0, 0, GlueKind::Simple) == 0);
    CHECK(spin_parity_glue(1, 1, GlueKind::Simple) == 0);
    CHECK_THROWS_AS(spin_parity_glue(0, std::nullopt, GlueKind::Simple), std::invalid_argument);
    CHECK_THROWS_AS(spin_parity_glue(2, 0, GlueKind::Simple), std::invalid_argument);
}

TEST_CASE("pair-pair shape with odd degrees: twelve against two") {
    auto comps = components(*parse_signature("5,5,-3,-3").signature);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].kind == ComponentKind::Hyperelliptic);
    CHECK(closed_form_count(comps[0]) == 12);
    CHECK(framed_component_count(comps[0]) == 12);
    CHECK(comps[1].kind == ComponentKind::Generic);
    CHECK(closed_form_count(comps[1]) == 2);
    CHECK(framed_component_count(comps[1]) == 2);
}

TEST_CASE("hyperelliptic closed forms reject foreign signatures") {
    Signature s = sig_of("3,1,-2,-2");
    ComponentDescriptor bogus{s, ComponentKind::Hyperelliptic, 0, -1, std::nullopt, HypFlag::Yes};
    CHECK_THROWS_AS(closed_form_count(bogus), std::invalid_argument);
}

TEST_CASE("genus-zero partial markings follow the restricted moduli") {
    // with unmarked odd singularities or at most two odd degrees the partial
    // count is the product of the marked pair moduli
    Signature s = sig_of("2,2,-3,-3");
    ComponentDescriptor c = only_component("2,2,-3,-3");
    PairModuli pm = PairModuli::compute(s);
    CHECK(partial_component_count(c, {0, 1}) == pm.modulus(0, 1));
    CHECK(partial_component_count(c, {2, 3}) == pm.modulus(2, 3));
    CHECK(partial_component_count(c, {0, 2}) == 1);
    CHECK(partial_component_count(c, {0, 1, 2, 3}) == pm.product());
}
