#include <algorithm>
#include <random>

#include "doctest.h"

#include "strata/abelian.hpp"

using namespace strata;

namespace {

GroupSpec spec_of(std::initializer_list<long> moduli) {
    std::vector<Int> m;
    for (long v : moduli) m.push_back(Int(v));
    return GroupSpec(std::move(m));
}

GroupElement elem(const GroupSpec& s, std::initializer_list<long> coords) {
    std::vector<Int> c;
    for (long v : coords) c.push_back(Int(v));
    return reduce(s, std::move(c));
}

}  // namespace

TEST_CASE("subgroup of Z/3 x Z/3 generated by the diagonal") {
    GroupSpec g = spec_of({3, 3});
    std::vector<GroupElement> gens{elem(g, {2, 2})};
    SubgroupBasis sub = subgroup_from_generators(g, gens);
    CHECK(sub.index() == 3);
    CHECK(sub.subgroup_order() == 3);

    auto closure = brute_force_closure(g, gens);
    REQUIRE(closure.size() == 3);
    CHECK(closure[0] == elem(g, {0, 0}));
    CHECK(closure[1] == elem(g, {1, 1}));
    CHECK(closure[2] == elem(g, {2, 2}));

    CHECK(sub.contains(elem(g, {1, 1})));
    CHECK_FALSE(sub.contains(elem(g, {1, 0})));
    CHECK(sub.contains(zero_element(g)));
}

TEST_CASE("trivial and full subgroups") {
    GroupSpec g = spec_of({4, 5, 2});
    SubgroupBasis trivial = subgroup_from_generators(g, {});
    CHECK(trivial.index() == g.order());
    CHECK(trivial.index() == 40);

    std::vector<GroupElement> deltas;
    for (int i = 0; i < g.rank(); ++i) deltas.push_back(delta(g, i));
    SubgroupBasis full = subgroup_from_generators(g, deltas);
    CHECK(full.index() == 1);
}

TEST_CASE("closure listings") {
    GroupSpec g1 = spec_of({4, 2});
    auto c1 = brute_force_closure(g1, {elem(g1, {1, 1}), elem(g1, {2, 0})});
    REQUIRE(c1.size() == 4);  // (1,1)+(1,1)=(2,0) keeps the set at four elements
    CHECK(std::count(c1.begin(), c1.end(), elem(g1, {3, 1})) == 1);
    CHECK(std::count(c1.begin(), c1.end(), elem(g1, {2, 1})) == 0);

    GroupSpec g2 = spec_of({2});
    CHECK(brute_force_closure(g2, {elem(g2, {1})}).size() == 2);

    GroupSpec g3 = spec_of({3, 3, 2, 2});
    auto c3 = brute_force_closure(g3, {elem(g3, {1, 1, 0, 0}), elem(g3, {0, 0, 1, 1})});
    CHECK(c3.size() == 6);
}

TEST_CASE("closure bound is enforced") {
    GroupSpec g = spec_of({101, 101});
    CHECK_THROWS_AS(brute_force_closure(g, {}, 10000), group_too_large);
}

TEST_CASE("kernels of homomorphisms") {
    SUBCASE("identity on Z/6") {
        GroupSpec g = spec_of({6});
        IntMat id(1, 1);
        id.at(0, 0) = 1;
        SubgroupBasis k = homomorphism_kernel(g, g, id);
        CHECK(k.index() == 6);
        CHECK(k.subgroup_order() == 1);
    }
    SUBCASE("reduction Z/4 -> Z/2") {
        GroupSpec src = spec_of({4}), dst = spec_of({2});
        IntMat m(1, 1);
        m.at(0, 0) = 1;
        SubgroupBasis k = homomorphism_kernel(src, dst, m);
        CHECK(k.index() == 2);
        CHECK(k.contains(elem(src, {2})));
        CHECK_FALSE(k.contains(elem(src, {1})));
    }
    SUBCASE("ill-defined map is rejected") {
        GroupSpec src = spec_of({3}), dst = spec_of({2});
        IntMat m(1, 1);
        m.at(0, 0) = 1;  // 1*3 != 0 mod 2
        CHECK_THROWS_AS(homomorphism_kernel(src, dst, m), std::invalid_argument);
    }
    SUBCASE("coordinate reductions x_i mod N_ij over all ordered pairs") {
        // source Z/3 x Z/3 x Z/2 x Z/2 with pair moduli N12=3, N34=2, rest 1:
        // the kernel is generated by d_i e_i with d = (3,3,2,2), i.e. trivial
        GroupSpec src = spec_of({3, 3, 2, 2});
        std::vector<long> n = {3, 3, 2, 2};  // N_ij indexed symmetrically
        std::vector<Int> target_moduli;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) {
                    bool nontrivial = (i / 2 == j / 2);
                    target_moduli.push_back(Int(nontrivial ? n[i] : 1));
                    pairs.emplace_back(i, j);
                }
        GroupSpec dst{target_moduli};
        IntMat m(dst.rank(), src.rank());
        for (int row = 0; row < dst.rank(); ++row) m.at(row, pairs[row].first) = 1;
        SubgroupBasis k = homomorphism_kernel(src, dst, m);
        CHECK(k.index() == 36);

        std::vector<GroupElement> dgens;
        for (int i = 0; i < 4; ++i) {
            std::vector<Int> c(4, 0);
            c[i] = n[i];
            dgens.push_back(reduce(src, std::move(c)));
        }
        CHECK(k == subgroup_from_generators(src, dgens));
    }
}

TEST_CASE("index is invariant under generator permutation and redundancy") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int rank = 1 + int(rng() % 4);
        std::vector<Int> moduli;
        std::uint64_t order = 1;
        for (int i = 0; i < rank; ++i) {
            std::uint64_t m = 1 + rng() % 12;
            if (order * m > 4000) m = 1;
            order *= m;
            moduli.push_back(Int((unsigned long)m));
        }
        GroupSpec spec(moduli);
        std::vector<GroupElement> gens;
        for (int gi = 0, n = int(rng() % 4); gi < n; ++gi) {
            std::vector<Int> c(rank);
            for (int i = 0; i < rank; ++i) c[i] = Int((unsigned long)(rng() % to_u64(moduli[i])));
            gens.push_back(GroupElement{std::move(c)});
        }
        SubgroupBasis sub = subgroup_from_generators(spec, gens);
        BruteForceClosure closure(spec, gens, 1 << 20);

        CHECK(sub.index() * closure.size() == spec.order());

        // membership engines agree
        for (int probe = 0; probe < 20; ++probe) {
            std::vector<Int> c(rank);
            for (int i = 0; i < rank; ++i) c[i] = Int((unsigned long)(rng() % to_u64(moduli[i])));
            GroupElement x{std::move(c)};
            CHECK(sub.contains(x) == closure.contains(x));
        }

        std::vector<GroupElement> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(subgroup_from_generators(spec, shuffled) == sub);

        if (!gens.empty()) {
            auto elems = closure.elements();
            std::vector<GroupElement> extended = gens;
            extended.push_back(elems[rng() % elems.size()]);
            CHECK(subgroup_from_generators(spec, extended) == sub);
        }
    }
}

TEST_CASE("kernel index equals image size") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        int rank = 1 + int(rng() % 3);
        std::vector<Int> moduli;
        std::uint64_t order = 1;
        for (int i = 0; i < rank; ++i) {
            std::uint64_t m = 1 + rng() % 8;
            if (order * m > 256) m = 1;
            order *= m;
            moduli.push_back(Int((unsigned long)m));
        }
        GroupSpec src(moduli);
        int trank = 1 + int(rng() % 2);
        std::vector<Int> tmod;
        for (int j = 0; j < trank; ++j) tmod.push_back(Int((unsigned long)(1 + rng() % 8)));
        GroupSpec dst(tmod);
        IntMat m(trank, rank);
        for (int j = 0; j < trank; ++j)
            for (int i = 0; i < rank; ++i) {
                Int step = dst.modulus(j) / gcd_int(dst.modulus(j), src.modulus(i));
                m.at(j, i) = step * Int((unsigned long)(rng() % 4));
            }
        SubgroupBasis kernel = homomorphism_kernel(src, dst, m);

        // enumerate the image directly
        std::vector<GroupElement> image;
        for (const GroupElement& x : brute_force_closure(src, [&] {
                 std::vector<GroupElement> ds;
                 for (int i = 0; i < rank; ++i) ds.push_back(delta(src, i));
                 return ds;
             }())) {
            std::vector<Int> y(trank, 0);
            for (int j = 0; j < trank; ++j) {
                for (int i = 0; i < rank; ++i) y[j] += m.at(j, i) * x.coords[i];
                y[j] = floor_mod(y[j], dst.modulus(j));
            }
            image.push_back(GroupElement{std::move(y)});
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        CHECK(kernel.index() == Int((unsigned long)image.size()));
    }
}

TEST_CASE("modulus-one factors are kept positionally") {
    GroupSpec g = spec_of({3, 1, 2});
    CHECK(g.rank() == 3);
    GroupElement d1 = delta(g, 1);
    CHECK(d1.is_zero());
    SubgroupBasis sub = subgroup_from_generators(g, {delta(g, 0), delta(g, 2)});
    CHECK(sub.index() == 1);
}

TEST_CASE("element validation") {
    GroupSpec g = spec_of({4, 2});
    CHECK_THROWS_AS(subgroup_from_generators(g, {GroupElement{{Int(4), Int(0)}}}), std::invalid_argument);
    CHECK_THROWS_AS(subgroup_from_generators(g, {GroupElement{{Int(1)}}}), std::invalid_argument);
    CHECK_THROWS_AS(check_conforms(g, GroupElement{{Int(-1), Int(0)}}), std::invalid_argument);
}

TEST_CASE("projection keeps order and moduli") {
    GroupSpec g = spec_of({4, 1, 3, 2});
    GroupSpec p = project_spec(g, {0, 2});
    CHECK(p.rank() == 2);
    CHECK(p.modulus(0) == 4);
    CHECK(p.modulus(1) == 3);
    GroupElement x = elem(g, {3, 0, 2, 1});
    CHECK(project_element(x, {0, 2}) == elem(p, {3, 2}));
}
