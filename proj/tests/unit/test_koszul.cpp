#include <saito/cohomology.hpp>

#include "oracle.hpp"

#include <doctest.h>

using namespace saito;

TEST_CASE("wedge signs") {
    CHECK(wedge_sign(0b000, 1) == 1);
    CHECK(wedge_sign(0b100, 1) == -1);
    CHECK(wedge_sign(0b101, 1) == -1);
    CHECK(wedge_sign(0b110, 0) == 1);
    CHECK(subsets_of_size(4, 2).size() == 6);
}

TEST_CASE("the Koszul differential squares to zero") {
    for (unsigned r = 1; r <= 2; ++r) {
        Enveloping u(build_family({Family::wreath, 3, r}).basis);
        std::mt19937_64 rng(r);
        for (int t = 0; t < 15; ++t) {
            Cochain c(3, 1);
            for (std::size_t k = 0; k < 3; ++k) c.add(Subset{1} << k, random_element(rng, u, 2, 2));
            CHECK(koszul_d(u, koszul_d(u, c)).is_zero());
        }
    }
}

TEST_CASE("eta classes are cocycles") {
    for (unsigned r = 1; r <= 2; ++r) {
        const FamilySpec spec{Family::wreath, 3, r};
        Enveloping u(build_family(spec).basis);
        const auto fam = build_orthogonal_family(spec, u.basis());
        for (unsigned p = 0; p <= 3; ++p)
            for (std::size_t k = 0; k < 3; ++k) {
                const Cochain eta = build_eta(u, fam, k, p);
                CHECK(eta.order() == int(p));
                CHECK(koszul_d(u, eta).is_zero());
                CHECK(u.weight(eta.component(Subset{1} << k)) == std::optional<int>(int(2 * r * p)));
            }
    }
}

TEST_CASE("liftings") {
    for (unsigned r = 1; r <= 3; ++r) {
        CAPTURE(r);
        const auto basis = build_family({Family::wreath, 3, r}).basis;
        const Derivation& d = basis[1];
        CHECK(oracle::lifting_is_chain_map(d, wreath_lifting_D(r)));
        CHECK(is_chain_map(d, wreath_lifting_D(r)));
        CHECK(oracle::lifting_is_chain_map(d, wreath_lifting_D_literal(r)) == (r == 1));
        CHECK(is_chain_map(d, wreath_lifting_D_literal(r)) == (r == 1));
        for (const auto& alpha : basis.derivations()) CHECK(oracle::lifting_is_chain_map(alpha, generic_lifting_of(alpha)));
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const Polynomial g = random_polynomial(rng, 3, 4);
        CHECK(resolution_b1(generic_lifting(g)) == bar_difference(g));
    }
}

TEST_CASE("sharp action in degree zero is the commutator") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    std::mt19937_64 rng(9);
    const UElement a = random_element(rng, u, 2, 1), th = u.generator(1);
    Cochain c(3, 0);
    c.add(0, a);
    CHECK(sharp_action(u, th, {}, c).component(0) == u.commutator(th, a));
}

TEST_CASE("sharp action commutes with d on cocycles up to coboundaries") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    const auto lift = generic_lifting_of(u.basis()[1]);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        Cochain c(3, 0);
        c.add(0, random_element(rng, u, 1, 1));
        const Cochain lhs = sharp_action(u, u.generator(1), lift, koszul_d(u, c));
        const Cochain rhs = koszul_d(u, sharp_action(u, u.generator(1), lift, c));
        CHECK(lhs == rhs);
    }
}
