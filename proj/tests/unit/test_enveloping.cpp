#include <saito/cohomology.hpp>

#include "oracle.hpp"

#include <doctest.h>

using namespace saito;

TEST_CASE("products act as composition of operators") {
    for (unsigned r = 1; r <= 2; ++r) {
        CAPTURE(r);
        Enveloping u(build_family({Family::wreath, 3, r}).basis);
        std::mt19937_64 rng(100 + r);
        for (int t = 0; t < 40; ++t) {
            const UElement a = random_element(rng, u, 2, 2), b = random_element(rng, u, 2, 2);
            const auto f = oracle::from(random_polynomial(rng, 3, 4));
            CHECK(oracle::act(u, u.mul(a, b), f) == oracle::act(u, a, oracle::act(u, b, f)));
        }
    }
}

TEST_CASE("library action matches the oracle") {
    Enveloping u(build_family({Family::braid, 3, 1}).basis);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const UElement a = random_element(rng, u, 3, 1);
        const Polynomial f = random_polynomial(rng, 3, 3);
        CHECK(oracle::from(u.act(a, f)) == oracle::act(u, a, oracle::from(f)));
    }
}

TEST_CASE("normal form basics") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    const UElement e = u.generator(0), x1 = u.variable(0);
    // [alpha, f] = alpha(f)
    CHECK(u.commutator_with_variable(e, 0) == u.variable(0));
    CHECK(u.mul(x1, e) == UElement::monomial(3, unit_index(0), Polynomial::variable(3, 0)));
    CHECK(u.power(e, 3) == u.mul(e, u.mul(e, e)));
    CHECK(u.right_multiply(e, Polynomial::variable(3, 1)) == u.mul(e, u.variable(1)));
    CHECK(u.to_string(u.generator(2)) == "a3");
    CHECK(u.weight(u.mul(u.generator(2), x1)) == std::optional<int>(3));
}

TEST_CASE("slice enumeration counts") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    // weight 2, order <= 1: S_2 (6) + a1 S_2 (6) + a2 S_1 (3) + a3 S_0 (1)
    CHECK(u.enumerate_slice(1, 2).size() == 16);
    for (const auto& [m, i] : u.enumerate_slice(2, 3)) CHECK(int(m.degree()) + u.weight(i) == 3);
}

TEST_CASE("presentation of the deleted braid algebra") {
    Enveloping u(build_family({Family::braid_deleted, 2, 1}).basis);
    const UElement e = u.generator(0), d = u.generator(1);
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    CHECK(u.commutator_with_variable(d, 0).is_zero());
    CHECK(u.commutator_with_variable(d, 1) == UElement::from_polynomial(y * (y - x)));
    CHECK(u.commutator(e, d) == d);
}
