#include <saito/scalar.hpp>

#include <doctest.h>

#include <climits>

using saito::Scalar;

TEST_CASE("rational arithmetic") {
    const Scalar a = Scalar::rational(1, 2), b = Scalar::rational(-2, 3);
    CHECK(a + b == Scalar::rational(-1, 6));
    CHECK(a * b == Scalar::rational(-1, 3));
    CHECK(a / b == Scalar::rational(-3, 4));
    CHECK((a - a).is_zero());
    CHECK(Scalar::rational(4, -6) == Scalar::rational(-2, 3));
    CHECK(b.inverse() * b == Scalar(1));
    CHECK(Scalar(3).pow(-2) == Scalar::rational(1, 9));
    CHECK(Scalar::rational(-3, 7).to_string() == "-3/7");
    CHECK(b.sign() == -1);
}

TEST_CASE("small values promote to GMP without losing digits") {
    const Scalar big(LONG_MAX);
    const mpz_class m(std::to_string(LONG_MAX));
    CHECK((big * big).rational_value() == mpq_class(m * m));
    CHECK(((big + Scalar(1)) - Scalar(1)) == big);
    CHECK((Scalar(LONG_MIN) * Scalar(-1)).rational_value() == mpq_class(-mpz_class(std::to_string(LONG_MIN))));
    // back to the fast path once the value fits again
    CHECK((big * big) / big == big);
}

TEST_CASE("cyclotomic fields") {
    const Scalar z = Scalar::zeta(3);
    CHECK_FALSE(z.is_rational());
    CHECK(z.pow(3) == Scalar(1));
    CHECK(Scalar(1) + z + z * z == Scalar(0));
    CHECK((z * z).is_rational() == false);
    CHECK(z.inverse() == z * z);
    CHECK(Scalar::zeta_power(3, 5) == z * z);

    const Scalar w = Scalar::zeta(4);
    CHECK(w * w == Scalar(-1));
    CHECK((w * w).is_rational());
    CHECK_THROWS_AS(w.rational_value(), saito::FieldMismatch);

    // r = 2 lives in Q
    CHECK(Scalar::zeta(2) == Scalar(-1));
    CHECK(Scalar::zeta(2).is_rational());
}

TEST_CASE("cyclotomic values are canonical") {
    const Scalar z = Scalar::zeta(6);
    // zeta_6^2 = zeta_6 - 1
    CHECK(z * z == z - Scalar(1));
    CHECK(Scalar::from_coefficients(6, {1, 1}) == z + Scalar(1));
    CHECK(Scalar::from_coefficients(5, {1, 1, 1, 1, 1}) == Scalar(0));
}
