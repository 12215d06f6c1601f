#include <saito/tangent.hpp>

#include "oracle.hpp"

#include <doctest.h>

using namespace saito;

TEST_CASE("triangular and Bezout conditions") {
    std::vector<FamilySpec> specs;
    for (std::size_t n = 2; n <= 5; ++n) specs.push_back({Family::braid, n, 1});
    for (std::size_t n = 1; n <= 3; ++n) specs.push_back({Family::braid_deleted, n, 1});
    for (unsigned r = 1; r <= 3; ++r) specs.push_back({Family::wreath, 3, r});
    for (const auto& spec : specs) {
        CAPTURE(describe(spec));
        const auto fa = build_family(spec);
        CHECK(check_triangular(fa.basis).holds());
        CHECK(check_bezout(fa.basis).holds);
    }
}

TEST_CASE("k = 1 Bezout minor of A_r") {
    for (unsigned r = 1; r <= 3; ++r) {
        const auto fa = build_family({Family::wreath, 3, r});
        const auto want = parse_polynomial("x2*x3^" + std::to_string(r + 1) + " - x2^" + std::to_string(r + 1) + "*x3", 3);
        CHECK(bezout_minor(fa.basis, 1) == want);
    }
}

TEST_CASE("orthogonal families") {
    std::vector<FamilySpec> specs;
    for (std::size_t n = 2; n <= 4; ++n) specs.push_back({Family::braid, n, 1});
    for (unsigned r = 1; r <= 3; ++r) specs.push_back({Family::wreath, 3, r});
    specs.push_back({Family::braid_deleted, 2, 1});
    for (const auto& spec : specs) {
        CAPTURE(describe(spec));
        const auto fa = build_family(spec);
        const auto fam = build_orthogonal_family(spec, fa.basis);
        const std::size_t n = fa.basis.nvars();
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(fam.coeffs[k][n - 1] == Polynomial(n, Scalar(1)));
            // u_k(x_l) computed straight from the coefficients
            for (std::size_t l = 0; l < n; ++l) {
                Polynomial v(n);
                for (std::size_t i = 0; i < n; ++i) v += fam.coeffs[k][i] * fa.basis[i][l];
                if (l != k) CHECK(v.is_zero());
                else CHECK_FALSE(v.is_zero());
            }
        }
        CHECK(check_orthogonality(fa.basis, fam));
    }
}

TEST_CASE("structure constants reproduce brackets") {
    for (unsigned r = 1; r <= 2; ++r) {
        const auto fa = build_family({Family::wreath, 3, r});
        const StructureConstants c(fa.basis);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Derivation sum = Derivation::zero(3);
                for (std::size_t k = 0; k < 3; ++k) sum += c(i, j)[k] * fa.basis[k];
                // [a_i, a_j](x_l) = a_i(a_j(x_l)) - a_j(a_i(x_l)) through the oracle
                for (std::size_t l = 0; l < 3; ++l) {
                    const auto ai = oracle::derivation(fa.basis[i]), aj = oracle::derivation(fa.basis[j]);
                    const auto want = oracle::add(oracle::apply(ai, oracle::from(fa.basis[j][l])),
                                                  oracle::apply(aj, oracle::from(fa.basis[i][l])), -1);
                    CHECK(oracle::from(sum[l]) == want);
                }
            }
    }
}

TEST_CASE("expressing tangent derivations in the basis") {
    const auto fa = build_family({Family::wreath, 3, 1});
    const Derivation d = parse_polynomial("x1 + x3", 3) * fa.basis[1] + fa.basis[2];
    const auto g = express_in_basis(fa.basis, d);
    REQUIRE(g);
    CHECK(combine(fa.basis, *g) == d);
    CHECK(is_tangent(d, fa.arrangement));
    CHECK_FALSE(is_tangent(Derivation::partial(3, 0), fa.arrangement));
    CHECK_FALSE(express_in_basis(fa.basis, Derivation::partial(3, 0)));
}
