#include <saito/cohomology.hpp>

#include "oracle.hpp"

#include <doctest.h>

using namespace saito;

namespace {

Bounds window(unsigned p, int lo, int hi) {
    Bounds b;
    b.max_order = p;
    b.weight_lo = lo;
    b.weight_hi = hi;
    return b;
}

}  // namespace

TEST_CASE("cochain slices round trip") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    const CochainSlice s(u, 1, 2, 2);
    REQUIRE(s.size() > 0);
    for (std::size_t j = 0; j < s.size(); j += 7) {
        const Cochain c = s.basis_cochain(j);
        CHECK(s.vectorize(c) == make_qvector({{std::uint32_t(j), 1}}));
        CHECK(s.cochain(s.vectorize(c)) == c);
    }
    Cochain outside(3, 1);
    outside.add(1, u.power(u.generator(2), 3));
    CHECK_THROWS_AS(s.vectorize(outside), std::logic_error);
}

TEST_CASE("H^0(S,U) is S in low weights") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    const auto g = h_su_dims(u, 0, window(2, 0, 4));
    for (int d = 0; d <= 4; ++d) CHECK(g.dim_at(d) == oracle::binomial(d + 2, 2));
    CHECK(g.stabilized);
}

TEST_CASE("cokernel of the Saito matrix against the dense oracle") {
    std::vector<FamilySpec> specs{{Family::wreath, 3, 1}, {Family::wreath, 3, 2}, {Family::braid, 3, 1},
                                  {Family::braid_deleted, 2, 1}};
    for (const auto& spec : specs) {
        CAPTURE(describe(spec));
        const auto basis = build_family(spec).basis;
        const auto dims = coker_saito_dims(basis, -1, 6);
        for (int d = -1; d <= 6; ++d) CHECK(dims[std::size_t(d + 1)] == oracle::coker_dim(basis, d));
    }
}

TEST_CASE("H^1(S,U) against coker M (x) k[alpha_3] for r = 1") {
    const auto basis = build_family({Family::wreath, 3, 1}).basis;
    Enveloping u(basis);
    const auto g = h_su_dims(u, 1, window(2, -1, 4));
    for (int d = -1; d <= 4; ++d) CHECK(g.dim_at(d) == oracle::predicted_h1(basis, 2, d));
    CHECK(predict_h1_dims(basis, 2, -1, 4) == g.dims());
}

TEST_CASE("Chevalley-Eilenberg complex with values in S") {
    const auto basis = build_family({Family::wreath, 3, 1}).basis;
    PolynomialModule s(basis);
    for (int d = -2; d <= 3; ++d) {
        CHECK(ce_square_zero(s, basis, 0, d));
        CHECK(ce_square_zero(s, basis, 1, d));
    }
    const auto h0 = ce_cohomology_dims(s, basis, 0, window(3, -1, 4), "ce-s");
    CHECK(h0.dims() == std::vector<std::size_t>{0, 1, 0, 0, 0, 0});
    const auto h1 = ce_cohomology_dims(s, basis, 1, window(3, -1, 4), "ce-s");
    CHECK(h1.total() == 6);
    CHECK(h1.dim_at(0) == 6);
}

TEST_CASE("HH^1 and the center for A_1") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    const auto b = window(2, -1, 3);
    const auto h = hh1_report(u, b);
    CHECK(h.total == 6);
    CHECK(h.invariants.total() == 0);
    const auto c = center_dims(u, b);
    CHECK(c.dims() == std::vector<std::size_t>{0, 1, 0, 0, 0});
}

TEST_CASE("H^1 module: Euler acts by the weight") {
    Enveloping u(build_family({Family::wreath, 3, 1}).basis);
    H1Module h1(u, 2);
    for (int w = -1; w <= 2; ++w) CHECK(euler_scaling_holds(h1, w));
    CHECK(h1.dim(-1) == 3);
    for (const auto& rep : h1.representatives(0)) {
        CHECK(koszul_d(u, rep).is_zero());
        CHECK(h1.class_of(rep, 0));
    }
}

TEST_CASE("outer derivations of A_1") {
    const auto fa = build_family({Family::wreath, 3, 1});
    Enveloping u(fa.basis);
    const auto o = outer_basis_report(u, fa.arrangement, 1);
    CHECK(o.forms == 6);
    CHECK(o.all_cocycles);
    CHECK(o.rank == 6);
    CHECK(o.compositions_vanish);
    CHECK(o.derivation_property);
    CHECK_THROWS_AS(outer_derivation_cocycle(fa.basis, parse_polynomial("x1 + 2*x2", 3)), NotDivisible);
}

TEST_CASE("commutation constants") {
    for (unsigned r = 1; r <= 3; ++r) {
        Enveloping u(build_family({Family::wreath, 3, r}).basis);
        for (const auto& c : commutation_audit(u, r, 2)) CHECK(c.oracle_ok);
    }
}

TEST_CASE("results do not depend on the number of jobs") {
    const auto basis = build_family({Family::wreath, 3, 2}).basis;
    CHECK(coker_saito_report(basis, -1, 8, 1).dims() == coker_saito_report(basis, -1, 8, 4).dims());
    Enveloping u(basis);
    auto b = window(1, -1, 3);
    const auto one = h_su_dims(u, 1, b);
    b.jobs = 3;
    CHECK(h_su_dims(u, 1, b).dims() == one.dims());
}
