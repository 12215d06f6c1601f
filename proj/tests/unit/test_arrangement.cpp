#include <saito/arrangement.hpp>
#include <saito/linalg.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <string>

using namespace saito;

namespace {

void check_free(const FamilySpec& spec, std::size_t hyperplanes) {
    CAPTURE(describe(spec));
    const auto fa = build_family(spec);
    CHECK(fa.arrangement.size() == hyperplanes);
    const Polynomial det = oracle::laplace(saito_matrix(fa.basis));
    const Polynomial q = oracle::product_of_forms(fa.arrangement);
    CHECK(det == q);
    const auto s = check_saito_criterion(fa.arrangement, fa.basis);
    CHECK(s.holds);
    CHECK(s.determinant == det);
}

}  // namespace

TEST_CASE("families are free with det M = Q") {
    for (std::size_t n = 2; n <= 5; ++n) check_free({Family::braid, n, 1}, n * (n - 1) / 2);
    for (std::size_t n = 1; n <= 3; ++n) check_free({Family::braid_deleted, n, 1}, n * (n + 1) / 2);
    for (unsigned r = 1; r <= 3; ++r) check_free({Family::wreath, 3, r}, 3 + 3 * r);
}

TEST_CASE("wreath weights") {
    for (unsigned r = 1; r <= 3; ++r) {
        const auto fa = build_family({Family::wreath, 3, r});
        REQUIRE(fa.basis.graded());
        CHECK(fa.basis.weights() == std::vector<int>{0, int(r), int(2 * r)});
    }
}

TEST_CASE("forms are normalized and validated") {
    CHECK_THROWS_WITH_AS(Arrangement(2, 1, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}}), "form 2 is zero",
                         InputError);
    try {
        Arrangement(2, 1, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)},
                           {Scalar(1), Scalar(2)}, {Scalar(2), Scalar(2)}});
        FAIL("proportional forms accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("forms 3 and 5 proportional") != std::string::npos);
    }
    const Arrangement a(2, 1, {{Scalar(2), Scalar(4)}});
    CHECK(a.forms()[0] == parse_polynomial("1/2*x1 + x2", 2));
}

TEST_CASE("arrangement files") {
    const auto loaded = load_arrangement_json(R"({"n": 2, "forms": [[1, 0], [0, 1], [1, -1]],
        "basis": [["x1", "x2"], ["x1^2", "x2^2"]]})");
    CHECK(loaded.arrangement.size() == 3);
    REQUIRE(loaded.basis);
    CHECK(check_saito_criterion(loaded.arrangement, *loaded.basis).holds);
    const auto again = load_arrangement_json(arrangement_to_json(loaded.arrangement, &*loaded.basis));
    CHECK(again.arrangement.forms() == loaded.arrangement.forms());

    CHECK_THROWS_AS(load_arrangement_json(R"({"n": 2, "forms": [[1, 0], [2, 0]]})"), InputError);
    try {
        load_arrangement_json("{\"n\": 2,\n \"forms\": [[1, 0],, ]}");
        FAIL("malformed JSON accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_arrangement_json(R"({"n": 2, "forms": [[1, 0]], "basis": [["x1", "x3"]]})"), InputError);
}

TEST_CASE("non-tangent derivations are rejected") {
    const auto loaded = load_arrangement_json(R"({"n": 2, "forms": [[1, 0], [0, 1], [1, -1]],
        "basis": [["x1", "x2"], ["x2^2", "x1^2"]]})");
    CHECK_THROWS_AS(check_saito_criterion(loaded.arrangement, *loaded.basis), TangencyViolation);
}
