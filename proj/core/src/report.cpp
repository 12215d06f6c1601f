#include <saito/report.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace saito {

// ------------------------------------------------------------ sources

std::string Source::label() const { return family_name(spec.family); }

const Arrangement& Source::arrangement() const { return built ? built->arrangement : file->arrangement; }

const DerivationBasis* Source::basis() const {
    if (built) return &built->basis;
    if (file && file->basis) return &*file->basis;
    return nullptr;
}

Source family_source(const FamilySpec& spec) {
    Source s;
    s.spec = spec;
    s.built = build_family(spec);
    return s;
}

Source file_source(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    Source s;
    s.file = load_arrangement_json(ss.str());
    s.spec.family = Family::custom;
    s.spec.n = s.file->arrangement.nvars();
    s.spec.r = s.file->arrangement.field_order();
    return s;
}

namespace {

json header(const std::string& computation, const Source& src) {
    json j;
    j["computation"] = computation;
    j["family"] = src.label();
    j["n"] = src.spec.n;
    j["r"] = src.spec.r;
    return j;
}

const DerivationBasis& graded_basis(const Source& src) {
    const DerivationBasis* b = src.basis();
    if (!b) throw InputError("the arrangement has no derivation basis");
    if (!b->graded()) throw InputError("the derivation basis is not homogeneous");
    return *b;
}

bool is_wreath3(const Source& src) { return src.spec.family == Family::wreath && src.spec.n == 3; }

std::optional<std::size_t> expected_hh1(const Source& src) {
    if (is_wreath3(src)) return 3 * src.spec.r + 3;
    if (src.spec.family == Family::braid_deleted && src.spec.n == 2) return 3;
    return std::nullopt;
}

std::vector<std::size_t> monomial_counts(std::size_t n, const Bounds& b) {
    std::vector<std::size_t> out;
    for (int d = b.weight_lo; d <= b.weight_hi; ++d) out.push_back(monomials_of_degree(n, d).size());
    return out;
}

std::vector<std::size_t> delta_at_zero(const Bounds& b) {
    std::vector<std::size_t> out;
    for (int d = b.weight_lo; d <= b.weight_hi; ++d) out.push_back(d == 0 ? 1 : 0);
    return out;
}

json weight_convention() {
    return "x_k has weight 1, x^_k weight -1, alpha_i weight deg alpha_i(x_k) - 1; for A_r^3 the weights of "
           "alpha_1, alpha_2, alpha_3 are 0, r, 2r and eta_k^p has weight 2rp - 1";
}

}  // namespace

json bounds_json(const Bounds& b) {
    return {{"max_order", b.max_order}, {"weight_lo", b.weight_lo}, {"weight_hi", b.weight_hi}};
}

json graded_json(const GradedReport& g, const Source& src, const Bounds& b, std::optional<std::size_t> paper_expected,
                 std::optional<bool> match) {
    json j = header(g.computation, src);
    j["bounds"] = bounds_json(b);
    json rows = json::array();
    for (const auto& row : g.per_weight)
        rows.push_back({{"weight", row.weight}, {"ker", row.ker}, {"im", row.im}, {"dim", row.dim}});
    j["per_weight"] = rows;
    j["total"] = g.total();
    j["stabilized"] = g.stabilized;
    j["paper_expected"] = paper_expected ? json(*paper_expected) : json(nullptr);
    j["match"] = match ? json(*match) : json(nullptr);
    return j;
}

// ------------------------------------------------------------ info / check

namespace {

json conditions(const Source& src, json& j) {
    const DerivationBasis& basis = *src.basis();
    bool ok = true;
    try {
        const auto s = check_saito_criterion(src.arrangement(), basis);
        j["tangent"] = true;
        j["saito"] = {{"holds", s.holds}, {"determinant", to_string(s.determinant)}, {"constant", s.constant.to_string()}};
        ok = ok && s.holds;
    } catch (const TangencyViolation& e) {
        j["tangent"] = false;
        j["tangency_error"] = e.what();
        j["saito"] = {{"holds", false}, {"determinant", nullptr}, {"constant", nullptr}};
        ok = false;
    }
    const auto tri = check_triangular(basis);
    j["triangular"] = tri.holds();
    ok = ok && tri.holds();
    if (tri.holds()) {
        const auto bz = check_bezout(basis);
        j["bezout"] = bz.holds;
        json minors = json::array();
        for (const auto& m : bz.minors) minors.push_back(to_string(m));
        j["bezout_minors"] = minors;
        ok = ok && bz.holds;
        std::optional<OrthogonalFamily> fam;
        if (src.spec.family == Family::custom) {
            fam = solve_orthogonal_family(basis);
        } else {
            fam = build_orthogonal_family(src.spec, basis);
        }
        j["orthogonal"] = fam && check_orthogonality(basis, *fam);
    } else {
        j["bezout"] = false;
        j["bezout_minors"] = json::array();
        j["orthogonal"] = false;
    }
    return ok;
}

}  // namespace

json info_json(const Source& src) {
    json j = header("info", src);
    const Arrangement& a = src.arrangement();
    j["n"] = a.nvars();
    j["description"] = src.spec.family == Family::custom ? "custom" : describe(src.spec);
    j["field"] = a.field_order() <= 2 ? json("Q") : json("Q(zeta_" + std::to_string(a.field_order()) + ")");
    j["hyperplanes"] = a.size();
    json forms = json::array();
    for (const auto& f : a.forms()) forms.push_back(to_string(f));
    j["forms"] = forms;
    j["defining_polynomial"] = to_string(a.defining_polynomial());
    const DerivationBasis* basis = src.basis();
    j["has_basis"] = basis != nullptr;
    if (!basis) return j;
    json m = json::array();
    for (const auto& row : saito_matrix(*basis)) {
        json r = json::array();
        for (const auto& p : row) r.push_back(to_string(p));
        m.push_back(r);
    }
    j["saito_matrix"] = m;
    j["weights"] = basis->graded() ? json(basis->weights()) : json(nullptr);
    const bool ok = conditions(src, j);
    j["free"] = j["saito"]["holds"];
    j["all_conditions"] = ok;
    return j;
}

json check_json(const Source& src) {
    json j = header("check", src);
    if (!src.basis()) throw InputError("the arrangement has no derivation basis to check");
    j["pass"] = conditions(src, j);
    return j;
}

// ------------------------------------------------------------ cohomology

json cohomology_json(const std::string& space, const Source& src, const Bounds& b, int q) {
    const DerivationBasis& basis = graded_basis(src);
    const std::size_t n = basis.nvars();
    if (space == "coker") {
        auto g = coker_saito_report(basis, b.weight_lo, b.weight_hi, b.jobs);
        json j = graded_json(g, src, b);
        j["weight_convention"] = weight_convention();
        return j;
    }
    if (space == "predict-h1") {
        GradedReport g;
        g.computation = "predict-h1";
        g.stabilized = true;
        const auto dims = predict_h1_dims(basis, b.max_order, b.weight_lo, b.weight_hi);
        for (int d = b.weight_lo; d <= b.weight_hi; ++d) {
            const std::size_t v = dims[static_cast<std::size_t>(d - b.weight_lo)];
            g.per_weight.push_back({d, v, 0, v});
        }
        json j = graded_json(g, src, b);
        j["weight_convention"] = weight_convention();
        return j;
    }
    Enveloping u(basis);
    if (space == "h0su") {
        auto g = h_su_dims(u, 0, b);
        return graded_json(g, src, b, std::nullopt, g.dims() == monomial_counts(n, b));
    }
    if (space == "h1su") {
        auto g = h_su_dims(u, 1, b);
        const auto predicted = predict_h1_dims(basis, b.max_order, b.weight_lo, b.weight_hi);
        json j = graded_json(g, src, b, std::nullopt, g.dims() == predicted);
        j["predicted"] = predicted;
        j["weight_convention"] = weight_convention();
        return j;
    }
    if (space == "center") {
        auto g = center_dims(u, b);
        return graded_json(g, src, b, 1, g.total() == 1 && g.dim_at(0) == 1);
    }
    if (space == "ce-s") {
        const unsigned deg = q < 0 ? 1 : static_cast<unsigned>(q);
        PolynomialModule s(basis);
        auto g = ce_cohomology_dims(s, basis, deg, b, "ce-s");
        g.stabilized = true;
        std::optional<std::size_t> expected;
        if (deg == 0) expected = 1;
        if (deg == 1) expected = expected_hh1(src);
        json j = graded_json(g, src, b, expected, expected ? std::optional<bool>(g.total() == *expected) : std::nullopt);
        j["degree"] = deg;
        return j;
    }
    if (space == "ce-h1") {
        if (n != 3 && !(src.spec.family == Family::braid_deleted && n == 2))
            throw InputError("ce-h1 is available for n = 3 and for braid_deleted with n = 2");
        const unsigned deg = q < 0 ? 0 : static_cast<unsigned>(q);
        auto run = [&](unsigned p) {
            H1Module h1(u, p);
            return ce_cohomology_dims(h1, basis, deg, b, "ce-h1");
        };
        auto g = run(b.max_order);
        g.stabilized = g.dims() == run(b.max_order + 1).dims();
        std::optional<std::size_t> expected;
        if (deg == 0) expected = 0;
        json j = graded_json(g, src, b, expected, expected ? std::optional<bool>(g.total() == *expected) : std::nullopt);
        j["degree"] = deg;
        j["weight_convention"] = weight_convention();
        return j;
    }
    throw InputError("unknown space '" + space + "'");
}

// ------------------------------------------------------------ verify suites

bool SuiteResult::pass() const {
    for (const auto& i : items)
        if (!i.informational && !i.pass) return false;
    return true;
}

namespace {

SuiteItem item(std::string name, json expected, json actual, bool pass, std::string note = {}) {
    SuiteItem it;
    it.name = std::move(name);
    it.expected = std::move(expected);
    it.actual = std::move(actual);
    it.pass = pass;
    it.note = std::move(note);
    return it;
}

SuiteItem info_item(std::string name, json expected, json actual, bool agrees, std::string note) {
    SuiteItem it = item(std::move(name), std::move(expected), std::move(actual), agrees, std::move(note));
    it.informational = true;
    return it;
}

using SuiteFn = std::function<void(const Source&, const Bounds&, std::uint64_t, SuiteResult&)>;

void suite_bezout(const Source& src, const Bounds&, std::uint64_t, SuiteResult& out) {
    const DerivationBasis& basis = *src.basis();
    bool tangent = true;
    SaitoResult s;
    try {
        s = check_saito_criterion(src.arrangement(), basis);
    } catch (const TangencyViolation&) {
        tangent = false;
    }
    out.items.push_back(item("saito criterion", "det M = c Q with c != 0",
                             tangent ? json{{"holds", s.holds}, {"constant", s.constant.to_string()}} : json("not tangent"),
                             tangent && s.holds));
    const bool tri = check_triangular(basis).holds();
    out.items.push_back(item("triangular", true, tri, tri));
    const auto bz = check_bezout(basis);
    out.items.push_back(item("bezout", true, bz.holds, bz.holds));
    if (is_wreath3(src)) {
        const std::size_t n = 3;
        const unsigned r = src.spec.r;
        const Polynomial expected = Polynomial::variable(n, 1) * Polynomial::variable(n, 2) *
                                    (Polynomial::variable(n, 2, r) - Polynomial::variable(n, 1, r));
        const Polynomial actual = bezout_minor(basis, 1);
        out.items.push_back(item("bezout minor k = 1", to_string(expected), to_string(actual), actual == expected));
    }
    if (src.spec.family != Family::custom && tri) {
        const auto fam = build_orthogonal_family(src.spec, basis);
        const bool ok = check_orthogonality(basis, fam);
        out.items.push_back(item("orthogonality [u_k, x_l] = 0", true, ok, ok));
    }
}

void suite_pbw(const Source& src, const Bounds&, std::uint64_t seed, SuiteResult& out) {
    Enveloping u(*src.basis());
    std::mt19937_64 rng(seed);
    const std::size_t n = u.nvars();
    std::size_t bad = 0, bad_assoc = 0;
    const std::size_t trials = 500;
    for (std::size_t t = 0; t < trials; ++t) {
        const UElement a = random_element(rng, u, 2, 2), b = random_element(rng, u, 2, 2);
        const Polynomial f = random_polynomial(rng, n, 4);
        if (u.act(u.mul(a, b), f) != u.act(a, u.act(b, f))) ++bad;
        if (t < 50) {
            const UElement c = random_element(rng, u, 1, 2);
            if (u.mul(u.mul(a, b), c) != u.mul(a, u.mul(b, c))) ++bad_assoc;
        }
    }
    out.items.push_back(item("action oracle on 500 products", 0, bad, bad == 0));
    out.items.push_back(item("associativity on 50 triples", 0, bad_assoc, bad_assoc == 0));
    if (src.spec.family == Family::braid_deleted && n == 2) {
        const UElement e = u.generator(0), d = u.generator(1);
        const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
        const UElement dx = u.commutator_with_variable(d, 0), dy = u.commutator_with_variable(d, 1);
        const UElement ed = u.commutator(e, d);
        out.items.push_back(item("[D,x] = 0", "0", u.to_string(dx), dx.is_zero()));
        const UElement want = UElement::from_polynomial(y * (y - x));
        out.items.push_back(item("[D,y] = y(y-x)", u.to_string(want), u.to_string(dy), dy == want));
        out.items.push_back(item("[E,D] = D", u.to_string(d), u.to_string(ed), ed == d));
    }
}

void suite_h0su(const Source& src, const Bounds& b, std::uint64_t, SuiteResult& out) {
    Enveloping u(graded_basis(src));
    const auto g = h_su_dims(u, 0, b);
    const auto want = monomial_counts(u.nvars(), b);
    out.items.push_back(item("dim H^0(S,U)_d = dim S_d", want, g.dims(), g.dims() == want));
    out.items.push_back(item("stable under p -> p + 1", true, g.stabilized, g.stabilized));
}

void suite_center(const Source& src, const Bounds& b, std::uint64_t, SuiteResult& out) {
    Enveloping u(graded_basis(src));
    const auto c = center_report(u, b);
    const auto want = delta_at_zero(b);
    out.items.push_back(item("center dims", want, c.center.dims(), c.is_constants));
    out.items.push_back(item("center equals H^0_S(L,S)", c.ce_s.dims(), c.center.dims(), c.agrees));
    out.items.push_back(
        item("dim H^0(S,U)_d = dim S_d", monomial_counts(u.nvars(), b), c.h0_su.dims(), c.h0_is_s));
    const bool stable = c.center.stabilized && c.h0_su.stabilized;
    out.items.push_back(item("stable under p -> p + 1", true, stable, stable));
}

void suite_h1su(const Source& src, const Bounds& b, std::uint64_t seed, SuiteResult& out) {
    const DerivationBasis& basis = graded_basis(src);
    Enveloping u(basis);
    const auto g = h_su_dims(u, 1, b);
    const auto predicted = predict_h1_dims(basis, b.max_order, b.weight_lo, b.weight_hi);
    out.items.push_back(item("H^1(S,U) = coker M (x) k[alpha_n] per weight", predicted, g.dims(), g.dims() == predicted));
    out.items.push_back(info_item("stable under p -> p + 1", true, g.stabilized, g.stabilized,
                                  "F_p H^1 keeps growing in weights reached by alpha_n^(p+1)"));
    if (basis.nvars() == 3 && basis.size() == 3) {
        F1ReductionWitness total;
        for (int w = 0; w <= 3; ++w) {
            const auto lw = f1_reduction_witness(u, w, 5, seed + static_cast<std::uint64_t>(w));
            total.trials += lw.trials;
            total.successes += lw.successes;
        }
        out.items.push_back(item("order-one cocycles without alpha_3 reduce to F_0", total.trials, total.successes,
                                 total.successes == total.trials && total.trials > 0));
    }
}

void suite_eta(const Source& src, const Bounds&, std::uint64_t, SuiteResult& out) {
    Enveloping u(src.built->basis);
    const auto fam = build_orthogonal_family(src.spec, u.basis());
    std::size_t zero = 0, count = 0;
    for (unsigned p = 0; p <= 3; ++p)
        for (std::size_t k = 0; k < 3; ++k) {
            ++count;
            if (koszul_d(u, build_eta(u, fam, k, p)).is_zero()) ++zero;
        }
    out.items.push_back(item("d(eta_k^p) = 0 for k <= 3, p <= 3", count, zero, zero == count));
}

void suite_ce(const Source& src, const Bounds& b, std::uint64_t, SuiteResult& out) {
    const DerivationBasis& basis = graded_basis(src);
    PolynomialModule s(basis);
    const auto g0 = ce_cohomology_dims(s, basis, 0, b, "ce-s");
    out.items.push_back(item("H^0_S(L,S) is the constants", delta_at_zero(b), g0.dims(), g0.dims() == delta_at_zero(b)));
    const auto g1 = ce_cohomology_dims(s, basis, 1, b, "ce-s");
    if (auto want = expected_hh1(src)) {
        out.items.push_back(item("dim H^1_S(L,S)", *want, g1.total(), g1.total() == *want));
    } else {
        out.items.push_back(info_item("dim H^1_S(L,S)", nullptr, g1.total(), true, "no closed value to compare with"));
    }
    bool dd = true;
    for (int d = b.weight_lo; d <= b.weight_hi; ++d)
        for (unsigned q = 0; q + 2 <= basis.size(); ++q) dd = dd && ce_square_zero(s, basis, q, d);
    out.items.push_back(item("d o d = 0 with values in S", true, dd, dd));
    const std::size_t n = basis.nvars();
    if (n == 3 || (src.spec.family == Family::braid_deleted && n == 2)) {
        Enveloping u(basis);
        H1Module h1(u, b.max_order);
        bool ok = true;
        for (int d = 0; d <= 2; ++d) ok = ok && ce_square_zero(h1, basis, 0, d);
        out.items.push_back(item("d o d = 0 with values in F_p H^1(S,U)", true, ok, ok));
    }
}

void suite_invariants(const Source& src, const Bounds& b, std::uint64_t, SuiteResult& out) {
    const DerivationBasis& basis = graded_basis(src);
    Enveloping u(basis);
    const auto g = invariants_h1(u, b);
    out.items.push_back(item("H^0_S(L, H^1(S,U))", 0, g.total(), g.total() == 0));
    if (basis[0] == Derivation::euler(basis.nvars())) {
        H1Module h1(u, b.max_order);
        bool ok = true;
        for (int w = b.weight_lo; w <= std::min(b.weight_hi, 4); ++w) ok = ok && euler_scaling_holds(h1, w);
        out.items.push_back(item("nabla_E is multiplication by the weight", true, ok, ok));
    }
}

void suite_hh1(const Source& src, const Bounds& b, std::uint64_t, SuiteResult& out) {
    Enveloping u(graded_basis(src));
    const auto h = hh1_report(u, b);
    const json actual = {{"total", h.total}, {"H1_S(L,S)", h.ce_s.total()}, {"H0_S(L,H1(S,U))", h.invariants.total()}};
    if (auto want = expected_hh1(src)) {
        out.items.push_back(item("dim HH^1(U)", *want, actual, h.total == *want));
    } else {
        out.items.push_back(info_item("dim HH^1(U)", nullptr, actual, true, "no closed value to compare with"));
    }
}

void suite_outer(const Source& src, const Bounds&, std::uint64_t seed, SuiteResult& out) {
    Enveloping u(*src.basis());
    const auto o = outer_basis_report(u, src.arrangement(), seed);
    out.items.push_back(item("phi_f are cocycles", true, o.all_cocycles, o.all_cocycles));
    out.items.push_back(item("rank of the classes", o.forms, o.rank, o.rank == o.forms));
    if (o.h1_0)
        out.items.push_back(item("classes span H^1_S(L,S)_0", *o.h1_0, o.rank, *o.h1_0 == o.rank));
    out.items.push_back(item("compositions vanish on generators", true, o.compositions_vanish, o.compositions_vanish));
    out.items.push_back(item("brackets vanish on generators", true, o.brackets_vanish, o.brackets_vanish));
    out.items.push_back(item("d_f is a derivation of U", true, o.derivation_property, o.derivation_property));
}

void suite_commutation(const Source& src, const Bounds&, std::uint64_t seed, SuiteResult& out) {
    Enveloping u(src.built->basis);
    for (const auto& c : commutation_audit(u, src.spec.r, seed)) {
        out.items.push_back(item(c.bracket + " agrees with the action oracle", true, c.oracle_ok, c.oracle_ok,
                                 "computed " + c.bracket + " = " + c.computed));
        out.items.push_back(info_item(c.bracket + " against the claimed constant", c.claimed, c.computed,
                                      c.agrees_with_claim,
                                      std::string(c.agrees_with_claim ? "" : "discrepancy; ") + "a1 = E, a2 = D, a3 = C"));
    }
}

void suite_liftings(const Source& src, const Bounds&, std::uint64_t seed, SuiteResult& out) {
    const unsigned r = src.spec.r;
    Enveloping u(src.built->basis);
    const Derivation& d = u.basis()[1];
    const bool corrected = is_chain_map(d, wreath_lifting_D(r));
    out.items.push_back(item("D_1 is a chain map", true, corrected, corrected,
                             "middle sum taken as x_1^s|x_1|x_1^t x_k"));
    const bool literal = is_chain_map(d, wreath_lifting_D_literal(r));
    out.items.push_back(info_item("D_1 with x_k^s|x_1|x_1^t x_k is a chain map", true, literal, literal,
                                  literal ? "" : "fails for r >= 2"));
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (int t = 0; t < 100; ++t) {
        const Polynomial g = random_polynomial(rng, 3, 4);
        if (resolution_b1(generic_lifting(g)) != bar_difference(g)) ++bad;
    }
    out.items.push_back(item("b_1 Delta(g) = g|1 - 1|g on 100 random g", 0, bad, bad == 0));
    bool generic = true;
    for (const auto& alpha : u.basis().derivations()) generic = generic && is_chain_map(alpha, generic_lifting_of(alpha));
    out.items.push_back(item("generic lifting of each alpha_i is a chain map", true, generic, generic));
    const auto fam = build_orthogonal_family(src.spec, u.basis());
    std::size_t agree = 0, count = 0;
    for (unsigned p = 0; p <= 2; ++p)
        for (std::size_t k = 0; k < 3; ++k) {
            ++count;
            const Cochain eta = build_eta(u, fam, k, p);
            const Cochain diff = sharp_action(u, u.generator(1), wreath_lifting_D(r), eta) -
                                 sharp_action(u, u.generator(1), generic_lifting_of(d), eta);
            const int weight = static_cast<int>(2 * r * p) - 1 + static_cast<int>(r);
            if (is_coboundary(u, diff, weight, p)) ++agree;
        }
    out.items.push_back(item("both liftings give the same nabla_D on eta classes", count, agree, agree == count));
    std::size_t dd_bad = 0;
    for (int t = 0; t < 20; ++t) {
        Cochain c(3, 0);
        c.add(0, random_element(rng, u, 2, 2));
        if (!koszul_d(u, koszul_d(u, c)).is_zero()) ++dd_bad;
        Cochain c1(3, 1);
        for (std::size_t k = 0; k < 3; ++k) c1.add(Subset{1} << k, random_element(rng, u, 2, 2));
        if (!koszul_d(u, koszul_d(u, c1)).is_zero()) ++dd_bad;
    }
    out.items.push_back(item("d o d = 0 on 40 random cochains", 0, dd_bad, dd_bad == 0));
}

void suite_dsharp(const Source& src, const Bounds&, std::uint64_t, SuiteResult& out) {
    Enveloping u(src.built->basis);
    for (const auto& d : dsharp_audit(u, src.spec.r, 2)) {
        const std::string name = "D#(eta_" + std::to_string(d.eta) + "^" + std::to_string(d.p) + ")";
        const std::string modulus = d.eta == 1 ? "F_{p-1} X^1 + im d^0" : "F_{p-1} X^1";
        out.items.push_back(item(name + " mod " + modulus, true, d.matches, d.matches,
                                 d.matches ? "" : "top-order difference " + d.discrepancy));
        if (d.eta != 1 && !d.matches)
            out.items.push_back(info_item(name + " with p r in place of p", true, d.scaled_matches, d.scaled_matches,
                                          "coefficients (1-pr) x1^r, pr x_j^r, (pr-r-1) x_l^r"));
    }
}

struct SuiteDef {
    std::string name;
    SuiteFn fn;
    std::function<bool(const Source&)> applies;
};

const std::vector<SuiteDef>& suites() {
    auto has_basis = [](const Source& s) { return s.basis() != nullptr; };
    auto graded = [](const Source& s) { return s.basis() && s.basis()->graded(); };
    auto n3 = [](const Source& s) { return s.basis() && s.basis()->graded() && s.basis()->nvars() == 3; };
    auto h1_module = [](const Source& s) {
        const auto* b = s.basis();
        if (!b || !b->graded() || !(b->nvars() == 3 || (s.spec.family == Family::braid_deleted && b->nvars() == 2)))
            return false;
        return (*b)[0] == Derivation::euler(b->nvars());
    };
    static const std::vector<SuiteDef> defs{
        {"bezout", suite_bezout, has_basis},
        {"pbw", suite_pbw, has_basis},
        {"h0su", suite_h0su, graded},
        {"center", suite_center, graded},
        {"eta", suite_eta, is_wreath3},
        {"h1su", suite_h1su, n3},
        {"ce", suite_ce, graded},
        {"invariants", suite_invariants, h1_module},
        {"hh1", suite_hh1, h1_module},
        {"outer", suite_outer, is_wreath3},
        {"commutation", suite_commutation, is_wreath3},
        {"liftings", suite_liftings, is_wreath3},
        {"dsharp", suite_dsharp, is_wreath3},
    };
    return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"all", "paper"};
        for (const auto& s : suites()) v.push_back(s.name);
        return v;
    }();
    return names;
}

std::vector<SuiteResult> run_suite(const std::string& suite, const Source& src, const Bounds& b, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    const bool every = suite == "all" || suite == "paper";
    bool found = every;
    for (const auto& def : suites()) {
        if (!every && def.name != suite) continue;
        found = true;
        if (!def.applies(src)) {
            if (every) continue;
            throw InputError("suite '" + suite + "' does not apply to " + src.label() + " with n = " +
                             std::to_string(src.spec.n));
        }
        SuiteResult r;
        r.suite = def.name;
        def.fn(src, b, seed, r);
        out.push_back(std::move(r));
    }
    if (!found) throw InputError("unknown suite '" + suite + "'");
    return out;
}

json verify_json(const std::vector<SuiteResult>& results, const Source& src, const Bounds& b, std::uint64_t seed) {
    json j = header("verify", src);
    j["bounds"] = bounds_json(b);
    j["seed"] = seed;
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        json items = json::array();
        for (const auto& i : r.items)
            items.push_back({{"name", i.name},
                             {"expected", i.expected},
                             {"actual", i.actual},
                             {"pass", i.pass},
                             {"informational", i.informational},
                             {"note", i.note}});
        arr.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"items", items}});
        all = all && r.pass();
    }
    j["suites"] = arr;
    j["pass"] = all;
    return j;
}

// ------------------------------------------------------------ text

namespace {

bool scalar_array(const json& a) {
    for (const auto& e : a)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string joined(const json& a) {
    std::string out;
    for (const auto& e : a) {
        if (!out.empty()) out += ", ";
        out += e.is_array() ? "[" + joined(e) + "]" : scalar_text(e);
    }
    return out;
}

void render(const json& v, const std::string& indent, std::ostringstream& os) {
    for (const auto& [key, value] : v.items()) {
        os << indent << key << ':';
        if (value.is_object()) {
            os << '\n';
            render(value, indent + "  ", os);
        } else if (value.is_array() && scalar_array(value)) {
            os << ' ' << joined(value) << '\n';
        } else if (value.is_array()) {
            os << '\n';
            for (const auto& e : value) {
                if (e.is_object()) {
                    os << indent << "  -\n";
                    render(e, indent + "    ", os);
                } else if (e.is_array()) {
                    os << indent << "  - " << joined(e) << '\n';
                } else {
                    os << indent << "  - " << scalar_text(e) << '\n';
                }
            }
        } else {
            os << ' ' << scalar_text(value) << '\n';
        }
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render(report, "", os);
    return os.str();
}

}  // namespace saito
