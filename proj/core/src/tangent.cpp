#include <saito/tangent.hpp>

namespace saito {

bool is_tangent(const Derivation& d, const Arrangement& a) {
    for (const auto& f : a.forms())
        if (!try_exact_div(apply(d, f), f)) return false;
    return true;
}

Derivation combine(const DerivationBasis& basis, const std::vector<Polynomial>& coeffs) {
    Derivation d = Derivation::zero(basis.nvars());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) d += coeffs[i] * basis[i];
    return d;
}

TriangularCheck check_triangular(const DerivationBasis& basis) {
    TriangularCheck c;
    c.triangular = true;
    c.nonzero_diagonal = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (!basis[i][j].is_zero()) c.triangular = false;
        if (basis[i][i].is_zero()) c.nonzero_diagonal = false;
    }
    return c;
}

namespace {

// Cofactor of entry (row, col).
Polynomial cofactor(const PolyMatrix& m, std::size_t row, std::size_t col) {
    const std::size_t n = m.size();
    const std::size_t nv = m[0][0].nvars();
    if (n == 1) return Polynomial(nv, Scalar(1));
    PolyMatrix minor;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Polynomial> r;
        for (std::size_t j = 0; j < n; ++j)
            if (j != col) r.push_back(m[i][j]);
        minor.push_back(std::move(r));
    }
    Polynomial d = determinant(minor);
    return (row + col) % 2 ? -d : d;
}

}  // namespace

std::optional<std::vector<Polynomial>> express_in_basis(const DerivationBasis& basis, const Derivation& d) {
    const std::size_t n = basis.size();
    if (d.nvars() != basis.nvars()) throw std::invalid_argument("derivation lives in the wrong ring");
    if (check_triangular(basis).holds()) {
        std::vector<Polynomial> g;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial rem = d[i];
            for (std::size_t j = 0; j < i; ++j)
                if (!g[j].is_zero() && !basis[j][i].is_zero()) rem -= g[j] * basis[j][i];
            auto q = try_exact_div(rem, basis[i][i]);
            if (!q) return std::nullopt;
            g.push_back(std::move(*q));
        }
        return g;
    }
    // general basis: g = d M^{-1} = (d adj M) / det M
    const PolyMatrix m = saito_matrix(basis);
    const Polynomial det = determinant(m);
    if (det.is_zero()) throw std::domain_error("derivations are not a basis");
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial num(basis.nvars());
        for (std::size_t l = 0; l < n; ++l)
            if (!d[l].is_zero()) num += d[l] * cofactor(m, i, l);
        auto q = try_exact_div(num, det);
        if (!q) return std::nullopt;
        g.push_back(std::move(*q));
    }
    return g;
}

Polynomial bezout_minor(const DerivationBasis& basis, std::size_t k) {
    const std::size_t n = basis.size();
    if (k == 0 || k >= n) throw std::out_of_range("bezout minor index");
    PolyMatrix m;
    for (std::size_t j = k; j < n; ++j) {
        std::vector<Polynomial> row;
        for (std::size_t i = k - 1; i + 1 < n; ++i) row.push_back(basis[i][j]);
        m.push_back(std::move(row));
    }
    return determinant(m);
}

BezoutCheck check_bezout(const DerivationBasis& basis) {
    BezoutCheck c;
    c.holds = true;
    for (std::size_t k = 1; k < basis.size(); ++k) {
        Polynomial minor = bezout_minor(basis, k);
        Polynomial g = gcd(basis[k - 1][k - 1], minor);
        if (!is_unit(g)) c.holds = false;
        c.minors.push_back(std::move(minor));
        c.gcds.push_back(std::move(g));
    }
    return c;
}

namespace {

OrthogonalFamily finish_family(const DerivationBasis& basis, std::vector<std::vector<Polynomial>> coeffs) {
    OrthogonalFamily f;
    for (const auto& c : coeffs) f.members.push_back(combine(basis, c));
    f.coeffs = std::move(coeffs);
    return f;
}

}  // namespace

OrthogonalFamily build_orthogonal_family(const FamilySpec& spec, const DerivationBasis& basis) {
    const std::size_t n = basis.size();
    const std::size_t nv = basis.nvars();
    auto x = [&](std::size_t k, unsigned e = 1) { return Polynomial::variable(nv, k, e); };
    const Polynomial zero(nv), one(nv, Scalar(1));
    if (spec.family == Family::wreath && n == 3) {
        const unsigned r = spec.r;
        const Polynomial a31 = x(2, r) - x(0, r), a21 = x(1, r) - x(0, r), a32 = x(2, r) - x(1, r);
        return finish_family(basis, {{a31 * a21, -a31, one}, {zero, -a32, one}, {zero, zero, one}});
    }
    if (spec.family == Family::braid) {
        // u_k = sum_{i>=k} (-1)^(n-i) prod_{j>i} (x_j - x_k) theta_i
        std::vector<std::vector<Polynomial>> coeffs;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Polynomial> c(n, zero);
            for (std::size_t i = k; i < n; ++i) {
                Polynomial p = one;
                for (std::size_t j = i + 1; j < n; ++j) p *= x(j) - x(k);
                c[i] = (n - 1 - i) % 2 ? -p : p;
            }
            coeffs.push_back(std::move(c));
        }
        return finish_family(basis, std::move(coeffs));
    }
    auto solved = solve_orthogonal_family(basis);
    if (!solved) throw std::domain_error("no polynomial orthogonal family for " + describe(spec));
    return *solved;
}

std::optional<OrthogonalFamily> solve_orthogonal_family(const DerivationBasis& basis) {
    // g M = h e_k forces g_i proportional to the cofactor of M[i][k].
    const std::size_t n = basis.size();
    const PolyMatrix m = saito_matrix(basis);
    std::vector<std::vector<Polynomial>> coeffs;
    for (std::size_t k = 0; k < n; ++k) {
        const Polynomial last = cofactor(m, n - 1, k);
        if (last.is_zero()) return std::nullopt;
        std::vector<Polynomial> c;
        for (std::size_t i = 0; i < n; ++i) {
            auto q = try_exact_div(cofactor(m, i, k), last);
            if (!q) return std::nullopt;
            c.push_back(std::move(*q));
        }
        coeffs.push_back(std::move(c));
    }
    return finish_family(basis, std::move(coeffs));
}

bool check_orthogonality(const DerivationBasis& basis, const OrthogonalFamily& family) {
    const std::size_t n = basis.size();
    if (family.members.size() != n) return false;
    for (std::size_t k = 0; k < n; ++k) {
        if (family.coeffs[k][n - 1] != Polynomial(basis.nvars(), Scalar(1))) return false;
        if (combine(basis, family.coeffs[k]) != family.members[k]) return false;
        for (std::size_t l = 0; l < n; ++l)
            if (l != k && !family.members[k][l].is_zero()) return false;
    }
    return true;
}

StructureConstants::StructureConstants(const DerivationBasis& basis) {
    const std::size_t n = basis.size();
    c_.assign(n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n, Polynomial(basis.nvars()))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto g = express_in_basis(basis, bracket(basis[i], basis[j]));
            if (!g) throw std::domain_error("bracket of basis elements left the module");
            c_[i][j] = *g;
            for (std::size_t k = 0; k < n; ++k) c_[j][i][k] = -(*g)[k];
        }
}

}  // namespace saito
