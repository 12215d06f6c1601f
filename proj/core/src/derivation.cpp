#include <saito/derivation.hpp>

#include <algorithm>

namespace saito {

Derivation::Derivation(std::vector<Polynomial> components) : comps_(std::move(components)) {
    for (const auto& c : comps_)
        if (c.nvars() != comps_.size())
            throw std::invalid_argument("derivation component lives in the wrong ring");
}

Derivation Derivation::zero(std::size_t nvars) {
    return Derivation(std::vector<Polynomial>(nvars, Polynomial(nvars)));
}

Derivation Derivation::partial(std::size_t nvars, std::size_t var) {
    auto d = zero(nvars);
    d.comps_[var] = Polynomial(nvars, Scalar(1));
    return d;
}

Derivation Derivation::euler(std::size_t nvars) {
    auto d = zero(nvars);
    for (std::size_t k = 0; k < nvars; ++k) d.comps_[k] = Polynomial::variable(nvars, k);
    return d;
}

bool Derivation::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Derivation& Derivation::operator+=(const Derivation& o) {
    for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
    for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
    return *this;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
    Derivation r = d;
    for (auto& c : r.comps_) c = f * c;
    return r;
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
    Polynomial out(d.nvars());
    for (std::size_t k = 0; k < d.nvars(); ++k) {
        if (d[k].is_zero()) continue;
        Polynomial df = derivative(f, k);
        if (!df.is_zero()) out += d[k] * df;
    }
    return out;
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    std::vector<Polynomial> c;
    c.reserve(a.nvars());
    for (std::size_t k = 0; k < a.nvars(); ++k) c.push_back(apply(a, b[k]) - apply(b, a[k]));
    return Derivation(std::move(c));
}

std::optional<int> derivation_weight(const Derivation& d) {
    std::optional<int> w;
    for (const auto& c : d.components()) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) return std::nullopt;
        int wc = c.degree() - 1;
        if (w && *w != wc) return std::nullopt;
        w = wc;
    }
    return w;
}

ScalarMatrix inverse(const ScalarMatrix& t) {
    const std::size_t n = t.rows();
    if (t.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = t(i, j);
        a[i][n + i] = Scalar(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("singular coordinate change");
        std::swap(a[p], a[c]);
        Scalar inv = a[c][c].inverse();
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    ScalarMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a[i][n + j];
    return r;
}

Derivation change_coordinates(const Derivation& d, const ScalarMatrix& t) {
    const std::size_t n = d.nvars();
    if (t.rows() != n || t.cols() != n) throw std::invalid_argument("coordinate change has wrong size");
    ScalarMatrix ti = inverse(t);
    std::vector<Polynomial> x_in_y;
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial p(n);
        for (std::size_t k = 0; k < n; ++k)
            if (!ti(j, k).is_zero()) p += Polynomial::term(n, Monomial::variable(k), ti(j, k));
        x_in_y.push_back(std::move(p));
    }
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial v(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!t(i, j).is_zero()) v += d[j] * t(i, j);
        comps.push_back(substitute(v, x_in_y));
    }
    return Derivation(std::move(comps));
}

}  // namespace saito
