// Reference implementations used only by the tests. Dense maps and plain
// Gaussian elimination over Q, written without touching the library's
// arithmetic so the two can disagree.
#ifndef SAITO_TESTS_ORACLE_HPP
#define SAITO_TESTS_ORACLE_HPP

#include <saito/koszul.hpp>

#include <gmpxx.h>

#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, mpq_class>;

inline void add_term(Poly& p, const Exps& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly from(const saito::Polynomial& f) {
    Poly p;
    for (const auto& [m, c] : f.terms()) {
        Exps e(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) e[i] = static_cast<int>(m[i]);
        add_term(p, e, c.rational_value());
    }
    return p;
}

inline Poly variable(std::size_t n, std::size_t k, int power = 1) {
    Exps e(n, 0);
    e[k] = power;
    return Poly{{e, 1}};
}

inline Poly add(Poly a, const Poly& b, const mpq_class& s = 1) {
    for (const auto& [e, c] : b) add_term(a, e, s * c);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(r, e, ca * cb);
        }
    return r;
}

inline Poly diff(const Poly& a, std::size_t k) {
    Poly r;
    for (const auto& [e, c] : a) {
        if (e[k] == 0) continue;
        Exps d = e;
        --d[k];
        add_term(r, d, c * e[k]);
    }
    return r;
}

// sum_k theta_k * df/dx_k
inline Poly apply(const std::vector<Poly>& theta, const Poly& f) {
    Poly r;
    for (std::size_t k = 0; k < theta.size(); ++k) r = add(r, mul(theta[k], diff(f, k)));
    return r;
}

inline std::vector<Poly> derivation(const saito::Derivation& d) {
    std::vector<Poly> out;
    for (const auto& c : d.components()) out.push_back(from(c));
    return out;
}

// f alpha_n^{i_n} ... alpha_1^{i_1} applied to g, alpha_1 first.
inline Poly act(const saito::Enveloping& u, const saito::UElement& a, const Poly& g) {
    std::vector<std::vector<Poly>> alphas;
    for (const auto& d : u.basis().derivations()) alphas.push_back(derivation(d));
    Poly r;
    for (const auto& [idx, f] : a.terms()) {
        Poly h = g;
        for (std::size_t m = 0; m < alphas.size(); ++m)
            for (unsigned j = 0; j < idx[m]; ++j) h = oracle::apply(alphas[m], h);
        r = add(r, mul(from(f), h));
    }
    return r;
}

inline std::vector<Exps> monomials(std::size_t n, int d) {
    std::vector<Exps> out;
    if (d < 0) return out;
    Exps e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, d);
    return out;
}

inline unsigned long binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    unsigned long r = 1;
    for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rk = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
        std::size_t piv = rk;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        for (std::size_t i = rk + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[rk][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

// Weight-d piece of (sum_k S x^_k) / S-span of the rows sum_k alpha_i(x_k) x^_k,
// with x^_k in weight -1.
inline std::size_t coker_dim(const saito::DerivationBasis& basis, int d) {
    const std::size_t n = basis.nvars();
    const auto gens = monomials(n, d + 1);
    if (gens.empty()) return 0;
    std::map<std::pair<std::size_t, Exps>, std::size_t> column;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& g : gens) column.emplace(std::make_pair(k, g), column.size());
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto alpha = derivation(basis[i]);
        for (const auto& mono : monomials(n, d - basis.weight(i))) {
            std::vector<mpq_class> row(column.size());
            const Poly m{{mono, 1}};
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [e, c] : mul(m, alpha[k])) row[column.at({k, e})] += c;
            rows.push_back(std::move(row));
        }
    }
    return column.size() - rank(std::move(rows));
}

// sum_{j=0}^{p} coker_{d - j w_n}
inline std::size_t predicted_h1(const saito::DerivationBasis& basis, unsigned p, int d) {
    const int wn = basis.weight(basis.size() - 1);
    std::size_t s = 0;
    for (unsigned j = 0; j <= p; ++j) s += coker_dim(basis, d - static_cast<int>(j) * wn);
    return s;
}

// a|x_k|b becomes a(x) (x_k - y_k) b(y) in 2n variables, and f|1 - 1|f becomes
// f(x) - f(y); a degree-one lift is a chain map iff these agree for every k.
inline bool lifting_is_chain_map(const saito::Derivation& theta, const saito::Lifting& lift) {
    const std::size_t n = theta.nvars();
    auto embed = [&](const saito::Monomial& m, std::size_t shift) {
        Exps e(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) e[i + shift] = static_cast<int>(m[i]);
        return Poly{{e, 1}};
    };
    if (lift.size() != n) return false;
    for (std::size_t k = 0; k < n; ++k) {
        Poly lhs;
        for (const auto& [key, c] : lift[k]) {
            const Poly mid = add(variable(2 * n, key.var), variable(2 * n, key.var + n), -1);
            lhs = add(lhs, mul(mul(embed(key.left, 0), mid), embed(key.right, n)), c.rational_value());
        }
        Poly rhs;
        for (const auto& [m, c] : theta[k].terms()) {
            rhs = add(rhs, embed(m, 0), c.rational_value());
            rhs = add(rhs, embed(m, n), -c.rational_value());
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// Cofactor expansion along the first row; shares nothing with the Bareiss code.
inline saito::Polynomial laplace(const saito::PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    saito::Polynomial det(m[0][0].nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        saito::PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<saito::Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        const saito::Polynomial t = m[0][j] * laplace(minor);
        det = j % 2 ? det - t : det + t;
    }
    return det;
}

inline saito::Polynomial product_of_forms(const saito::Arrangement& a) {
    saito::Polynomial q(a.nvars(), saito::Scalar(1));
    for (const auto& f : a.forms()) q = q * f;
    return q;
}

}  // namespace oracle

#endif
