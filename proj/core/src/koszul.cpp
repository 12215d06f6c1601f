#include <saito/koszul.hpp>

#include <algorithm>
#include <stdexcept>

namespace saito {

std::vector<Subset> subsets_of_size(std::size_t n, unsigned q) {
    std::vector<Subset> out;
    for (Subset k = 0; k < (Subset{1} << n); ++k)
        if (subset_size(k) == q) out.push_back(k);
    return out;
}

int wedge_sign(Subset k, std::size_t l) {
    const Subset above = k >> (l + 1);
    return subset_size(above) % 2 ? -1 : 1;
}

// ------------------------------------------------------------------ Cochain

UElement Cochain::component(Subset k) const {
    auto it = comps_.find(k);
    return it == comps_.end() ? UElement(nvars_) : it->second;
}

int Cochain::order() const {
    int o = -1;
    for (const auto& [k, u] : comps_) o = std::max(o, u.order());
    return o;
}

void Cochain::add(Subset k, const UElement& u) {
    if (u.is_zero()) return;
    if (subset_size(k) != degree_) throw std::invalid_argument("cochain component of the wrong degree");
    auto [it, inserted] = comps_.try_emplace(k, u);
    if (!inserted) {
        it->second += u;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (nvars_ == 0) {
        nvars_ = o.nvars_;
        degree_ = o.degree_;
    }
    for (const auto& [k, u] : o.comps_) add(k, u);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (nvars_ == 0) {
        nvars_ = o.nvars_;
        degree_ = o.degree_;
    }
    for (const auto& [k, u] : o.comps_) add(k, -u);
    return *this;
}

Cochain operator*(const Polynomial& f, const Cochain& c) {
    Cochain r(c.nvars_, c.degree_);
    for (const auto& [k, u] : c.comps_) r.add(k, f * u);
    return r;
}

Cochain operator*(const Scalar& s, const Cochain& c) {
    Cochain r(c.nvars_, c.degree_);
    for (const auto& [k, u] : c.comps_) r.add(k, s * u);
    return r;
}

Cochain Cochain::above_order(int p) const {
    Cochain r(nvars_, degree_);
    for (const auto& [k, u] : comps_) {
        UElement keep(nvars_);
        for (const auto& [i, f] : u.terms())
            if (static_cast<int>(saito::order(i)) > p) keep.add_term(i, f);
        r.add(k, keep);
    }
    return r;
}

Cochain koszul_d(const Enveloping& u, const Cochain& c) {
    const std::size_t n = u.nvars();
    Cochain r(n, c.degree() + 1);
    for (const auto& [k, v] : c.components())
        for (std::size_t l = 0; l < n; ++l) {
            if (k & (Subset{1} << l)) continue;
            UElement w = u.commutator_with_variable(v, l);
            if (wedge_sign(k, l) < 0) w = -w;
            r.add(k | (Subset{1} << l), w);
        }
    return r;
}

// ------------------------------------------------------------ resolution

bool P0KeyLess::operator()(const P0Key& a, const P0Key& b) const {
    if (int c = grlex_compare(a.first, b.first)) return c < 0;
    return grlex_compare(a.second, b.second) < 0;
}

bool P1KeyLess::operator()(const P1Key& a, const P1Key& b) const {
    if (int c = grlex_compare(a.left, b.left)) return c < 0;
    if (a.var != b.var) return a.var < b.var;
    return grlex_compare(a.right, b.right) < 0;
}

void add_to(P0Element& e, const Monomial& a, const Monomial& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.try_emplace(P0Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

void add_to(P1Element& e, const P1Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

P0Element bar_difference(const Polynomial& f) {
    P0Element e;
    for (const auto& [m, c] : f.terms()) {
        add_to(e, m, Monomial(), c);
        add_to(e, Monomial(), m, -c);
    }
    return e;
}

P0Element resolution_b1(const P1Element& e) {
    P0Element r;
    for (const auto& [key, c] : e) {
        const Monomial x = Monomial::variable(key.var);
        add_to(r, key.left * x, key.right, c);
        add_to(r, key.left, x * key.right, -c);
    }
    return r;
}

P1Element generic_lifting(const Polynomial& g) {
    P1Element e;
    for (const auto& [m, c] : g.terms()) {
        Monomial prefix, suffix = m;
        for (std::size_t v = 0; v < kMaxVariables; ++v)
            for (unsigned j = 0; j < m[v]; ++j) {
                const Monomial x = Monomial::variable(v);
                suffix = suffix / x;
                add_to(e, P1Key{prefix, v, suffix}, c);
                prefix = prefix * x;
            }
    }
    return e;
}

Lifting generic_lifting_of(const Derivation& theta) {
    Lifting l;
    for (std::size_t k = 0; k < theta.nvars(); ++k) l.push_back(generic_lifting(theta[k]));
    return l;
}

namespace {

Lifting wreath_lifting(unsigned r, bool literal) {
    const Scalar one(1), minus_one(-1);
    Lifting l(3);
    for (std::size_t k = 1; k < 3; ++k) {
        auto& e = l[k];
        for (unsigned s = 0; s <= r; ++s)
            add_to(e, P1Key{Monomial::variable(k, s), k, Monomial::variable(k, r - s)}, one);
        for (unsigned s = 0; s < r; ++s) {
            const Monomial left = literal ? Monomial::variable(k, s) : Monomial::variable(0, s);
            add_to(e, P1Key{left, 0, Monomial::variable(0, r - 1 - s) * Monomial::variable(k)}, minus_one);
        }
        add_to(e, P1Key{Monomial::variable(0, r), k, Monomial()}, minus_one);
    }
    return l;
}

}  // namespace

Lifting wreath_lifting_D(unsigned r) { return wreath_lifting(r, false); }
Lifting wreath_lifting_D_literal(unsigned r) { return wreath_lifting(r, true); }

bool is_chain_map(const Derivation& theta, const Lifting& lift) {
    if (lift.size() != theta.nvars()) return false;
    for (std::size_t k = 0; k < theta.nvars(); ++k)
        if (resolution_b1(lift[k]) != bar_difference(theta[k])) return false;
    return true;
}

Cochain sharp_action(const Enveloping& u, const UElement& theta, const Lifting& lift, const Cochain& c) {
    const std::size_t n = u.nvars();
    Cochain r(n, c.degree());
    if (c.degree() == 0) {
        r.add(0, u.commutator(theta, c.component(0)));
        return r;
    }
    if (c.degree() != 1) throw std::invalid_argument("sharp action is implemented in degrees 0 and 1");
    if (lift.size() != n) throw std::invalid_argument("lifting has the wrong number of components");
    for (std::size_t k = 0; k < n; ++k) {
        const Subset key = Subset{1} << k;
        UElement v = u.commutator(theta, c.component(key));
        for (const auto& [p1, coeff] : lift[k]) {
            const UElement cj = c.component(Subset{1} << p1.var);
            if (cj.is_zero()) continue;
            const Polynomial a = Polynomial::term(n, p1.left, coeff);
            v -= u.right_multiply(a * cj, Polynomial::term(n, p1.right, Scalar(1)));
        }
        r.add(key, v);
    }
    return r;
}

Cochain build_eta(const Enveloping& u, const OrthogonalFamily& family, std::size_t k, unsigned p) {
    const std::size_t n = u.nvars();
    UElement uk(n);
    for (std::size_t i = 0; i < u.rank(); ++i) uk.add_term(unit_index(i), family.coeffs[k][i]);
    Cochain c(n, 1);
    c.add(Subset{1} << k, u.power(uk, p));
    return c;
}

}  // namespace saito
