#include <saito/enveloping.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>

namespace saito {

unsigned order(const MultiIndex& i) {
    unsigned s = 0;
    for (auto e : i) s += e;
    return s;
}

MultiIndex unit_index(std::size_t m) {
    MultiIndex i{};
    i[m] = 1;
    return i;
}

MultiIndex add(MultiIndex a, const MultiIndex& b) {
    for (std::size_t k = 0; k < kMaxVariables; ++k) a[k] = static_cast<std::uint16_t>(a[k] + b[k]);
    return a;
}

bool MultiIndexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const unsigned oa = order(a), ob = order(b);
    if (oa != ob) return oa < ob;
    for (std::size_t k = kMaxVariables; k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& i) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto e : i) h = (h ^ e) * 0x100000001b3ULL;
    return h;
}

namespace {

void fill_indices(std::size_t slot, std::size_t n, unsigned left, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (slot == n) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= left; ++e) {
        cur[slot] = static_cast<std::uint16_t>(e);
        fill_indices(slot + 1, n, left - e, cur, out);
    }
    cur[slot] = 0;
}

int top_index(const MultiIndex& i) {
    for (std::size_t k = kMaxVariables; k-- > 0;)
        if (i[k]) return static_cast<int>(k);
    return -1;
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t n, unsigned max_order) {
    std::vector<MultiIndex> out;
    MultiIndex cur{};
    fill_indices(0, n, max_order, cur, out);
    std::sort(out.begin(), out.end(), MultiIndexLess{});
    return out;
}

UElement UElement::from_polynomial(const Polynomial& f) {
    UElement u(f.nvars());
    u.add_term(MultiIndex{}, f);
    return u;
}

UElement UElement::monomial(std::size_t nvars, const MultiIndex& i, const Polynomial& f) {
    UElement u(nvars);
    u.add_term(i, f);
    return u;
}

int UElement::order() const {
    int o = -1;
    for (const auto& t : terms_) o = std::max(o, static_cast<int>(saito::order(t.first)));
    return o;
}

Polynomial UElement::coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

void UElement::add_term(const MultiIndex& i, const Polynomial& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [i, f] : o.terms_) add_term(i, f);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [i, f] : o.terms_) add_term(i, -f);
    return *this;
}

UElement UElement::operator-() const {
    UElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

UElement UElement::truncated(int p) const {
    UElement r(nvars_);
    for (const auto& [i, f] : terms_)
        if (static_cast<int>(saito::order(i)) <= p) r.terms_.emplace(i, f);
    return r;
}

UElement UElement::component(int p) const {
    UElement r(nvars_);
    for (const auto& [i, f] : terms_)
        if (static_cast<int>(saito::order(i)) == p) r.terms_.emplace(i, f);
    return r;
}

UElement operator*(const Polynomial& f, const UElement& u) {
    UElement r(u.nvars_);
    if (f.is_zero()) return r;
    for (const auto& [i, g] : u.terms_) r.terms_.emplace(i, f * g);
    return r;
}

UElement operator*(const Scalar& c, const UElement& u) {
    UElement r(u.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [i, g] : u.terms_) r.terms_.emplace(i, g * c);
    return r;
}

// ---------------------------------------------------------------- Enveloping

std::size_t Enveloping::PairKeyHash::operator()(const PairKey& k) const {
    return (MultiIndexHash{}(k.i) * 31 + k.m.hash()) * 131 + k.a;
}

Enveloping::Enveloping(DerivationBasis basis) : basis_(std::move(basis)), constants_(basis_) {}

template <class F>
const UElement& Enveloping::memo(Cache& cache, const PairKey& key, F compute) const {
    {
        std::shared_lock lock(mutex_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    UElement value = compute();
    std::unique_lock lock(mutex_);
    return cache.emplace(key, std::move(value)).first->second;
}

UElement Enveloping::generator(std::size_t m) const {
    return UElement::monomial(nvars(), unit_index(m), Polynomial(nvars(), Scalar(1)));
}

UElement Enveloping::variable(std::size_t k) const {
    return UElement::from_polynomial(Polynomial::variable(nvars(), k));
}

UElement Enveloping::from_derivation(const Derivation& d) const {
    auto g = express_in_basis(basis_, d);
    if (!g) throw std::domain_error("derivation is not logarithmic along the arrangement");
    UElement u(nvars());
    for (std::size_t i = 0; i < rank(); ++i) u.add_term(unit_index(i), (*g)[i]);
    return u;
}

// alpha_m alpha^J = alpha_t (alpha_m alpha^{J'}) + [alpha_m, alpha_t] alpha^{J'}, t the top index of J
const UElement& Enveloping::generator_times_monomial(std::size_t m, const MultiIndex& j) const {
    return memo(gen_cache_, PairKey{static_cast<std::uint32_t>(m), j, Monomial()}, [&] {
        const int t = top_index(j);
        if (t < 0 || static_cast<std::size_t>(t) <= m)
            return UElement::monomial(nvars(), add(j, unit_index(m)), Polynomial(nvars(), Scalar(1)));
        const auto ts = static_cast<std::size_t>(t);
        MultiIndex rest = j;
        --rest[ts];
        UElement res = left_generator(ts, generator_times_monomial(m, rest));
        const auto& c = constants_(m, ts);
        for (std::size_t l = 0; l < rank(); ++l)
            if (!c[l].is_zero()) res += c[l] * generator_times_monomial(l, rest);
        return res;
    });
}

UElement Enveloping::left_generator(std::size_t m, const UElement& u) const {
    UElement res(nvars());
    for (const auto& [j, g] : u.terms()) {
        res += g * generator_times_monomial(m, j);
        res.add_term(j, apply(basis_[m], g));
    }
    return res;
}

// [alpha_t alpha^{I'}, x_l] = alpha_t [alpha^{I'}, x_l] + alpha_t(x_l) alpha^{I'}
const UElement& Enveloping::monomial_commutator(const MultiIndex& i, std::size_t l) const {
    return memo(comm_cache_, PairKey{static_cast<std::uint32_t>(l), i, Monomial()}, [&] {
        const int t = top_index(i);
        if (t < 0) return UElement(nvars());
        const auto ts = static_cast<std::size_t>(t);
        MultiIndex rest = i;
        --rest[ts];
        UElement res = left_generator(ts, monomial_commutator(rest, l));
        res.add_term(rest, basis_[ts][l]);
        return res;
    });
}

const UElement& Enveloping::monomial_times_monomial(const MultiIndex& i, const Monomial& mu) const {
    return memo(right_cache_, PairKey{0, i, mu}, [&] {
        const int t = top_index(i);
        if (t < 0) return UElement::from_polynomial(Polynomial::term(nvars(), mu, Scalar(1)));
        MultiIndex rest = i;
        --rest[static_cast<std::size_t>(t)];
        return left_generator(static_cast<std::size_t>(t), monomial_times_monomial(rest, mu));
    });
}

UElement Enveloping::mul(const UElement& a, const UElement& b) const {
    UElement res(nvars());
    for (const auto& [i, f] : a.terms()) {
        UElement cur = b;
        for (std::size_t m = 0; m < rank(); ++m)
            for (unsigned e = 0; e < i[m]; ++e) cur = left_generator(m, cur);
        res += f * cur;
    }
    return res;
}

UElement Enveloping::commutator(const UElement& a, const UElement& b) const {
    return mul(a, b) - mul(b, a);
}

UElement Enveloping::commutator_with_variable(const UElement& u, std::size_t l) const {
    UElement res(nvars());
    for (const auto& [i, f] : u.terms()) {
        if (order(i) == 0) continue;
        res += f * monomial_commutator(i, l);
    }
    return res;
}

UElement Enveloping::right_multiply(const UElement& u, const Polynomial& f) const {
    UElement res(nvars());
    for (const auto& [i, g] : u.terms()) {
        if (order(i) == 0) {
            res.add_term(i, g * f);
            continue;
        }
        for (const auto& [mu, c] : f.terms()) res += (g * c) * monomial_times_monomial(i, mu);
    }
    return res;
}

UElement Enveloping::power(const UElement& u, unsigned e) const {
    UElement r = UElement::from_polynomial(Polynomial(nvars(), Scalar(1)));
    for (unsigned k = 0; k < e; ++k) r = mul(r, u);
    return r;
}

Polynomial Enveloping::act(const UElement& u, const Polynomial& f) const {
    Polynomial res(nvars());
    for (const auto& [i, g] : u.terms()) {
        Polynomial cur = f;
        for (std::size_t m = 0; m < rank() && !cur.is_zero(); ++m)
            for (unsigned e = 0; e < i[m] && !cur.is_zero(); ++e) cur = apply(basis_[m], cur);
        if (!cur.is_zero()) res += g * cur;
    }
    return res;
}

int Enveloping::weight(const MultiIndex& i) const {
    const auto& w = basis_.weights();
    int s = 0;
    for (std::size_t m = 0; m < rank(); ++m) s += static_cast<int>(i[m]) * w[m];
    return s;
}

std::optional<int> Enveloping::weight(const UElement& u) const {
    std::optional<int> w;
    for (const auto& [i, f] : u.terms()) {
        if (!f.is_homogeneous()) return std::nullopt;
        int wt = f.degree() + weight(i);
        if (w && *w != wt) return std::nullopt;
        w = wt;
    }
    return w;
}

std::vector<std::pair<Monomial, MultiIndex>> Enveloping::enumerate_slice(unsigned max_order, int weight_value) const {
    std::vector<std::pair<Monomial, MultiIndex>> out;
    for (const auto& i : multi_indices(rank(), max_order)) {
        const int deg = weight_value - weight(i);
        for (const auto& m : monomials_of_degree(nvars(), deg)) out.emplace_back(m, i);
    }
    return out;
}

std::string Enveloping::to_string(const UElement& u) const {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        const auto& [i, f] = *it;
        if (!first) os << " + ";
        first = false;
        const bool has_alpha = order(i) > 0;
        const bool unit = f == Polynomial(nvars(), Scalar(1));
        if (!has_alpha || !unit) {
            if (has_alpha && f.size() > 1) {
                os << '(' << saito::to_string(f) << ')';
            } else {
                os << saito::to_string(f);
            }
        }
        bool star = !unit || !has_alpha;
        for (std::size_t m = rank(); m-- > 0;) {
            if (!i[m]) continue;
            if (star) os << '*';
            os << 'a' << (m + 1);
            if (i[m] > 1) os << '^' << i[m];
            star = true;
        }
    }
    return os.str();
}

}  // namespace saito
