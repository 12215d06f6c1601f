#include <saito/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace saito {

Monomial Monomial::variable(std::size_t i, unsigned power) {
    Monomial m;
    m.set(i, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
    if (e > 0xFFFF) throw std::overflow_error("exponent too large");
    exps_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        unsigned e = unsigned(exps_[i]) + o.exps_[i];
        if (e > 0xFFFF) throw std::overflow_error("exponent too large");
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (o.exps_[i] > exps_[i]) throw NotDivisible("monomial quotient");
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
    }
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : exps_) h = (h ^ e) * 0x100000001b3ULL;
    return h;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = kMaxVariables; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

void fill_monomials(std::size_t var, std::size_t nvars, int left, Monomial& cur,
                    std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur.set(var, static_cast<unsigned>(left));
        out.push_back(cur);
        cur.set(var, 0);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur.set(var, static_cast<unsigned>(e));
        fill_monomials(var + 1, nvars, left - e, cur, out);
    }
    cur.set(var, 0);
}

bool term_desc(const Polynomial::Term& a, const Polynomial::Term& b) {
    return grlex_compare(a.first, b.first) > 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Monomial cur;
    fill_monomials(0, nvars, degree, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVariables) throw std::out_of_range("too many variables");
}

Polynomial::Polynomial(std::size_t nvars, const Scalar& c) : Polynomial(nvars) {
    if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    return term(nvars, Monomial::variable(index, power), Scalar(1));
}

Polynomial Polynomial::term(std::size_t nvars, const Monomial& m, const Scalar& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    std::sort(terms.begin(), terms.end(), term_desc);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree());
}

int Polynomial::degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first[var]));
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.first.degree() != terms_.front().first.degree()) return false;
    return true;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
        return grlex_compare(t.first, x) > 0;
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return Scalar(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

void Polynomial::add_scaled(const Polynomial& o, const Scalar& c) {
    if (o.terms_.empty() || c.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    const bool unit = c.is_one();
    while (a != terms_.end() || b != o.terms_.end()) {
        int cmp;
        if (a == terms_.end()) cmp = -1;
        else if (b == o.terms_.end()) cmp = 1;
        else cmp = grlex_compare(a->first, b->first);
        if (cmp > 0) {
            out.push_back(std::move(*a++));
        } else if (cmp < 0) {
            out.emplace_back(b->first, unit ? b->second : b->second * c);
            ++b;
        } else {
            Scalar s = unit ? a->second + b->second : a->second + b->second * c;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    add_scaled(o, Scalar(1));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    add_scaled(o, Scalar(-1));
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else if (!c.is_one()) {
        for (auto& t : terms_) t.second *= c;
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // multiplication by a monomial preserves the order
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.nvars_, b.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return Polynomial(n);
    if (a.terms_.size() == 1) {
        Polynomial r = b.mul_term(a.terms_[0].first, a.terms_[0].second);
        r.nvars_ = n;
        return r;
    }
    if (b.terms_.size() == 1) {
        Polynomial r = a.mul_term(b.terms_[0].first, b.terms_[0].second);
        r.nvars_ = n;
        return r;
    }
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            auto [it, inserted] = acc.try_emplace(s.first * t.first, s.second);
            if (inserted) {
                it->second *= t.second;
            } else {
                it->second += s.second * t.second;
            }
        }
    Polynomial r(n);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), term_desc);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
            return false;
    return true;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result(p.nvars(), Scalar(1));
    Polynomial base = p;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[var];
        if (e == 0) continue;
        Monomial q = m;
        q.set(var, e - 1);
        out.emplace_back(q, c * Scalar(static_cast<long>(e)));
    }
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

Polynomial graded_component(const Polynomial& p, int degree) {
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms())
        if (static_cast<int>(t.first.degree()) == degree) out.push_back(t);
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() < p.nvars()) throw std::invalid_argument("substitute: too few images");
    const std::size_t n = images.empty() ? p.nvars() : images.front().nvars();
    std::vector<std::vector<Polynomial>> powers(p.nvars());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& ps = powers[i];
        if (ps.empty()) ps.emplace_back(n, Scalar(1));
        while (ps.size() <= e) ps.push_back(ps.back() * images[i]);
        return ps[e];
    };
    Polynomial result(n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t(n, c);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (m[i]) t *= power(i, m[i]);
        result += t;
    }
    return result;
}

Scalar evaluate(const Polynomial& p, std::span<const Scalar> point) {
    Scalar result(0);
    for (const auto& [m, c] : p.terms()) {
        Scalar t = c;
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (m[i]) t *= point[i].pow(m[i]);
        result += t;
    }
    return result;
}

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const std::size_t n = std::max(a.nvars(), b.nvars());
    Polynomial q(n), rem = a;
    const Monomial& lb = b.leading_monomial();
    const Scalar lc_inv = b.leading_coefficient().inverse();
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        if (!lb.divides(lr)) return std::nullopt;
        Monomial m = lr / lb;
        Scalar c = rem.leading_coefficient() * lc_inv;
        q += Polynomial::term(n, m, c);
        rem -= b.mul_term(m, c);
    }
    return q;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotDivisible(to_string(b) + " does not divide " + to_string(a));
    return *q;
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero() || p.leading_coefficient().is_one()) return p;
    return p * p.leading_coefficient().inverse();
}

bool is_unit(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
    std::map<unsigned, std::vector<Polynomial::Term>> parts;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        rest.set(var, 0);
        parts[m[var]].emplace_back(rest, c);
    }
    std::map<unsigned, Polynomial> out;
    for (auto& [e, ts] : parts) out.emplace(e, Polynomial::from_terms(p.nvars(), std::move(ts)));
    return out;
}

namespace {

int top_variable(const Polynomial& p) {
    int v = -1;
    for (const auto& t : p.terms())
        for (std::size_t i = kMaxVariables; i-- > 0;)
            if (t.first[i]) {
                v = std::max(v, static_cast<int>(i));
                break;
            }
    return v;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial g(p.nvars());
    for (const auto& [e, c] : coefficients_in(p, var)) {
        g = gcd(g, c);
        if (is_unit(g)) break;
    }
    return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
    return exact_div(p, content_in(p, var));
}

// Pseudo-remainder of a by b with respect to x_var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
    const int db = b.degree_in(var);
    const Polynomial lcb = coefficients_in(b, var).rbegin()->second;
    while (!a.is_zero()) {
        const int da = a.degree_in(var);
        if (da < db) break;
        const Polynomial lca = coefficients_in(a, var).rbegin()->second;
        a = lcb * a - lca * b * Polynomial::variable(a.nvars(), var, static_cast<unsigned>(da - db));
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a0, const Polynomial& b0) {
    const std::size_t n = std::max(a0.nvars(), b0.nvars());
    if (a0.is_zero()) return make_monic(b0);
    if (b0.is_zero()) return make_monic(a0);
    if (a0.is_constant() || b0.is_constant()) return Polynomial(n, Scalar(1));
    const int v = std::max(top_variable(a0), top_variable(b0));
    const auto var = static_cast<std::size_t>(v);
    if (a0.degree_in(var) == 0) return gcd(a0, content_in(b0, var));
    if (b0.degree_in(var) == 0) return gcd(content_in(a0, var), b0);

    const Polynomial ca = content_in(a0, var), cb = content_in(b0, var);
    const Polynomial c = gcd(ca, cb);
    Polynomial a = exact_div(a0, ca), b = exact_div(b0, cb);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    Polynomial g(n);
    for (;;) {
        Polynomial r = pseudo_remainder(a, b, var);
        if (r.is_zero()) {
            g = b;
            break;
        }
        if (r.degree_in(var) == 0) {
            g = Polynomial(n, Scalar(1));
            break;
        }
        a = std::move(b);
        b = primitive_in(r, var);
    }
    return make_monic(c * primitive_in(g, var));
}

// ---------------------------------------------------------------- printing

namespace {

void write_monomial(std::ostringstream& os, const Monomial& m, std::size_t nvars, bool& need_star) {
    for (std::size_t i = 0; i < nvars; ++i) {
        if (!m[i]) continue;
        if (need_star) os << '*';
        os << 'x' << (i + 1);
        if (m[i] > 1) os << '^' << m[i];
        need_star = true;
    }
}

void write_term(std::ostringstream& os, bool first, const mpq_class& c, unsigned zpow,
                const Monomial& m, std::size_t nvars) {
    if (first) {
        if (sgn(c) < 0) os << '-';
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    mpq_class a = abs(c);
    bool need_star = false;
    if (a != 1 || (zpow == 0 && m.is_one())) {
        os << a.get_str();
        need_star = true;
    }
    if (zpow > 0) {
        if (need_star) os << '*';
        os << 'z';
        if (zpow > 1) os << '^' << zpow;
        need_star = true;
    }
    write_monomial(os, m, nvars, need_star);
}

}  // namespace

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto coeffs = c.coefficients();
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (sgn(coeffs[j]) == 0) continue;
            write_term(os, first, coeffs[j], static_cast<unsigned>(j), m, p.nvars());
            first = false;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars, unsigned order)
        : s_(text), nvars_(nvars), order_(order) {}

    Polynomial parse() {
        skip();
        if (at_end()) fail("empty expression");
        Polynomial result(nvars_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            Polynomial t = term();
            result += negative ? -t : t;
            skip();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            negative = peek() == '-';
            ++pos_;
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("column " + std::to_string(pos_ + 1) + ": " + msg, pos_ + 1);
    }

    unsigned long integer() {
        skip();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(peek() - '0');
            if (v > 1000000000000UL) fail("number too large");
            ++pos_;
        }
        return v;
    }

    mpz_class big_integer() {
        skip();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    unsigned exponent() {
        skip();
        if (!at_end() && peek() == '^') {
            ++pos_;
            unsigned long e = integer();
            if (e > 0xFFFF) fail("exponent too large");
            return static_cast<unsigned>(e);
        }
        return 1;
    }

    Polynomial term() {
        Scalar coeff(1);
        Monomial mono;
        skip();
        // one extra sign is accepted after a binary operator, as in "x1 + -2*x2"
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') coeff = -coeff;
            ++pos_;
        }
        for (;;) {
            skip();
            if (at_end()) fail("expected a factor");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpz_class num = big_integer();
                mpz_class den = 1;
                skip();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    den = big_integer();
                    if (den == 0) fail("zero denominator");
                }
                coeff *= Scalar(mpq_class(num, den));
            } else if (c == 'z') {
                ++pos_;
                if (order_ < 2) fail("'z' needs a cyclotomic field");
                coeff *= Scalar::zeta_power(order_, exponent());
            } else if (c == 'x') {
                ++pos_;
                unsigned long idx = integer();
                if (idx == 0 || idx > nvars_) fail("variable x" + std::to_string(idx) + " out of range");
                mono.set(idx - 1, mono[idx - 1] + exponent());
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return Polynomial::term(nvars_, mono, coeff);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    unsigned order_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, unsigned field_order) {
    if (nvars > kMaxVariables) throw std::out_of_range("too many variables");
    return Parser(text, nvars, field_order).parse();
}

Scalar parse_scalar(std::string_view text, unsigned field_order) {
    Polynomial p = parse_polynomial(text, 0, field_order);
    if (p.is_zero()) return Scalar(0);
    return p.leading_coefficient();
}

}  // namespace saito
