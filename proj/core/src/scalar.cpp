#include <saito/scalar.hpp>

#include <array>
#include <climits>
#include <memory>
#include <mutex>
#include <sstream>

namespace saito {

namespace {

using ZPoly = std::vector<mpz_class>;

// Exact quotient of a by a monic divisor b (coefficients low to high).
ZPoly divide_monic(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    ZPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

ZPoly cyclotomic_polynomial(unsigned r) {
    static std::array<ZPoly, kMaxCyclotomicOrder + 1> table;
    if (!table[r].empty()) return table[r];
    ZPoly p(r + 1, 0);
    p[0] = -1;
    p[r] = 1;
    for (unsigned d = 1; d < r; ++d)
        if (r % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    table[r] = p;
    return p;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
    phi_ = cyclotomic_polynomial(order);
}

const CyclotomicField& CyclotomicField::get(unsigned order) {
    if (order == 0 || order > kMaxCyclotomicOrder)
        throw std::out_of_range("cyclotomic order " + std::to_string(order) +
                                " outside 1.." + std::to_string(kMaxCyclotomicOrder));
    static std::array<std::unique_ptr<CyclotomicField>, kMaxCyclotomicOrder + 1> fields;
    static std::once_flag once;
    std::call_once(once, [] {
        for (unsigned r = 1; r <= kMaxCyclotomicOrder; ++r)
            fields[r].reset(new CyclotomicField(r));
    });
    return *fields[order];
}

void CyclotomicField::reduce(std::vector<mpq_class>& c) const {
    const std::size_t deg = degree();
    for (std::size_t i = c.size(); i-- > deg;) {
        if (sgn(c[i]) == 0) continue;
        mpq_class lead = c[i];
        for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * phi_[j];
    }
    c.resize(deg, 0);
}

namespace {

using i128 = __int128;

constexpr std::int64_t kSmallMax = INT64_MAX;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpq_class to_mpq(std::int64_t n, std::int64_t d) {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), n);
    mpz_set_si(q.get_den_mpz_t(), d);
    return q;
}

}  // namespace

Scalar::Scalar(const mpq_class& v) {
    mpq_class q = v;
    q.canonicalize();
    set_rational(q);
}

Scalar::Scalar(const Scalar& o) : num_(o.num_), den_(o.den_), order_(o.order_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    if (o.ext_) ext_ = std::make_unique<std::vector<mpq_class>>(*o.ext_);
}

Scalar& Scalar::operator=(const Scalar& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    order_ = o.order_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    ext_ = o.ext_ ? std::make_unique<std::vector<mpq_class>>(*o.ext_) : nullptr;
    return *this;
}

void Scalar::set_rational(const mpq_class& q) {
    ext_.reset();
    order_ = 1;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t()) && n != INT64_MIN) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(q);
    }
}

void Scalar::set_cyclotomic(unsigned order, std::vector<mpq_class> coeffs) {
    bool rational = true;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (sgn(coeffs[i]) != 0) rational = false;
    if (rational) {
        set_rational(coeffs.empty() ? mpq_class(0) : coeffs[0]);
        return;
    }
    num_ = 0;
    den_ = 1;
    big_.reset();
    order_ = order;
    ext_ = std::make_unique<std::vector<mpq_class>>(std::move(coeffs));
}

mpq_class Scalar::rational_value() const {
    if (ext_) throw FieldMismatch("scalar " + to_string() + " is not rational");
    if (big_) return *big_;
    return to_mpq(num_, den_);
}

std::vector<mpq_class> Scalar::promoted(unsigned order) const {
    if (ext_) return *ext_;
    std::vector<mpq_class> c(CyclotomicField::get(order).degree(), 0);
    c[0] = rational_value();
    return c;
}

std::vector<mpq_class> Scalar::coefficients() const {
    if (ext_) return *ext_;
    return {rational_value()};
}

int Scalar::sign() const {
    if (ext_) throw FieldMismatch("sign of a non-rational scalar");
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Scalar(mpq_class(num, 1) / mpq_class(den, 1));
}

Scalar Scalar::zeta(unsigned order) { return zeta_power(order, 1); }

Scalar Scalar::zeta_power(unsigned order, long exponent) {
    long e = exponent % static_cast<long>(order);
    if (e < 0) e += order;
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    return from_coefficients(order, std::move(c));
}

Scalar Scalar::from_coefficients(unsigned order, std::vector<mpq_class> coeffs) {
    const auto& field = CyclotomicField::get(order);
    field.reduce(coeffs);
    Scalar s;
    if (field.degree() == 1) {
        s.set_rational(coeffs[0]);
    } else {
        s.set_cyclotomic(order, std::move(coeffs));
    }
    return s;
}

unsigned Scalar::joint_order(const Scalar& o) const {
    if (!ext_) return o.order();
    if (!o.ext_ || o.order_ == order_) return order_;
    throw FieldMismatch("cannot combine elements of Q(zeta_" + std::to_string(order_) +
                        ") and Q(zeta_" + std::to_string(o.order_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (r.ext_) {
        for (auto& c : *r.ext_) c = -c;
    } else if (r.big_) {
        *r.big_ = -*r.big_;
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (small() && o.small()) {
        if (den_ == 1 && o.den_ == 1) {
            i128 s = i128(num_) + o.num_;
            if (fits(s)) {
                num_ = static_cast<std::int64_t>(s);
                return *this;
            }
        } else {
            std::int64_t g = gcd64(den_, o.den_);
            i128 num = i128(num_) * (o.den_ / g) + i128(o.num_) * (den_ / g);
            i128 den = i128(den_) * (o.den_ / g);
            i128 h = gcd128(num, den);
            if (h > 1) {
                num /= h;
                den /= h;
            }
            if (num == 0) den = 1;
            if (fits(num) && fits(den)) {
                num_ = static_cast<std::int64_t>(num);
                den_ = static_cast<std::int64_t>(den);
                return *this;
            }
        }
    }
    if (!ext_ && !o.ext_) {
        set_rational(rational_value() + o.rational_value());
        return *this;
    }
    const unsigned r = joint_order(o);
    auto a = promoted(r);
    auto b = o.promoted(r);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    set_cyclotomic(r, std::move(a));
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (small() && o.small()) {
        std::int64_t g1 = den_ == 1 && o.den_ == 1 ? 1 : gcd64(num_, o.den_);
        std::int64_t g2 = den_ == 1 && o.den_ == 1 ? 1 : gcd64(o.num_, den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        i128 num = i128(num_ / g1) * (o.num_ / g2);
        i128 den = i128(den_ / g2) * (o.den_ / g1);
        if (num == 0) den = 1;
        if (fits(num) && fits(den)) {
            num_ = static_cast<std::int64_t>(num);
            den_ = static_cast<std::int64_t>(den);
            return *this;
        }
    }
    if (!ext_ && !o.ext_) {
        set_rational(rational_value() * o.rational_value());
        return *this;
    }
    const unsigned r = joint_order(o);
    if (!o.ext_) {
        mpq_class q = o.rational_value();
        auto a = *ext_;
        for (auto& c : a) c *= q;
        set_cyclotomic(r, std::move(a));
        return *this;
    }
    if (!ext_) {
        mpq_class q = rational_value();
        auto a = *o.ext_;
        for (auto& c : a) c *= q;
        set_cyclotomic(r, std::move(a));
        return *this;
    }
    const auto& a = *ext_;
    const auto& b = *o.ext_;
    std::vector<mpq_class> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    return *this = from_coefficients(r, std::move(prod));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (small()) {
        Scalar r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }
    if (!ext_) return Scalar(mpq_class(1) / *big_);
    // Solve a * b = 1 with the multiplication matrix of a.
    const auto& e = *ext_;
    const std::size_t n = e.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<mpq_class> col(n + j, 0);
        for (std::size_t i = 0; i < n; ++i) col[i + j] = e[i];
        CyclotomicField::get(order_).reduce(col);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    m[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (sgn(m[p][c]) == 0) ++p;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    std::vector<mpq_class> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = m[i][n] / m[i][i];
    return from_coefficients(order_, std::move(b));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.ext_ || b.ext_) {
        if (!a.ext_ || !b.ext_) return false;
        return a.order_ == b.order_ && *a.ext_ == *b.ext_;
    }
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::string Scalar::to_string() const {
    if (!ext_) return rational_value().get_str();
    std::ostringstream os;
    os << '(';
    bool first = true;
    const auto& e = *ext_;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const mpq_class& c = e[i];
        if (sgn(c) == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << '*';
        os << 'z';
        if (i > 1) os << '^' << i;
    }
    os << ')';
    return os.str();
}

}  // namespace saito
