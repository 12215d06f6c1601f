#ifndef SAITO_SCALAR_HPP
#define SAITO_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace saito {

// Largest cyclotomic order the field tables are built for.
inline constexpr unsigned kMaxCyclotomicOrder = 12;

class FieldMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Q(zeta_r) presented as Q[z]/(Phi_r).
class CyclotomicField {
public:
    static const CyclotomicField& get(unsigned order);

    unsigned order() const { return order_; }
    unsigned degree() const { return static_cast<unsigned>(phi_.size()) - 1; }
    // Phi_r, coefficients from the constant term upward.
    const std::vector<mpz_class>& minimal_polynomial() const { return phi_; }

    // Reduces an arbitrary coefficient vector modulo Phi_r; result has degree() entries.
    void reduce(std::vector<mpq_class>& coeffs) const;

private:
    explicit CyclotomicField(unsigned order);

    unsigned order_;
    std::vector<mpz_class> phi_;
};

// Element of Q or of Q(zeta_r). Orders whose field is Q (r = 1, 2) are stored as
// plain rationals, and cyclotomic values that happen to be rational are demoted,
// so every value has exactly one representation. Rationals whose numerator and
// denominator fit in 64 bits avoid GMP entirely.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : num_(v) {}
    Scalar(int v) : num_(v) {}
    Scalar(const mpq_class& v);
    Scalar(const mpz_class& v) : Scalar(mpq_class(v)) {}
    Scalar(const Scalar& o);
    Scalar(Scalar&& o) noexcept = default;
    Scalar& operator=(const Scalar& o);
    Scalar& operator=(Scalar&& o) noexcept = default;
    ~Scalar() = default;

    static Scalar rational(long num, long den);
    // zeta_r as an element of Q(zeta_r)
    static Scalar zeta(unsigned order);
    static Scalar zeta_power(unsigned order, long exponent);
    // Builds c_0 + c_1 z + ... in Q(zeta_r), reducing modulo Phi_r.
    static Scalar from_coefficients(unsigned order, std::vector<mpq_class> coeffs);

    bool is_rational() const { return !ext_; }
    unsigned order() const { return ext_ ? order_ : 1; }
    mpq_class rational_value() const;
    // Coefficients in the power basis of Q(zeta_order()); a single entry when rational.
    std::vector<mpq_class> coefficients() const;

    bool is_zero() const { return small() && num_ == 0; }
    bool is_one() const { return small() && num_ == 1 && den_ == 1; }
    bool is_minus_one() const { return small() && num_ == -1 && den_ == 1; }
    int sign() const;  // rational values only

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "3", "-1/2", or "(1/2 + 3*z - z^2)" for cyclotomic values.
    std::string to_string() const;

private:
    bool small() const { return !big_ && !ext_; }
    void set_rational(const mpq_class& q);
    void set_cyclotomic(unsigned order, std::vector<mpq_class> coeffs);
    std::vector<mpq_class> promoted(unsigned order) const;
    unsigned joint_order(const Scalar& o) const;

    std::int64_t num_ = 0, den_ = 1;
    unsigned order_ = 1;
    std::unique_ptr<mpq_class> big_;
    std::unique_ptr<std::vector<mpq_class>> ext_;
};

}  // namespace saito

#endif
