#ifndef SAITO_POLYNOMIAL_HPP
#define SAITO_POLYNOMIAL_HPP

#include <saito/scalar.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace saito {

inline constexpr std::size_t kMaxVariables = 8;

class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::invalid_argument(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Exponent vector; variable i (0-based) is x_{i+1}.
class Monomial {
public:
    Monomial() { exps_.fill(0); }
    static Monomial variable(std::size_t i, unsigned power = 1);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned e);
    unsigned degree() const;
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& o) const;

    Monomial operator*(const Monomial& o) const;
    // Requires o.divides(*this).
    Monomial operator/(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxVariables> exps_;
};

// Graded lexicographic order with x1 < x2 < ... < xn.
int grlex_compare(const Monomial& a, const Monomial& b);
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};
struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of total degree d in n variables, ascending in grlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

// Sparse polynomial in canonical form: terms sorted by descending grlex, no zero coefficients.
class Polynomial {
public:
    using Term = std::pair<Monomial, Scalar>;

    explicit Polynomial(std::size_t nvars = 0);
    Polynomial(std::size_t nvars, const Scalar& c);
    static Polynomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);
    static Polynomial term(std::size_t nvars, const Monomial& m, const Scalar& c);
    // Terms in any order, duplicates allowed.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    // -1 for the zero polynomial
    int degree() const;
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    const std::vector<Term>& terms() const { return terms_; }
    Scalar coefficient(const Monomial& m) const;
    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Scalar& leading_coefficient() const { return terms_.front().second; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& c);
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void add_scaled(const Polynomial& o, const Scalar& c);

    std::size_t nvars_;
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);
Polynomial derivative(const Polynomial& p, std::size_t var);
Polynomial graded_component(const Polynomial& p, int degree);
// Replaces x_i by images[i]; every image lives in the same ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);
Scalar evaluate(const Polynomial& p, std::span<const Scalar> point);

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);
// Throws NotDivisible.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
// Monic under grlex; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial make_monic(const Polynomial& p);
bool is_unit(const Polynomial& p);

// Coefficients of p viewed as a polynomial in x_var, keyed by exponent.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

// Terms like "3/2*x1^2*x3" joined by + and -; "z" stands for zeta_r when order > 2.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, unsigned field_order = 1);
Scalar parse_scalar(std::string_view text, unsigned field_order = 1);

}  // namespace saito

#endif
