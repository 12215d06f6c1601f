#ifndef SAITO_DERIVATION_HPP
#define SAITO_DERIVATION_HPP

#include <saito/linalg.hpp>

#include <optional>
#include <vector>

namespace saito {

// A derivation of k[x1..xn], stored by its values on the variables.
class Derivation {
public:
    Derivation() = default;
    explicit Derivation(std::vector<Polynomial> components);
    static Derivation zero(std::size_t nvars);
    static Derivation partial(std::size_t nvars, std::size_t var);
    static Derivation euler(std::size_t nvars);

    std::size_t nvars() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t k) const { return comps_[k]; }
    const std::vector<Polynomial>& components() const { return comps_; }
    bool is_zero() const;

    Derivation& operator+=(const Derivation& o);
    Derivation& operator-=(const Derivation& o);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    // f * d
    friend Derivation operator*(const Polynomial& f, const Derivation& d);
    friend bool operator==(const Derivation& a, const Derivation& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

private:
    std::vector<Polynomial> comps_;
};

Polynomial apply(const Derivation& d, const Polynomial& f);
// [a, b](x_k) = a(b(x_k)) - b(a(x_k))
Derivation bracket(const Derivation& a, const Derivation& b);
// Weight of a homogeneous derivation: deg d(x_k) - 1 on its nonzero components.
std::optional<int> derivation_weight(const Derivation& d);

// Pushes d forward along the linear change of coordinates y = T x.
Derivation change_coordinates(const Derivation& d, const ScalarMatrix& t);
ScalarMatrix inverse(const ScalarMatrix& t);

}  // namespace saito

#endif
