#ifndef SAITO_KOSZUL_HPP
#define SAITO_KOSZUL_HPP

#include <saito/enveloping.hpp>

#include <map>
#include <vector>

namespace saito {

// Subsets K of {x_1..x_n} as bit masks; bit k stands for x_{k+1}.
using Subset = std::uint32_t;

inline unsigned subset_size(Subset k) { return static_cast<unsigned>(__builtin_popcount(k)); }
std::vector<Subset> subsets_of_size(std::size_t n, unsigned q);
// Sign of x^_K ^ x^_l rewritten as x^_{K u {l}}.
int wedge_sign(Subset k, std::size_t l);

// Element of X^q = Hom(Lambda^q W, U): sum over K of u_K x^_K.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}

    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    const std::map<Subset, UElement>& components() const { return comps_; }
    UElement component(Subset k) const;
    bool is_zero() const { return comps_.empty(); }
    int order() const;

    void add(Subset k, const UElement& u);
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Polynomial& f, const Cochain& c);
    friend Cochain operator*(const Scalar& s, const Cochain& c);
    friend bool operator==(const Cochain& a, const Cochain& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }
    // Drops every term of order <= p.
    Cochain above_order(int p) const;

private:
    std::size_t nvars_ = 0;
    unsigned degree_ = 0;
    std::map<Subset, UElement> comps_;
};

// d(u x^_K) = sum_{l not in K} [u, x_l] x^_K ^ x^_l
Cochain koszul_d(const Enveloping& u, const Cochain& c);

// Elements of P_0 = S (x) S and P_1 = S (x) W (x) S in monomial coordinates.
using P0Key = std::pair<Monomial, Monomial>;
struct P0KeyLess {
    bool operator()(const P0Key& a, const P0Key& b) const;
};
using P0Element = std::map<P0Key, Scalar, P0KeyLess>;
struct P1Key {
    Monomial left;
    std::size_t var;
    Monomial right;
};
struct P1KeyLess {
    bool operator()(const P1Key& a, const P1Key& b) const;
};
using P1Element = std::map<P1Key, Scalar, P1KeyLess>;

void add_to(P0Element& e, const Monomial& a, const Monomial& b, const Scalar& c);
void add_to(P1Element& e, const P1Key& key, const Scalar& c);
// f|1 - 1|f
P0Element bar_difference(const Polynomial& f);
// b_1(a|x_k|b) = a x_k|b - a|x_k b
P0Element resolution_b1(const P1Element& e);

// Delta(x_k) = 1|x_k|1, Delta(fg) = (f|1) Delta(g) + (1|g) Delta(f)
P1Element generic_lifting(const Polynomial& g);

// Values theta_1(1|x_k|1) of a degree-one lift of a derivation, k = 0..n-1.
using Lifting = std::vector<P1Element>;

Lifting generic_lifting_of(const Derivation& theta);
// Lift of D = alpha_2 on A_r^3 with the x_1 powers that make it a chain map.
Lifting wreath_lifting_D(unsigned r);
// The same formula with x_k^s in the middle sum, kept for comparison.
Lifting wreath_lifting_D_literal(unsigned r);
// b_1(theta_1(1|x_k|1)) = theta(x_k)|1 - 1|theta(x_k) for every k
bool is_chain_map(const Derivation& theta, const Lifting& lift);

// theta^#: X^q -> X^q for q = 0, 1. On X^0 it is [theta, -]; on X^1
// theta^#(c)(x_k) = [theta, c(x_k)] - c(theta_1(1|x_k|1)).
Cochain sharp_action(const Enveloping& u, const UElement& theta, const Lifting& lift, const Cochain& c);

// eta_k^p = u_k^p x^_k
Cochain build_eta(const Enveloping& u, const OrthogonalFamily& family, std::size_t k, unsigned p);

}  // namespace saito

#endif
