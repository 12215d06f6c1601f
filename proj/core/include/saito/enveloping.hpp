#ifndef SAITO_ENVELOPING_HPP
#define SAITO_ENVELOPING_HPP

#include <saito/tangent.hpp>

#include <array>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace saito {

// Exponents (i_1, ..., i_n) of alpha_n^{i_n} ... alpha_1^{i_1}; entry m belongs to alpha_{m+1}.
using MultiIndex = std::array<std::uint16_t, kMaxVariables>;

unsigned order(const MultiIndex& i);
MultiIndex unit_index(std::size_t m);
MultiIndex add(MultiIndex a, const MultiIndex& b);
// Ordered by total order, then lexicographically from alpha_n down.
struct MultiIndexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};
struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& i) const;
};
// All multi-indices in n slots with order <= p, ascending.
std::vector<MultiIndex> multi_indices(std::size_t n, unsigned max_order);

// sum_I f_I alpha^I with coefficients on the left; no zero coefficients are stored.
class UElement {
public:
    using Terms = std::map<MultiIndex, Polynomial, MultiIndexLess>;

    UElement() = default;
    explicit UElement(std::size_t nvars) : nvars_(nvars) {}
    static UElement from_polynomial(const Polynomial& f);
    static UElement monomial(std::size_t nvars, const MultiIndex& i, const Polynomial& f);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for zero
    int order() const;
    const Terms& terms() const { return terms_; }
    Polynomial coefficient(const MultiIndex& i) const;

    void add_term(const MultiIndex& i, const Polynomial& f);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement operator-() const;
    // Truncation to terms of order <= p, or exactly p.
    UElement truncated(int p) const;
    UElement component(int p) const;

    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(const Polynomial& f, const UElement& u);
    friend UElement operator*(const Scalar& c, const UElement& u);
    friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

// The enveloping algebra of the Lie-Rinehart pair (S, Der(-log A)) in PBW normal form.
// Products are memoised; the caches are safe to share between threads.
class Enveloping {
public:
    explicit Enveloping(DerivationBasis basis);
    Enveloping(const Enveloping&) = delete;
    Enveloping& operator=(const Enveloping&) = delete;

    const DerivationBasis& basis() const { return basis_; }
    const StructureConstants& constants() const { return constants_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t nvars() const { return basis_.nvars(); }

    UElement generator(std::size_t m) const;
    UElement variable(std::size_t k) const;
    UElement from_derivation(const Derivation& d) const;

    UElement mul(const UElement& a, const UElement& b) const;
    // alpha_m * u
    UElement left_generator(std::size_t m, const UElement& u) const;
    UElement commutator(const UElement& a, const UElement& b) const;
    // [u, x_l]
    UElement commutator_with_variable(const UElement& u, std::size_t l) const;
    // u * f
    UElement right_multiply(const UElement& u, const Polynomial& f) const;
    UElement power(const UElement& u, unsigned e) const;

    // Action of u on S, composing derivations from the right.
    Polynomial act(const UElement& u, const Polynomial& f) const;

    // Requires a graded basis.
    int weight(const MultiIndex& i) const;
    // deg f + sum i_m w_m for homogeneous terms; std::nullopt when mixed.
    std::optional<int> weight(const UElement& u) const;
    // (monomial, multi-index) pairs of weight d and order <= p
    std::vector<std::pair<Monomial, MultiIndex>> enumerate_slice(unsigned max_order, int weight) const;

    std::string to_string(const UElement& u) const;

private:
    struct PairKey {
        std::uint32_t a;
        MultiIndex i;
        Monomial m;
        bool operator==(const PairKey& o) const { return a == o.a && i == o.i && m == o.m; }
    };
    struct PairKeyHash {
        std::size_t operator()(const PairKey& k) const;
    };
    using Cache = std::unordered_map<PairKey, UElement, PairKeyHash>;

    template <class F>
    const UElement& memo(Cache& cache, const PairKey& key, F compute) const;

    const UElement& generator_times_monomial(std::size_t m, const MultiIndex& j) const;
    const UElement& monomial_commutator(const MultiIndex& i, std::size_t l) const;
    const UElement& monomial_times_monomial(const MultiIndex& i, const Monomial& mu) const;

    DerivationBasis basis_;
    StructureConstants constants_;
    mutable std::shared_mutex mutex_;
    mutable Cache gen_cache_, comm_cache_, right_cache_;
};

}  // namespace saito

#endif
