#ifndef SAITO_COHOMOLOGY_HPP
#define SAITO_COHOMOLOGY_HPP

#include <saito/koszul.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace saito {

struct Bounds {
    unsigned max_order = 4;
    int weight_lo = -1;
    int weight_hi = 8;
    unsigned jobs = 1;
};

struct WeightRow {
    int weight = 0;
    std::size_t ker = 0, im = 0, dim = 0;
};

struct GradedReport {
    std::string computation;
    std::vector<WeightRow> per_weight;
    // Dimensions unchanged when the order bound goes from p to p + 1.
    bool stabilized = false;

    std::size_t total() const;
    std::vector<std::size_t> dims() const;
    std::size_t dim_at(int weight) const;
};

// Runs f(w) for every weight in [lo, hi] on up to `jobs` threads; results are
// stored by weight, so the output does not depend on scheduling.
void for_each_weight(int lo, int hi, unsigned jobs, const std::function<void(int)>& f);

// Coordinates of a rational polynomial-valued family, used to turn exact
// objects into sparse vectors over Q.
QVector to_qvector(const std::vector<std::pair<std::uint32_t, Scalar>>& entries);

// Random inputs for property checks: coefficients in [-3, 3], each monomial or
// multi-index kept with fixed probability.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, int max_degree);
UElement random_element(std::mt19937_64& rng, const Enveloping& u, unsigned order, int degree);

// Basis m alpha^I x^_K of F_p X^q in a fixed weight.
class CochainSlice {
public:
    struct Key {
        Subset subset;
        MultiIndex index;
        Monomial mono;
        bool operator==(const Key& o) const { return subset == o.subset && index == o.index && mono == o.mono; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    CochainSlice(const Enveloping& u, unsigned q, unsigned max_order, int weight);

    unsigned degree() const { return q_; }
    unsigned max_order() const { return p_; }
    int weight() const { return weight_; }
    std::size_t size() const { return keys_.size(); }
    const Key& key(std::size_t j) const { return keys_[j]; }
    std::optional<std::uint32_t> index(const Key& k) const;

    // Throws std::logic_error if c has a term outside the slice.
    QVector vectorize(const Cochain& c) const;
    Cochain cochain(const QVector& v) const;
    Cochain basis_cochain(std::size_t j) const;

private:
    const Enveloping* u_;
    unsigned q_, p_;
    int weight_;
    std::vector<Key> keys_;
    std::unordered_map<Key, std::uint32_t, KeyHash> index_;
};

// Columns of d^q: F_p X^q_d -> X^{q+1}_d, in the coordinates of `target`.
std::vector<QVector> koszul_columns(const Enveloping& u, const CochainSlice& source, const CochainSlice& target);

// dim H^q(S,U) slices: ker d^q on F_p X^q minus rank of d^{q-1} on F_{p+1} X^{q-1}.
GradedReport h_su_dims(const Enveloping& u, unsigned q, const Bounds& b);

// dim of (sum_k S x^_k)_d modulo the S-span of the rows sum_k alpha_i(x_k) x^_k.
std::vector<std::size_t> coker_saito_dims(const DerivationBasis& basis, int lo, int hi);
// Same, with the generator count as ker and the relation rank as im.
GradedReport coker_saito_report(const DerivationBasis& basis, int lo, int hi, unsigned jobs = 1);
// sum_{j=0}^{p} dim (coker M)_{d - j w_n}
std::vector<std::size_t> predict_h1_dims(const DerivationBasis& basis, unsigned max_order, int lo, int hi);

// Graded (S, L)-module with finite-dimensional homogeneous pieces.
class GradedModule {
public:
    virtual ~GradedModule() = default;
    virtual std::size_t dim(int w) const = 0;
    // Images of the basis of N_w under alpha_i, in the basis of N_{w + w_i}.
    virtual std::vector<QVector> act(std::size_t i, int w) const = 0;
    // Images under multiplication by mu, in the basis of N_{w + deg mu}.
    virtual std::vector<QVector> multiply(const Monomial& mu, int w) const = 0;
};

class PolynomialModule : public GradedModule {
public:
    explicit PolynomialModule(const DerivationBasis& basis) : basis_(basis) {}
    std::size_t dim(int w) const override;
    std::vector<QVector> act(std::size_t i, int w) const override;
    std::vector<QVector> multiply(const Monomial& mu, int w) const override;

private:
    QVector coordinates(const Polynomial& f) const;
    const DerivationBasis& basis_;
};

// F_p H^1(S,U) with the action of L through the sharp action of the generic liftings.
class H1Module : public GradedModule {
public:
    H1Module(const Enveloping& u, unsigned max_order);
    std::size_t dim(int w) const override;
    std::vector<QVector> act(std::size_t i, int w) const override;
    std::vector<QVector> multiply(const Monomial& mu, int w) const override;

    // Cocycle representatives of a basis of the weight-w piece.
    std::vector<Cochain> representatives(int w) const;
    // Coordinates of the class of a cocycle of weight w; std::nullopt if c is not a cocycle in F_p.
    std::optional<QVector> class_of(const Cochain& c, int w) const;

private:
    struct Piece {
        std::unique_ptr<CochainSlice> slice;
        std::vector<QVector> reps;
        Echelon quotient;  // coboundaries untagged, representatives tagged
    };
    const Piece& piece(int w) const;
    std::vector<QVector> images(const std::vector<Cochain>& values, int target_weight) const;

    const Enveloping& u_;
    unsigned p_;
    std::vector<Lifting> lifts_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<int, std::unique_ptr<Piece>> pieces_;
};

// Columns of the Chevalley-Eilenberg differential C^q_d -> C^{q+1}_d with
// C^q_d = sum_{|K| = q} N_{d + w_K}.
std::vector<QVector> ce_columns(const GradedModule& n, const DerivationBasis& basis, const StructureConstants& c,
                                unsigned q, int d);
std::size_t ce_cochain_dim(const GradedModule& n, const DerivationBasis& basis, unsigned q, int d);
GradedReport ce_cohomology_dims(const GradedModule& n, const DerivationBasis& basis, unsigned q, const Bounds& b,
                                const std::string& name);
// d^{q+1} o d^q = 0 at weight d
bool ce_square_zero(const GradedModule& n, const DerivationBasis& basis, unsigned q, int d);

// H^0_S(L, F_p H^1(S,U)) at weight 0. Requires alpha_1 to be the Euler derivation.
GradedReport invariants_h1(const Enveloping& u, const Bounds& b);
// Matrix of nabla_E on the weight-w piece minus w times the identity vanishes.
bool euler_scaling_holds(const H1Module& h1, int w);

// Kernel of u -> ([u, x_k], [u, alpha_i]) on F_p U_d.
GradedReport center_dims(const Enveloping& u, const Bounds& b);

struct CenterReport {
    GradedReport center, h0_su, ce_s;
    bool h0_is_s = false;  // dim H^0(S,U)_d = dim S_d
    bool agrees = false;   // center and H^0_S(L,S) coincide
    bool is_constants = false;
};
CenterReport center_report(const Enveloping& u, const Bounds& b);

struct HH1Report {
    GradedReport ce_s, invariants;
    std::size_t total = 0;
};
HH1Report hh1_report(const Enveloping& u, const Bounds& b);

// phi_f(alpha_i) = alpha_i(f) / f; NotDivisible when f is not tangent.
std::vector<Polynomial> outer_derivation_cocycle(const DerivationBasis& basis, const Polynomial& f);
// The CE differential of a degree-1 cochain with values in S, indexed by pairs (a, b), a < b.
std::vector<Polynomial> ce_d1(const DerivationBasis& basis, const StructureConstants& c,
                              const std::vector<Polynomial>& phi);
// The derivation of U with d(S) = 0 and d(alpha_i) = phi[i].
UElement apply_outer(const Enveloping& u, const std::vector<Polynomial>& phi, const UElement& a);

struct OuterReport {
    std::size_t forms = 0;
    bool all_cocycles = false;
    std::size_t rank = 0;             // rank of the classes in H^1_S(L,S)_0
    std::optional<std::size_t> h1_0;  // dim H^1_S(L,S)_0 when the basis is rational
    bool compositions_vanish = false;
    bool brackets_vanish = false;
    bool derivation_property = false;
};
OuterReport outer_basis_report(const Enveloping& u, const Arrangement& a, std::uint64_t seed);

struct CommutationItem {
    std::string bracket;
    std::string computed, claimed;
    bool oracle_ok = false;
    bool agrees_with_claim = false;
};
// [E,D], [E,C], [D,C] for A_r^3 against the action oracle and the constants r+1, 2r+1, r(x3^r+x2^r-x1^r).
std::vector<CommutationItem> commutation_audit(const Enveloping& u, unsigned r, std::uint64_t seed);

// Is c in F_{p-1} X^1 + d^0(F_{p+1} U) inside its weight slice?
bool in_lower_plus_coboundary(const Enveloping& u, const Cochain& c, int weight, unsigned p);
// Is c a coboundary d^0(F_{p+1} U) inside its weight slice?
bool is_coboundary(const Enveloping& u, const Cochain& c, int weight, unsigned p);

struct DsharpItem {
    unsigned p = 0;
    std::size_t eta = 0;  // 1-based
    bool matches = false;
    bool matches_mod_coboundary = false;
    // eta_2, eta_3 only: the coefficients with every p replaced by p r
    bool scaled_matches = false;
    std::string discrepancy;  // top-order part of the difference, empty when it vanishes
};
// D^#(eta_l^p) against the closed-form coefficients for A_r^3.
std::vector<DsharpItem> dsharp_audit(const Enveloping& u, unsigned r, unsigned max_p);

struct F1ReductionWitness {
    std::size_t trials = 0, successes = 0;
};
// Random order-one cocycles without alpha_n terms; counts those cohomologous to a cocycle in F_0.
F1ReductionWitness f1_reduction_witness(const Enveloping& u, int weight, std::size_t trials, std::uint64_t seed);

}  // namespace saito

#endif
