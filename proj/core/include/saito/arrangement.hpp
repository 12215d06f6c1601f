#ifndef SAITO_ARRANGEMENT_HPP
#define SAITO_ARRANGEMENT_HPP

#include <saito/derivation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace saito {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TangencyViolation : public std::domain_error {
public:
    TangencyViolation(const std::string& what, std::size_t derivation, std::size_t form)
        : std::domain_error(what), derivation_(derivation), form_(form) {}
    std::size_t derivation() const { return derivation_; }
    std::size_t form() const { return form_; }

private:
    std::size_t derivation_, form_;
};

// Central hyperplane arrangement: distinct linear forms over Q or Q(zeta_r).
class Arrangement {
public:
    // Normalizes every form so its last nonzero coefficient is 1; rejects zero
    // and proportional forms with an InputError naming them (1-based).
    Arrangement(std::size_t nvars, unsigned field_order, std::vector<std::vector<Scalar>> forms);

    std::size_t nvars() const { return nvars_; }
    unsigned field_order() const { return field_order_; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<std::vector<Scalar>>& coefficients() const { return coeffs_; }
    const std::vector<Polynomial>& forms() const { return forms_; }
    // Q, the product of the forms
    Polynomial defining_polynomial() const;

private:
    std::size_t nvars_;
    unsigned field_order_;
    std::vector<std::vector<Scalar>> coeffs_;
    std::vector<Polynomial> forms_;
};

enum class Family { braid, braid_deleted, wreath, custom };

struct FamilySpec {
    Family family = Family::wreath;
    std::size_t n = 3;
    unsigned r = 1;
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
std::string describe(const FamilySpec& spec);

// alpha_1..alpha_n with alpha_i(x_k) = 0 for i > k, plus their weights when homogeneous.
class DerivationBasis {
public:
    DerivationBasis() = default;
    explicit DerivationBasis(std::vector<Derivation> alphas);

    std::size_t size() const { return alphas_.size(); }
    std::size_t nvars() const { return alphas_.empty() ? 0 : alphas_.front().nvars(); }
    const Derivation& operator[](std::size_t i) const { return alphas_[i]; }
    const std::vector<Derivation>& derivations() const { return alphas_; }
    bool graded() const { return graded_; }
    // Requires graded().
    const std::vector<int>& weights() const;
    int weight(std::size_t i) const { return weights().at(i); }

private:
    std::vector<Derivation> alphas_;
    std::vector<int> weights_;
    bool graded_ = false;
};

struct FreeArrangement {
    FamilySpec spec;
    Arrangement arrangement;
    DerivationBasis basis;
};

FreeArrangement build_family(const FamilySpec& spec);
// theta_m(x_k) = x_k^((m-1)r+1)
DerivationBasis wreath_theta_basis(unsigned r, std::size_t n);

// M[i][k] = alpha_i(x_k)
PolyMatrix saito_matrix(const DerivationBasis& basis);

struct SaitoResult {
    bool holds = false;
    Polynomial determinant;
    Polynomial defining_polynomial;
    Scalar constant;  // det = constant * Q when holds
};

// Throws TangencyViolation when some basis element is not tangent.
SaitoResult check_saito_criterion(const Arrangement& a, const DerivationBasis& basis);

struct LoadedArrangement {
    Arrangement arrangement;
    std::optional<DerivationBasis> basis;
};

// {"n", "field": "Q" | {"cyclotomic": r}, "forms": [[...]], "basis": [[...]]}
LoadedArrangement load_arrangement_json(const std::string& text);
std::string arrangement_to_json(const Arrangement& a, const DerivationBasis* basis = nullptr);

}  // namespace saito

#endif
