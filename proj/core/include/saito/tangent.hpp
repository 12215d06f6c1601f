#ifndef SAITO_TANGENT_HPP
#define SAITO_TANGENT_HPP

#include <saito/arrangement.hpp>

#include <optional>
#include <string>
#include <vector>

namespace saito {

bool is_tangent(const Derivation& d, const Arrangement& a);

// Coefficients g with d = sum g_i alpha_i, or std::nullopt when d is not in
// the module spanned by the basis.
std::optional<std::vector<Polynomial>> express_in_basis(const DerivationBasis& basis, const Derivation& d);
Derivation combine(const DerivationBasis& basis, const std::vector<Polynomial>& coeffs);

struct TriangularCheck {
    bool triangular = false;      // alpha_i(x_j) = 0 for i > j
    bool nonzero_diagonal = false;
    bool holds() const { return triangular && nonzero_diagonal; }
};
TriangularCheck check_triangular(const DerivationBasis& basis);

// det of the (n-k) x (n-k) matrix alpha_i(x_j), j = k+1..n, i = k..n-1 (k 1-based)
Polynomial bezout_minor(const DerivationBasis& basis, std::size_t k);

struct BezoutCheck {
    bool holds = false;
    std::vector<Polynomial> minors;  // index k-1
    std::vector<Polynomial> gcds;
};
BezoutCheck check_bezout(const DerivationBasis& basis);

// u_k = sum_i coeffs[k][i] alpha_i with coeffs[k][n-1] = 1.
struct OrthogonalFamily {
    std::vector<std::vector<Polynomial>> coeffs;
    std::vector<Derivation> members;
};

// Closed formulas for the wreath (n = 3) and braid families; braid_deleted goes
// through solve_orthogonal_family.
OrthogonalFamily build_orthogonal_family(const FamilySpec& spec, const DerivationBasis& basis);
// The unique family with u_k(x_l) = 0 for l != k, if its coefficients are polynomial.
std::optional<OrthogonalFamily> solve_orthogonal_family(const DerivationBasis& basis);
bool check_orthogonality(const DerivationBasis& basis, const OrthogonalFamily& family);

// [alpha_i, alpha_j] = sum_k c_ij^k alpha_k
class StructureConstants {
public:
    explicit StructureConstants(const DerivationBasis& basis);
    const std::vector<Polynomial>& operator()(std::size_t i, std::size_t j) const { return c_[i][j]; }
    std::size_t size() const { return c_.size(); }

private:
    std::vector<std::vector<std::vector<Polynomial>>> c_;
};

}  // namespace saito

#endif
