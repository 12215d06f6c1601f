#ifndef SAITO_LINALG_HPP
#define SAITO_LINALG_HPP

#include <saito/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace saito {

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Fraction-free Bareiss elimination.
std::size_t rank(const ScalarMatrix& m);
Scalar determinant(const ScalarMatrix& m);
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);
// Square matrix; divisions are exact polynomial divisions.
Polynomial determinant(const PolyMatrix& m);

// Sparse rational vector with strictly increasing indices and no zero entries.
using QVector = std::vector<std::pair<std::uint32_t, mpq_class>>;

QVector make_qvector(std::vector<std::pair<std::uint32_t, mpq_class>> entries);

// Incremental row echelon form over Q, stored as primitive integer rows.
// Each row may carry a tag vector that records the linear combination it came
// from, so the same structure serves rank, kernels and quotient coordinates.
class Echelon {
public:
    // Adds v; returns std::nullopt if v was independent, otherwise the reduced
    // tag, i.e. a combination of previously tagged inputs plus `tag` whose
    // vector part vanishes.
    std::optional<QVector> insert(const QVector& v, const QVector& tag = {});
    bool contains(const QVector& v) const;
    // For v in the span: c such that v equals sum c_j (tagged input j) modulo
    // the untagged rows. std::nullopt when v is outside the span.
    std::optional<QVector> coordinates(const QVector& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    using ZVector = std::vector<std::pair<std::uint32_t, mpz_class>>;
    struct Row {
        ZVector v, tag;
    };
    struct Reduced {
        ZVector v, tag;
        mpz_class scale;
    };

    Reduced reduce(ZVector v, ZVector tag) const;

    std::vector<Row> rows_;
    std::unordered_map<std::uint32_t, std::uint32_t> pivot_;
};

// Rank of a family of sparse vectors.
std::size_t rank_of(const std::vector<QVector>& vectors);

}  // namespace saito

#endif
