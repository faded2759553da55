#pragma once

#include <cstddef>
#include <vector>

#include "cdae/error.hpp"
#include "cdae/rng.hpp"

namespace cdae {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
///
/// All reductions over a row run left to right, so results are reproducible
/// bit for bit across runs and thread counts.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& other) const = default;

    static Matrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Left-to-right dot product.
double dot(const Vector& a, const Vector& b);

/// y = A x  (row-wise dot products).
Vector matvec(const Matrix& a, const Vector& x);

/// y = A^T x, streamed along rows of A so access stays contiguous; the
/// accumulation order per output component is ascending row index.
Vector matvec_transposed(const Matrix& a, const Vector& x);

Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

/// y += alpha * x
void axpy(double alpha, const Vector& x, Vector& y);

/// Squared L2 norm of each row.
Vector row_squared_norms(const Matrix& a);

bool all_finite(const Vector& v);
bool all_finite(const Matrix& a);

/// d_h x d_v matrix with i.i.d. entries uniform in the open interval
/// (-sqrt(6)/sqrt(d_v+d_h), +sqrt(6)/sqrt(d_v+d_h)).
Matrix init_weights(std::size_t d_h, std::size_t d_v, SeededRng& rng);

}  // namespace cdae
