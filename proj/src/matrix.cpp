#include "cdae/matrix.hpp"

#include <cmath>
#include <string>

namespace cdae {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DimensionError(msg);
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double dot(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "dot: size mismatch " + std::to_string(a.size()) +
                                      " vs " + std::to_string(b.size()));
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector matvec(const Matrix& a, const Vector& x) {
    require(a.cols() == x.size(), "matvec: " + std::to_string(a.rows()) + "x" +
                                      std::to_string(a.cols()) + " times vector of dim " +
                                      std::to_string(x.size()));
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* r = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += r[j] * x[j];
        y[i] = s;
    }
    return y;
}

Vector matvec_transposed(const Matrix& a, const Vector& x) {
    require(a.rows() == x.size(), "matvec_transposed: " + std::to_string(a.rows()) + "x" +
                                      std::to_string(a.cols()) + " transposed times vector of dim " +
                                      std::to_string(x.size()));
    Vector y(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* r = a.row(i);
        const double xi = x[i];
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += r[j] * xi;
    }
    return y;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: " + std::to_string(a.cols()) + " cols vs " +
                                      std::to_string(b.rows()) + " rows");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

void axpy(double alpha, const Vector& x, Vector& y) {
    require(x.size() == y.size(), "axpy: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

Vector row_squared_norms(const Matrix& a) {
    Vector s(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* r = a.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += r[j] * r[j];
        s[i] = acc;
    }
    return s;
}

bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_finite(const Matrix& a) { return all_finite(a.data()); }

Matrix init_weights(std::size_t d_h, std::size_t d_v, SeededRng& rng) {
    if (d_h == 0 || d_v == 0)
        throw DimensionError("init_weights: dimensions must be positive, got " +
                             std::to_string(d_h) + "x" + std::to_string(d_v));
    const double r = std::sqrt(6.0) / std::sqrt(static_cast<double>(d_v + d_h));
    Matrix w(d_h, d_v);
    for (double& v : w.data()) v = rng.uniform(-r, r);
    return w;
}

}  // namespace cdae
