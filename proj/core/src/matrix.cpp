#include "lff/matrix.hpp"

#include "lff/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace lff {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        LFF_REQUIRE(row.size() == c, "from_rows: ragged initializer");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::row_vector(const std::vector<double>& v) {
    Matrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

Matrix Matrix::column_vector(const std::vector<double>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    LFF_REQUIRE(a.cols() == b.rows(), "matmul: dimension mismatch " + shape_string(a) +
                                          " x " + shape_string(b));
    Matrix out(a.rows(), b.cols());
    const std::size_t n = a.rows(), k_dim = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* __restrict__ orow = out.row_ptr(i);
        const double* __restrict__ arow = a.row_ptr(i);
        for (std::size_t k = 0; k < k_dim; ++k) {
            const double aik = arow[k];
            const double* __restrict__ brow = b.row_ptr(k);
            for (std::size_t j = 0; j < m; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out += b;
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out -= b;
    return out;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out = a;
    out *= s;
    return out;
}

Matrix& operator+=(Matrix& a, const Matrix& b) {
    LFF_REQUIRE(a.same_shape(b), "operator+=: shape mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.values()[i] += b.values()[i];
    return a;
}

Matrix& operator-=(Matrix& a, const Matrix& b) {
    LFF_REQUIRE(a.same_shape(b), "operator-=: shape mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.values()[i] -= b.values()[i];
    return a;
}

Matrix& operator*=(Matrix& a, double s) {
    for (double& v : a.values()) v *= s;
    return a;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    LFF_REQUIRE(a.same_shape(b), "hadamard: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] *= b.values()[i];
    return out;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.values()) s += v * v;
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.values()) m = std::max(m, std::abs(v));
    return m;
}

double mean_abs(const Matrix& a) {
    if (a.empty()) return 0.0;
    double s = 0.0;
    for (double v : a.values()) s += std::abs(v);
    return s / static_cast<double>(a.size());
}

bool all_finite(const Matrix& a) {
    for (double v : a.values())
        if (!std::isfinite(v)) return false;
    return true;
}

void require_finite(const Matrix& a, const std::string& context) {
    if (!all_finite(a)) throw NumericalError(context + ": non-finite entries");
}

std::string shape_string(const Matrix& a) {
    return "(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")";
}

} // namespace lff
