#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lff {

/// Dense row-major matrix of 64-bit floats. The universal numeric carrier:
/// inputs, weights, kernels, eigenvector bases and Q-tables all live here.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static Matrix row_vector(const std::vector<double>& v);
    static Matrix column_vector(const std::vector<double>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    const std::vector<double>& values() const { return data_; }
    std::vector<double>& values() { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    void fill(double v) { data_.assign(data_.size(), v); }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Product with a fixed i-k-j loop order; no parallel or reordered
/// reductions, so results are bit-stable for a given build.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix& operator+=(Matrix& a, const Matrix& b);
Matrix& operator-=(Matrix& a, const Matrix& b);
Matrix& operator*=(Matrix& a, double s);

Matrix hadamard(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double mean_abs(const Matrix& a);

bool all_finite(const Matrix& a);

/// Throws NumericalError naming `context` if any entry is NaN/Inf.
void require_finite(const Matrix& a, const std::string& context);

std::string shape_string(const Matrix& a);

} // namespace lff
