#include "lff/eig.hpp"

#include "lff/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lff {

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace

EigenDecomposition jacobi_eig(const Matrix& sym) {
    LFF_REQUIRE(sym.rows() == sym.cols(), "jacobi_eig: matrix not square " + shape_string(sym));
    const std::size_t n = sym.rows();
    const double norm = frobenius_norm(sym);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            LFF_REQUIRE(std::abs(sym(i, j) - sym(j, i)) <= 1e-10 * std::max(1.0, norm),
                        "jacobi_eig: matrix not symmetric");

    Matrix a = sym;
    Matrix v = Matrix::identity(n);
    const double target = 1e-12 * norm;

    bool converged = norm == 0.0 || n <= 1;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        if (offdiag_norm(a) <= target) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && offdiag_norm(a) > target)
        throw NumericalError("jacobi_eig: no convergence after 100 sweeps, off-diagonal norm " +
                             std::to_string(offdiag_norm(a)));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.eigenvalues[i] = a(order[i], order[i]);
        for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, i) = v(k, order[i]);
    }
    return out;
}

std::vector<double> singular_values(const Matrix& a) {
    if (a.size() == 0) return {};
    const Matrix gram = matmul(transpose(a), a);
    EigenDecomposition eig = jacobi_eig(gram);
    std::vector<double> out(eig.eigenvalues.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::sqrt(std::max(0.0, eig.eigenvalues[i]));
    return out; // eigenvalues descending implies singular values descending
}

} // namespace lff
