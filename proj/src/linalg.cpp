#include "lpl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lpl/errors.hpp"

namespace lpl {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (a.rows() != a.cols()) {
        throw ShapeError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
    }
}

double offdiag_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
    return std::sqrt(2.0 * sum);
}

} // namespace

std::vector<double> symmetric_eigenvalues(const Matrix& input) {
    require_square(input, "symmetric_eigenvalues");
    const std::size_t n = input.rows();
    if (n == 0) return {};

    Matrix a(n, n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (input(i, j) + input(j, i));
            scale = std::max(scale, std::abs(a(i, j)));
        }
    }
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    const double tol = 1e-14 * scale * static_cast<double>(n);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > tol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(p, i) = a(i, p);
                    a(i, q) = s * aip + c * aiq;
                    a(q, i) = a(i, q);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

Matrix cholesky(const Matrix& a) {
    require_square(a, "cholesky");
    const std::size_t n = a.rows();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
            if (i == j) {
                if (sum <= 0.0) {
                    throw DomainError("cholesky: matrix not positive definite (pivot " +
                                      std::to_string(sum) + " at " + std::to_string(i) + ")");
                }
                l(i, i) = std::sqrt(sum);
            } else {
                l(i, j) = sum / l(j, j);
            }
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const Matrix& lower, const std::vector<double>& b) {
    const std::size_t n = lower.rows();
    if (b.size() != n) throw ShapeError("cholesky_solve: rhs length mismatch");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = b[i];
        for (std::size_t k = 0; k < i; ++k) sum -= lower(i, k) * y[k];
        y[i] = sum / lower(i, i);
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double sum = y[i];
        for (std::size_t k = i + 1; k < n; ++k) sum -= lower(k, i) * x[k];
        x[i] = sum / lower(i, i);
    }
    return x;
}

Matrix cholesky_solve_matrix(const Matrix& lower, const Matrix& b) {
    if (b.rows() != lower.rows()) throw ShapeError("cholesky_solve_matrix: rhs rows mismatch");
    Matrix x(b.rows(), b.cols());
    std::vector<double> col(b.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        std::vector<double> sol = cholesky_solve(lower, col);
        for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = sol[i];
    }
    return x;
}

double cholesky_logdet(const Matrix& lower) {
    double sum = 0.0;
    for (std::size_t i = 0; i < lower.rows(); ++i) sum += std::log(lower(i, i));
    return 2.0 * sum;
}

} // namespace lpl
