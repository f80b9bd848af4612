#include "lpl/kernels.hpp"

#include <cstdint>
#include <string>

#include "lpl/errors.hpp"
#include "lpl/threading.hpp"

namespace lpl {

namespace {

// Row loops with less work than this stay serial; OpenMP startup costs more
// than the loop body for the small matrices that dominate training steps.
constexpr std::uint64_t kParallelGrain = 64 * 1024;

void check_inner(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ShapeError(std::string(what) + ": inner dimensions " + std::to_string(a) +
                         " and " + std::to_string(b) + " do not match");
    }
}

// C(i,:) += a(i,k) * B(k,:) for k ascending; identical accumulation order in
// the serial and parallel builds.
inline void matmul_row(const double* arow, const Matrix& b, double* crow) {
    const std::size_t n = b.rows();
    const std::size_t p = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        const double aik = arow[k];
        const double* brow = b.row(k);
        for (std::size_t j = 0; j < p; ++j) crow[j] += aik * brow[j];
    }
}

inline void matmul_nt_row(const double* arow, const Matrix& b, double* crow) {
    const std::size_t n = b.cols();
    const std::size_t p = b.rows();
    for (std::size_t j = 0; j < p; ++j) {
        const double* brow = b.row(j);
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += arow[k] * brow[k];
        crow[j] = acc;
    }
}

// Row i of A^T * B: out(i,:) = sum_k A(k,i) * B(k,:).
inline void matmul_tn_row(const Matrix& a, const Matrix& b, std::size_t i, double* crow) {
    const std::size_t n = a.rows();
    const std::size_t p = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        const double aki = a(k, i);
        const double* brow = b.row(k);
        for (std::size_t j = 0; j < p; ++j) crow[j] += aki * brow[j];
    }
}

} // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_inner(a.cols(), b.rows(), "matmul");
    Matrix c(a.rows(), b.cols());
    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::uint64_t work = a.rows() * a.cols() * b.cols();
#pragma omp parallel for num_threads(thread_cap()) if (work >= kParallelGrain)
    for (std::int64_t i = 0; i < m; ++i) {
        matmul_row(a.row(static_cast<std::size_t>(i)), b, c.row(static_cast<std::size_t>(i)));
    }
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    check_inner(a.cols(), b.cols(), "matmul_nt");
    Matrix c(a.rows(), b.rows());
    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::uint64_t work = a.rows() * a.cols() * b.rows();
#pragma omp parallel for num_threads(thread_cap()) if (work >= kParallelGrain)
    for (std::int64_t i = 0; i < m; ++i) {
        matmul_nt_row(a.row(static_cast<std::size_t>(i)), b, c.row(static_cast<std::size_t>(i)));
    }
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    check_inner(a.rows(), b.rows(), "matmul_tn");
    Matrix c(a.cols(), b.cols());
    const std::int64_t m = static_cast<std::int64_t>(a.cols());
    const std::uint64_t work = a.rows() * a.cols() * b.cols();
#pragma omp parallel for num_threads(thread_cap()) if (work >= kParallelGrain)
    for (std::int64_t i = 0; i < m; ++i) {
        matmul_tn_row(a, b, static_cast<std::size_t>(i), c.row(static_cast<std::size_t>(i)));
    }
    return c;
}

void add_row_bias(Matrix& m, const std::vector<double>& bias) {
    if (bias.size() != m.cols()) {
        throw ShapeError("add_row_bias: bias length " + std::to_string(bias.size()) +
                         " vs " + std::to_string(m.cols()) + " columns");
    }
    const std::int64_t rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for num_threads(thread_cap()) if (m.size() >= kParallelGrain)
    for (std::int64_t i = 0; i < rows; ++i) {
        double* row = m.row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] += bias[j];
    }
}

std::vector<double> column_sums(const Matrix& m) {
    std::vector<double> sums(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) sums[j] += row[j];
    }
    return sums;
}

namespace reference {

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_inner(a.cols(), b.rows(), "matmul");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a.row(i), b, c.row(i));
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    check_inner(a.cols(), b.cols(), "matmul_nt");
    Matrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) matmul_nt_row(a.row(i), b, c.row(i));
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    check_inner(a.rows(), b.rows(), "matmul_tn");
    Matrix c(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) matmul_tn_row(a, b, i, c.row(i));
    return c;
}

} // namespace reference

} // namespace lpl
