#pragma once

#include "lpl/matrix.hpp"

namespace lpl {

// Dense kernels used by the network forward/backward passes. The variants in
// this namespace parallelize the row loop with OpenMP; each output element is
// still accumulated in a fixed serial order, so results are bitwise identical
// to the lpl::reference versions regardless of thread count.

/// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);

/// C = A * B^T
Matrix matmul_nt(const Matrix& a, const Matrix& b);

/// C = A^T * B
Matrix matmul_tn(const Matrix& a, const Matrix& b);

/// Adds `bias` to every row of `m` in place (bias.size() == m.cols()).
void add_row_bias(Matrix& m, const std::vector<double>& bias);

/// Column sums of `m`, accumulated top to bottom.
std::vector<double> column_sums(const Matrix& m);

namespace reference {

// Serial implementations kept as the correctness baseline for the parallel
// kernels; also used by the benchmark tool.

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);

} // namespace reference

} // namespace lpl
