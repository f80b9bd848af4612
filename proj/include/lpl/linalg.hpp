#pragma once

#include "lpl/matrix.hpp"

namespace lpl {

/// Eigenvalues of a symmetric matrix, descending, via cyclic Jacobi
/// rotations. The input is symmetrized as (A + A^T)/2 first.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// Throws DomainError when a pivot is not positive.
Matrix cholesky(const Matrix& a);

/// Solves A x = b given the Cholesky factor of A.
std::vector<double> cholesky_solve(const Matrix& lower, const std::vector<double>& b);

/// Solves A X = B column by column given the Cholesky factor of A.
Matrix cholesky_solve_matrix(const Matrix& lower, const Matrix& b);

/// log det(A) from its Cholesky factor.
double cholesky_logdet(const Matrix& lower);

} // namespace lpl
