#include "lpl/matrix.hpp"

#include <cmath>
#include <string>

#include "lpl/errors.hpp"

namespace lpl {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeError("matrix data length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

std::vector<double> Matrix::row_vector(std::size_t r) const {
    return std::vector<double>(row(r), row(r) + cols_);
}

void Matrix::set_row(std::size_t r, const std::vector<double>& values) {
    if (values.size() != cols_) {
        throw ShapeError("row assignment of length " + std::to_string(values.size()) +
                         " into matrix with " + std::to_string(cols_) + " columns");
    }
    std::copy(values.begin(), values.end(), row(r));
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Matrix Matrix::from_row(const std::vector<double>& values) {
    return Matrix(1, values.size(), values);
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
}

void require_finite(const Matrix& m, const char* what) {
    if (!m.all_finite()) {
        throw NumericError(std::string(what) + ": non-finite entries");
    }
}

} // namespace lpl
