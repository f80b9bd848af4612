#pragma once

#include <string>

#include "lpl/matrix.hpp"

namespace lpl {

enum class Activation { Identity, Relu, LeakyRelu, Tanh, Sigmoid };

std::string activation_name(Activation kind);
Activation activation_from_name(const std::string& name);

double activation_value(Activation kind, double leak, double x);

/// Derivative evaluated at the pre-activation value. LeakyRelu returns
/// `leak` for negative inputs and 1 at zero; Relu mirrors that convention.
double activation_derivative(Activation kind, double leak, double x);

/// Elementwise activation of a pre-activation matrix.
Matrix apply_activation(Activation kind, double leak, const Matrix& pre);

/// Elementwise derivative of the activation at each pre-activation entry.
Matrix apply_activation_grad(Activation kind, double leak, const Matrix& pre);

} // namespace lpl
