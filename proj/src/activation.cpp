#include "lpl/activation.hpp"

#include <cmath>
#include <cstdint>

#include "lpl/errors.hpp"
#include "lpl/threading.hpp"

namespace lpl {

namespace {

constexpr std::size_t kParallelGrain = 64 * 1024;

template <typename F>
Matrix elementwise(const Matrix& m, F f) {
    Matrix out(m.rows(), m.cols());
    const double* in = m.data();
    double* o = out.data();
    const std::int64_t n = static_cast<std::int64_t>(m.size());
#pragma omp parallel for num_threads(thread_cap()) if (m.size() >= kParallelGrain)
    for (std::int64_t i = 0; i < n; ++i) o[i] = f(in[i]);
    return out;
}

} // namespace

std::string activation_name(Activation kind) {
    switch (kind) {
        case Activation::Identity: return "identity";
        case Activation::Relu: return "relu";
        case Activation::LeakyRelu: return "leaky_relu";
        case Activation::Tanh: return "tanh";
        case Activation::Sigmoid: return "sigmoid";
    }
    throw ConfigError("unknown activation kind");
}

Activation activation_from_name(const std::string& name) {
    if (name == "identity") return Activation::Identity;
    if (name == "relu") return Activation::Relu;
    if (name == "leaky_relu") return Activation::LeakyRelu;
    if (name == "tanh") return Activation::Tanh;
    if (name == "sigmoid") return Activation::Sigmoid;
    throw ConfigError("unknown activation name: " + name);
}

double activation_value(Activation kind, double leak, double x) {
    switch (kind) {
        case Activation::Identity: return x;
        case Activation::Relu: return x > 0.0 ? x : 0.0;
        case Activation::LeakyRelu: return x >= 0.0 ? x : leak * x;
        case Activation::Tanh: return std::tanh(x);
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-x));
    }
    throw ConfigError("unknown activation kind");
}

double activation_derivative(Activation kind, double leak, double x) {
    switch (kind) {
        case Activation::Identity: return 1.0;
        case Activation::Relu: return x >= 0.0 ? 1.0 : 0.0;
        case Activation::LeakyRelu: return x >= 0.0 ? 1.0 : leak;
        case Activation::Tanh: {
            double t = std::tanh(x);
            return 1.0 - t * t;
        }
        case Activation::Sigmoid: {
            double s = 1.0 / (1.0 + std::exp(-x));
            return s * (1.0 - s);
        }
    }
    throw ConfigError("unknown activation kind");
}

Matrix apply_activation(Activation kind, double leak, const Matrix& pre) {
    return elementwise(pre, [=](double x) { return activation_value(kind, leak, x); });
}

Matrix apply_activation_grad(Activation kind, double leak, const Matrix& pre) {
    return elementwise(pre, [=](double x) { return activation_derivative(kind, leak, x); });
}

} // namespace lpl
