#include "lpl/rmsprop.hpp"

#include <cmath>
#include <string>

#include "lpl/errors.hpp"

namespace lpl {

namespace {

void update(double* param, double* acc, const double* grad, std::size_t n,
            const RmsPropState& s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double g = grad[i];
        acc[i] = s.decay * acc[i] + (1.0 - s.decay) * g * g;
        param[i] -= s.step_size * g / (std::sqrt(acc[i]) + s.epsilon);
    }
}

bool finite(const double* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(p[i])) return false;
    return true;
}

} // namespace

RmsPropState make_rmsprop_state(const MlpNetwork& net, double step_size, double decay,
                                double epsilon) {
    if (decay <= 0.0 || decay >= 1.0) throw ConfigError("rmsprop: decay must lie in (0,1)");
    if (epsilon <= 0.0) throw ConfigError("rmsprop: epsilon must be positive");
    if (step_size <= 0.0) throw ConfigError("rmsprop: step size must be positive");
    RmsPropState state;
    state.decay = decay;
    state.epsilon = epsilon;
    state.step_size = step_size;
    for (std::size_t k = 0; k < net.layer_count(); ++k) {
        state.weight_acc.emplace_back(net.weight(k).rows(), net.weight(k).cols());
        state.bias_acc.emplace_back(net.bias(k).size(), 0.0);
    }
    return state;
}

void rmsprop_step(MlpNetwork& net, const Gradients& grads, RmsPropState& state) {
    if (grads.weights.size() != net.layer_count() ||
        state.weight_acc.size() != net.layer_count()) {
        throw ShapeError("rmsprop_step: gradient/state layer count mismatch");
    }
    for (std::size_t k = 0; k < net.layer_count(); ++k) {
        if (!grads.weights[k].same_shape(net.weight(k)) ||
            grads.biases[k].size() != net.bias(k).size()) {
            throw ShapeError("rmsprop_step: gradient shape mismatch at layer " + std::to_string(k));
        }
        if (!finite(grads.weights[k].data(), grads.weights[k].size()) ||
            !finite(grads.biases[k].data(), grads.biases[k].size())) {
            throw NumericError("rmsprop_step: non-finite gradient at layer " + std::to_string(k));
        }
    }
    for (std::size_t k = 0; k < net.layer_count(); ++k) {
        Matrix& w = net.mutable_weight(k);
        update(w.data(), state.weight_acc[k].data(), grads.weights[k].data(), w.size(), state);
        std::vector<double>& b = net.mutable_bias(k);
        update(b.data(), state.bias_acc[k].data(), grads.biases[k].data(), b.size(), state);
    }
}

} // namespace lpl
