#pragma once

#include "lpl/network.hpp"

namespace lpl {

/// RMSProp accumulator state, one slot per network parameter tensor.
struct RmsPropState {
    double decay = 0.9;
    double epsilon = 1e-8;
    double step_size = 3e-4;
    std::vector<Matrix> weight_acc;
    std::vector<std::vector<double>> bias_acc;

    friend bool operator==(const RmsPropState&, const RmsPropState&) = default;
};

RmsPropState make_rmsprop_state(const MlpNetwork& net, double step_size = 3e-4,
                                double decay = 0.9, double epsilon = 1e-8);

/// One RMSProp update: r <- decay*r + (1-decay)*g^2, then
/// param <- param - step_size * g / (sqrt(r) + epsilon).
/// Throws NumericError naming the layer if a gradient is non-finite.
void rmsprop_step(MlpNetwork& net, const Gradients& grads, RmsPropState& state);

} // namespace lpl
