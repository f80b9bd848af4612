#pragma once

#include <cstdint>
#include <vector>

#include "lpl/activation.hpp"
#include "lpl/matrix.hpp"

namespace lpl {

struct LayerSpec {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    Activation activation = Activation::Identity;
    double leak = 0.2; // only read for LeakyRelu

    friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

/// Fully connected feedforward network. Weights are stored in_dim x out_dim
/// so a batch (rows = samples) maps as X * W + b. Parameter mutation goes
/// through the mutable_* accessors, which bump a revision counter used to
/// detect stale forward traces.
class MlpNetwork {
public:
    MlpNetwork() = default;
    explicit MlpNetwork(std::vector<LayerSpec> specs);

    const std::vector<LayerSpec>& layers() const { return specs_; }
    std::size_t layer_count() const { return specs_.size(); }
    std::size_t input_dim() const { return specs_.front().in_dim; }
    std::size_t output_dim() const { return specs_.back().out_dim; }

    const Matrix& weight(std::size_t k) const { return weights_[k]; }
    const std::vector<double>& bias(std::size_t k) const { return biases_[k]; }
    Matrix& mutable_weight(std::size_t k) {
        ++revision_;
        return weights_[k];
    }
    std::vector<double>& mutable_bias(std::size_t k) {
        ++revision_;
        return biases_[k];
    }

    std::uint64_t revision() const { return revision_; }
    std::size_t parameter_count() const;

    /// Bitwise parameter equality (revision counters are ignored).
    friend bool operator==(const MlpNetwork& a, const MlpNetwork& b) {
        return a.specs_ == b.specs_ && a.weights_ == b.weights_ && a.biases_ == b.biases_;
    }

private:
    std::vector<LayerSpec> specs_;
    std::vector<Matrix> weights_;
    std::vector<std::vector<double>> biases_;
    std::uint64_t revision_ = 0;
};

/// Per-layer pre/post activations captured during a forward pass; consumed by
/// network_backward. Tied to the network revision it was produced under.
struct ForwardTrace {
    Matrix input;
    std::vector<Matrix> pre;
    std::vector<Matrix> post;
    std::uint64_t revision = UINT64_MAX;
};

struct Gradients {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
    Matrix input; // gradient w.r.t. the input batch
};

/// Gaussian-initialized network: per-layer scale sqrt(2/in_dim) for
/// rectifier layers and sqrt(1/in_dim) otherwise, biases zero.
/// Deterministic for a fixed seed.
MlpNetwork init_network(const std::vector<LayerSpec>& specs, std::uint64_t seed);

Matrix network_forward(const MlpNetwork& net, const Matrix& batch, ForwardTrace* trace = nullptr);

/// Backpropagates `output_grad` (dLoss/dOutput) through the trace, returning
/// gradients for every parameter and for the input batch.
Gradients network_backward(const MlpNetwork& net, const ForwardTrace& trace,
                           const Matrix& output_grad);

/// Network computing second(first(x)); dimensions must chain.
MlpNetwork concat_networks(const MlpNetwork& first, const MlpNetwork& second);

} // namespace lpl
