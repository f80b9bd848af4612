#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lpl/matrix.hpp"
#include "lpl/network.hpp"
#include "lpl/rmsprop.hpp"

namespace lpl {

/// Latent prior: either N(0, sigma^2 I) in `dim` dimensions, or a base prior
/// pushed through a fixed mapping network (the data-induced case).
struct PriorSpec {
    std::size_t dim = 0;
    double sigma = 1.0;
    std::shared_ptr<const MlpNetwork> mapping; // non-null => induced
    std::shared_ptr<const PriorSpec> base;     // sampled and fed to `mapping`

    bool induced() const { return mapping != nullptr; }

    static PriorSpec isotropic(std::size_t dim, double sigma = 1.0);
    static PriorSpec induced_from(MlpNetwork mapping, PriorSpec base);
};

/// n prior draws, one per row. Induced priors route base draws through the
/// mapping with its parameters untouched.
Matrix sample_prior(const PriorSpec& prior, std::size_t n, std::uint64_t seed);

struct GanModel {
    MlpNetwork generator;
    MlpNetwork discriminator;
    PriorSpec prior;
    RmsPropState gen_opt;
    RmsPropState disc_opt;
    std::uint64_t step = 0;
};

/// Validates dimensions (prior dim = generator input, generator output =
/// discriminator input, scalar discriminator) and attaches optimizer state.
GanModel make_gan(MlpNetwork generator, MlpNetwork discriminator, PriorSpec prior,
                  double step_size = 3e-4);

struct TrainConfig {
    std::size_t batch_size = 100;
    std::size_t steps = 0;
    double step_size = 3e-4;
    std::uint64_t seed = 0;
    std::size_t checkpoint_every = 0; // 0 disables periodic checkpoints
    std::string log_path;             // CSV `step,d_loss,g_loss`; empty disables
    std::string checkpoint_dir;       // empty disables checkpointing
};

struct StepMetrics {
    std::uint64_t step = 0;
    double d_loss = 0.0;
    double g_loss = 0.0;
};

/// Mean of -log(real) - log(1 - fake). Scores must lie in [0,1] and are
/// clamped to [1e-7, 1 - 1e-7] before the log.
double discriminator_loss(const Matrix& real_scores, const Matrix& fake_scores);

/// Non-saturating generator loss: mean of -log(fake).
double generator_loss(const Matrix& fake_scores);

/// Noise seeds used inside a train step, exposed so callers can replay the
/// exact draws of a step.
std::uint64_t disc_noise_seed(std::uint64_t step_seed);
std::uint64_t gen_noise_seed(std::uint64_t step_seed);

/// One adversarial step: discriminator update on (real, fake), then a
/// generator update through the frozen discriminator. Reported losses are the
/// values seen by each update before it was applied.
StepMetrics gan_train_step(GanModel& model, const Matrix& real_batch, std::uint64_t step_seed);

/// Runs `config.steps` steps over shuffled minibatches of `data`, appending
/// metric rows and writing checkpoints at the configured cadence plus a final
/// one. Minibatch order and noise are pure functions of (config.seed,
/// absolute step), so training resumed from a checkpoint reproduces the
/// uninterrupted run.
std::vector<StepMetrics> gan_train(GanModel& model, const Matrix& data,
                                   const TrainConfig& config);

/// n prior draws mapped through the generator.
Matrix sample_generator(const GanModel& model, std::size_t n, std::uint64_t seed);

} // namespace lpl
