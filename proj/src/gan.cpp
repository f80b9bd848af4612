#include "lpl/gan.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <string>

#include "lpl/checkpoint.hpp"
#include "lpl/csv.hpp"
#include "lpl/errors.hpp"
#include "lpl/rng.hpp"

namespace lpl {

namespace {

constexpr double kScoreClamp = 1e-7;

double clamp_score(double s) {
    return std::min(std::max(s, kScoreClamp), 1.0 - kScoreClamp);
}

void check_scores(const Matrix& scores, const char* what) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double s = scores.data()[i];
        if (!(s >= 0.0 && s <= 1.0)) {
            throw NumericError(std::string(what) + ": score " + std::to_string(s) +
                               " outside [0,1]");
        }
    }
}

void accumulate(Gradients& acc, const Gradients& other) {
    for (std::size_t k = 0; k < acc.weights.size(); ++k) {
        for (std::size_t i = 0; i < acc.weights[k].size(); ++i) {
            acc.weights[k].data()[i] += other.weights[k].data()[i];
        }
        for (std::size_t i = 0; i < acc.biases[k].size(); ++i) {
            acc.biases[k][i] += other.biases[k][i];
        }
    }
}

} // namespace

PriorSpec PriorSpec::isotropic(std::size_t dim, double sigma) {
    if (dim == 0) throw ConfigError("prior: dimension must be >= 1");
    if (sigma <= 0.0) throw ConfigError("prior: sigma must be positive");
    PriorSpec spec;
    spec.dim = dim;
    spec.sigma = sigma;
    return spec;
}

PriorSpec PriorSpec::induced_from(MlpNetwork mapping, PriorSpec base) {
    if (mapping.input_dim() != base.dim) {
        throw ConfigError("induced prior: mapping input dim " +
                          std::to_string(mapping.input_dim()) + " does not match base dim " +
                          std::to_string(base.dim));
    }
    PriorSpec spec;
    spec.dim = mapping.output_dim();
    spec.sigma = base.sigma;
    spec.mapping = std::make_shared<const MlpNetwork>(std::move(mapping));
    spec.base = std::make_shared<const PriorSpec>(std::move(base));
    return spec;
}

Matrix sample_prior(const PriorSpec& prior, std::size_t n, std::uint64_t seed) {
    if (prior.dim == 0) throw ConfigError("sample_prior: uninitialized prior");
    if (!prior.induced()) {
        return gaussian_sample(n, prior.dim, 0.0, prior.sigma, seed);
    }
    const Matrix base = sample_prior(*prior.base, n, seed);
    return network_forward(*prior.mapping, base);
}

GanModel make_gan(MlpNetwork generator, MlpNetwork discriminator, PriorSpec prior,
                  double step_size) {
    if (prior.dim != generator.input_dim()) {
        throw ConfigError("make_gan: prior dim " + std::to_string(prior.dim) +
                          " does not match generator input dim " +
                          std::to_string(generator.input_dim()));
    }
    if (generator.output_dim() != discriminator.input_dim()) {
        throw ConfigError("make_gan: generator output dim " +
                          std::to_string(generator.output_dim()) +
                          " does not match discriminator input dim " +
                          std::to_string(discriminator.input_dim()));
    }
    if (discriminator.output_dim() != 1) {
        throw ConfigError("make_gan: discriminator must output a single score");
    }
    GanModel model;
    model.gen_opt = make_rmsprop_state(generator, step_size);
    model.disc_opt = make_rmsprop_state(discriminator, step_size);
    model.generator = std::move(generator);
    model.discriminator = std::move(discriminator);
    model.prior = std::move(prior);
    return model;
}

double discriminator_loss(const Matrix& real_scores, const Matrix& fake_scores) {
    check_scores(real_scores, "discriminator_loss: real");
    check_scores(fake_scores, "discriminator_loss: fake");
    if (real_scores.size() == 0 || fake_scores.size() == 0) {
        throw ShapeError("discriminator_loss: empty score batch");
    }
    double real_term = 0.0;
    for (std::size_t i = 0; i < real_scores.size(); ++i) {
        real_term -= std::log(clamp_score(real_scores.data()[i]));
    }
    double fake_term = 0.0;
    for (std::size_t i = 0; i < fake_scores.size(); ++i) {
        fake_term -= std::log(1.0 - clamp_score(fake_scores.data()[i]));
    }
    return real_term / static_cast<double>(real_scores.size()) +
           fake_term / static_cast<double>(fake_scores.size());
}

double generator_loss(const Matrix& fake_scores) {
    check_scores(fake_scores, "generator_loss");
    if (fake_scores.size() == 0) throw ShapeError("generator_loss: empty score batch");
    double term = 0.0;
    for (std::size_t i = 0; i < fake_scores.size(); ++i) {
        term -= std::log(clamp_score(fake_scores.data()[i]));
    }
    return term / static_cast<double>(fake_scores.size());
}

std::uint64_t disc_noise_seed(std::uint64_t step_seed) { return mix_seed(step_seed, 0xD15C); }
std::uint64_t gen_noise_seed(std::uint64_t step_seed) { return mix_seed(step_seed, 0x6E4E); }

StepMetrics gan_train_step(GanModel& model, const Matrix& real_batch, std::uint64_t step_seed) {
    if (real_batch.cols() != model.discriminator.input_dim()) {
        throw ShapeError("gan_train_step: real batch has " + std::to_string(real_batch.cols()) +
                         " columns, discriminator expects " +
                         std::to_string(model.discriminator.input_dim()));
    }
    const std::size_t n = real_batch.rows();

    // Discriminator update on (real, fake).
    const Matrix noise_d = sample_prior(model.prior, n, disc_noise_seed(step_seed));
    const Matrix fake_d = network_forward(model.generator, noise_d);

    ForwardTrace real_trace, fake_trace;
    const Matrix real_scores = network_forward(model.discriminator, real_batch, &real_trace);
    const Matrix fake_scores = network_forward(model.discriminator, fake_d, &fake_trace);
    const double d_loss = discriminator_loss(real_scores, fake_scores);
    if (!std::isfinite(d_loss)) {
        throw NumericError("gan step " + std::to_string(model.step) +
                           ": non-finite discriminator loss");
    }

    Matrix real_grad(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        real_grad(i, 0) = -1.0 / (static_cast<double>(n) * clamp_score(real_scores(i, 0)));
    }
    Matrix fake_grad(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        fake_grad(i, 0) = 1.0 / (static_cast<double>(n) * (1.0 - clamp_score(fake_scores(i, 0))));
    }
    Gradients disc_grads = network_backward(model.discriminator, real_trace, real_grad);
    accumulate(disc_grads, network_backward(model.discriminator, fake_trace, fake_grad));
    rmsprop_step(model.discriminator, disc_grads, model.disc_opt);

    // Generator update through the frozen, freshly updated discriminator.
    const Matrix noise_g = sample_prior(model.prior, n, gen_noise_seed(step_seed));
    ForwardTrace gen_trace;
    const Matrix fake_g = network_forward(model.generator, noise_g, &gen_trace);
    ForwardTrace disc_trace;
    const Matrix gen_scores = network_forward(model.discriminator, fake_g, &disc_trace);
    const double g_loss = generator_loss(gen_scores);
    if (!std::isfinite(g_loss)) {
        throw NumericError("gan step " + std::to_string(model.step) +
                           ": non-finite generator loss");
    }

    Matrix score_grad(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        score_grad(i, 0) = -1.0 / (static_cast<double>(n) * clamp_score(gen_scores(i, 0)));
    }
    const Gradients through_disc = network_backward(model.discriminator, disc_trace, score_grad);
    const Gradients gen_grads = network_backward(model.generator, gen_trace, through_disc.input);
    rmsprop_step(model.generator, gen_grads, model.gen_opt);

    ++model.step;
    return StepMetrics{model.step, d_loss, g_loss};
}

namespace {

std::vector<std::size_t> epoch_permutation(std::size_t n, std::uint64_t seed,
                                           std::uint64_t epoch) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 engine = make_engine(mix_seed(seed, 0xE69C, epoch));
    std::shuffle(perm.begin(), perm.end(), engine);
    return perm;
}

std::string checkpoint_name(const std::string& dir, std::uint64_t step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "ckpt_%08llu.lpl", static_cast<unsigned long long>(step));
    return (std::filesystem::path(dir) / buf).string();
}

} // namespace

std::vector<StepMetrics> gan_train(GanModel& model, const Matrix& data,
                                   const TrainConfig& config) {
    if (data.rows() == 0) throw ConfigError("gan_train: dataset is empty");
    if (config.batch_size < 2) throw ConfigError("gan_train: batch_size must be >= 2");

    model.gen_opt.step_size = config.step_size;
    model.disc_opt.step_size = config.step_size;

    const std::size_t n = data.rows();
    const std::size_t batch = std::min(config.batch_size, n);
    const std::size_t steps_per_epoch = std::max<std::size_t>(1, n / batch);

    std::vector<StepMetrics> log;
    log.reserve(config.steps);

    std::uint64_t cached_epoch = UINT64_MAX;
    std::vector<std::size_t> perm;

    for (std::size_t i = 0; i < config.steps; ++i) {
        const std::uint64_t abs_step = model.step;
        const std::uint64_t epoch = abs_step / steps_per_epoch;
        const std::size_t pos = abs_step % steps_per_epoch;
        if (epoch != cached_epoch) {
            perm = epoch_permutation(n, config.seed, epoch);
            cached_epoch = epoch;
        }

        Matrix real(batch, data.cols());
        for (std::size_t r = 0; r < batch; ++r) {
            const std::size_t src = perm[(pos * batch + r) % n];
            std::copy(data.row(src), data.row(src) + data.cols(), real.row(r));
        }

        const StepMetrics metrics =
            gan_train_step(model, real, mix_seed(config.seed, 0x57E9, abs_step));
        log.push_back(metrics);

        if (!config.log_path.empty()) {
            append_csv(config.log_path, "step,d_loss,g_loss",
                       {static_cast<double>(metrics.step), metrics.d_loss, metrics.g_loss});
        }
        if (!config.checkpoint_dir.empty() && config.checkpoint_every > 0 &&
            model.step % config.checkpoint_every == 0) {
            write_checkpoint(model, checkpoint_name(config.checkpoint_dir, model.step));
        }
    }

    if (!config.checkpoint_dir.empty() && config.steps > 0) {
        write_checkpoint(model, checkpoint_name(config.checkpoint_dir, model.step));
    }
    return log;
}

Matrix sample_generator(const GanModel& model, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ConfigError("sample_generator: n must be >= 1");
    const Matrix noise = sample_prior(model.prior, n, seed);
    return network_forward(model.generator, noise);
}

} // namespace lpl
