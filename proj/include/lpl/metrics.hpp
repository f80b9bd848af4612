#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lpl/latent_codes.hpp"
#include "lpl/matrix.hpp"

namespace lpl {

/// Prior-agreement report: singular values of a code set, the reference
/// prior scale, and the resulting divergence.
struct PagReport {
    std::vector<double> singular_values; // descending
    double sigma = 1.0;
    double pag = 0.0;
    std::size_t n = 0;

    std::size_t dim() const { return singular_values.size(); }
};

/// Singular values of the mean-centered code matrix scaled by 1/sqrt(n-1),
/// i.e. estimated standard deviations along the principal axes, descending.
/// Computed through the eigenvalues of the d x d covariance (Jacobi).
/// Requires n >= d.
std::vector<double> singular_values(const Matrix& codes);

/// 0.5 * sum_i [v_i/s - log(v_i/s) - 1] over variance ratios, the divergence
/// from N(0, diag(variances)) to N(0, sigma_sq * I).
double pag_score_from_variances(const std::vector<double>& variances, double sigma_sq);

/// Same score parameterized by singular values and prior stddev.
double pag_score(const std::vector<double>& nu, double sigma);

/// singular_values + pag_score over a code set. When `spectrum_path` is
/// nonempty the spectrum is also written as CSV `index,singular_value`.
PagReport pag_from_codes(const LatentCodeSet& codes, double sigma,
                         const std::string& spectrum_path = "");

void write_spectrum_csv(const PagReport& report, const std::string& path);

/// Single-line CSV `n,d,sigma,pag`.
void write_pag_csv(const PagReport& report, const std::string& path);

/// Closed-form KL between diagonal Gaussians (including the mean term).
double kl_diag_gaussian(const std::vector<double>& mu0, const std::vector<double>& var0,
                        const std::vector<double>& mu1, const std::vector<double>& var1);

/// Closed-form KL between full-covariance Gaussians (Cholesky based).
double kl_full_gaussian(const std::vector<double>& mu0, const Matrix& cov0,
                        const std::vector<double>& mu1, const Matrix& cov1);

using McSampler = std::function<std::vector<double>(std::mt19937_64&)>;
using LogDensity = std::function<double(const std::vector<double>&)>;

struct KlMcResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
};

/// Monte Carlo estimate of KL(P||Q) = E_P[log p - log q] with standard error.
KlMcResult kl_mc_estimate(const McSampler& sample_p, const LogDensity& log_p,
                          const LogDensity& log_q, std::size_t n_samples, std::uint64_t seed);

/// Latent-variable model with closed-form joint: z ~ N(prior_mean,
/// diag(prior_var)), x | z ~ N(transform * z + offset, diag(noise_var)).
struct LinearGaussianModel {
    std::vector<double> prior_mean;
    std::vector<double> prior_var;
    Matrix transform; // m x d
    std::vector<double> offset;
    std::vector<double> noise_var;

    std::size_t latent_dim() const { return prior_mean.size(); }
    std::size_t data_dim() const { return offset.size(); }
};

struct KlDecomposition {
    double lhs = 0.0;              // KL between the joints
    double prior_term = 0.0;       // KL between the priors
    double conditional_term = 0.0; // expected KL between the conditionals
    double gap = 0.0;              // |lhs - prior_term - conditional_term|
};

/// Checks the exact decomposition KL(P(x,z)||Q(x,z)) =
/// KL(P(z)||Q(z)) + E_z KL(P(x|z)||Q(x|z)) with every term in closed form.
KlDecomposition kl_decomposition_check(const LinearGaussianModel& p,
                                       const LinearGaussianModel& q);

/// Mean pairwise distance between cluster centroids divided by the mean
/// distance of points to their own centroid. Requires >= 2 clusters; a
/// degenerate all-singleton/zero-spread clustering hits a 1e-12 floor.
double cluster_ratio(const Matrix& points, const std::vector<int>& labels);

} // namespace lpl
