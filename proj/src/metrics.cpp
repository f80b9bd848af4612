#include "lpl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "lpl/csv.hpp"
#include "lpl/errors.hpp"
#include "lpl/linalg.hpp"
#include "lpl/rng.hpp"

namespace lpl {

std::vector<double> singular_values(const Matrix& codes) {
    const std::size_t n = codes.rows();
    const std::size_t d = codes.cols();
    if (n < d) {
        throw InsufficientDataError("singular_values: need at least d=" + std::to_string(d) +
                                    " rows, got " + std::to_string(n));
    }
    require_finite(codes, "singular_values");

    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = codes.row(i);
        for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
    }
    for (std::size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(n);

    // Covariance of the centered rows with the unbiased 1/(n-1) scale, so the
    // square roots of its eigenvalues estimate per-axis standard deviations.
    Matrix cov(d, d);
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = codes.row(i);
        for (std::size_t a = 0; a < d; ++a) {
            const double ca = row[a] - mean[a];
            for (std::size_t b = a; b < d; ++b) cov(a, b) += ca * (row[b] - mean[b]);
        }
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            cov(a, b) /= denom;
            cov(b, a) = cov(a, b);
        }

    std::vector<double> eig = symmetric_eigenvalues(cov);
    std::vector<double> nu(d);
    for (std::size_t i = 0; i < d; ++i) nu[i] = std::sqrt(std::max(eig[i], 0.0));
    return nu;
}

double pag_score_from_variances(const std::vector<double>& variances, double sigma_sq) {
    if (sigma_sq <= 0.0) throw DomainError("pag_score: sigma must be positive");
    double sum = 0.0;
    for (double v : variances) {
        if (v < 0.0) throw DomainError("pag_score: negative variance");
        if (v == 0.0) {
            throw DomainError("pag_score: zero singular value, divergence is infinite "
                              "(degenerate covariance)");
        }
        const double ratio = v / sigma_sq;
        sum += ratio - std::log(ratio) - 1.0;
    }
    return 0.5 * sum;
}

double pag_score(const std::vector<double>& nu, double sigma) {
    if (sigma <= 0.0) throw DomainError("pag_score: sigma must be positive");
    std::vector<double> variances(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) variances[i] = nu[i] * nu[i];
    return pag_score_from_variances(variances, sigma * sigma);
}

PagReport pag_from_codes(const LatentCodeSet& codes, double sigma,
                         const std::string& spectrum_path) {
    PagReport report;
    report.singular_values = singular_values(codes.codes);
    report.sigma = sigma;
    report.pag = pag_score(report.singular_values, sigma);
    report.n = codes.count();
    if (!spectrum_path.empty()) write_spectrum_csv(report, spectrum_path);
    return report;
}

void write_spectrum_csv(const PagReport& report, const std::string& path) {
    for (std::size_t i = 0; i < report.singular_values.size(); ++i) {
        append_csv(path, "index,singular_value",
                   {static_cast<double>(i), report.singular_values[i]});
    }
}

void write_pag_csv(const PagReport& report, const std::string& path) {
    append_csv(path, "n,d,sigma,pag",
               {static_cast<double>(report.n), static_cast<double>(report.dim()), report.sigma,
                report.pag});
}

double kl_diag_gaussian(const std::vector<double>& mu0, const std::vector<double>& var0,
                        const std::vector<double>& mu1, const std::vector<double>& var1) {
    const std::size_t d = mu0.size();
    if (var0.size() != d || mu1.size() != d || var1.size() != d) {
        throw ShapeError("kl_diag_gaussian: dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (var0[i] <= 0.0 || var1[i] <= 0.0) {
            throw DomainError("kl_diag_gaussian: variances must be positive");
        }
        const double diff = mu1[i] - mu0[i];
        sum += var0[i] / var1[i] + diff * diff / var1[i] - 1.0 + std::log(var1[i] / var0[i]);
    }
    return 0.5 * sum;
}

double kl_full_gaussian(const std::vector<double>& mu0, const Matrix& cov0,
                        const std::vector<double>& mu1, const Matrix& cov1) {
    const std::size_t k = mu0.size();
    if (cov0.rows() != k || cov0.cols() != k || mu1.size() != k || cov1.rows() != k ||
        cov1.cols() != k) {
        throw ShapeError("kl_full_gaussian: dimension mismatch");
    }
    const Matrix l1 = cholesky(cov1);
    const Matrix x = cholesky_solve_matrix(l1, cov0); // cov1^-1 * cov0
    double trace = 0.0;
    for (std::size_t i = 0; i < k; ++i) trace += x(i, i);

    std::vector<double> diff(k);
    for (std::size_t i = 0; i < k; ++i) diff[i] = mu1[i] - mu0[i];
    const std::vector<double> solved = cholesky_solve(l1, diff);
    double quad = 0.0;
    for (std::size_t i = 0; i < k; ++i) quad += diff[i] * solved[i];

    const Matrix l0 = cholesky(cov0);
    return 0.5 * (trace + quad - static_cast<double>(k) + cholesky_logdet(l1) -
                  cholesky_logdet(l0));
}

KlMcResult kl_mc_estimate(const McSampler& sample_p, const LogDensity& log_p,
                          const LogDensity& log_q, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) throw ConfigError("kl_mc_estimate: n_samples must be positive");
    std::mt19937_64 engine = make_engine(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const std::vector<double> z = sample_p(engine);
        const double v = log_p(z) - log_q(z);
        sum += v;
        sum_sq += v * v;
    }
    KlMcResult result;
    result.n_samples = n_samples;
    result.estimate = sum / static_cast<double>(n_samples);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(n_samples) - result.estimate * result.estimate);
    result.std_error = std::sqrt(var / static_cast<double>(n_samples));
    return result;
}

namespace {

void validate_model(const LinearGaussianModel& m, const char* name) {
    const std::size_t d = m.latent_dim();
    const std::size_t out = m.data_dim();
    if (d == 0 || out == 0) throw ConfigError(std::string(name) + ": empty model");
    if (m.prior_var.size() != d || m.noise_var.size() != out || m.transform.rows() != out ||
        m.transform.cols() != d) {
        throw ShapeError(std::string(name) + ": inconsistent dimensions");
    }
    for (double v : m.prior_var)
        if (v <= 0.0) throw DomainError(std::string(name) + ": prior variances must be positive");
    for (double v : m.noise_var)
        if (v <= 0.0) throw DomainError(std::string(name) + ": noise variances must be positive");
}

/// Joint mean and covariance of (z, x) for x = A z + b + noise.
void joint_gaussian(const LinearGaussianModel& m, std::vector<double>& mean, Matrix& cov) {
    const std::size_t d = m.latent_dim();
    const std::size_t out = m.data_dim();
    const std::size_t k = d + out;
    mean.assign(k, 0.0);
    for (std::size_t i = 0; i < d; ++i) mean[i] = m.prior_mean[i];
    for (std::size_t j = 0; j < out; ++j) {
        double v = m.offset[j];
        for (std::size_t i = 0; i < d; ++i) v += m.transform(j, i) * m.prior_mean[i];
        mean[d + j] = v;
    }

    cov = Matrix(k, k);
    for (std::size_t i = 0; i < d; ++i) cov(i, i) = m.prior_var[i];
    // cross block: Cov(z, x) = Dz * A^T
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < out; ++j) {
            const double v = m.prior_var[i] * m.transform(j, i);
            cov(i, d + j) = v;
            cov(d + j, i) = v;
        }
    }
    // data block: A * Dz * A^T + Dx
    for (std::size_t a = 0; a < out; ++a) {
        for (std::size_t b = 0; b < out; ++b) {
            double v = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                v += m.transform(a, i) * m.prior_var[i] * m.transform(b, i);
            }
            if (a == b) v += m.noise_var[a];
            cov(d + a, d + b) = v;
        }
    }
}

} // namespace

KlDecomposition kl_decomposition_check(const LinearGaussianModel& p,
                                       const LinearGaussianModel& q) {
    validate_model(p, "kl_decomposition_check: P");
    validate_model(q, "kl_decomposition_check: Q");
    if (p.latent_dim() != q.latent_dim() || p.data_dim() != q.data_dim()) {
        throw ShapeError("kl_decomposition_check: P and Q dimensions differ");
    }
    const std::size_t d = p.latent_dim();
    const std::size_t out = p.data_dim();

    KlDecomposition result;

    std::vector<double> mean_p, mean_q;
    Matrix cov_p, cov_q;
    joint_gaussian(p, mean_p, cov_p);
    joint_gaussian(q, mean_q, cov_q);
    result.lhs = kl_full_gaussian(mean_p, cov_p, mean_q, cov_q);

    result.prior_term = kl_diag_gaussian(p.prior_mean, p.prior_var, q.prior_mean, q.prior_var);

    // E_{z~P} KL(P(x|z) || Q(x|z)) in closed form: the conditional means
    // differ by D z + db with D = A_p - A_q, and z is Gaussian under P.
    double term = 0.0;
    for (std::size_t j = 0; j < out; ++j) {
        term += p.noise_var[j] / q.noise_var[j] - 1.0 + std::log(q.noise_var[j] / p.noise_var[j]);
        double mean_diff = p.offset[j] - q.offset[j];
        double var_diff = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double dji = p.transform(j, i) - q.transform(j, i);
            mean_diff += dji * p.prior_mean[i];
            var_diff += dji * dji * p.prior_var[i];
        }
        term += (mean_diff * mean_diff + var_diff) / q.noise_var[j];
    }
    result.conditional_term = 0.5 * term;

    result.gap = std::abs(result.lhs - result.prior_term - result.conditional_term);
    return result;
}

double cluster_ratio(const Matrix& points, const std::vector<int>& labels) {
    const std::size_t n = points.rows();
    const std::size_t dim = points.cols();
    if (labels.size() != n) throw ShapeError("cluster_ratio: one label per point required");
    if (n == 0) throw InsufficientDataError("cluster_ratio: empty point set");

    std::map<int, std::pair<std::vector<double>, std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        auto& [sum, count] = groups[labels[i]];
        if (sum.empty()) sum.assign(dim, 0.0);
        const double* row = points.row(i);
        for (std::size_t j = 0; j < dim; ++j) sum[j] += row[j];
        ++count;
    }
    if (groups.size() < 2) {
        throw DomainError("cluster_ratio: undefined for fewer than two clusters");
    }

    std::vector<std::vector<double>> centroids;
    std::map<int, std::size_t> index_of;
    for (auto& [label, entry] : groups) {
        auto& [sum, count] = entry;
        for (double& v : sum) v /= static_cast<double>(count);
        index_of[label] = centroids.size();
        centroids.push_back(sum);
    }

    double between = 0.0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < centroids.size(); ++a) {
        for (std::size_t b = a + 1; b < centroids.size(); ++b) {
            double sq = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                const double diff = centroids[a][j] - centroids[b][j];
                sq += diff * diff;
            }
            between += std::sqrt(sq);
            ++pairs;
        }
    }
    between /= static_cast<double>(pairs);

    double within = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double>& c = centroids[index_of[labels[i]]];
        const double* row = points.row(i);
        double sq = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double diff = row[j] - c[j];
            sq += diff * diff;
        }
        within += std::sqrt(sq);
    }
    within /= static_cast<double>(n);
    within = std::max(within, 1e-12);

    return between / within;
}

} // namespace lpl
