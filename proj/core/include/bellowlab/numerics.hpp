#pragma once

#include <cstdint>
#include <random>

namespace bellowlab::numerics {

/// Standard normal CDF via erfc; accurate to ~1e-15 over the useful range.
double normal_cdf(double z);

/// Upper tail of the standard normal, 1 - normal_cdf(z), without
/// cancellation for large z.
double normal_sf(double z);

/// Regularized lower incomplete gamma P(a, x) by its power series.
/// Converges quickly for x < a + 1.
double gamma_p_series(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) by Lentz's continued
/// fraction. Converges quickly for x >= a + 1.
double gamma_q_contfrac(double a, double x);

/// P(a, x) choosing series or continued fraction by region; the two
/// routes agree to better than 1e-12 near the crossover.
double regularized_gamma_p(double a, double x);

/// Survival function of the chi-square distribution with df degrees of
/// freedom: Q(df/2, x/2).
double chi_square_sf(double x, int df);

/// Kolmogorov asymptotic tail Q(lambda) = 2 * sum_{k>=1} (-1)^{k-1}
/// exp(-2 k^2 lambda^2), clamped to [0, 1].
double kolmogorov_q(double lambda);

/// Deterministic standard normal sampler: Box-Muller over a seeded
/// mt19937_64 stream. std::normal_distribution is avoided on purpose, its
/// output is not pinned down by the standard.
class GaussianSampler {
public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}
  double next();

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// splitmix64 step; used to derive independent per-trial seeds from one
/// experiment seed.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace bellowlab::numerics
