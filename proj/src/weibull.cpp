#include "sentinet/weibull.hpp"

#include <cmath>
#include <string>

namespace sentinet {

WeibullParams::WeibullParams(double scale, double shape) : scale_(scale), shape_(shape) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("weibull scale must be positive and finite, got " + std::to_string(scale));
  }
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::invalid_argument("weibull shape must be positive and finite, got " + std::to_string(shape));
  }
}

double sample_sleep_time(const WeibullParams& params, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("uniform draw must lie in (0, 1)");
  }
  return std::pow(std::log(1.0 / u), 1.0 / params.shape()) / params.scale();
}

double hazard_rate(const WeibullParams& params, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("hazard time must be non-negative");
  }
  const double beta = params.shape();
  const double lambda = params.scale();
  if (t == 0.0 && beta < 1.0) {
    throw HazardSingularity("hazard diverges at t = 0 for shape < 1");
  }
  return (beta * lambda) * std::pow(t * lambda, beta - 1.0);
}

WeibullParams update_probe_rate(const WeibullParams& params, double t) {
  return WeibullParams(hazard_rate(params, t), params.shape());
}

double weibull_cdf(const WeibullParams& params, double t) {
  if (t <= 0.0) return 0.0;
  return -std::expm1(-std::pow(params.scale() * t, params.shape()));
}

double weibull_quantile(const WeibullParams& params, double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile probability must lie in [0, 1)");
  }
  return std::pow(-std::log1p(-p), 1.0 / params.shape()) / params.scale();
}

double weibull_mean(const WeibullParams& params) {
  return std::tgamma(1.0 + 1.0 / params.shape()) / params.scale();
}

}  // namespace sentinet
