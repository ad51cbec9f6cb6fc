#pragma once

#include <stdexcept>

namespace sentinet {

/// Weibull scale (rate-like, 1/s) and shape. Both strictly positive.
class WeibullParams {
 public:
  WeibullParams(double scale, double shape);

  double scale() const noexcept { return scale_; }
  double shape() const noexcept { return shape_; }

  friend bool operator==(const WeibullParams&, const WeibullParams&) = default;

 private:
  double scale_;
  double shape_;
};

/// Hazard evaluated at t = 0 with shape < 1 diverges.
class HazardSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inverse-CDF draw: (1/scale) * (ln(1/u))^(1/shape). `u` must lie in (0, 1).
double sample_sleep_time(const WeibullParams& params, double u);

/// (shape * scale) * (t * scale)^(shape - 1).
double hazard_rate(const WeibullParams& params, double t);

/// Same shape, scale replaced by hazard_rate(params, t).
WeibullParams update_probe_rate(const WeibullParams& params, double t);

double weibull_cdf(const WeibullParams& params, double t);
double weibull_quantile(const WeibullParams& params, double p);
double weibull_mean(const WeibullParams& params);

}  // namespace sentinet
