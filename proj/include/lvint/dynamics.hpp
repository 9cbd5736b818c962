#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lvint/integrals.hpp"
#include "lvint/poisson.hpp"

namespace lvint {

/// Right-hand side of the quadratic system: xdot_i = x_i * sum_j A_ij x_j.
/// The component sum of the field vanishes identically (A is skew).
std::vector<double> vector_field(const SystemSpec& spec, std::span<const double> state);

/// Sampled solution of an initial value problem together with the relative
/// deviation of every monitored first integral.
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<std::vector<double>> states;        // states[sample][coordinate]
  std::vector<std::string> integral_names;        // K0.., H1.., and C for odd n
  std::vector<std::vector<double>> integral_values;  // [sample][integral]
  std::vector<std::vector<double>> drifts;           // |I - I0| / max(1, |I0|)
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;

  double max_drift() const;
  double max_drift(std::size_t integral) const;
};

/// Generic adaptive Dormand-Prince 5(4) driver.  Steps are clamped so that
/// every requested sample time is hit exactly; sample_times must be strictly
/// monotone (increasing or decreasing).  Returns the states at the samples.
using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;
std::vector<std::vector<double>> integrate_ode(const OdeRhs& rhs, std::vector<double> y0,
                                               std::span<const double> sample_times, double tol,
                                               std::size_t* accepted = nullptr,
                                               std::size_t* rejected = nullptr);

/// Integrates LV(n,k) from x0 over [0, t_end] at the given tolerance
/// (tol in [1e-14, 1e-3]) and monitors every first integral of the family,
/// plus the Casimir when n is odd.  At least min_samples+1 sample points are
/// recorded.  Trajectories that leave the representable range or approach a
/// coordinate hyperplane below 1e-300 raise domain_error.
TrajectoryRecord integrate(const SystemSpec& spec, std::vector<double> x0, double t_end,
                           double tol, int min_samples = 100);

}  // namespace lvint
