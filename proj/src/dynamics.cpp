#include "lvint/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lvint {

std::vector<double> vector_field(const SystemSpec& spec, std::span<const double> state) {
  if (static_cast<int>(state.size()) != spec.n)
    throw std::invalid_argument("vector_field: state dimension mismatch");
  for (double v : state)
    if (!std::isfinite(v)) throw std::invalid_argument("vector_field: non-finite state");
  const SkewToeplitz a = structure_matrix(spec);
  std::vector<double> rhs(spec.n, 0.0);
  for (int i = 0; i < spec.n; ++i) {
    double interaction = 0.0;
    for (int j = 0; j < spec.n; ++j) interaction += a.entry(i, j) * state[j];
    rhs[i] = state[i] * interaction;
  }
  return rhs;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// Difference between the 5th and embedded 4th order weights.
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;

}  // namespace

std::vector<std::vector<double>> integrate_ode(const OdeRhs& rhs, std::vector<double> y0,
                                               std::span<const double> sample_times, double tol,
                                               std::size_t* accepted, std::size_t* rejected) {
  if (sample_times.size() < 2)
    throw std::invalid_argument("integrate_ode: need at least two sample times");
  const std::size_t n = y0.size();
  const double direction = sample_times[1] > sample_times[0] ? 1.0 : -1.0;
  for (std::size_t s = 1; s < sample_times.size(); ++s)
    if ((sample_times[s] - sample_times[s - 1]) * direction <= 0)
      throw std::invalid_argument("integrate_ode: sample times must be strictly monotone");

  std::vector<std::vector<double>> samples;
  samples.reserve(sample_times.size());
  samples.push_back(y0);

  std::vector<double> y = std::move(y0), ynew(n), yerr(n), work(n);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  double t = sample_times[0];
  rhs(t, y, k1);

  // Conservative first step; the controller adapts within a few steps.
  double k1_norm = 0, y_norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    k1_norm += k1[i] * k1[i];
    y_norm += y[i] * y[i];
  }
  double h = direction * std::min(1e-2, k1_norm > 0 ? 0.01 * std::sqrt(y_norm / k1_norm) : 1e-3);
  if (h == 0) h = direction * 1e-6;

  std::size_t acc = 0, rej = 0;
  for (std::size_t target = 1; target < sample_times.size(); ++target) {
    const double t_target = sample_times[target];
    while ((t_target - t) * direction > 0) {
      if (std::abs(h) < 16 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
        throw domain_error("integrate_ode: step size underflow at t = " + std::to_string(t));
      bool clipped = false;
      if ((t + h - t_target) * direction > 0) {
        h = t_target - t;
        clipped = true;
      }

      for (std::size_t i = 0; i < n; ++i) work[i] = y[i] + h * kA21 * k1[i];
      rhs(t + kC2 * h, work, k2);
      for (std::size_t i = 0; i < n; ++i) work[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
      rhs(t + kC3 * h, work, k3);
      for (std::size_t i = 0; i < n; ++i)
        work[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
      rhs(t + kC4 * h, work, k4);
      for (std::size_t i = 0; i < n; ++i)
        work[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
      rhs(t + kC5 * h, work, k5);
      for (std::size_t i = 0; i < n; ++i)
        work[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] +
                              kA65 * k5[i]);
      rhs(t + h, work, k6);
      for (std::size_t i = 0; i < n; ++i)
        ynew[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] + kB6 * k6[i]);
      rhs(t + h, ynew, k7);

      double err = 0;
      for (std::size_t i = 0; i < n; ++i) {
        yerr[i] = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] + kE6 * k6[i] +
                       kE7 * k7[i]);
        const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        const double ratio = yerr[i] / scale;
        err += ratio * ratio;
      }
      err = std::sqrt(err / static_cast<double>(n));
      if (!std::isfinite(err))
        throw domain_error("integrate_ode: state overflow at t = " + std::to_string(t));

      if (err <= 1.0) {
        t = clipped ? t_target : t + h;
        y.swap(ynew);
        k1.swap(k7);  // first-same-as-last
        ++acc;
      } else {
        ++rej;
      }
      const double factor =
          err == 0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
      h *= factor;
    }
    samples.push_back(y);
  }
  if (accepted) *accepted = acc;
  if (rejected) *rejected = rej;
  return samples;
}

double TrajectoryRecord::max_drift() const {
  double worst = 0;
  for (const auto& row : drifts)
    for (double d : row) worst = std::max(worst, d);
  return worst;
}

double TrajectoryRecord::max_drift(std::size_t integral) const {
  double worst = 0;
  for (const auto& row : drifts) worst = std::max(worst, row.at(integral));
  return worst;
}

TrajectoryRecord integrate(const SystemSpec& spec, std::vector<double> x0, double t_end,
                           double tol, int min_samples) {
  if (static_cast<int>(x0.size()) != spec.n)
    throw std::invalid_argument("integrate: initial state dimension mismatch");
  for (double v : x0)
    if (!std::isfinite(v)) throw std::invalid_argument("integrate: non-finite initial state");
  if (!(t_end > 0)) throw std::invalid_argument("integrate: t_end must be positive");
  if (!(tol >= 1e-14 && tol <= 1e-3))
    throw std::invalid_argument("integrate: tol must lie in [1e-14, 1e-3]");
  if (min_samples < 1) throw std::invalid_argument("integrate: min_samples must be >= 1");

  const IntegralFamily family = integral_family(spec);
  std::vector<const LaurentPolynomial*> monitored;
  TrajectoryRecord record;
  record.integral_names = family.labels();
  for (const LaurentPolynomial& p : family.polynomial) monitored.push_back(&p);
  for (const RationalIntegral& h : family.rational) monitored.push_back(&h.poly);
  LaurentPolynomial casimir_poly(spec.n);
  if (spec.n % 2 == 1) {
    casimir_poly = casimir(spec);
    monitored.push_back(&casimir_poly);
    record.integral_names.push_back("C");
  }

  const int samples = std::max(min_samples, 100);
  std::vector<double> times(samples + 1);
  for (int s = 0; s <= samples; ++s)
    times[s] = t_end * static_cast<double>(s) / static_cast<double>(samples);

  const OdeRhs rhs = [&spec](double, std::span<const double> y, std::span<double> dydt) {
    const std::vector<double> f = vector_field(spec, y);
    std::copy(f.begin(), f.end(), dydt.begin());
  };
  record.states = integrate_ode(rhs, std::move(x0), times, tol, &record.accepted_steps,
                                &record.rejected_steps);
  record.times = std::move(times);

  for (const auto& state : record.states)
    for (double v : state)
      if (v != 0 && std::abs(v) < 1e-300)
        throw domain_error("integrate: a coordinate dropped below 1e-300; Laurent "
                           "integrals are singular near coordinate hyperplanes");

  record.integral_values.resize(record.states.size());
  record.drifts.resize(record.states.size());
  std::vector<double> reference;
  for (std::size_t s = 0; s < record.states.size(); ++s) {
    auto& values = record.integral_values[s];
    values.reserve(monitored.size());
    for (const LaurentPolynomial* poly : monitored)
      values.push_back(poly->evaluate_double(record.states[s]));
    if (s == 0) reference = values;
    auto& drift = record.drifts[s];
    drift.reserve(values.size());
    for (std::size_t q = 0; q < values.size(); ++q)
      drift.push_back(std::abs(values[q] - reference[q]) / std::max(1.0, std::abs(reference[q])));
  }
  return record;
}

}  // namespace lvint
