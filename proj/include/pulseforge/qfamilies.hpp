#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pulseforge/core.hpp"

namespace pulseforge::qfamilies {

// Generator signal sample: q and its first two derivatives with respect
// to dimensionless time tau = h*t.
struct QSample {
  double tau = 0.0;
  double q = 0.0;
  double q1 = 0.0;  // dq/dtau
  double q2 = 0.0;  // d2q/dtau2
};

// A generator family. The evaluator supplies (q, q', q'') analytically.
// Optional callbacks:
//   closed_form    - the family's printed control expression J/h as a
//                    cross-check oracle (throws SingularPoint close to
//                    its removable singularities, NoClosedForm absent);
//   envelope_gap   - cancellation-free evaluation of 1 - q^2 - q1^2,
//                    used to keep the synthesized control accurate near
//                    saturation.
struct QFamily {
  std::string name;
  std::map<std::string, double> params;
  std::function<QSample(double)> eval;
  std::function<double(double)> closed_form;
  std::function<double(double)> envelope_gap;
  bool even_parity = false;
  bool identically_saturated = false;
  bool best_effort_derivatives = false;  // sampled-data adapters
  std::optional<double> period;
  std::optional<double> tail_constant;   // large-tau J/h asymptote, when known

  QSample operator()(double tau) const { return eval(tau); }
  bool has_closed_form() const { return static_cast<bool>(closed_form); }
  bool has_envelope_gap() const { return static_cast<bool>(envelope_gap); }
};

// q = exp(-(2/a) sinh^2(sqrt(a) tau / 2)), a <= 2. a = 0 is the Gaussian
// limit exp(-tau^2/2); a < 0 continues through sinh(ix) = i sin(x) and is
// periodic. Throws InvalidParameter for a > 2.
QFamily family_sinh_exp(double a);

// q = [exp(-tau^2/2) + b cos(tau)] / (1 + b), b > -1.
QFamily family_gauss_cos(double b);

// q = 1 - tanh^2(a tau) / (2 a^2), a > 0.
QFamily family_tanh(double a);

// q = (1/a) tan(arctan(a) - (2a/(1+a^2)) sin^2(tau/2)), a > 0. Period 2*pi.
QFamily family_arctan_trig(double a);

// q = cos(tau): the saturated choice, |z| = 1 identically, J = 0.
QFamily family_cos();

// Cubic-spline adapter for user-supplied samples. Derivative accuracy is
// best-effort; downstream validation gates are relaxed accordingly.
QFamily family_from_samples(std::span<const double> tau, std::span<const double> q);

// Registry used by the CLI: name + parameter map.
QFamily make_family(const std::string& name, const std::map<std::string, double>& params);
std::vector<std::string> builtin_family_names();

struct InitialConditionReport {
  double res_q = 0.0;   // |q(0) - 1|
  double res_q1 = 0.0;  // |q'(0)|
  double res_q2 = 0.0;  // |q''(0) + 1|
  bool pass = false;
};

// Residuals of q(0) = 1, q'(0) = 0, q''(0) = -1; pass iff all < 1e-9.
InitialConditionReport validate_initial_conditions(const QFamily& f);

struct ValidityReport {
  std::vector<std::pair<double, double>> intervals;  // where 1 - q^2 - q1^2 >= 0
  std::vector<double> saturation_events;             // interior zeros of the gap
  bool localized = false;
  bool positive = false;
  bool bounded = false;
  bool identically_saturated = false;
};

// Scans g = 1 - q^2 - q1^2 over the grid range (200 scan points per unit
// tau, boundaries refined by bisection to relative 1e-12). Throws
// DomainEmpty when no interval of positive length survives.
ValidityReport validity_domain(const QFamily& f, const TimeGrid& grid);

// Evaluates the family's printed control expression. Throws NoClosedForm
// or SingularPoint (within eps of a removable singularity).
double closed_form_J(const QFamily& f, double tau);

// Grid evaluation kernels. sample_grid runs the evaluator across nodes in
// parallel; sample_grid_serial is the reference loop kept for testing.
std::vector<QSample> sample_grid(const QFamily& f, const TimeGrid& grid);
std::vector<QSample> sample_grid_serial(const QFamily& f, const TimeGrid& grid);

}  // namespace pulseforge::qfamilies
