#include "pulseforge/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace pulseforge {

void ModelParams::validate(bool allow_zero_splitting) const {
  if (!(tol_quad > 0.0) || !(tol_verify > 0.0) || !(eps_singular > 0.0)) {
    throw InvalidParameter("ModelParams: tolerances must be positive");
  }
  if (allow_zero_splitting) {
    if (h < 0.0) throw InvalidParameter("ModelParams: h must be >= 0");
  } else if (!(h > 0.0)) {
    throw InvalidParameter("ModelParams: h must be > 0 (zero-splitting mode is separate)");
  }
}

TimeGrid TimeGrid::uniform(double tau_min, double tau_max, double dtau) {
  if (!(dtau > 0.0)) throw InvalidParameter("TimeGrid: dtau must be > 0");
  if (!(tau_max > tau_min)) throw InvalidParameter("TimeGrid: tau_max must exceed tau_min");
  const auto i_lo = static_cast<long long>(std::ceil(tau_min / dtau - 1e-9));
  const auto i_hi = static_cast<long long>(std::floor(tau_max / dtau + 1e-9));
  if (i_hi < i_lo) throw InvalidParameter("TimeGrid: range shorter than dtau");
  TimeGrid g;
  g.tau.reserve(static_cast<std::size_t>(i_hi - i_lo + 1));
  for (long long i = i_lo; i <= i_hi; ++i) {
    g.tau.push_back(static_cast<double>(i) * dtau);
  }
  g.validate();
  return g;
}

TimeGrid TimeGrid::uniform_n(double tau_min, double tau_max, std::size_t n) {
  if (n < 2) throw InvalidParameter("TimeGrid: need at least 2 nodes");
  if (!(tau_max > tau_min)) throw InvalidParameter("TimeGrid: tau_max must exceed tau_min");
  TimeGrid g;
  g.tau.resize(n);
  const double d = (tau_max - tau_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g.tau[i] = tau_min + d * static_cast<double>(i);
  g.tau.back() = tau_max;
  g.validate();
  return g;
}

void TimeGrid::validate() const {
  if (tau.empty()) throw InvalidParameter("TimeGrid: empty");
  for (std::size_t i = 1; i < tau.size(); ++i) {
    if (!(tau[i] > tau[i - 1])) throw InvalidParameter("TimeGrid: samples must increase strictly");
  }
}

bool TimeGrid::is_uniform(double rel_tol) const {
  if (tau.size() < 2) return true;
  const double d0 = tau[1] - tau[0];
  for (std::size_t i = 1; i + 1 < tau.size(); ++i) {
    if (std::abs((tau[i + 1] - tau[i]) - d0) > rel_tol * std::max(1.0, std::abs(d0))) return false;
  }
  return true;
}

double TimeGrid::spacing() const {
  if (tau.size() < 2 || !is_uniform()) throw GridTooCoarse("TimeGrid: spacing undefined for non-uniform grid");
  return tau[1] - tau[0];
}

std::ptrdiff_t TimeGrid::index_of_zero() const {
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (std::abs(tau[i]) < 1e-15) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::size_t TimeGrid::nearest_index(double t) const {
  const auto it = std::lower_bound(tau.begin(), tau.end(), t);
  if (it == tau.begin()) return 0;
  if (it == tau.end()) return tau.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - tau.begin());
  return (t - tau[hi - 1] <= tau[hi] - t) ? hi - 1 : hi;
}

double Unitary2::norm_defect() const {
  return std::abs(std::norm(u11) + std::norm(u21) - 1.0);
}

Unitary2 compose(const Unitary2& u, const Unitary2& v) {
  Unitary2 w;
  w.u11 = u.u11 * v.u11 - std::conj(u.u21) * v.u21;
  w.u21 = u.u21 * v.u11 + std::conj(u.u11) * v.u21;
  return w;
}

Unitary2 dagger(const Unitary2& u) {
  Unitary2 w;
  w.u11 = std::conj(u.u11);
  w.u21 = -u.u21;
  return w;
}

double infidelity(const Unitary2& u, const Unitary2& v) {
  // tr(U^dag V) = 2*Re(w11) for w = U^dag V in this parametrization.
  const Unitary2 w = compose(dagger(u), v);
  return std::clamp(1.0 - std::abs(w.u11.real()), 0.0, 1.0);
}

double unitarity_defect(const Unitary2& u) { return u.norm_defect(); }

RotationSpec axis_angle(const Unitary2& u) {
  RotationSpec r;
  const double c = std::clamp(u.u11.real(), -1.0, 1.0);
  r.angle = 2.0 * std::acos(c);
  const double s = std::sin(0.5 * r.angle);  // >= 0 on [0, 2*pi]
  if (s < 0.5 * kAngleFloor) {
    r.axis_determinate = false;
    return r;
  }
  r.axis = {-u.u21.imag() / s, u.u21.real() / s, -u.u11.imag() / s};
  const double n = std::sqrt(r.axis[0] * r.axis[0] + r.axis[1] * r.axis[1] + r.axis[2] * r.axis[2]);
  if (n > 0.0) {
    for (double& x : r.axis) x /= n;
  }
  r.axis_determinate = true;
  return r;
}

Unitary2 su2_exponential(double vx, double vy, double vz) {
  const double theta = std::sqrt(vx * vx + vy * vy + vz * vz);
  Unitary2 u;
  if (theta == 0.0) return u;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta) / theta;
  u.u11 = Complex(c, -s * vz);
  u.u21 = Complex(s * vy, -s * vx);
  return u;
}

Unitary2 from_axis_angle(const std::array<double, 3>& axis, double theta) {
  return su2_exponential(axis[0] * theta, axis[1] * theta, axis[2] * theta);
}

Unitary2 x_rotation(double theta) { return su2_exponential(theta, 0.0, 0.0); }
Unitary2 y_rotation(double theta) { return su2_exponential(0.0, theta, 0.0); }
Unitary2 z_rotation(double theta) { return su2_exponential(0.0, 0.0, theta); }

}  // namespace pulseforge
