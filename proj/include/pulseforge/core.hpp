#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "pulseforge/errors.hpp"

namespace pulseforge {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Below this rotation angle the axis of an SU(2) element cannot be
// recovered reliably in double precision.
inline constexpr double kAngleFloor = 1e-9;

// Sign convention for the cos(2*Phi) branch reconstruction.
//   PaperLiteral: positive square root everywhere.
//   Signed: the sign may flip at interior saturation events so that the
//           control stays continuous across them.
enum class BranchMode { PaperLiteral, Signed };

struct ModelParams {
  double h = 1.0;              // drive-frame splitting (rad per unit time)
  double tol_quad = 1e-10;     // absolute quadrature tolerance
  double tol_verify = 1e-8;    // oracle comparison tolerance
  double eps_singular = 1e-3;  // half-width of removable-singularity windows (tau units)
  BranchMode branch = BranchMode::PaperLiteral;

  // Throws InvalidParameter on a nonpositive tolerance, or on h <= 0
  // unless the zero-splitting mode is explicitly allowed.
  void validate(bool allow_zero_splitting = false) const;
};

// Strictly increasing samples of dimensionless time tau = h*t.
struct TimeGrid {
  std::vector<double> tau;

  // Nodes at integer multiples of dtau covering [tau_min, tau_max].
  // Guarantees an exact tau = 0 node whenever the range spans zero.
  static TimeGrid uniform(double tau_min, double tau_max, double dtau);
  static TimeGrid uniform_n(double tau_min, double tau_max, std::size_t n);

  std::size_t size() const { return tau.size(); }
  bool empty() const { return tau.empty(); }
  double front() const { return tau.front(); }
  double back() const { return tau.back(); }
  double operator[](std::size_t i) const { return tau[i]; }

  bool is_uniform(double rel_tol = 1e-9) const;
  double spacing() const;  // nominal spacing; GridTooCoarse if not uniform
  // Index of the exact zero node, -1 when absent.
  std::ptrdiff_t index_of_zero() const;
  // Nearest node index for a tau value inside the range.
  std::size_t nearest_index(double t) const;

  void validate() const;  // strictly increasing, nonempty
};

// SU(2) evolution operator stored as its first column:
//   U = [[u11, -conj(u21)], [u21, conj(u11)]],  |u11|^2 + |u21|^2 = 1.
struct Unitary2 {
  Complex u11{1.0, 0.0};
  Complex u21{0.0, 0.0};

  // | |u11|^2 + |u21|^2 - 1 |, which is also the sup-norm defect of
  // U^dag U - I for this parametrization.
  double norm_defect() const;
};

Unitary2 compose(const Unitary2& u, const Unitary2& v);  // matrix product U*V
Unitary2 dagger(const Unitary2& u);

// 1 - |tr(U^dag V)|/2. Zero iff U = V up to global phase.
double infidelity(const Unitary2& u, const Unitary2& v);

double unitarity_defect(const Unitary2& u);

struct RotationSpec {
  std::array<double, 3> axis{0.0, 0.0, 0.0};
  double angle = 0.0;           // theta in [0, 2*pi]
  bool axis_determinate = false;
};

// Decompose U = exp(-i*theta*(n.sigma)/2). The axis is flagged
// indeterminate when theta (mod 2*pi) is below kAngleFloor.
RotationSpec axis_angle(const Unitary2& u);

// exp(-i*(vx*sx + vy*sy + vz*sz)/2), exactly unitary by construction.
Unitary2 su2_exponential(double vx, double vy, double vz);

Unitary2 from_axis_angle(const std::array<double, 3>& axis, double theta);
Unitary2 x_rotation(double theta);
Unitary2 y_rotation(double theta);
Unitary2 z_rotation(double theta);

}  // namespace pulseforge
