#pragma once

namespace topress {

/// Parameters of the Darcy-with-drainage pressure model. The flow and drainage
/// coefficients share one projection step (eta, beta).
struct FlowModel {
  double kv = 1.0;     ///< void-phase flow coefficient
  double epsf = 1e-7;  ///< flow contrast Ks/Kv
  double eta = 0.2;    ///< projection step position
  double beta = 10.0;  ///< projection step slope
  double r = 0.1;      ///< pressure drop ratio p(dels)/p_in
  double dels = 2.0;   ///< penetration depth, element lengths

  double ks() const noexcept { return epsf * kv; }
  /// Drainage magnitude Ds = (ln r / dels)^2 * Ks.
  double drainage_magnitude() const noexcept;

  /// Throws InvalidArgument if any field is out of range.
  void validate() const;
};

/// Modified SIMP interpolation parameters.
struct ElasticModel {
  double e1 = 1.0;
  double emin = 1e-5;
  double nu = 0.3;
  double penal = 3.0;

  void validate() const;
};

/// Smooth Heaviside projection, H(0) = 0 and H(1) = 1.
double heaviside(double x, double beta, double eta);
/// dH/dx.
double heaviside_derivative(double x, double beta, double eta);

/// K(x) = Kv (1 - (1 - eps) H(x)).
double flow_coefficient(double x, const FlowModel& model);
double flow_coefficient_derivative(double x, const FlowModel& model);

/// D(x) = Ds H(x); the external pressure of the drainage term is zero.
double drainage_coefficient(double x, const FlowModel& model);
double drainage_coefficient_derivative(double x, const FlowModel& model);

/// E(x) = Emin + x^p (E1 - Emin).
double simp_modulus(double x, const ElasticModel& model);
double simp_derivative(double x, const ElasticModel& model);

}  // namespace topress
