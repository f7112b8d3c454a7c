#include "topress/material.hpp"

#include <cmath>
#include <string>

#include "topress/common.hpp"

namespace topress {

namespace {

void require(bool ok, const char* what, double value) {
  if (!ok) throw InvalidArgument(std::string(what) + " (got " + std::to_string(value) + ")");
}

}  // namespace

double FlowModel::drainage_magnitude() const noexcept {
  const double s = std::log(r) / dels;
  return s * s * ks();
}

void FlowModel::validate() const {
  require(kv > 0.0, "flow: kv must be > 0", kv);
  require(epsf > 0.0 && epsf <= 1.0, "flow: epsf must lie in (0, 1]", epsf);
  require(eta > 0.0 && eta < 1.0, "flow: eta must lie in (0, 1)", eta);
  require(beta > 0.0, "flow: beta must be > 0", beta);
  require(r > 0.0 && r < 1.0, "flow: r must lie in (0, 1)", r);
  require(dels > 0.0, "flow: dels must be > 0", dels);
}

void ElasticModel::validate() const {
  require(e1 > 0.0, "material: e1 must be > 0", e1);
  require(emin > 0.0 && emin < e1, "material: emin must lie in (0, e1)", emin);
  require(nu >= 0.0 && nu < 0.5, "material: nu must lie in [0, 0.5)", nu);
  require(penal >= 1.0, "material: penal must be >= 1", penal);
}

double heaviside(double x, double beta, double eta) {
  const double t = std::tanh(beta * eta);
  return (t + std::tanh(beta * (x - eta))) / (t + std::tanh(beta * (1.0 - eta)));
}

double heaviside_derivative(double x, double beta, double eta) {
  // sech² instead of 1 - tanh², which cancels in the flat tails.
  const double ch = std::cosh(beta * (x - eta));
  return beta / (ch * ch) / (std::tanh(beta * eta) + std::tanh(beta * (1.0 - eta)));
}

namespace {

// 1 - H(x) without cancellation near x = 1.
double heaviside_complement(double x, double beta, double eta) {
  const double t1 = std::tanh(beta * (1.0 - eta));
  return (t1 - std::tanh(beta * (x - eta))) / (std::tanh(beta * eta) + t1);
}

}  // namespace

double flow_coefficient(double x, const FlowModel& m) {
  // Kv (1 - H) + Ks H, equal to Kv (1 - (1 - eps) H).
  const double h = heaviside(x, m.beta, m.eta);
  return m.kv * heaviside_complement(x, m.beta, m.eta) + m.ks() * h;
}

double flow_coefficient_derivative(double x, const FlowModel& m) {
  return -(m.kv - m.ks()) * heaviside_derivative(x, m.beta, m.eta);
}

double drainage_coefficient(double x, const FlowModel& m) {
  return m.drainage_magnitude() * heaviside(x, m.beta, m.eta);
}

double drainage_coefficient_derivative(double x, const FlowModel& m) {
  return m.drainage_magnitude() * heaviside_derivative(x, m.beta, m.eta);
}

double simp_modulus(double x, const ElasticModel& m) {
  return m.emin + std::pow(x, m.penal) * (m.e1 - m.emin);
}

double simp_derivative(double x, const ElasticModel& m) {
  return m.penal * std::pow(x, m.penal - 1.0) * (m.e1 - m.emin);
}

}  // namespace topress
