#include "finstrain/stress.hpp"

#include "finstrain/errors.hpp"

#include <algorithm>
#include <sstream>

namespace finstrain {

EnergyPotential::EnergyPotential(std::string name, Fn w)
    : name_(std::move(name)), w_(std::move(w)) {
  if (!w_)
    throw InvalidInput("energy potential '" + name_ + "' has no function");
}

EnergyPotential::EnergyPotential(std::string name, Fn w,
                                 std::array<Fn, 3> partials)
    : EnergyPotential(std::move(name), std::move(w)) {
  for (const auto &p : partials)
    if (!p)
      throw InvalidInput("energy potential '" + name_ +
                         "' has an empty partial derivative");
  partials_ = std::move(partials);
}

EnergyPotential EnergyPotential::quadratic_hencky(double lambda, double mu) {
  return EnergyPotential(
      "quadratic-hencky",
      [lambda, mu](double j, double k, double) {
        return 0.5 * lambda * j * j + mu * k;
      },
      {[lambda](double j, double, double) { return lambda * j; },
       [mu](double, double, double) { return mu; },
       [](double, double, double) { return 0.0; }});
}

EnergyPotential EnergyPotential::builtin(std::string_view name) {
  const auto zero = [](double, double, double) { return 0.0; };
  const auto one = [](double, double, double) { return 1.0; };
  if (name == "zero")
    return EnergyPotential("zero", zero, {zero, zero, zero});
  if (name == "j")
    return EnergyPotential(
        "j", [](double j, double, double) { return j; }, {one, zero, zero});
  if (name == "k")
    return EnergyPotential(
        "k", [](double, double k, double) { return k; }, {zero, one, zero});
  if (name == "l")
    return EnergyPotential(
        "l", [](double, double, double l) { return l; }, {zero, zero, one});
  if (name == "jk")
    return EnergyPotential(
        "jk", [](double j, double k, double) { return j * k; },
        {[](double, double k, double) { return k; },
         [](double j, double, double) { return j; }, zero});
  if (name == "quadratic-hencky")
    return quadratic_hencky();
  throw InvalidInput("unknown energy potential '" + std::string(name) +
                     "' (expected zero, j, k, l, jk or quadratic-hencky)");
}

double EnergyPotential::value(const TraceInvariants &inv) const {
  double w = 0.0;
  try {
    w = w_(inv.j, inv.k, inv.l);
  } catch (const std::exception &e) {
    throw PotentialError("energy potential '" + name_ +
                         "' failed: " + e.what());
  }
  if (!std::isfinite(w)) {
    std::ostringstream msg;
    msg << "energy potential '" << name_ << "' is not finite at (j, k, l) = ("
        << inv.j << ", " << inv.k << ", " << inv.l << ")";
    throw PotentialError(msg.str());
  }
  return w;
}

std::array<double, 3>
EnergyPotential::finite_difference_partials(const TraceInvariants &inv) const {
  std::array<double, 3> out{};
  const std::array<double, 3> x{inv.j, inv.k, inv.l};
  for (int i = 0; i < 3; ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
    auto plus = x, minus = x;
    plus[i] += h;
    minus[i] -= h;
    out[i] = (value({plus[0], plus[1], plus[2]}) -
              value({minus[0], minus[1], minus[2]})) /
             (plus[i] - minus[i]);
  }
  return out;
}

std::array<double, 3>
EnergyPotential::partials(const TraceInvariants &inv) const {
  if (!partials_)
    return finite_difference_partials(inv);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    try {
      out[i] = (*partials_)[i](inv.j, inv.k, inv.l);
    } catch (const std::exception &e) {
      throw PotentialError("partial derivative of '" + name_ +
                           "' failed: " + e.what());
    }
    if (!std::isfinite(out[i]))
      throw PotentialError("partial derivative of '" + name_ +
                           "' is not finite");
  }
  return out;
}

double EnergyPotential::verify_partials(
    std::span<const TraceInvariants> samples) const {
  if (!partials_)
    return 0.0;
  double worst = 0.0;
  for (const auto &inv : samples) {
    const auto an = partials(inv);
    const auto fd = finite_difference_partials(inv);
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst,
                       std::abs(fd[i] - an[i]) / std::max(1.0, std::abs(an[i])));
  }
  return worst;
}

SymTensor3 kirchhoff_stress(const SymTensor3 &l, const EnergyPotential &w) {
  const Tensor3 &lt = l.tensor();
  const auto inv = principal_invariants(lt);
  const auto [wj, wk, wl] = w.partials(inv);
  const Tensor3 tau =
      wj * Tensor3::identity() + (2.0 * wk) * lt + (3.0 * wl) * (lt * lt);
  return SymTensor3::symmetrize(tau);
}

StressState cauchy_stress(const Tensor3 &f, const EnergyPotential &w) {
  const SymTensor3 l = eulerian_strain(f, StrainFamily::builtin("hencky")).L;
  StressState s;
  s.tau = kirchhoff_stress(l, w);
  s.sigma = std::exp(-l.tensor().trace()) * s.tau;
  s.mean = s.sigma.trace() / 3.0;
  return s;
}

double gradient_check(const SymTensor3 &l, const EnergyPotential &w) {
  const Tensor3 &lt = l.tensor();
  const Tensor3 tau = kirchhoff_stress(l, w);
  const double h = 1e-5 * std::max(1.0, lt.norm());
  auto energy = [&](const Tensor3 &m) {
    return w.value(principal_invariants(m));
  };

  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      Tensor3 dir;
      dir(i, j) = 1.0;
      dir(j, i) = 1.0;
      // A symmetric off-diagonal perturbation moves two entries.
      const double weight = i == j ? 1.0 : 2.0;
      const double fd =
          (energy(lt + h * dir) - energy(lt - h * dir)) / (2.0 * h * weight);
      worst = std::max(worst, std::abs(fd - tau(i, j)));
    }
  }
  // Floor of 1: the O(h^2) truncation term does not shrink with ||L||.
  return worst / std::max(1.0, tau.max_abs());
}

Tensor3 transform_stress(const Tensor3 &sigma, const CoordinateChart &chart,
                         VarianceCase c) {
  const Tensor3 j_inv = chart.J.inverse();
  return c == VarianceCase::Alpha ? j_inv.transpose() * sigma * j_inv
                                  : j_inv.transpose() * sigma *
                                        chart.J.transpose();
}

Vec3 surface_element(const Vec3 &dx1, const Vec3 &dx2,
                     const CoordinateChart &chart, VarianceCase c) {
  const Vec3 n = std::sqrt(chart.G.tensor().det()) * cross(dx1, dx2);
  return c == VarianceCase::Alpha ? chart.G.tensor().inverse() * n : n;
}

double mean_stress(const Tensor3 &sigma_tilde, const CoordinateChart &chart,
                   VarianceCase c) {
  if (c == VarianceCase::Alpha)
    return trace_product(sigma_tilde, chart.G.tensor().inverse()) / 3.0;
  return sigma_tilde.trace() / 3.0;
}

double work_increment(const Tensor3 &sigma_tilde, const Tensor3 &d_f,
                      const CoordinateChart &chart, VarianceCase c) {
  if (c == VarianceCase::Alpha)
    return trace_product(chart.G.tensor().inverse() * sigma_tilde.transpose(),
                         d_f);
  return trace_product(sigma_tilde.transpose(), d_f);
}

} // namespace finstrain
