#pragma once

#include "finstrain/curvilinear.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace finstrain {

/// Isotropic elastic potential W(j, k, l) per unit reference volume, in the
/// power traces j = tr L, k = tr L^2, l = tr L^3 of the logarithmic strain.
///
/// Partials are analytic when supplied and central finite differences
/// (relative step 1e-6) otherwise. The callables must be reentrant.
class EnergyPotential {
public:
  using Fn = std::function<double(double, double, double)>;

  EnergyPotential(std::string name, Fn w);
  EnergyPotential(std::string name, Fn w, std::array<Fn, 3> partials);

  /// (Λ/2) j^2 + μ k.
  static EnergyPotential quadratic_hencky(double lambda = 1.0,
                                          double mu = 1.0);
  /// Built-in ids: zero, j, k, l, jk, quadratic-hencky (Λ = μ = 1).
  static EnergyPotential builtin(std::string_view name);

  const std::string &name() const noexcept { return name_; }
  bool has_analytic_partials() const noexcept { return partials_.has_value(); }

  double value(const TraceInvariants &inv) const;
  /// (∂W/∂j, ∂W/∂k, ∂W/∂l).
  std::array<double, 3> partials(const TraceInvariants &inv) const;
  std::array<double, 3> finite_difference_partials(
      const TraceInvariants &inv) const;

  /// Largest |fd - analytic| / max(1, |analytic|) over the samples; zero
  /// when no analytic partials are available.
  double verify_partials(std::span<const TraceInvariants> samples) const;

private:
  std::string name_;
  Fn w_;
  std::optional<std::array<Fn, 3>> partials_;
};

struct StressState {
  Tensor3 sigma; ///< Cauchy stress
  Tensor3 tau;   ///< Kirchhoff stress, det F sigma
  double mean = 0.0; ///< tr(sigma^T)/3
};

/// τ = W_j I + 2 W_k L + 3 W_l L^2 at (j, k, l) = power traces of L.
/// Throws PotentialError if the potential or a partial is not finite.
SymTensor3 kirchhoff_stress(const SymTensor3 &l, const EnergyPotential &w);

/// σ = e^{-j} τ with L = log V.
StressState cauchy_stress(const Tensor3 &f, const EnergyPotential &w);

/// Compares `kirchhoff_stress` with the central-difference gradient of
/// M -> W(tr M, tr M^2, tr M^3) over the six independent symmetric
/// components (step 1e-5 max(1, ||L||)). Returns the largest componentwise
/// error divided by max(1, largest stress component).
double gradient_check(const SymTensor3 &l, const EnergyPotential &w);

/// Alpha: σ̃ = J^-T σ J^-1. Beta: σ̃ = J^-T σ J^T.
Tensor3 transform_stress(const Tensor3 &sigma, const CoordinateChart &chart,
                         VarianceCase c);

/// Alpha: dA = sqrt(det G) G^-1 (dx1 × dx2). Beta: dA = sqrt(det G) dx1 × dx2.
/// Assumes a positively oriented chart (det J > 0).
Vec3 surface_element(const Vec3 &dx1, const Vec3 &dx2,
                     const CoordinateChart &chart, VarianceCase c);

/// Alpha: tr(σ̃ G^-1)/3. Beta: tr(σ̃)/3.
double mean_stress(const Tensor3 &sigma_tilde, const CoordinateChart &chart,
                   VarianceCase c);

/// Work per unit volume for a curvilinear gradient increment dF̄ = J dF J^-1.
/// Alpha: tr(G^-1 σ̃^T dF̄). Beta: tr(σ̃^T dF̄).
double work_increment(const Tensor3 &sigma_tilde, const Tensor3 &d_f,
                      const CoordinateChart &chart, VarianceCase c);

} // namespace finstrain
