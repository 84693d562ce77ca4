#pragma once

#include "finstrain/strain.hpp"

namespace finstrain {

/// Point-wise chart data: Jacobians of x(ξ) at the deformed point (J) and
/// at the reference point (Ĵ), with metrics G = (J J^T)^-1, Ĝ = (Ĵ Ĵ^T)^-1.
struct CoordinateChart {
  Tensor3 J = Tensor3::identity();
  Tensor3 J_hat = Tensor3::identity();
  SPDTensor3 G;
  SPDTensor3 G_hat;

  static CoordinateChart cartesian() { return {}; }
};

/// Alpha: twice-covariant stress, contravariant surface element.
/// Beta: covariant-contravariant stress, covariant surface element.
enum class VarianceCase { Alpha, Beta };

std::string_view to_string(VarianceCase c);
VarianceCase parse_variance(std::string_view text);

/// Index placement of a mixed strain tensor.
enum class MixedConvention { CovContra, ContraCov };

/// Throws SingularError when either Jacobian is singular.
CoordinateChart chart_from_jacobians(const Tensor3 &j, const Tensor3 &j_hat);

/// F = J F0 Ĵ^-1.
Tensor3 curvilinear_gradient(const Tensor3 &f0, const CoordinateChart &chart);
/// F0 = J^-1 F Ĵ.
Tensor3 cartesian_gradient(const Tensor3 &f, const CoordinateChart &chart);

/// Mixed logarithmic strain L* of a curvilinear gradient F.
///
/// Eulerian, CovContra: L* = ½ log(G F Ĝ^-1 F^T) = J^-T L J^T
/// Eulerian, ContraCov: L* = ½ log(F Ĝ^-1 F^T G) = J L J^-1
/// Lagrangian, CovContra: L̂* = ½ log(F^T G F Ĝ^-1) = Ĵ^-T L̂ Ĵ^T
/// Lagrangian, ContraCov: L̂* = ½ log(Ĝ^-1 F^T G F) = Ĵ L̂ Ĵ^-1
///
/// The returned matrix comes from the similarity with the Cartesian L. It is
/// cross-checked against `log_strain_mixed_direct`; a disagreement above
/// 1e-9 (relative) throws ConsistencyError.
Tensor3 log_strain_mixed(const Tensor3 &f, const CoordinateChart &chart,
                         MixedConvention convention = MixedConvention::CovContra,
                         Frame frame = Frame::Eulerian);

/// Same quantity evaluated from F, G and Ĝ alone. The product of two SPD
/// factors is similar to a symmetric matrix, which carries the logarithm.
Tensor3 log_strain_mixed_direct(const Tensor3 &f, const CoordinateChart &chart,
                                MixedConvention convention,
                                Frame frame = Frame::Eulerian);

/// Non-mixed (twice-contravariant) strain J L J^T, or Ĵ L̂ Ĵ^T for the
/// Lagrangian frame. Its invariants are chart dependent.
SymTensor3 strain_nonmixed(const SymTensor3 &l, const CoordinateChart &chart,
                           Frame frame = Frame::Eulerian);

/// Twice-covariant classical strains: 2T = G - (F Ĝ^-1 F^T)^-1 (Almansi
/// type) and 2T̂ = F^T G F - Ĝ (Green type).
struct ClassicalStrain {
  SymTensor3 T;
  SymTensor3 T_hat;
};

ClassicalStrain classical_strain(const Tensor3 &f,
                                 const CoordinateChart &chart);

/// Mixed classical strains T G^-1 and T̂ Ĝ^-1.
Tensor3 mixed_almansi(const ClassicalStrain &s, const CoordinateChart &chart);
Tensor3 mixed_green(const ClassicalStrain &s, const CoordinateChart &chart);

/// g(T G^-1) evaluated through the SPD similarity (no general matrix
/// function). Used to recover L* = f(T G^-1) with the Almansi f.
Tensor3 apply_to_mixed_almansi(const ClassicalStrain &s,
                               const CoordinateChart &chart,
                               const ScalarMap &g);

} // namespace finstrain
