#pragma once

#include "finstrain/strain.hpp"

#include <optional>
#include <string_view>

namespace finstrain {

/// Dilatation and shape-change invariants of the logarithmic strain.
struct StrainInvariants {
  double v = 1.0;      ///< volume ratio det F
  double j = 0.0;      ///< tr L = log v
  double y = 0.0;      ///< tr (dev L)^2
  double z = 0.0;      ///< tr (dev L)^3
  std::optional<double> zeta; ///< z^2 / y^3 in [0, 1/6]; empty when y = 0
  double amount = 0.0; ///< sqrt(y)
};

enum class DeformationClass {
  PureDilatation,
  SimpleShearLike,
  UniaxialLike,
  Intermediate
};

std::string_view to_string(DeformationClass c);

struct DeformationCharacter {
  DeformationClass kind = DeformationClass::PureDilatation;
  std::optional<double> zeta;
};

/// y below this counts as no shape change.
inline constexpr double kShapeChangeEpsilon = 1e-14;
/// Tolerance on ζ for the simple-shear and uniaxial extremes.
inline constexpr double kCharacterTolerance = 1e-9;

/// det F. Throws OrientationError (or its SingularError subclass) for
/// det F <= 0.
double dilatation(const Tensor3 &f);

/// Strain deviator D = f̃(dev log V); unchanged by scaling F and equal to
/// the strain itself for isochoric F.
SymTensor3 richter_deviator(const Tensor3 &f, const StrainFamily &family,
                            Frame frame = Frame::Eulerian);

/// Closed-form deviator for the mixed Almansi strain T G^-1:
/// D = d^{-1/3} (TG - (1 - d^{1/3})/2 I) with d = det(I - 2 TG).
Tensor3 deviator_from_almansi(const Tensor3 &tg);

/// Lagrangian counterpart for the mixed Green strain T̂ Ĝ^-1:
/// D̂ = d^{-1/3} (TG - (d^{1/3} - 1)/2 I) with d = det(I + 2 TG).
Tensor3 deviator_from_green(const Tensor3 &tg);

/// Invariants of log V (frame Eulerian) or log U; the values coincide.
StrainInvariants strain_invariants(const Tensor3 &f);

/// Invariants computed from a (possibly mixed, non-symmetric) logarithmic
/// strain; v is recovered as exp(tr L).
StrainInvariants invariants_of_log_strain(const Tensor3 &l);

/// Roots of x^3 - (y/2) x - z/3 = 0 in descending order.
/// Throws NotRealizable when the roots are not all real.
Vec3 principal_deviatoric_strains(double y, double z);

DeformationCharacter classify(const StrainInvariants &inv);

} // namespace finstrain
