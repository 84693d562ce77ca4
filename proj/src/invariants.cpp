#include "finstrain/invariants.hpp"

#include "finstrain/errors.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace finstrain {

std::string_view to_string(DeformationClass c) {
  switch (c) {
  case DeformationClass::PureDilatation:
    return "PureDilatation";
  case DeformationClass::SimpleShearLike:
    return "SimpleShearLike";
  case DeformationClass::UniaxialLike:
    return "UniaxialLike";
  case DeformationClass::Intermediate:
    return "Intermediate";
  }
  return "Intermediate";
}

double dilatation(const Tensor3 &f) { return require_proper(f); }

namespace {

// Eigen-decomposition of log V (or log U) through F F^T (or F^T F).
Spectrum3 log_stretch_spectrum(const Tensor3 &f, Frame frame) {
  require_proper(f);
  const Tensor3 sq =
      frame == Frame::Eulerian ? f * f.transpose() : f.transpose() * f;
  if (!sq.is_finite())
    throw DomainError("stretch tensor overflows double precision", f.max_abs());
  Spectrum3 spectrum = sym_eigen(SymTensor3::symmetrize(sq));
  for (double &x : spectrum.values) {
    if (!(x > 0.0))
      throw DomainError("stretch has a non-positive squared eigenvalue", x);
    x = 0.5 * std::log(x);
  }
  return spectrum;
}

Tensor3 mixed_deviator(const Tensor3 &tg, double sign) {
  const Tensor3 arg = Tensor3::identity() + (2.0 * sign) * tg;
  const double d = arg.det();
  if (!(d > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "det(I " << (sign > 0 ? "+" : "-") << " 2 TG) = " << d
        << " must be positive";
    throw DomainError(msg.str(), d);
  }
  const double cbrt = std::cbrt(d);
  return (1.0 / cbrt) * (tg - (0.5 * sign * (cbrt - 1.0)) * Tensor3::identity());
}

void fill_shape_invariants(StrainInvariants &inv, const Tensor3 &dev) {
  const Tensor3 dev2 = dev * dev;
  inv.y = dev2.trace();
  inv.z = trace_product(dev2, dev);
  if (inv.y < 0.0)
    inv.y = 0.0; // only reachable for mixed strains through rounding
  inv.amount = std::sqrt(inv.y);
  if (inv.y > kShapeChangeEpsilon) {
    const double zeta = inv.z * inv.z / (inv.y * inv.y * inv.y);
    inv.zeta = std::min(zeta, 1.0 / 6.0);
  }
}

} // namespace

SymTensor3 richter_deviator(const Tensor3 &f, const StrainFamily &family,
                            Frame frame) {
  Spectrum3 spectrum = log_stretch_spectrum(f, frame);
  const double mean =
      (spectrum.values[0] + spectrum.values[1] + spectrum.values[2]) / 3.0;
  for (double &x : spectrum.values)
    x -= mean;
  return apply_scale(spectrum, family.f_tilde());
}

Tensor3 deviator_from_almansi(const Tensor3 &tg) {
  return mixed_deviator(tg, -1.0);
}

Tensor3 deviator_from_green(const Tensor3 &tg) {
  return mixed_deviator(tg, 1.0);
}

StrainInvariants strain_invariants(const Tensor3 &f) {
  const Spectrum3 spectrum = log_stretch_spectrum(f, Frame::Eulerian);
  StrainInvariants inv;
  inv.v = f.det();
  inv.j = spectrum.values[0] + spectrum.values[1] + spectrum.values[2];
  // dev L is diagonal in the eigenbasis of L.
  const double mean = inv.j / 3.0;
  const Tensor3 dev = Tensor3::diag(spectrum.values[0] - mean,
                                    spectrum.values[1] - mean,
                                    spectrum.values[2] - mean);
  fill_shape_invariants(inv, dev);
  return inv;
}

StrainInvariants invariants_of_log_strain(const Tensor3 &l) {
  if (!l.is_finite())
    throw InvalidInput("logarithmic strain has non-finite entries");
  StrainInvariants inv;
  inv.j = l.trace();
  inv.v = std::exp(inv.j);
  fill_shape_invariants(inv, deviator(l));
  return inv;
}

Vec3 principal_deviatoric_strains(double y, double z) {
  if (!std::isfinite(y) || !std::isfinite(z) || y < 0.0) {
    std::ostringstream msg;
    msg << "invalid shape invariants (y = " << y << ", z = " << z << ")";
    throw NotRealizable(msg.str());
  }
  if (y == 0.0) {
    if (z != 0.0)
      throw NotRealizable("z must vanish when y = 0");
    return {0.0, 0.0, 0.0};
  }
  const double zeta = z * z / (y * y * y);
  if (zeta > 1.0 / 6.0 + kCharacterTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "z^2/y^3 = " << zeta << " exceeds 1/6; the cubic has complex roots";
    throw NotRealizable(msg.str());
  }

  // Trigonometric form for x^3 - p x - q with p = y/2, q = z/3.
  const double r = std::sqrt(2.0 * y / 3.0);
  const double arg =
      std::clamp(z * std::sqrt(6.0) / (y * std::sqrt(y)), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  const double third = 2.0 * std::numbers::pi / 3.0;

  // The largest-magnitude root is simple; refine it and deflate.
  Vec3 trig{r * std::cos(theta), r * std::cos(theta - third),
            r * std::cos(theta - 2.0 * third)};
  double x1 = trig[0];
  for (double x : trig)
    if (std::abs(x) > std::abs(x1))
      x1 = x;
  for (int it = 0; it < 2; ++it) {
    const double p = (x1 * x1 - 0.5 * y) * x1 - z / 3.0;
    const double dp = 3.0 * x1 * x1 - 0.5 * y;
    if (dp == 0.0)
      break;
    x1 -= p / dp;
  }
  // Remaining pair: sum -x1, product x1^2 - y/2.
  const double disc = std::max(0.0, 2.0 * y - 3.0 * x1 * x1);
  const double c = x1 * x1 - 0.5 * y;
  const double x2 = 0.5 * (-x1 - std::copysign(std::sqrt(disc), x1));
  const double x3 = x2 != 0.0 ? c / x2 : -x1 - x2;

  Vec3 roots{x1, x2, x3};
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

DeformationCharacter classify(const StrainInvariants &inv) {
  DeformationCharacter out;
  out.zeta = inv.zeta;
  if (inv.y <= kShapeChangeEpsilon || !inv.zeta) {
    out.kind = DeformationClass::PureDilatation;
  } else if (*inv.zeta <= kCharacterTolerance) {
    out.kind = DeformationClass::SimpleShearLike;
  } else if (*inv.zeta >= 1.0 / 6.0 - kCharacterTolerance) {
    out.kind = DeformationClass::UniaxialLike;
  } else {
    out.kind = DeformationClass::Intermediate;
  }
  return out;
}

} // namespace finstrain
