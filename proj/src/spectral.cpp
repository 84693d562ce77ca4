#include "finstrain/spectral.hpp"

#include "finstrain/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace finstrain {

Tensor3 Spectrum3::reconstruct() const {
  Tensor3 t;
  for (int i = 0; i < 3; ++i)
    t += values[i] * Tensor3::outer(vectors[i], vectors[i]);
  return t;
}

Tensor3 Spectrum3::basis() const {
  return Tensor3::from_columns(vectors[0], vectors[1], vectors[2]);
}

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kJacobiTolerance = 1e-15;

double off_diagonal_norm(const Tensor3 &a) {
  return std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                          a(1, 2) * a(1, 2)));
}

// Largest-magnitude component positive; lowest index wins a tie.
void canonicalize_sign(Vec3 &v) {
  int pivot = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[pivot]))
      pivot = i;
  if (v[pivot] < 0.0)
    v = -1.0 * v;
}

} // namespace

Spectrum3 sym_eigen(const SymTensor3 &input) {
  Tensor3 a = input.tensor();
  if (!a.is_finite())
    throw InvalidInput("sym_eigen: non-finite entries");

  Tensor3 v = Tensor3::identity();
  const double scale = a.norm();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiTolerance * scale)
      break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0)
          continue;
        // Negligible against both diagonal entries: drop it.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Tensor3 rot = Tensor3::identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = (rot.transpose() * a * rot).sym();
        a(p, q) = a(q, p) = 0.0;
        v = v * rot;
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) > a(y, y); });

  Spectrum3 out;
  for (int i = 0; i < 3; ++i) {
    out.values[i] = a(order[i], order[i]);
    out.vectors[i] = v.column(order[i]);
    canonicalize_sign(out.vectors[i]);
  }
  return out;
}

SymTensor3 apply_scale(const Spectrum3 &spectrum, const ScalarMap &g) {
  Tensor3 t;
  for (int i = 0; i < 3; ++i) {
    const double lambda = spectrum.values[i];
    if (!g.domain.contains(lambda)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << lambda << " lies outside the domain ("
          << g.domain.lo << ", " << g.domain.hi << ") of " << g.name;
      throw DomainError(msg.str(), lambda);
    }
    const double value = g(lambda);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << g.name << "(" << lambda << ") is not finite";
      throw DomainError(msg.str(), lambda);
    }
    t += value * Tensor3::outer(spectrum.vectors[i], spectrum.vectors[i]);
  }
  return SymTensor3::symmetrize(t);
}

SymTensor3 apply_scale(const SymTensor3 &a, const ScalarMap &g) {
  return apply_scale(sym_eigen(a), g);
}

SymTensor3 spd_log(const SPDTensor3 &a) {
  return apply_scale(a, ScalarMap{[](double x) { return std::log(x); },
                                  Interval::positive(), "log"});
}

SPDTensor3 spd_exp(const SymTensor3 &a) {
  return SPDTensor3(apply_scale(
      a, ScalarMap{[](double x) { return std::exp(x); }, Interval::all(),
                   "exp"}));
}

SPDTensor3 spd_sqrt(const SPDTensor3 &a) {
  return SPDTensor3(apply_scale(
      a, ScalarMap{[](double x) { return std::sqrt(x); },
                   Interval::positive(), "sqrt"}));
}

SPDTensor3 spd_power(const SPDTensor3 &a, double p) {
  return SPDTensor3(apply_scale(
      a, ScalarMap{[p](double x) { return std::pow(x, p); },
                   Interval::positive(), "pow"}));
}

Tensor3 apply_scale_product(const SPDTensor3 &m, const SymTensor3 &s,
                            FactorSide side, const ScalarMap &g) {
  const Spectrum3 ms = sym_eigen(m);
  const auto root = ScalarMap{[](double x) { return std::sqrt(x); },
                              Interval::positive(), "sqrt"};
  const auto inv_root = ScalarMap{[](double x) { return 1.0 / std::sqrt(x); },
                                  Interval::positive(), "inverse sqrt"};
  const Tensor3 half = apply_scale(ms, root);
  const Tensor3 half_inv = apply_scale(ms, inv_root);
  const Tensor3 inner =
      apply_scale(SymTensor3::symmetrize(half * s.tensor() * half), g);
  return side == FactorSide::Left ? half * inner * half_inv
                                  : half_inv * inner * half;
}

double require_proper(const Tensor3 &f) {
  if (!f.is_finite())
    throw InvalidInput("deformation gradient has non-finite entries");
  const double d = f.det();
  if (d == 0.0)
    throw SingularError("deformation gradient is singular (det F = 0)");
  if (d < 0.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "deformation gradient reverses orientation (det F = " << d << ")";
    throw OrientationError(msg.str());
  }
  return d;
}

PolarFactors polar_decompose(const Tensor3 &f) {
  require_proper(f);

  const Spectrum3 b = sym_eigen(SymTensor3::symmetrize(f * f.transpose()));
  const Tensor3 v = apply_scale(
      b, ScalarMap{[](double x) { return std::sqrt(x); }, Interval::positive(),
                   "sqrt"});
  const Tensor3 v_inv = apply_scale(
      b, ScalarMap{[](double x) { return 1.0 / std::sqrt(x); },
                   Interval::positive(), "inverse sqrt"});

  // Newton steps R <- (R + R^-T)/2 restore orthogonality lost to rounding
  // in V^-1 F; they converge quadratically from this starting point.
  Tensor3 r = v_inv * f;
  for (int it = 0; it < 4; ++it) {
    if ((r.transpose() * r - Tensor3::identity()).norm() <= 1e-15)
      break;
    r = 0.5 * (r + r.inverse().transpose());
  }

  PolarFactors out{SPDTensor3(SymTensor3::symmetrize(v)), Rotation3(r),
                   SPDTensor3()};
  out.U = SPDTensor3(SymTensor3::symmetrize(r.transpose() * v * r));
  return out;
}

Tensor3 deviator(const Tensor3 &a) {
  const double mean = a.trace() / 3.0;
  Tensor3 d = a;
  d(0, 0) -= mean;
  d(1, 1) -= mean;
  d(2, 2) -= mean;
  return d;
}

TraceInvariants principal_invariants(const Tensor3 &a) {
  const Tensor3 a2 = a * a;
  return {a.trace(), a2.trace(), trace_product(a2, a)};
}

double characteristic_polynomial(const TraceInvariants &inv, double x) {
  const double c1 = -inv.j;
  const double c2 = 0.5 * (inv.j * inv.j - inv.k);
  const double c3 =
      -(inv.l / 3.0 - 0.5 * inv.j * inv.k + inv.j * inv.j * inv.j / 6.0);
  return ((x + c1) * x + c2) * x + c3;
}

bool commutes(const Tensor3 &a, const Tensor3 &b) {
  return (a * b - b * a).norm() <= 1e-10 * a.norm() * b.norm();
}

} // namespace finstrain
