#include "finstrain/curvilinear.hpp"

#include "finstrain/errors.hpp"

#include <sstream>

namespace finstrain {

std::string_view to_string(VarianceCase c) {
  return c == VarianceCase::Alpha ? "alpha" : "beta";
}

VarianceCase parse_variance(std::string_view text) {
  if (text == "alpha")
    return VarianceCase::Alpha;
  if (text == "beta")
    return VarianceCase::Beta;
  throw InvalidInput("variance must be 'alpha' or 'beta', got '" +
                     std::string(text) + "'");
}

namespace {

SPDTensor3 metric_of(const Tensor3 &jac, const char *which) {
  if (!jac.is_finite())
    throw InvalidInput(std::string(which) + " has non-finite entries");
  if (jac.det() == 0.0)
    throw SingularError(std::string(which) + " is singular");
  return SPDTensor3(SymTensor3::symmetrize((jac * jac.transpose()).inverse()));
}

const ScalarMap &half_log() {
  static const ScalarMap g{[](double x) { return 0.5 * std::log(x); },
                           Interval::positive(), "log sqrt"};
  return g;
}

} // namespace

CoordinateChart chart_from_jacobians(const Tensor3 &j, const Tensor3 &j_hat) {
  CoordinateChart c;
  c.G = metric_of(j, "chart Jacobian J");
  c.G_hat = metric_of(j_hat, "chart Jacobian J_hat");
  c.J = j;
  c.J_hat = j_hat;
  return c;
}

Tensor3 curvilinear_gradient(const Tensor3 &f0, const CoordinateChart &chart) {
  require_proper(f0);
  return chart.J * f0 * chart.J_hat.inverse();
}

Tensor3 cartesian_gradient(const Tensor3 &f, const CoordinateChart &chart) {
  return chart.J.inverse() * f * chart.J_hat;
}

Tensor3 log_strain_mixed_direct(const Tensor3 &f, const CoordinateChart &chart,
                                MixedConvention convention, Frame frame) {
  if (f.det() == 0.0)
    throw SingularError("curvilinear gradient is singular");
  if (frame == Frame::Eulerian) {
    const auto b = SymTensor3::symmetrize(f * chart.G_hat.tensor().inverse() *
                                          f.transpose());
    return apply_scale_product(chart.G, b,
                               convention == MixedConvention::CovContra
                                   ? FactorSide::Left
                                   : FactorSide::Right,
                               half_log());
  }
  const auto c =
      SymTensor3::symmetrize(f.transpose() * chart.G.tensor() * f);
  const SPDTensor3 g_hat_inv(
      SymTensor3::symmetrize(chart.G_hat.tensor().inverse()));
  return apply_scale_product(g_hat_inv, c,
                             convention == MixedConvention::CovContra
                                 ? FactorSide::Right
                                 : FactorSide::Left,
                             half_log());
}

Tensor3 log_strain_mixed(const Tensor3 &f, const CoordinateChart &chart,
                         MixedConvention convention, Frame frame) {
  const Tensor3 f0 = cartesian_gradient(f, chart);
  const Tensor3 l = strain(f0, StrainFamily::builtin("hencky"), frame).L;
  const Tensor3 &jac = frame == Frame::Eulerian ? chart.J : chart.J_hat;
  const Tensor3 jac_inv = jac.inverse();
  const Tensor3 similar = convention == MixedConvention::CovContra
                              ? jac_inv.transpose() * l * jac.transpose()
                              : jac * l * jac_inv;

  const Tensor3 direct = log_strain_mixed_direct(f, chart, convention, frame);
  const double gap = relative_difference(similar, direct);
  if (gap > 1e-9) {
    std::ostringstream msg;
    msg << "mixed logarithmic strain routes disagree (relative gap " << gap
        << "); gradient and chart are inconsistent or ill-conditioned";
    throw ConsistencyError(msg.str());
  }
  return similar;
}

SymTensor3 strain_nonmixed(const SymTensor3 &l, const CoordinateChart &chart,
                           Frame frame) {
  const Tensor3 &jac = frame == Frame::Eulerian ? chart.J : chart.J_hat;
  return SymTensor3::symmetrize(jac * l.tensor() * jac.transpose());
}

ClassicalStrain classical_strain(const Tensor3 &f,
                                 const CoordinateChart &chart) {
  if (!f.is_finite())
    throw InvalidInput("gradient has non-finite entries");
  if (f.det() == 0.0)
    throw SingularError("gradient is singular (det F = 0)");
  const Tensor3 b = f * chart.G_hat.tensor().inverse() * f.transpose();
  const Tensor3 t = 0.5 * (chart.G.tensor() - b.inverse());
  const Tensor3 t_hat =
      0.5 * (f.transpose() * chart.G.tensor() * f - chart.G_hat.tensor());
  return {SymTensor3::symmetrize(t), SymTensor3::symmetrize(t_hat)};
}

Tensor3 mixed_almansi(const ClassicalStrain &s, const CoordinateChart &chart) {
  return s.T.tensor() * chart.G.tensor().inverse();
}

Tensor3 mixed_green(const ClassicalStrain &s, const CoordinateChart &chart) {
  return s.T_hat.tensor() * chart.G_hat.tensor().inverse();
}

Tensor3 apply_to_mixed_almansi(const ClassicalStrain &s,
                               const CoordinateChart &chart,
                               const ScalarMap &g) {
  const SPDTensor3 g_inv(SymTensor3::symmetrize(chart.G.tensor().inverse()));
  return apply_scale_product(g_inv, s.T, FactorSide::Right, g);
}

} // namespace finstrain
