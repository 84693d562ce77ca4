// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include "finstrain/batch.hpp"
#include "finstrain/curvilinear.hpp"
#include "finstrain/invariants.hpp"
#include "finstrain/sampling.hpp"
#include "finstrain/stress.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace finstrain;
using sampling::Rng;

namespace {

const Tensor3 kI = Tensor3::identity();

struct Outcome {
  bool ok = true;
  std::string detail;
  int checks = 0;

  void expect(bool cond, const std::string &what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

struct Criterion {
  int id;
  std::string name;
  double budget_s; // runtime limit, 0 = none
  std::function<Outcome()> run;
};

std::vector<StrainFamily> builtin_families() {
  return {StrainFamily::builtin("hencky"),  StrainFamily::builtin("almansi"),
          StrainFamily::builtin("green"),   StrainFamily::builtin("biot"),
          StrainFamily::builtin("bazant"),  StrainFamily::builtin("seth-hill", 0.5),
          StrainFamily::builtin("seth-hill", -2.0)};
}

Outcome character_extremes() {
  Outcome o;
  for (double lambda : {1.1, 2.0, 5.0}) {
    const double t = 1.0 / std::sqrt(lambda);
    const auto inv = strain_invariants(Tensor3::diag(lambda, t, t));
    const double ll = std::log(lambda);
    const double y = 1.5 * ll * ll, z = 0.75 * ll * ll * ll;
    o.expect(inv.zeta && std::abs(*inv.zeta - 1.0 / 6.0) <= 1e-9,
             "uniaxial zeta at lambda " + num(lambda));
    o.expect(std::abs(inv.y - y) <= 1e-10 * std::abs(y), "uniaxial y at lambda " + num(lambda));
    o.expect(std::abs(inv.z - z) <= 1e-10 * std::abs(z), "uniaxial z at lambda " + num(lambda));
  }
  for (double lambda : {0.1, 1.0, 3.0}) {
    Tensor3 f = kI;
    f(0, 1) = lambda;
    const auto inv = strain_invariants(f);
    o.expect(std::abs(inv.z) <= 1e-10 * std::pow(inv.y, 1.5), "shear z at lambda " + num(lambda));
    o.expect(inv.zeta && *inv.zeta <= 1e-12, "shear zeta at lambda " + num(lambda));
  }
  return o;
}

Outcome superposition() {
  Outcome o;
  Rng rng(2001);
  const auto families = builtin_families();
  double worst = 0.0;
  for (int n = 0; n < 500; ++n) {
    const auto [v1, v2] = sampling::random_coaxial_pair(rng, 1.0);
    for (const auto &fam : families) {
      const double r = check_superposition(v1, v2, fam);
      worst = std::max(worst, r);
      o.expect(r <= 1e-9, fam.label() + " residual " + num(r));
    }
  }
  // Almansi worked identity: stretches 2 and 3 compose to 6.
  const auto almansi = StrainFamily::builtin("almansi");
  const auto &f = almansi.f();
  const double e1 = eulerian_strain(Tensor3::diag(2, 1, 1), almansi).E(0, 0);
  const double e2 = eulerian_strain(Tensor3::diag(3, 1, 1), almansi).E(0, 0);
  const double e = eulerian_strain(Tensor3::diag(6, 1, 1), almansi).E(0, 0);
  o.expect(std::abs(f(e1) + f(e2) - std::log(6.0)) <= 1e-12, "almansi f(E1) + f(E2) = log 6");
  o.expect(std::abs(f(e) - std::log(6.0)) <= 1e-12, "almansi f(E) = log 6");
  o.expect(check_superposition(SPDTensor3(Tensor3::diag(2, 1, 1)), SPDTensor3(Tensor3::diag(3, 1, 1)),
                               almansi) <= 1e-12,
           "almansi worked residual");
  o.detail = o.ok ? "worst residual " + num(worst) : o.detail;
  return o;
}

Outcome stress_gradient() {
  Outcome o;
  Rng rng(2002);
  const std::vector<EnergyPotential> potentials = {
      EnergyPotential::builtin("j"), EnergyPotential::builtin("k"), EnergyPotential::builtin("l"),
      EnergyPotential::quadratic_hencky(1.3, 0.7), EnergyPotential::builtin("jk")};
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const SymTensor3 l = sampling::random_sym(rng, 1.0);
    for (const auto &w : potentials) {
      const double err = gradient_check(l, w);
      worst = std::max(worst, err);
      o.expect(err <= 1e-5, w.name() + " error " + num(err));
    }
  }
  if (o.ok)
    o.detail = "worst error " + num(worst);
  return o;
}

Outcome deviator_equivalence() {
  Outcome o;
  Rng rng(2003);
  const auto almansi = StrainFamily::builtin("almansi");
  const auto families = builtin_families();
  for (int n = 0; n < 200; ++n) {
    const Tensor3 f = sampling::random_gradient(rng, 1.0);
    const auto cs = classical_strain(f, CoordinateChart::cartesian());
    const double gap = relative_difference(deviator_from_almansi(cs.T), richter_deviator(f, almansi));
    o.expect(gap <= 1e-9, "almansi closed form gap " + num(gap));
    for (const auto &fam : families) {
      const Tensor3 d = richter_deviator(f, fam);
      for (double s : {0.5, 3.0})
        o.expect(relative_difference(richter_deviator(s * f, fam), d) <= 1e-10,
                 fam.label() + " scaling invariance");
      const Tensor3 iso = f / std::cbrt(f.det());
      o.expect(relative_difference(richter_deviator(iso, fam), eulerian_strain(iso, fam).E) <= 1e-10,
               fam.label() + " isochoric D = E");
    }
  }
  return o;
}

Outcome coordinate_invariance() {
  Outcome o;
  Rng rng(2004);
  for (int n = 0; n < 100; ++n) {
    const auto chart = sampling::random_chart(rng);
    const Tensor3 f0 = sampling::random_gradient(rng, 1.0);
    const Tensor3 l = eulerian_strain(f0, StrainFamily::builtin("hencky")).L;
    const Tensor3 ls = log_strain_mixed(curvilinear_gradient(f0, chart), chart);
    const auto a = principal_invariants(ls), b = principal_invariants(l);
    const auto close = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); };
    o.expect(close(a.j, b.j) && close(a.k, b.k) && close(a.l, b.l), "mixed invariants differ");
    o.expect(std::abs(ls.trace() - std::log(f0.det())) <= 1e-10, "tr L* vs log det F0");
  }
  // Non-orthogonal witness: E = J L J^T changes the trace.
  const auto sheared = chart_from_jacobians(Tensor3{{1, 0.5, 0}, {0, 1, 0}, {0, 0, 1}}, kI);
  const SymTensor3 l = eulerian_strain(Tensor3::diag(1, std::numbers::e, 1), StrainFamily::builtin("hencky")).L;
  const double gap = std::abs(strain_nonmixed(l, sheared).tensor().trace() - l.tensor().trace());
  o.expect(gap >= 1e-3, "non-mixed trace gap " + num(gap));
  if (o.ok)
    o.detail = "non-mixed trace gap " + num(gap);
  return o;
}

Outcome work_invariance() {
  Outcome o;
  Rng rng(2005);
  for (int n = 0; n < 100; ++n) {
    const auto chart = sampling::random_chart(rng);
    const Tensor3 sigma = sampling::random_tensor(rng, 2.0);
    const Vec3 dx1 = sampling::random_vector(rng), dx2 = sampling::random_vector(rng),
               dz = sampling::random_vector(rng);
    const Tensor3 j_inv = chart.J.inverse();
    const double cart = dot(j_inv * dz, sigma * cross(j_inv * dx1, j_inv * dx2));
    const double mean = sigma.transpose().trace() / 3.0;
    for (auto c : {VarianceCase::Alpha, VarianceCase::Beta}) {
      const Tensor3 st = transform_stress(sigma, chart, c);
      const double curv = dot(dz, st * surface_element(dx1, dx2, chart, c));
      o.expect(std::abs(curv - cart) <= 1e-9 * std::max(1.0, std::abs(cart)),
               std::string(to_string(c)) + " work " + num(curv) + " vs " + num(cart));
      o.expect(std::abs(mean_stress(st, chart, c) - mean) <= 1e-10 * std::max(1.0, std::abs(mean)),
               std::string(to_string(c)) + " mean stress");
    }
  }
  return o;
}

Outcome kinematic_core() {
  Outcome o;
  Rng rng(2006);
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    // Polar decomposition.
    const Tensor3 f = sampling::random_gradient(rng, 1.5);
    const PolarFactors p = polar_decompose(f);
    const double scale = std::max(1.0, f.norm());
    o.expect((p.V.tensor() * p.R.tensor() - f).norm() <= 1e-12 * scale, "F = V R");
    o.expect((p.R.tensor() * p.U.tensor() - f).norm() <= 1e-12 * scale, "F = R U");
    o.expect((p.R.tensor().transpose() * p.R.tensor() - kI).norm() <= 1e-12, "R orthogonal");

    // Log/exp round trips.
    const SPDTensor3 a = sampling::random_spd(rng, 2.0);
    o.expect(relative_difference(spd_exp(spd_log(a)), a) <= 1e-10, "exp(log A) = A");
    const SymTensor3 s = sampling::random_sym(rng, 3.0);
    o.expect(relative_difference(spd_log(spd_exp(s)), s) <= 1e-10, "log(exp S) = S");

    // Trace and matrix-function identities.
    const Tensor3 x = sampling::random_tensor(rng), y = sampling::random_tensor(rng);
    o.expect(std::abs((x * y).trace() - (y * x).trace()) <= 1e-12, "tr XY = tr YX");
    o.expect(std::abs(spd_log(a).tensor().trace() - std::log(a.tensor().det())) <= 1e-10,
             "tr log A = log det A");
    const Tensor3 q = sampling::random_rotation(rng);
    const auto qaq = SPDTensor3(SymTensor3::symmetrize(q * a.tensor() * q.transpose()));
    o.expect(relative_difference(spd_log(qaq), q * spd_log(a).tensor() * q.transpose()) <= 1e-10,
             "log(Q A Q^T) = Q log A Q^T");
    const Tensor3 m = sampling::random_tensor(rng) + 3.0 * kI;
    const Vec3 u = sampling::random_vector(rng), v = sampling::random_vector(rng);
    o.expect(std::abs(dot(m * u, v) - dot(u, m.transpose() * v)) <= 1e-12, "<M u, v> = <u, M^T v>");
    const Vec3 lhs = cross(m * u, m * v);
    const Vec3 rhs = m.det() * (m.inverse().transpose() * cross(u, v));
    o.expect(norm(lhs - rhs) <= 1e-10 * std::max(1.0, norm(lhs)), "cofactor cross product");
    const auto [v1, v2] = sampling::random_coaxial_pair(rng);
    const auto prod = SPDTensor3(SymTensor3::symmetrize(v1.tensor() * v2.tensor()));
    o.expect(relative_difference(spd_log(prod), spd_log(v1).tensor() + spd_log(v2).tensor()) <= 1e-10,
             "log additivity");

    // Isochoric/volumetric split.
    const double vol = f.det();
    const Tensor3 iso = f / std::cbrt(vol);
    const SymTensor3 l = eulerian_strain(f, StrainFamily::builtin("hencky")).L;
    const SymTensor3 l_iso = eulerian_strain(iso, StrainFamily::builtin("hencky")).L;
    o.expect(relative_difference(l, l_iso.tensor() + (std::log(vol) / 3.0) * kI) <= 1e-10,
             "log V = log V_iso + (log v / 3) I");
    o.expect(std::abs(l_iso.tensor().trace()) <= 1e-10, "tr log V_iso = 0");
  }
  return o;
}

Outcome curve_reproduction() {
  Outcome o;
  const auto fam = StrainFamily::builtin("almansi");
  const std::string text = batch::curve_csv(fam, -2.0, 4.2, 101);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  o.expect(line == "x,f_tilde", "curve header");
  double prev = -INFINITY, last = 0.0, last_x = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double fx = std::stod(line.substr(comma + 1));
    const double ref = 0.5 * (1.0 - std::exp(-2.0 * x));
    o.expect(std::abs(fx - ref) <= 1e-12 * std::max(1.0, std::abs(ref)), "curve value at x = " + num(x));
    o.expect(fx > prev, "curve monotone at x = " + num(x));
    o.expect(fx < 0.5, "curve below asymptote at x = " + num(x));
    prev = fx;
    last = fx;
    last_x = x;
    ++rows;
  }
  o.expect(rows == 101, "curve sample count");
  o.expect(last_x == 4.2, "curve ends at 4.2");
  o.expect(last > 0.499, "curve approaches 1/2");
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "character extremes", 1.0, character_extremes},
      {2, "superposition", 5.0, superposition},
      {3, "stress-gradient identity", 10.0, stress_gradient},
      {4, "deviator equivalence and postulates", 0.0, deviator_equivalence},
      {5, "coordinate invariance", 0.0, coordinate_invariance},
      {6, "stress transformation and work invariance", 0.0, work_invariance},
      {7, "kinematic core", 10.0, kinematic_core},
      {8, "almansi curve reproduction", 0.0, curve_reproduction},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs > c.budget_s && o.ok) {
      o.ok = false;
      o.detail = "runtime " + num(secs) + " s exceeds " + num(c.budget_s) + " s";
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%d checks, %.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.checks, secs, o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%s: %d/%zu criteria passed\n", failed ? "FAILED" : "OK",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
