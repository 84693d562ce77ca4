#include "finstrain/check.hpp"

#include "finstrain/errors.hpp"
#include "finstrain/invariants.hpp"
#include "finstrain/sampling.hpp"
#include "finstrain/stress.hpp"

#include <optional>
#include <sstream>

namespace finstrain::check {

using sampling::Rng;

bool Report::passed() const {
  for (const auto &o : outcomes)
    if (!o.passed)
      return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream out;
  int failed = 0;
  for (const auto &o : outcomes) {
    if (o.passed) {
      out << "PASS " << o.name << " (" << o.trials << " trials)\n";
    } else {
      ++failed;
      out << "FAIL " << o.name << ": " << o.failure << "\n";
    }
  }
  out << (failed == 0 ? "OK" : "FAILED") << ": "
      << outcomes.size() - failed << "/" << outcomes.size()
      << " properties passed (seed " << seed << ")\n";
  return out.str();
}

namespace {

using Failure = std::optional<std::string>;

struct Property {
  std::string name;
  std::function<Failure(Rng &)> trial;
};

std::string show(const Tensor3 &t) {
  std::ostringstream s;
  s.precision(17);
  s << t;
  return s.str();
}

std::string show(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

// Relative Frobenius check; returns a message when it fails.
Failure expect_close(const Tensor3 &value, const Tensor3 &reference,
                     double tol, const std::string &what) {
  const double err = relative_difference(value, reference);
  if (err <= tol)
    return std::nullopt;
  return what + ": relative error " + show(err) + " > " + show(tol);
}

Failure expect_scalar(double value, double reference, double tol,
                      const std::string &what) {
  const double err =
      std::abs(value - reference) / std::max(1.0, std::abs(reference));
  if (err <= tol)
    return std::nullopt;
  return what + ": " + show(value) + " vs " + show(reference) +
         " (relative error " + show(err) + ")";
}

const std::vector<std::string> &family_labels() {
  static const std::vector<std::string> labels{
      "hencky", "almansi", "green", "biot", "bazant", "seth-hill:0.5",
      "seth-hill:-2"};
  return labels;
}

StrainFamily pick_family(Rng &rng) {
  const auto &labels = family_labels();
  const auto i = std::uniform_int_distribution<std::size_t>(
      0, labels.size() - 1)(rng);
  return StrainFamily::parse(labels[i]);
}

std::vector<Property> build_properties(const Hooks &hooks) {
  using namespace sampling;
  const auto dev = hooks.deviator
                       ? hooks.deviator
                       : std::function<Tensor3(const Tensor3 &)>(
                             [](const Tensor3 &a) { return deviator(a); });
  const Tensor3 I = Tensor3::identity();
  std::vector<Property> props;

  props.push_back({"tr dev = 0", [dev](Rng &rng) -> Failure {
                     const Tensor3 a = random_tensor(rng, 3.0);
                     const double tr = dev(a).trace();
                     if (std::abs(tr) <= 1e-14 * std::max(1.0, a.norm()))
                       return std::nullopt;
                     return "tr dev(A) = " + show(tr) + " for A = " + show(a);
                   }});

  props.push_back({"spectral reconstruction", [](Rng &rng) -> Failure {
                     const SymTensor3 a = random_sym(rng, 5.0);
                     const Spectrum3 s = sym_eigen(a);
                     const Tensor3 q = s.basis();
                     if (auto f = expect_close(s.reconstruct(), a, 1e-12,
                                               "reconstruction of " + show(a)))
                       return f;
                     if (auto f = expect_close(q.transpose() * q,
                                               Tensor3::identity(), 1e-12,
                                               "orthogonality for " + show(a)))
                       return f;
                     if (!(s.values[0] >= s.values[1] &&
                           s.values[1] >= s.values[2]))
                       return "eigenvalues not descending for " + show(a);
                     return std::nullopt;
                   }});

  props.push_back({"log/exp round trip", [](Rng &rng) -> Failure {
                     const SPDTensor3 a = random_spd(rng, 2.0);
                     if (auto f = expect_close(spd_exp(spd_log(a)), a, 1e-10,
                                               "exp(log A) for A = " + show(a)))
                       return f;
                     const SymTensor3 s = random_sym(rng, 3.0);
                     return expect_close(spd_log(spd_exp(s)), s, 1e-10,
                                         "log(exp S) for S = " + show(s));
                   }});

  props.push_back({"tr log A = log det A", [](Rng &rng) -> Failure {
                     const SPDTensor3 a = random_spd(rng, 2.0);
                     return expect_scalar(spd_log(a).tensor().trace(),
                                          std::log(a.tensor().det()), 1e-10,
                                          "A = " + show(a));
                   }});

  props.push_back({"polar decomposition", [](Rng &rng) -> Failure {
                     const SPDTensor3 v0 = random_spd(rng, 1.0);
                     const Rotation3 r0 = random_rotation(rng);
                     const Tensor3 f = v0.tensor() * r0.tensor();
                     const PolarFactors p = polar_decompose(f);
                     const std::string tag = " for F = " + show(f);
                     if (auto e = expect_close(p.V.tensor() * p.R.tensor(), f,
                                               1e-10, "F = V R" + tag))
                       return e;
                     if (auto e = expect_close(p.U.tensor() * p.U.tensor(),
                                               f.transpose() * f, 1e-10,
                                               "U^2 = F^T F" + tag))
                       return e;
                     if (auto e = expect_close(p.R.tensor() * p.U.tensor(), f,
                                               1e-10, "F = R U" + tag))
                       return e;
                     if (auto e = expect_close(p.V, v0, 1e-9, "V unique" + tag))
                       return e;
                     return expect_close(p.R, r0, 1e-9, "R unique" + tag);
                   }});

  props.push_back({"trace cyclicity", [](Rng &rng) -> Failure {
                     const Tensor3 a = random_tensor(rng), b = random_tensor(rng),
                                   c = random_tensor(rng);
                     const double t1 = (a * b * c).trace();
                     const double scale =
                         std::max(1.0, a.norm() * b.norm() * c.norm());
                     const double t2 = (b * c * a).trace();
                     const double t3 = (c * a * b).trace();
                     if (std::abs(t1 - t2) <= 1e-10 * scale &&
                         std::abs(t1 - t3) <= 1e-10 * scale)
                       return std::nullopt;
                     return "tr(ABC) mismatch for A = " + show(a);
                   }});

  props.push_back({"similarity of matrix functions", [](Rng &rng) -> Failure {
                     const SymTensor3 a = random_sym(rng, 2.0);
                     const Tensor3 q = random_rotation(rng);
                     const ScalarMap g{[](double x) { return std::exp(x); },
                                       Interval::all(), "exp"};
                     const Tensor3 lhs = apply_scale(
                         SymTensor3::symmetrize(q * a.tensor() * q.transpose()),
                         g);
                     const Tensor3 rhs =
                         q * apply_scale(a, g).tensor() * q.transpose();
                     return expect_close(lhs, rhs, 1e-9,
                                         "g(Q A Q^T) for A = " + show(a));
                   }});

  props.push_back({"adjoint identity", [](Rng &rng) -> Failure {
                     const Tensor3 a = random_tensor(rng);
                     const Vec3 x = random_vector(rng), y = random_vector(rng);
                     const double lhs = dot(x, a * y);
                     const double rhs = dot(y, a.transpose() * x);
                     if (std::abs(lhs - rhs) <= 1e-12)
                       return std::nullopt;
                     return "<x, A y> != <y, A^T x> for A = " + show(a);
                   }});

  props.push_back({"cross product transformation", [](Rng &rng) -> Failure {
                     const Tensor3 j = random_jacobian(rng, 1.0);
                     const Vec3 x = random_vector(rng), y = random_vector(rng);
                     const Vec3 lhs = cross(j * x, j * y);
                     const Vec3 rhs =
                         j.det() * (j.inverse().transpose() * cross(x, y));
                     const double err =
                         norm(lhs - rhs) / std::max(1.0, norm(rhs));
                     if (err <= 1e-9)
                       return std::nullopt;
                     return "(Jx) x (Jy) mismatch for J = " + show(j);
                   }});

  props.push_back({"log additivity for coaxial stretches",
                   [](Rng &rng) -> Failure {
                     const auto [v1, v2] = random_coaxial_pair(rng);
                     const SPDTensor3 prod(
                         SymTensor3::symmetrize(v1.tensor() * v2.tensor()));
                     return expect_close(
                         spd_log(prod),
                         spd_log(v1).tensor() + spd_log(v2).tensor(), 1e-9,
                         "log(V1 V2) for V1 = " + show(v1) + ", V2 = " +
                             show(v2));
                   }});

  props.push_back(
      {"isochoric/volumetric split", [dev, I](Rng &rng) -> Failure {
         const SPDTensor3 v = random_spd(rng, 1.0);
         const Tensor3 l = spd_log(v);
         const double det = v.tensor().det();
         const std::string tag = " for V = " + show(v);
         if (auto f = expect_close(dev(l) + (std::log(det) / 3.0) * I, l, 1e-9,
                                   "log V = dev log V + log(det V)/3 I" + tag))
           return f;
         const SPDTensor3 iso(
             SymTensor3::symmetrize(v.tensor() / std::cbrt(det)));
         return expect_close(dev(l), spd_log(iso), 1e-9,
                             "dev log V = log(V / det^(1/3))" + tag);
       }});

  props.push_back({"superposition principle", [](Rng &rng) -> Failure {
                     const auto [v1, v2] = random_coaxial_pair(rng);
                     for (const auto &label : family_labels()) {
                       const double res = check_superposition(
                           v1, v2, StrainFamily::parse(label));
                       if (res > 1e-9)
                         return label + ": residual " + show(res) +
                                " for V1 = " + show(v1) + ", V2 = " + show(v2);
                     }
                     return std::nullopt;
                   }});

  props.push_back({"rotation elimination", [](Rng &rng) -> Failure {
                     const StrainFamily fam = pick_family(rng);
                     const Tensor3 f = random_gradient(rng, 0.8);
                     const Tensor3 r = random_rotation(rng);
                     const std::string tag =
                         " (" + fam.label() + ", F = " + show(f) + ")";
                     if (auto e = expect_close(eulerian_strain(f * r, fam).E,
                                               eulerian_strain(f, fam).E, 1e-9,
                                               "E(F R) = E(F)" + tag))
                       return e;
                     return expect_close(lagrangian_strain(r * f, fam).E,
                                         lagrangian_strain(f, fam).E, 1e-9,
                                         "Ê(R F) = Ê(F)" + tag);
                   }});

  props.push_back({"frame covariance", [](Rng &rng) -> Failure {
                     const StrainFamily fam = pick_family(rng);
                     const Tensor3 f = random_gradient(rng, 0.8);
                     const Tensor3 r = random_rotation(rng);
                     const Tensor3 e = eulerian_strain(f, fam).E;
                     if (auto x = expect_close(
                             eulerian_strain(r * f, fam).E,
                             r * e * r.transpose(), 1e-9,
                             "E(R F) = R E R^T (" + fam.label() +
                                 ", F = " + show(f) + ")"))
                       return x;
                     const PolarFactors p = polar_decompose(f);
                     return expect_close(
                         lagrangian_strain(f, fam).E,
                         p.R.tensor().transpose() * e * p.R.tensor(), 1e-9,
                         "Ê = R^T E R (" + fam.label() + ", F = " + show(f) +
                             ")");
                   }});

  props.push_back({"strain conversion", [](Rng &rng) -> Failure {
                     const StrainFamily a = pick_family(rng);
                     const StrainFamily b = pick_family(rng);
                     const Tensor3 f = random_gradient(rng, 0.8);
                     const SymTensor3 ea = eulerian_strain(f, a).E;
                     const SymTensor3 eb = convert_strain(ea, a, b);
                     const std::string tag = " (" + a.label() + " -> " +
                                             b.label() + ", F = " + show(f) +
                                             ")";
                     if (auto e = expect_close(eb, eulerian_strain(f, b).E, 1e-9,
                                               "converted strain" + tag))
                       return e;
                     return expect_close(convert_strain(eb, b, a), ea, 1e-10,
                                         "round trip" + tag);
                   }});

  props.push_back({"deviator postulates", [](Rng &rng) -> Failure {
                     const StrainFamily fam = pick_family(rng);
                     const Tensor3 f = random_gradient(rng, 0.8);
                     const double lambda = uniform(rng, 0.5, 3.0);
                     const SymTensor3 d = richter_deviator(f, fam);
                     const std::string tag =
                         " (" + fam.label() + ", F = " + show(f) + ")";
                     if (auto e = expect_close(richter_deviator(lambda * f, fam),
                                               d, 1e-10, "D(λF) = D(F)" + tag))
                       return e;
                     const Tensor3 iso = f / std::cbrt(f.det());
                     return expect_close(richter_deviator(iso, fam),
                                         eulerian_strain(iso, fam).E, 1e-10,
                                         "D = E for det F = 1" + tag);
                   }});

  props.push_back({"almansi deviator closed form", [I](Rng &rng) -> Failure {
                     const Tensor3 f = random_gradient(rng, 0.8);
                     const Tensor3 b = f * f.transpose();
                     const Tensor3 tg = 0.5 * (I - b.inverse());
                     return expect_close(
                         deviator_from_almansi(tg),
                         richter_deviator(f, StrainFamily::builtin("almansi")),
                         1e-9, "F = " + show(f));
                   }});

  props.push_back({"character number and power law", [](Rng &rng) -> Failure {
                     const SPDTensor3 v = random_spd(rng, 1.0);
                     const int n = std::uniform_int_distribution<int>(2, 4)(rng);
                     const auto inv = strain_invariants(v);
                     const auto inv_n = strain_invariants(spd_power(v, n));
                     const std::string tag = " for V = " + show(v);
                     if (!inv.zeta || *inv.zeta < 0.0 ||
                         *inv.zeta > 1.0 / 6.0 + 1e-12)
                       return "zeta outside [0, 1/6]" + tag;
                     if (auto e = expect_scalar(inv_n.y, n * n * inv.y, 1e-9,
                                                "y(V^n) = n^2 y" + tag))
                       return e;
                     if (auto e = expect_scalar(inv_n.z, n * n * n * inv.z, 1e-9,
                                                "z(V^n) = n^3 z" + tag))
                       return e;
                     if (auto e = expect_scalar(inv_n.amount, n * inv.amount,
                                                1e-9, "sqrt y scaling" + tag))
                       return e;
                     return expect_scalar(*inv_n.zeta, *inv.zeta, 1e-9,
                                          "zeta(V^n) = zeta" + tag);
                   }});

  props.push_back({"principal deviatoric strains", [](Rng &rng) -> Failure {
                     const Tensor3 f = random_gradient(rng, 1.0);
                     const auto inv = strain_invariants(f);
                     const Vec3 roots = principal_deviatoric_strains(inv.y, inv.z);
                     const SymTensor3 l = eulerian_strain(
                         f, StrainFamily::builtin("hencky")).L;
                     const Spectrum3 s =
                         sym_eigen(SymTensor3::symmetrize(deviator(l)));
                     for (int i = 0; i < 3; ++i)
                       if (std::abs(roots[i] - s.values[i]) > 1e-8)
                         return "root " + std::to_string(i) + " = " +
                                show(roots[i]) + " vs eigenvalue " +
                                show(s.values[i]) + " for F = " + show(f);
                     return std::nullopt;
                   }});

  props.push_back({"mixed invariants under coordinate change",
                   [](Rng &rng) -> Failure {
                     const CoordinateChart chart = random_chart(rng);
                     const Tensor3 f0 = random_gradient(rng, 0.8);
                     const Tensor3 f = curvilinear_gradient(f0, chart);
                     const Tensor3 ls = log_strain_mixed(f, chart);
                     const Tensor3 l = eulerian_strain(
                         f0, StrainFamily::builtin("hencky")).L;
                     const auto a = principal_invariants(ls);
                     const auto b = principal_invariants(l);
                     const std::string tag = " for F0 = " + show(f0) +
                                             ", J = " + show(chart.J);
                     for (auto [x, y] : {std::pair{a.j, b.j}, std::pair{a.k, b.k},
                                         std::pair{a.l, b.l}})
                       if (auto e = expect_scalar(x, y, 1e-9, "invariant" + tag))
                         return e;
                     return expect_scalar(ls.trace(), std::log(f0.det()), 1e-10,
                                          "tr L* = log det F0" + tag);
                   }});

  props.push_back({"stress gradient identity", [](Rng &rng) -> Failure {
                     const SymTensor3 l = random_sym(rng, 1.0);
                     for (const char *name :
                          {"j", "k", "l", "quadratic-hencky", "jk"}) {
                       const double err =
                           gradient_check(l, EnergyPotential::builtin(name));
                       if (err > 1e-5)
                         return std::string(name) + ": error " + show(err) +
                                " for L = " + show(l);
                     }
                     return std::nullopt;
                   }});

  props.push_back({"stress objectivity and isotropy", [](Rng &rng) -> Failure {
                     const Tensor3 f = random_gradient(rng, 0.8);
                     const Tensor3 r = random_rotation(rng);
                     const auto w = EnergyPotential::builtin("jk");
                     const Tensor3 s = cauchy_stress(f, w).sigma;
                     const std::string tag = " for F = " + show(f);
                     if (auto e = expect_close(cauchy_stress(f * r, w).sigma, s,
                                               1e-9, "sigma(F R) = sigma(F)" + tag))
                       return e;
                     return expect_close(
                         cauchy_stress(r * f * r.transpose(), w).sigma,
                         r * s * r.transpose(), 1e-9,
                         "sigma(R F R^T) = R sigma R^T" + tag);
                   }});

  props.push_back({"work invariance", [](Rng &rng) -> Failure {
                     const CoordinateChart chart = random_chart(rng);
                     const Tensor3 sigma = random_tensor(rng, 2.0);
                     const Vec3 dx1 = random_vector(rng), dx2 = random_vector(rng),
                                dz = random_vector(rng);
                     const Tensor3 j_inv = chart.J.inverse();
                     const double cart = dot(j_inv * dz,
                                             sigma * cross(j_inv * dx1, j_inv * dx2));
                     for (auto c : {VarianceCase::Alpha, VarianceCase::Beta}) {
                       const double curv =
                           dot(dz, transform_stress(sigma, chart, c) *
                                       surface_element(dx1, dx2, chart, c));
                       if (auto e = expect_scalar(
                               curv, cart, 1e-9,
                               std::string(to_string(c)) + " work for J = " +
                                   show(chart.J)))
                         return e;
                     }
                     return std::nullopt;
                   }});

  props.push_back({"mean stress invariance", [](Rng &rng) -> Failure {
                     const CoordinateChart chart = random_chart(rng);
                     const Tensor3 sigma = random_tensor(rng, 2.0);
                     const double cart = sigma.transpose().trace() / 3.0;
                     for (auto c : {VarianceCase::Alpha, VarianceCase::Beta}) {
                       const double m =
                           mean_stress(transform_stress(sigma, chart, c), chart, c);
                       if (std::abs(m - cart) > 1e-10 * std::max(1.0, std::abs(cart)))
                         return std::string(to_string(c)) + ": " + show(m) +
                                " vs " + show(cart) + " for J = " + show(chart.J);
                     }
                     return std::nullopt;
                   }});

  return props;
}

} // namespace

Report run_property_suite(std::uint64_t seed, int trials, const Hooks &hooks) {
  if (trials < 1)
    throw InvalidInput("trials must be at least 1");
  Report report;
  report.seed = seed;
  const auto props = build_properties(hooks);
  for (std::size_t p = 0; p < props.size(); ++p) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p)};
    Rng rng(seq);
    PropertyOutcome outcome{props[p].name, 0, true, {}};
    for (int t = 0; t < trials; ++t) {
      ++outcome.trials;
      Failure fail;
      try {
        fail = props[p].trial(rng);
      } catch (const std::exception &e) {
        fail = std::string("exception: ") + e.what();
      }
      if (fail) {
        outcome.passed = false;
        outcome.failure = "trial " + std::to_string(t) + ": " + *fail;
        break;
      }
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

} // namespace finstrain::check
