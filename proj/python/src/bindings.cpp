#include "finstrain/batch.hpp"
#include "finstrain/check.hpp"
#include "finstrain/invariants.hpp"
#include "finstrain/stress.hpp"

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace finstrain;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Tensor3 to_tensor(const Array &a) {
  if (a.ndim() != 2 || a.shape(0) != 3 || a.shape(1) != 3)
    throw InvalidInput("expected a 3x3 array");
  return Tensor3::from_row_major(std::span<const double, 9>(a.data(), 9));
}

Vec3 to_vec(const Array &a) {
  if (a.ndim() != 1 || a.shape(0) != 3)
    throw InvalidInput("expected a length-3 vector");
  return {a.data()[0], a.data()[1], a.data()[2]};
}

Array to_array(const Tensor3 &t) {
  Array out({3, 3});
  std::copy(t.row_major().begin(), t.row_major().end(), out.mutable_data());
  return out;
}

Array to_array(const Vec3 &v) {
  Array out(3);
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Frame frame_arg(const std::string &s) { return parse_frame(s); }

MixedConvention convention_arg(const std::string &s) {
  if (s == "covcontra")
    return MixedConvention::CovContra;
  if (s == "contracov")
    return MixedConvention::ContraCov;
  throw InvalidInput("convention must be 'covcontra' or 'contracov'");
}

py::dict invariants_dict(const StrainInvariants &inv) {
  py::dict d;
  d["v"] = inv.v;
  d["j"] = inv.j;
  d["y"] = inv.y;
  d["z"] = inv.z;
  d["zeta"] = inv.zeta ? py::cast(*inv.zeta) : py::none();
  d["amount"] = inv.amount;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-strain tensors from the logarithmic strain: strain "
            "families, deviators, invariants, curvilinear variants, stress.";

  auto base = py::register_exception<Error>(m, "FinstrainError");
  py::register_exception<InvalidInput>(m, "InvalidInput", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  auto orient = py::register_exception<OrientationError>(m, "OrientationError", base);
  py::register_exception<SingularError>(m, "SingularError", orient);
  py::register_exception<UnknownFamily>(m, "UnknownFamily", base);
  py::register_exception<NonCoaxial>(m, "NonCoaxial", base);
  py::register_exception<NotRealizable>(m, "NotRealizable", base);
  py::register_exception<PotentialError>(m, "PotentialError", base);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base);

  // tensor core
  m.def("sym_eigen", [](const Array &a) {
    const Spectrum3 s = sym_eigen(SymTensor3(to_tensor(a)));
    return py::make_tuple(to_array(s.values), to_array(s.basis()));
  }, py::arg("a"), "Eigenvalues (descending) and eigenvectors (columns).");
  m.def("spd_log", [](const Array &a) {
    return to_array(spd_log(SPDTensor3(to_tensor(a))));
  }, py::arg("a"));
  m.def("spd_exp", [](const Array &a) {
    return to_array(spd_exp(SymTensor3(to_tensor(a))));
  }, py::arg("a"));
  m.def("polar_decompose", [](const Array &f) {
    const PolarFactors p = polar_decompose(to_tensor(f));
    return py::make_tuple(to_array(p.V), to_array(p.R), to_array(p.U));
  }, py::arg("F"), "Returns (V, R, U) with F = V R = R U.");
  m.def("deviator", [](const Array &a) { return to_array(deviator(to_tensor(a))); },
        py::arg("a"));
  m.def("principal_invariants", [](const Array &a) {
    const auto inv = principal_invariants(to_tensor(a));
    return py::make_tuple(inv.j, inv.k, inv.l);
  }, py::arg("a"), "(tr A, tr A^2, tr A^3)");

  // strain families
  py::class_<StrainFamily>(m, "StrainFamily")
      .def_static("builtin", &StrainFamily::builtin, py::arg("name"),
                  py::arg("m") = std::nullopt)
      .def_static("parse", &StrainFamily::parse, py::arg("text"))
      .def_property_readonly("name", &StrainFamily::name)
      .def_property_readonly("label", &StrainFamily::label)
      .def_property_readonly("odd", &StrainFamily::odd)
      .def_property_readonly("m", &StrainFamily::m)
      .def("f_tilde", [](const StrainFamily &f, double x) { return f.f_tilde()(x); })
      .def("f", [](const StrainFamily &f, double y) {
        if (!f.f().domain.contains(y))
          throw DomainError("argument outside the domain of f", y);
        return f.f()(y);
      })
      .def("__repr__", [](const StrainFamily &f) {
        return "StrainFamily('" + f.label() + "')";
      });

  m.def("eulerian_strain", [](const Array &f, const StrainFamily &fam) {
    const auto s = eulerian_strain(to_tensor(f), fam);
    return py::make_tuple(to_array(s.E), to_array(s.L));
  }, py::arg("F"), py::arg("family"), "Returns (E, log V).");
  m.def("lagrangian_strain", [](const Array &f, const StrainFamily &fam) {
    const auto s = lagrangian_strain(to_tensor(f), fam);
    return py::make_tuple(to_array(s.E), to_array(s.L));
  }, py::arg("F"), py::arg("family"), "Returns (E, log U).");
  m.def("convert_strain", [](const Array &e, const StrainFamily &from,
                             const StrainFamily &to) {
    return to_array(convert_strain(SymTensor3(to_tensor(e)), from, to));
  }, py::arg("E"), py::arg("source"), py::arg("target"));
  m.def("check_superposition", [](const Array &v1, const Array &v2,
                                  const StrainFamily &fam) {
    return check_superposition(SPDTensor3(to_tensor(v1)),
                               SPDTensor3(to_tensor(v2)), fam);
  }, py::arg("V1"), py::arg("V2"), py::arg("family"));
  m.def("is_tension_compression_symmetric", [](const StrainFamily &fam,
                                               const Array &v) {
    const auto w = is_tension_compression_symmetric(fam, SPDTensor3(to_tensor(v)));
    return py::make_tuple(w.symmetric, w.residual);
  }, py::arg("family"), py::arg("V"));

  // deviator and invariants
  m.def("dilatation", [](const Array &f) { return dilatation(to_tensor(f)); },
        py::arg("F"));
  m.def("richter_deviator", [](const Array &f, const StrainFamily &fam,
                               const std::string &frame) {
    return to_array(richter_deviator(to_tensor(f), fam, frame_arg(frame)));
  }, py::arg("F"), py::arg("family"), py::arg("frame") = "eulerian");
  m.def("deviator_from_almansi", [](const Array &tg) {
    return to_array(deviator_from_almansi(to_tensor(tg)));
  }, py::arg("TG"));
  m.def("strain_invariants", [](const Array &f) {
    return invariants_dict(strain_invariants(to_tensor(f)));
  }, py::arg("F"));
  m.def("principal_deviatoric_strains", [](double y, double z) {
    return to_array(principal_deviatoric_strains(y, z));
  }, py::arg("y"), py::arg("z"));
  m.def("classify", [](const Array &f) {
    return std::string(to_string(classify(strain_invariants(to_tensor(f))).kind));
  }, py::arg("F"), "Deformation character of F.");

  // curvilinear
  py::class_<CoordinateChart>(m, "CoordinateChart")
      .def_property_readonly("J", [](const CoordinateChart &c) { return to_array(c.J); })
      .def_property_readonly("J_hat", [](const CoordinateChart &c) { return to_array(c.J_hat); })
      .def_property_readonly("G", [](const CoordinateChart &c) { return to_array(c.G); })
      .def_property_readonly("G_hat", [](const CoordinateChart &c) { return to_array(c.G_hat); });
  m.def("chart_from_jacobians", [](const Array &j, const Array &jh) {
    return chart_from_jacobians(to_tensor(j), to_tensor(jh));
  }, py::arg("J"), py::arg("J_hat"));
  m.def("curvilinear_gradient", [](const Array &f0, const CoordinateChart &c) {
    return to_array(curvilinear_gradient(to_tensor(f0), c));
  }, py::arg("F0"), py::arg("chart"));
  m.def("log_strain_mixed", [](const Array &f, const CoordinateChart &c,
                               const std::string &conv, const std::string &frame) {
    return to_array(log_strain_mixed(to_tensor(f), c, convention_arg(conv),
                                     frame_arg(frame)));
  }, py::arg("F"), py::arg("chart"), py::arg("convention") = "covcontra",
     py::arg("frame") = "eulerian");
  m.def("strain_nonmixed", [](const Array &l, const CoordinateChart &c) {
    return to_array(strain_nonmixed(SymTensor3(to_tensor(l)), c));
  }, py::arg("L"), py::arg("chart"));
  m.def("classical_strain", [](const Array &f, const CoordinateChart &c) {
    const auto s = classical_strain(to_tensor(f), c);
    return py::make_tuple(to_array(s.T), to_array(s.T_hat));
  }, py::arg("F"), py::arg("chart"), "Returns (T, T_hat).");

  // stress
  py::class_<EnergyPotential>(m, "EnergyPotential")
      .def(py::init([](std::string name, EnergyPotential::Fn w) {
             return EnergyPotential(std::move(name), std::move(w));
           }),
           py::arg("name"), py::arg("W"),
           "Potential W(j, k, l); partials by central differences.")
      .def_static("builtin", &EnergyPotential::builtin, py::arg("name"))
      .def_static("quadratic_hencky", &EnergyPotential::quadratic_hencky,
                  py::arg("lam") = 1.0, py::arg("mu") = 1.0)
      .def_property_readonly("name", &EnergyPotential::name);
  m.def("kirchhoff_stress", [](const Array &l, const EnergyPotential &w) {
    return to_array(kirchhoff_stress(SymTensor3(to_tensor(l)), w));
  }, py::arg("L"), py::arg("W"));
  m.def("cauchy_stress", [](const Array &f, const EnergyPotential &w) {
    const auto s = cauchy_stress(to_tensor(f), w);
    py::dict d;
    d["sigma"] = to_array(s.sigma);
    d["tau"] = to_array(s.tau);
    d["mean"] = s.mean;
    return d;
  }, py::arg("F"), py::arg("W"));
  m.def("gradient_check", [](const Array &l, const EnergyPotential &w) {
    return gradient_check(SymTensor3(to_tensor(l)), w);
  }, py::arg("L"), py::arg("W"));
  m.def("transform_stress", [](const Array &s, const CoordinateChart &c,
                               const std::string &v) {
    return to_array(transform_stress(to_tensor(s), c, parse_variance(v)));
  }, py::arg("sigma"), py::arg("chart"), py::arg("variance") = "beta");
  m.def("surface_element", [](const Array &a, const Array &b,
                              const CoordinateChart &c, const std::string &v) {
    return to_array(surface_element(to_vec(a), to_vec(b), c, parse_variance(v)));
  }, py::arg("dx1"), py::arg("dx2"), py::arg("chart"), py::arg("variance") = "beta");
  m.def("mean_stress", [](const Array &s, const CoordinateChart &c,
                          const std::string &v) {
    return mean_stress(to_tensor(s), c, parse_variance(v));
  }, py::arg("sigma_tilde"), py::arg("chart"), py::arg("variance") = "beta");
  m.def("work_increment", [](const Array &s, const Array &df,
                             const CoordinateChart &c, const std::string &v) {
    return work_increment(to_tensor(s), to_tensor(df), c, parse_variance(v));
  }, py::arg("sigma_tilde"), py::arg("dF"), py::arg("chart"),
     py::arg("variance") = "beta");

  // batch and checks
  m.def("curve", [](const StrainFamily &fam, double lo, double hi, int samples) {
    return batch::curve_csv(fam, lo, hi, samples);
  }, py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("samples"),
     "CSV text of (x, f_tilde(x)) samples.");
  m.def("run_check", [](std::uint64_t seed, int trials) {
    const auto r = check::run_property_suite(seed, trials);
    return py::make_tuple(r.passed(), r.text());
  }, py::arg("seed") = 42, py::arg("trials") = 50);
}
