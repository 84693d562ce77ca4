#include "finstrain/strain.hpp"

#include "finstrain/errors.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace finstrain {

namespace {

std::string format_shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

ScalarMap identity_map(const char *name) {
  return {[](double x) { return x; }, Interval::all(), name};
}

} // namespace

StrainFamily StrainFamily::builtin(std::string_view name,
                                   std::optional<double> m) {
  StrainFamily fam;
  fam.name_ = std::string(name);

  if (name != "seth-hill" && m) {
    throw InvalidInput("parameter m is only accepted by the seth-hill family");
  }

  if (name == "hencky") {
    fam.f_tilde_ = identity_map("hencky f~");
    fam.f_ = identity_map("hencky f");
    fam.f_tilde_prime_ = [](double) { return 1.0; };
    fam.odd_ = true;
    return fam;
  }

  if (name == "seth-hill" || name == "almansi" || name == "green") {
    double mm = 0.0;
    if (name == "almansi") {
      mm = -1.0;
    } else if (name == "green") {
      mm = 1.0;
    } else {
      if (!m)
        throw InvalidInput("seth-hill family requires the exponent m");
      mm = *m;
      if (!std::isfinite(mm))
        throw InvalidInput("seth-hill exponent m must be finite");
      if (mm == 0.0)
        throw InvalidInput(
            "seth-hill with m = 0 is the logarithmic strain; use the hencky "
            "family instead");
    }
    const double two_m = 2.0 * mm;
    fam.f_tilde_ = {[two_m](double x) { return std::expm1(two_m * x) / two_m; },
                    Interval::all(), fam.name_ + " f~"};
    const Interval dom = mm > 0.0 ? Interval{-1.0 / two_m, Interval{}.hi}
                                  : Interval{Interval{}.lo, -1.0 / two_m};
    fam.f_ = {[two_m](double y) { return std::log1p(two_m * y) / two_m; },
              dom, fam.name_ + " f"};
    fam.f_tilde_prime_ = [two_m](double x) { return std::exp(two_m * x); };
    fam.odd_ = false;
    fam.m_ = mm;
    return fam;
  }

  if (name == "biot") {
    fam.f_tilde_ = {[](double x) { return std::expm1(x); }, Interval::all(),
                    "biot f~"};
    fam.f_ = {[](double y) { return std::log1p(y); },
              Interval{-1.0, Interval{}.hi}, "biot f"};
    fam.f_tilde_prime_ = [](double x) { return std::exp(x); };
    fam.odd_ = false;
    return fam;
  }

  if (name == "bazant") {
    fam.f_tilde_ = {[](double x) { return std::sinh(x); }, Interval::all(),
                    "bazant f~"};
    fam.f_ = {[](double y) { return std::asinh(y); }, Interval::all(),
              "bazant f"};
    fam.f_tilde_prime_ = [](double x) { return std::cosh(x); };
    fam.odd_ = true;
    return fam;
  }

  throw UnknownFamily("unknown strain family '" + std::string(name) +
                      "' (expected hencky, seth-hill:m, almansi, green, "
                      "biot or bazant)");
}

StrainFamily StrainFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    return builtin(text);
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  double m = 0.0;
  auto res = std::from_chars(arg.data(), arg.data() + arg.size(), m);
  if (res.ec != std::errc{} || res.ptr != arg.data() + arg.size())
    throw InvalidInput("cannot parse family parameter '" + std::string(arg) +
                       "'");
  return builtin(name, m);
}

StrainFamily StrainFamily::custom(std::string name, ScalarMap f_tilde,
                                  ScalarMap f,
                                  std::function<double(double)> f_tilde_prime) {
  auto fail = [&](const std::string &why) {
    throw InvalidInput("strain family '" + name + "': " + why);
  };
  if (!f_tilde.fn || !f.fn || !f_tilde_prime)
    fail("all three functions must be provided");
  if (std::abs(f_tilde(0.0)) > 1e-12)
    fail("f~(0) must be 0");
  if (std::abs(f_tilde_prime(0.0) - 1.0) > 1e-10)
    fail("f~'(0) must be 1");

  constexpr int kGrid = 41;
  bool odd = true;
  double previous = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double x = -2.0 + 4.0 * i / (kGrid - 1);
    const double y = f_tilde(x);
    if (!std::isfinite(y))
      fail("f~(" + format_shortest(x) + ") is not finite");
    if (!(y > previous))
      fail("f~ is not strictly increasing near x = " + format_shortest(x));
    previous = y;
    if (!f.domain.contains(y))
      fail("f~(" + format_shortest(x) + ") leaves the domain of f");
    if (std::abs(f(y) - x) > 1e-10 * std::max(1.0, std::abs(x)))
      fail("f is not the inverse of f~ at x = " + format_shortest(x));
    if (std::abs(f_tilde(-x) + y) > 1e-12 * (1.0 + std::abs(y)))
      odd = false;
  }

  StrainFamily fam;
  fam.name_ = std::move(name);
  fam.f_tilde_ = std::move(f_tilde);
  fam.f_ = std::move(f);
  fam.f_tilde_prime_ = std::move(f_tilde_prime);
  fam.odd_ = odd;
  return fam;
}

std::string StrainFamily::label() const {
  if (name_ == "seth-hill" && m_)
    return name_ + ":" + format_shortest(*m_);
  return name_;
}

std::string_view to_string(Frame frame) {
  return frame == Frame::Eulerian ? "eulerian" : "lagrangian";
}

Frame parse_frame(std::string_view text) {
  if (text == "eulerian")
    return Frame::Eulerian;
  if (text == "lagrangian")
    return Frame::Lagrangian;
  throw InvalidInput("frame must be 'eulerian' or 'lagrangian', got '" +
                     std::string(text) + "'");
}

StrainState strain(const Tensor3 &f, const StrainFamily &family, Frame frame) {
  require_proper(f);
  // log V = 1/2 log(F F^T), log U = 1/2 log(F^T F); E shares the spectrum.
  const Tensor3 sq =
      frame == Frame::Eulerian ? f * f.transpose() : f.transpose() * f;
  if (!sq.is_finite())
    throw DomainError("stretch tensor overflows double precision", f.max_abs());
  Spectrum3 spectrum = sym_eigen(SymTensor3::symmetrize(sq));
  const ScalarMap half_log{[](double x) { return 0.5 * std::log(x); },
                           Interval::positive(), "log sqrt"};
  SymTensor3 l = apply_scale(spectrum, half_log);
  for (double &x : spectrum.values)
    x = 0.5 * std::log(x);
  SymTensor3 e = apply_scale(spectrum, family.f_tilde());
  return StrainState{e, l, family, frame};
}

StrainState eulerian_strain(const Tensor3 &f, const StrainFamily &family) {
  return strain(f, family, Frame::Eulerian);
}

StrainState lagrangian_strain(const Tensor3 &f, const StrainFamily &family) {
  return strain(f, family, Frame::Lagrangian);
}

SymTensor3 convert_strain(const SymTensor3 &e, const StrainFamily &from,
                          const StrainFamily &to) {
  const ScalarMap &inv = from.f();
  const ScalarMap &fwd = to.f_tilde();
  return apply_scale(e, ScalarMap{[&](double y) { return fwd(inv(y)); },
                                  inv.domain,
                                  from.label() + " -> " + to.label()});
}

double check_superposition(const SPDTensor3 &v1, const SPDTensor3 &v2,
                           const StrainFamily &family) {
  if (!commutes(v1, v2))
    throw NonCoaxial("stretches are not coaxial: ||V1 V2 - V2 V1|| exceeds "
                     "1e-10 ||V1|| ||V2||");
  auto strain_of = [&](const SPDTensor3 &v) {
    return apply_scale(spd_log(v), family.f_tilde());
  };
  const SPDTensor3 product(SymTensor3::symmetrize(v1.tensor() * v2.tensor()));
  const Tensor3 lhs = apply_scale(strain_of(v1), family.f()).tensor() +
                      apply_scale(strain_of(v2), family.f()).tensor();
  const Tensor3 rhs = apply_scale(strain_of(product), family.f());
  return (lhs - rhs).norm();
}

SymmetryWitness is_tension_compression_symmetric(const StrainFamily &family,
                                                 const SPDTensor3 &v) {
  const SymTensor3 l = spd_log(v);
  const Tensor3 e = apply_scale(l, family.f_tilde());
  const Tensor3 e_inv =
      apply_scale(SymTensor3::symmetrize(-l.tensor()), family.f_tilde());
  SymmetryWitness w;
  w.residual = (e + e_inv).norm();
  w.symmetric = w.residual <= 1e-10 * (1.0 + e.norm());
  return w;
}

} // namespace finstrain
