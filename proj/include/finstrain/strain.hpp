#pragma once

#include "finstrain/spectral.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace finstrain {

/// One member of the strain family E = f̃(log V).
///
/// `f_tilde` maps a logarithmic principal stretch to a principal strain and
/// `f` is its inverse (the superposition function: f(E1) + f(E2) = f(E) for
/// coaxial stretches). Both are normalized so that f̃(0) = 0 and f̃'(0) = 1.
/// Instances are immutable after construction.
class StrainFamily {
public:
  /// Built-in catalogue: hencky, seth-hill (needs m != 0), almansi, green,
  /// biot, bazant. Throws UnknownFamily for anything else.
  static StrainFamily builtin(std::string_view name,
                              std::optional<double> m = std::nullopt);

  /// Parses "NAME" or "NAME:m" (e.g. "seth-hill:0.5").
  static StrainFamily parse(std::string_view text);

  /// User-defined pair. The normalization and inverse-pair invariants are
  /// checked on 41 points in [-2, 2]; oddness is detected on the same grid.
  /// Throws InvalidInput when a check fails.
  static StrainFamily custom(std::string name, ScalarMap f_tilde, ScalarMap f,
                             std::function<double(double)> f_tilde_prime);

  const std::string &name() const noexcept { return name_; }
  /// Canonical spelling accepted by `parse`.
  std::string label() const;
  const ScalarMap &f_tilde() const noexcept { return f_tilde_; }
  const ScalarMap &f() const noexcept { return f_; }
  double f_tilde_prime(double x) const { return f_tilde_prime_(x); }
  bool odd() const noexcept { return odd_; }
  std::optional<double> m() const noexcept { return m_; }

private:
  StrainFamily() = default;

  std::string name_;
  ScalarMap f_tilde_;
  ScalarMap f_;
  std::function<double(double)> f_tilde_prime_;
  bool odd_ = false;
  std::optional<double> m_;
};

enum class Frame { Eulerian, Lagrangian };

std::string_view to_string(Frame frame);
Frame parse_frame(std::string_view text);

/// A strain value together with the logarithmic strain it came from.
struct StrainState {
  SymTensor3 E;
  SymTensor3 L; ///< log V (Eulerian) or log U (Lagrangian)
  StrainFamily family;
  Frame frame;
};

/// E = f̃(log V) with V the left stretch of F.
StrainState eulerian_strain(const Tensor3 &f, const StrainFamily &family);
/// Ê = f̃(log U) with U the right stretch of F.
StrainState lagrangian_strain(const Tensor3 &f, const StrainFamily &family);
StrainState strain(const Tensor3 &f, const StrainFamily &family, Frame frame);

/// Re-expresses a strain of one family in another: (to.f̃ ∘ from.f)(E).
SymTensor3 convert_strain(const SymTensor3 &e, const StrainFamily &from,
                          const StrainFamily &to);

/// ||f(E(V1)) + f(E(V2)) - f(E(V1 V2))||_F for coaxial V1, V2.
/// Throws NonCoaxial when V1 and V2 do not commute.
double check_superposition(const SPDTensor3 &v1, const SPDTensor3 &v2,
                           const StrainFamily &family);

struct SymmetryWitness {
  bool symmetric = false;
  double residual = 0.0; ///< ||E(V^-1) + E(V)||_F
};

/// Tests E(V^-1) = -E(V) within 1e-10 (1 + ||E(V)||).
SymmetryWitness is_tension_compression_symmetric(const StrainFamily &family,
                                                 const SPDTensor3 &v);

} // namespace finstrain
