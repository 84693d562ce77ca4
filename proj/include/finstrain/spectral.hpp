#pragma once

#include "finstrain/tensor.hpp"

#include <functional>
#include <limits>
#include <string>

namespace finstrain {

/// Spectral decomposition of a symmetric tensor.
///
/// Eigenvalues are sorted in descending order and `vectors[i]` pairs with
/// `values[i]`. Each eigenvector's largest-magnitude component is positive
/// (lowest index wins a tie), so results are reproducible bit for bit.
struct Spectrum3 {
  Vec3 values{};
  std::array<Vec3, 3> vectors{};

  /// Sum of values[i] * e_i ⊗ e_i.
  Tensor3 reconstruct() const;
  /// Orthogonal matrix with the eigenvectors as columns.
  Tensor3 basis() const;
};

/// Cyclic Jacobi eigensolver. Stops once the off-diagonal Frobenius norm is
/// at most 1e-15 ||A||, or after 50 sweeps.
Spectrum3 sym_eigen(const SymTensor3 &a);

/// Open interval (lo, hi).
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  static Interval all() { return {}; }
  static Interval positive() { return {0.0, Interval{}.hi}; }
};

/// A scalar function with the domain it may be evaluated on.
struct ScalarMap {
  std::function<double(double)> fn;
  Interval domain = Interval::all();
  std::string name = "g";

  double operator()(double x) const { return fn(x); }
};

/// Primary matrix function: sum of g(λ_i) e_i ⊗ e_i.
/// Throws DomainError naming the first eigenvalue outside g's domain.
SymTensor3 apply_scale(const SymTensor3 &a, const ScalarMap &g);
SymTensor3 apply_scale(const Spectrum3 &spectrum, const ScalarMap &g);

SymTensor3 spd_log(const SPDTensor3 &a);
SPDTensor3 spd_exp(const SymTensor3 &a);
SPDTensor3 spd_sqrt(const SPDTensor3 &a);
/// A^p for real p.
SPDTensor3 spd_power(const SPDTensor3 &a, double p);

/// Which side the SPD factor multiplies from in `apply_scale_product`.
enum class FactorSide { Left, Right };

/// g(M S) (side Left) or g(S M) (side Right) for SPD M and symmetric S.
///
/// The product is generally not symmetric but is similar to the symmetric
/// M^{1/2} S M^{1/2}, so g(M S) = M^{1/2} g(M^{1/2} S M^{1/2}) M^{-1/2}.
Tensor3 apply_scale_product(const SPDTensor3 &m, const SymTensor3 &s,
                            FactorSide side, const ScalarMap &g);

/// Left stretch V, rotation R and right stretch U with F = V R = R U.
struct PolarFactors {
  SPDTensor3 V;
  Rotation3 R;
  SPDTensor3 U;
};

/// Throws SingularError for det F = 0 and OrientationError for det F < 0.
PolarFactors polar_decompose(const Tensor3 &f);

/// Orientation guard shared by all operations that need det F > 0.
/// Returns det F.
double require_proper(const Tensor3 &f);

/// A - tr(A)/3 I.
Tensor3 deviator(const Tensor3 &a);

/// Power traces (tr A, tr A^2, tr A^3).
struct TraceInvariants {
  double j = 0.0;
  double k = 0.0;
  double l = 0.0;
};

TraceInvariants principal_invariants(const Tensor3 &a);

/// Characteristic polynomial written through the power traces:
/// x^3 - j x^2 + (j^2 - k)/2 x - (l/3 - j k/2 + j^3/6).
double characteristic_polynomial(const TraceInvariants &inv, double x);

/// ||AB - BA||_F <= 1e-10 ||A||_F ||B||_F.
bool commutes(const Tensor3 &a, const Tensor3 &b);

} // namespace finstrain
