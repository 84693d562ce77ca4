#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>

namespace finstrain {

using Vec3 = std::array<double, 3>;

/// Dense 3x3 real matrix, row-major storage. Zero-initialized.
class Tensor3 {
public:
  constexpr Tensor3() = default;

  /// Row-wise literal: Tensor3{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}.
  Tensor3(std::initializer_list<std::initializer_list<double>> rows);

  static constexpr Tensor3 zero() { return {}; }
  static constexpr Tensor3 identity() { return diag(1.0, 1.0, 1.0); }
  static constexpr Tensor3 diag(double a, double b, double c) {
    Tensor3 t;
    t.a_[0] = a;
    t.a_[4] = b;
    t.a_[8] = c;
    return t;
  }
  static constexpr Tensor3 from_row_major(std::span<const double, 9> values) {
    Tensor3 t;
    for (std::size_t i = 0; i < 9; ++i)
      t.a_[i] = values[i];
    return t;
  }
  /// u ⊗ v, i.e. entries u_i v_j.
  static constexpr Tensor3 outer(const Vec3 &u, const Vec3 &v) {
    Tensor3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t(i, j) = u[i] * v[j];
    return t;
  }
  /// Matrix whose columns are c0, c1, c2.
  static constexpr Tensor3 from_columns(const Vec3 &c0, const Vec3 &c1,
                                        const Vec3 &c2) {
    Tensor3 t;
    for (int i = 0; i < 3; ++i) {
      t(i, 0) = c0[i];
      t(i, 1) = c1[i];
      t(i, 2) = c2[i];
    }
    return t;
  }

  constexpr double &operator()(int i, int j) { return a_[3 * i + j]; }
  constexpr double operator()(int i, int j) const { return a_[3 * i + j]; }

  std::span<const double, 9> row_major() const { return a_; }
  constexpr Vec3 column(int j) const { return {a_[j], a_[3 + j], a_[6 + j]}; }
  constexpr Vec3 row(int i) const {
    return {a_[3 * i], a_[3 * i + 1], a_[3 * i + 2]};
  }

  constexpr Tensor3 &operator+=(const Tensor3 &o) {
    for (std::size_t i = 0; i < 9; ++i)
      a_[i] += o.a_[i];
    return *this;
  }
  constexpr Tensor3 &operator-=(const Tensor3 &o) {
    for (std::size_t i = 0; i < 9; ++i)
      a_[i] -= o.a_[i];
    return *this;
  }
  constexpr Tensor3 &operator*=(double s) {
    for (auto &x : a_)
      x *= s;
    return *this;
  }

  friend constexpr Tensor3 operator+(Tensor3 a, const Tensor3 &b) {
    return a += b;
  }
  friend constexpr Tensor3 operator-(Tensor3 a, const Tensor3 &b) {
    return a -= b;
  }
  friend constexpr Tensor3 operator-(Tensor3 a) { return a *= -1.0; }
  friend constexpr Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
  friend constexpr Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
  friend constexpr Tensor3 operator/(Tensor3 a, double s) {
    return a *= 1.0 / s;
  }
  friend constexpr Tensor3 operator*(const Tensor3 &a, const Tensor3 &b) {
    Tensor3 c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        const double aik = a(i, k);
        for (int j = 0; j < 3; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend constexpr Vec3 operator*(const Tensor3 &a, const Vec3 &x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
      y[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
    return y;
  }
  friend constexpr bool operator==(const Tensor3 &, const Tensor3 &) = default;

  constexpr Tensor3 transpose() const {
    Tensor3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }
  constexpr double trace() const { return a_[0] + a_[4] + a_[8]; }
  double det() const;
  /// Throws SingularError when det == 0 or the result is not finite.
  Tensor3 inverse() const;
  double norm() const; ///< Frobenius
  double max_abs() const;
  bool is_finite() const;
  Tensor3 sym() const { return 0.5 * (*this + transpose()); }

private:
  std::array<double, 9> a_{};
};

std::ostream &operator<<(std::ostream &os, const Tensor3 &t);

constexpr double dot(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
constexpr Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
constexpr Vec3 operator*(double s, const Vec3 &a) {
  return {s * a[0], s * a[1], s * a[2]};
}
constexpr Vec3 operator+(const Vec3 &a, const Vec3 &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
constexpr Vec3 operator-(const Vec3 &a, const Vec3 &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

/// tr(A B) without forming the product.
constexpr double trace_product(const Tensor3 &a, const Tensor3 &b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      s += a(i, k) * b(k, i);
  return s;
}

/// Frobenius distance relative to max(1, |reference|).
double relative_difference(const Tensor3 &value, const Tensor3 &reference);

/// Symmetric 3x3 tensor. Construction enforces
/// ||A - A^T||_F <= 1e-12 max(1, ||A||_F) and stores the symmetric part.
class SymTensor3 {
public:
  static constexpr double kSymmetryTolerance = 1e-12;

  SymTensor3() = default;
  explicit SymTensor3(const Tensor3 &a);

  /// Symmetric part of an arbitrary finite tensor (no symmetry check).
  static SymTensor3 symmetrize(const Tensor3 &a);

  const Tensor3 &tensor() const noexcept { return t_; }
  operator const Tensor3 &() const noexcept { return t_; }
  double operator()(int i, int j) const { return t_(i, j); }

protected:
  struct Trusted {};
  SymTensor3(const Tensor3 &a, Trusted) : t_(a) {}

  Tensor3 t_;
};

/// Symmetric positive definite tensor (leading principal minors > 0).
class SPDTensor3 : public SymTensor3 {
public:
  SPDTensor3() : SymTensor3(Tensor3::identity(), Trusted{}) {}
  explicit SPDTensor3(const Tensor3 &a);
  explicit SPDTensor3(const SymTensor3 &a);

  static bool is_positive_definite(const Tensor3 &symmetric);
};

/// Proper rotation: ||R^T R - I||_F <= 1e-12 and det R > 0.
class Rotation3 {
public:
  static constexpr double kOrthogonalityTolerance = 1e-12;

  Rotation3() : t_(Tensor3::identity()) {}
  explicit Rotation3(const Tensor3 &r);

  /// Rodrigues rotation by `angle` radians about `axis` (need not be unit).
  static Rotation3 about_axis(const Vec3 &axis, double angle);

  const Tensor3 &tensor() const noexcept { return t_; }
  operator const Tensor3 &() const noexcept { return t_; }
  Rotation3 transpose() const;

private:
  Tensor3 t_;
};

} // namespace finstrain
