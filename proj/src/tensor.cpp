#include "finstrain/tensor.hpp"

#include "finstrain/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace finstrain {

Tensor3::Tensor3(std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() != 3)
    throw InvalidInput("Tensor3 literal needs exactly 3 rows");
  int i = 0;
  for (const auto &r : rows) {
    if (r.size() != 3)
      throw InvalidInput("Tensor3 literal rows need exactly 3 entries");
    int j = 0;
    for (double x : r)
      (*this)(i, j++) = x;
    ++i;
  }
}

double Tensor3::det() const {
  const auto &a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Tensor3 Tensor3::inverse() const {
  const auto &a = *this;
  const double d = det();
  if (d == 0.0)
    throw SingularError("matrix is singular (det = 0)");
  Tensor3 c;
  c(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  c(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  c(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  c(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  c(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  c(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  c(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  c(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  c(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  c *= 1.0 / d;
  if (!c.is_finite())
    throw SingularError("matrix inverse is not finite");
  return c;
}

double Tensor3::norm() const {
  double s = 0.0;
  for (double x : a_)
    s += x * x;
  return std::sqrt(s);
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : a_)
    m = std::max(m, std::abs(x));
  return m;
}

bool Tensor3::is_finite() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](double x) { return std::isfinite(x); });
}

std::ostream &operator<<(std::ostream &os, const Tensor3 &t) {
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j)
      os << (j ? ", " : "") << t(i, j);
    os << ']';
  }
  return os << ']';
}

double relative_difference(const Tensor3 &value, const Tensor3 &reference) {
  return (value - reference).norm() / std::max(1.0, reference.norm());
}

namespace {

void require_finite(const Tensor3 &a, const char *what) {
  if (!a.is_finite()) {
    std::ostringstream msg;
    msg << what << " has non-finite entries: " << a;
    throw InvalidInput(msg.str());
  }
}

} // namespace

SymTensor3::SymTensor3(const Tensor3 &a) {
  require_finite(a, "SymTensor3");
  const double asym = (a - a.transpose()).norm();
  if (asym > kSymmetryTolerance * std::max(1.0, a.norm())) {
    std::ostringstream msg;
    msg << "tensor is not symmetric (||A - A^T|| = " << asym << ")";
    throw InvalidInput(msg.str());
  }
  t_ = a.sym();
}

SymTensor3 SymTensor3::symmetrize(const Tensor3 &a) {
  require_finite(a, "SymTensor3");
  return SymTensor3(a.sym(), Trusted{});
}

bool SPDTensor3::is_positive_definite(const Tensor3 &s) {
  const double m1 = s(0, 0);
  const double m2 = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  return m1 > 0.0 && m2 > 0.0 && s.det() > 0.0;
}

SPDTensor3::SPDTensor3(const Tensor3 &a) : SPDTensor3(SymTensor3(a)) {}

SPDTensor3::SPDTensor3(const SymTensor3 &a) : SymTensor3(a) {
  if (!is_positive_definite(t_)) {
    std::ostringstream msg;
    msg << "tensor is not positive definite: " << t_;
    throw DomainError(msg.str(), t_.det());
  }
}

Rotation3::Rotation3(const Tensor3 &r) {
  require_finite(r, "Rotation3");
  const double err = (r.transpose() * r - Tensor3::identity()).norm();
  if (err > kOrthogonalityTolerance) {
    std::ostringstream msg;
    msg << "matrix is not orthogonal (||R^T R - I|| = " << err << ")";
    throw InvalidInput(msg.str());
  }
  if (r.det() <= 0.0)
    throw OrientationError("rotation must have det R > 0");
  t_ = r;
}

Rotation3 Rotation3::about_axis(const Vec3 &axis, double angle) {
  const double n = norm(axis);
  if (!(n > 0.0))
    throw InvalidInput("rotation axis must be non-zero");
  const Vec3 k = (1.0 / n) * axis;
  const Tensor3 kx{{0.0, -k[2], k[1]}, {k[2], 0.0, -k[0]}, {-k[1], k[0], 0.0}};
  const Tensor3 r = Tensor3::identity() + std::sin(angle) * kx +
                    (1.0 - std::cos(angle)) * (kx * kx);
  return Rotation3(r);
}

Rotation3 Rotation3::transpose() const {
  Rotation3 r;
  r.t_ = t_.transpose();
  return r;
}

} // namespace finstrain
