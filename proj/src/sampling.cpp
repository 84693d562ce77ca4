#include "finstrain/sampling.hpp"

namespace finstrain::sampling {

double uniform(Rng &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 random_vector(Rng &rng, double scale) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale),
          uniform(rng, -scale, scale)};
}

Rotation3 random_rotation(Rng &rng) {
  std::normal_distribution<double> normal;
  double w = 0, x = 0, y = 0, z = 0, n = 0;
  do {
    w = normal(rng);
    x = normal(rng);
    y = normal(rng);
    z = normal(rng);
    n = std::sqrt(w * w + x * x + y * y + z * z);
  } while (n < 1e-6);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  const Tensor3 r{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z),
                   2 * (x * z + w * y)},
                  {2 * (x * y + w * z), 1 - 2 * (x * x + z * z),
                   2 * (y * z - w * x)},
                  {2 * (x * z - w * y), 2 * (y * z + w * x),
                   1 - 2 * (x * x + y * y)}};
  return Rotation3(r);
}

namespace {

Tensor3 conjugate_diag(const Tensor3 &q, double a, double b, double c) {
  return q * Tensor3::diag(a, b, c) * q.transpose();
}

} // namespace

SPDTensor3 random_spd(Rng &rng, double log_range) {
  const Tensor3 q = random_rotation(rng);
  const Vec3 u = random_vector(rng, log_range);
  return SPDTensor3(SymTensor3::symmetrize(
      conjugate_diag(q, std::exp(u[0]), std::exp(u[1]), std::exp(u[2]))));
}

std::pair<SPDTensor3, SPDTensor3> random_coaxial_pair(Rng &rng,
                                                      double log_range) {
  const Tensor3 q = random_rotation(rng);
  const Vec3 u = random_vector(rng, log_range);
  const Vec3 w = random_vector(rng, log_range);
  auto make = [&](const Vec3 &e) {
    return SPDTensor3(SymTensor3::symmetrize(
        conjugate_diag(q, std::exp(e[0]), std::exp(e[1]), std::exp(e[2]))));
  };
  return {make(u), make(w)};
}

SymTensor3 random_sym(Rng &rng, double max_norm) {
  const Tensor3 a = random_tensor(rng).sym();
  const double n = a.norm();
  const double target = uniform(rng, 0.0, max_norm);
  return SymTensor3::symmetrize(n > 0.0 ? (target / n) * a : a);
}

Tensor3 random_tensor(Rng &rng, double scale) {
  Tensor3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = uniform(rng, -scale, scale);
  return t;
}

Tensor3 random_gradient(Rng &rng, double log_range) {
  const SPDTensor3 v = random_spd(rng, log_range);
  const Rotation3 r = random_rotation(rng);
  return v.tensor() * r.tensor();
}

Tensor3 random_jacobian(Rng &rng, double log_range) {
  const Tensor3 q1 = random_rotation(rng);
  const Tensor3 q2 = random_rotation(rng);
  const Vec3 u = random_vector(rng, log_range);
  return q1 * Tensor3::diag(std::exp(u[0]), std::exp(u[1]), std::exp(u[2])) *
         q2;
}

CoordinateChart random_chart(Rng &rng, double log_range) {
  const Tensor3 j = random_jacobian(rng, log_range);
  const Tensor3 j_hat = random_jacobian(rng, log_range);
  return chart_from_jacobians(j, j_hat);
}

} // namespace finstrain::sampling
