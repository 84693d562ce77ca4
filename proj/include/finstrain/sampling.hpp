#pragma once

// Random instance generators shared by the `check` command and the tests.

#include "finstrain/curvilinear.hpp"

#include <random>

namespace finstrain::sampling {

using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo, double hi);
Vec3 random_vector(Rng &rng, double scale = 1.0);

/// Haar-distributed proper rotation (normalized Gaussian quaternion).
Rotation3 random_rotation(Rng &rng);

/// Q diag(exp(u)) Q^T with u_i uniform in [-log_range, log_range].
SPDTensor3 random_spd(Rng &rng, double log_range = 1.0);

/// Pair of SPD tensors sharing one random eigenbasis.
std::pair<SPDTensor3, SPDTensor3> random_coaxial_pair(Rng &rng,
                                                      double log_range = 1.0);

/// Symmetric tensor with Frobenius norm uniform in [0, max_norm].
SymTensor3 random_sym(Rng &rng, double max_norm = 1.0);

/// Tensor with entries uniform in [-scale, scale].
Tensor3 random_tensor(Rng &rng, double scale = 1.0);

/// F = V R with random stretch and rotation; det F > 0.
Tensor3 random_gradient(Rng &rng, double log_range = 1.0);

/// Well-conditioned Jacobian Q1 diag(exp(u)) Q2, det > 0.
Tensor3 random_jacobian(Rng &rng, double log_range = 0.5);

CoordinateChart random_chart(Rng &rng, double log_range = 0.5);

} // namespace finstrain::sampling
