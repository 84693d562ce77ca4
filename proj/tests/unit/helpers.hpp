#pragma once

#include "finstrain/tensor.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <sstream>

namespace testing {

using finstrain::Tensor3;

inline Eigen::Matrix3d to_eigen(const Tensor3 &t) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = t(i, j);
  return m;
}

inline Tensor3 from_eigen(const Eigen::Matrix3d &m) {
  Tensor3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = m(i, j);
  return t;
}

inline std::string show(const Tensor3 &t) {
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

/// Frobenius distance, absolute.
inline double distance(const Tensor3 &a, const Tensor3 &b) {
  return (a - b).norm();
}

#define CHECK_TENSOR_NEAR(a, b, tol)                                           \
  do {                                                                         \
    const ::finstrain::Tensor3 lhs_ = (a);                                     \
    const ::finstrain::Tensor3 rhs_ = (b);                                     \
    INFO("lhs = " << ::testing::show(lhs_));                                   \
    INFO("rhs = " << ::testing::show(rhs_));                                   \
    CHECK(::testing::distance(lhs_, rhs_) <= (tol));                           \
  } while (0)

} // namespace testing
