#include "finstrain/curvilinear.hpp"
#include "finstrain/errors.hpp"
#include "finstrain/invariants.hpp"
#include "finstrain/sampling.hpp"

#include "helpers.hpp"

#include <numbers>

using namespace finstrain;
using sampling::Rng;

namespace {

const Tensor3 kI = Tensor3::identity();

Tensor3 uniaxial(double lambda) {
  const double t = 1.0 / std::sqrt(lambda);
  return Tensor3::diag(lambda, t, t);
}

Tensor3 simple_shear(double lambda) {
  Tensor3 f = kI;
  f(0, 1) = lambda;
  return f;
}

} // namespace

TEST_SUITE("dilatation") {
  TEST_CASE("examples") {
    CHECK(dilatation(kI) == 1.0);
    CHECK(dilatation(Tensor3::diag(2, 3, 4)) == doctest::Approx(24.0).epsilon(1e-15));
    CHECK(strain_invariants(Tensor3::diag(2, 3, 4)).j == doctest::Approx(std::log(24.0)).epsilon(1e-15));
    CHECK(dilatation(Rotation3::about_axis({1, 1, 0}, 0.4)) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("log v = tr log V") {
    Rng rng(51);
    for (int n = 0; n < 100; ++n) {
      const Tensor3 f = sampling::random_gradient(rng, 1.0);
      CHECK(strain_invariants(f).j == doctest::Approx(std::log(dilatation(f))).epsilon(1e-12));
    }
  }

  TEST_CASE("improper gradients") {
    CHECK_THROWS_AS(dilatation(Tensor3::diag(1, 1, 0)), OrientationError);
    CHECK_THROWS_AS(dilatation(Tensor3::diag(-1, 1, 1)), OrientationError);
  }
}

TEST_SUITE("strain deviator") {
  const std::vector<StrainFamily> families = {
      StrainFamily::builtin("hencky"), StrainFamily::builtin("almansi"),
      StrainFamily::builtin("green"),  StrainFamily::builtin("biot"),
      StrainFamily::builtin("bazant"), StrainFamily::builtin("seth-hill", 0.5)};

  TEST_CASE("pure dilatation has no deviator") {
    for (const auto &fam : families)
      CHECK_TENSOR_NEAR(richter_deviator(2.0 * kI, fam).tensor(), Tensor3::zero(), 1e-15);
  }

  TEST_CASE("isochoric uniaxial stretch gives D = E") {
    for (double lambda : {1.1, 2.0, 5.0})
      for (const auto &fam : families) {
        const Tensor3 f = uniaxial(lambda);
        CHECK_TENSOR_NEAR(richter_deviator(f, fam).tensor(), eulerian_strain(f, fam).E.tensor(), 1e-13);
      }
  }

  TEST_CASE("hencky deviator of a stretch") {
    const double l2 = std::numbers::ln2;
    CHECK_TENSOR_NEAR(richter_deviator(Tensor3::diag(2, 1, 1), StrainFamily::builtin("hencky")).tensor(),
                      l2 * Tensor3::diag(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0), 1e-15);
  }

  TEST_CASE("scaling invariance and isochoric identity") {
    Rng rng(52);
    for (int n = 0; n < 100; ++n) {
      const Tensor3 f = sampling::random_gradient(rng, 1.0);
      for (const auto &fam : families) {
        const Tensor3 d = richter_deviator(f, fam);
        for (double s : {0.5, 3.0})
          CHECK(relative_difference(richter_deviator(s * f, fam), d) <= 1e-10);
        const Tensor3 iso = f / std::cbrt(f.det());
        CHECK(relative_difference(richter_deviator(iso, fam), eulerian_strain(iso, fam).E) <= 1e-10);
      }
    }
  }

  TEST_CASE("lagrangian deviator") {
    Rng rng(53);
    const Tensor3 f = sampling::random_gradient(rng, 1.0);
    const Tensor3 r = polar_decompose(f).R;
    const auto fam = StrainFamily::builtin("green");
    CHECK(relative_difference(richter_deviator(f, fam, Frame::Lagrangian),
                              r.transpose() * richter_deviator(f, fam).tensor() * r) <= 1e-11);
  }
}

TEST_SUITE("closed-form deviators") {
  TEST_CASE("zero strain") {
    CHECK_TENSOR_NEAR(deviator_from_almansi(Tensor3::zero()), Tensor3::zero(), 0.0);
    CHECK_TENSOR_NEAR(deviator_from_green(Tensor3::zero()), Tensor3::zero(), 0.0);
  }

  TEST_CASE("stretch example matches the spectral route") {
    const Tensor3 f = Tensor3::diag(2, 1, 1);
    const auto cs = classical_strain(f, CoordinateChart::cartesian());
    CHECK_TENSOR_NEAR(deviator_from_almansi(cs.T),
                      richter_deviator(f, StrainFamily::builtin("almansi")).tensor(), 1e-14);
    CHECK_TENSOR_NEAR(deviator_from_green(cs.T_hat),
                      richter_deviator(f, StrainFamily::builtin("green"), Frame::Lagrangian).tensor(), 1e-14);
  }

  TEST_CASE("volume preserving gradients return the strain itself") {
    Rng rng(61);
    for (int n = 0; n < 50; ++n) {
      Tensor3 f = sampling::random_gradient(rng, 1.0);
      f = f / std::cbrt(f.det());
      const auto cs = classical_strain(f, CoordinateChart::cartesian());
      CHECK((kI - 2.0 * cs.T.tensor()).det() == doctest::Approx(1.0).epsilon(1e-11));
      CHECK(relative_difference(deviator_from_almansi(cs.T), cs.T) <= 1e-11);
    }
  }

  TEST_CASE("random gradients, both families") {
    Rng rng(62);
    for (int n = 0; n < 200; ++n) {
      const Tensor3 f = sampling::random_gradient(rng, 1.0);
      const auto cs = classical_strain(f, CoordinateChart::cartesian());
      CHECK(relative_difference(deviator_from_almansi(cs.T),
                                richter_deviator(f, StrainFamily::builtin("almansi"))) <= 1e-9);
      CHECK(relative_difference(deviator_from_green(cs.T_hat),
                                richter_deviator(f, StrainFamily::builtin("green"), Frame::Lagrangian)) <= 1e-9);
    }
  }

  TEST_CASE("inadmissible strain") {
    CHECK_THROWS_AS(deviator_from_almansi(Tensor3::diag(0.5, 0, 0)), DomainError);
    CHECK_THROWS_AS(deviator_from_green(Tensor3::diag(-0.6, 0, 0)), DomainError);
  }
}

TEST_SUITE("shape invariants") {
  TEST_CASE("uniaxial isochoric stretch") {
    for (double lambda : {1.1, 2.0, 5.0}) {
      const double ll = std::log(lambda);
      const auto inv = strain_invariants(uniaxial(lambda));
      CHECK(inv.y == doctest::Approx(1.5 * ll * ll).epsilon(1e-12));
      CHECK(inv.z == doctest::Approx(0.75 * ll * ll * ll).epsilon(1e-12));
      REQUIRE(inv.zeta);
      CHECK(*inv.zeta == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
      CHECK(inv.amount == doctest::Approx(std::sqrt(inv.y)));
    }
  }

  TEST_CASE("e-squared uniaxial example") {
    const double e = std::numbers::e;
    const auto inv = strain_invariants(Tensor3::diag(e * e, 1 / e, 1 / e));
    CHECK(inv.y == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(inv.z == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(*inv.zeta == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(inv.v == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("simple shear") {
    for (double lambda : {0.1, 1.0, 3.0}) {
      const auto inv = strain_invariants(simple_shear(lambda));
      CHECK(inv.y > 0.0);
      CHECK(std::abs(inv.z) <= 1e-10 * std::pow(inv.y, 1.5));
      CHECK(*inv.zeta <= 1e-12);
    }
  }

  TEST_CASE("identity has no shape change") {
    const auto inv = strain_invariants(kI);
    CHECK(inv.y == 0.0);
    CHECK_FALSE(inv.zeta.has_value());
  }

  TEST_CASE("invariants from a given log strain") {
    const auto inv = invariants_of_log_strain(Tensor3::diag(2, -1, -1));
    CHECK(inv.v == doctest::Approx(1.0));
    CHECK(inv.y == doctest::Approx(6.0));
    CHECK(inv.z == doctest::Approx(6.0));
  }

  TEST_CASE("character number stays in range and follows the power law") {
    Rng rng(71);
    for (int n = 0; n < 200; ++n) {
      const Tensor3 f = sampling::random_gradient(rng, 1.0);
      const auto inv = strain_invariants(f);
      REQUIRE(inv.zeta);
      CHECK(*inv.zeta >= 0.0);
      CHECK(*inv.zeta <= 1.0 / 6.0);
      // y and z are homogeneous of degree 2 and 3 in the strain.
      const Tensor3 l = eulerian_strain(f, StrainFamily::builtin("hencky")).L;
      const auto scaled = invariants_of_log_strain(2.0 * l);
      CHECK(scaled.y == doctest::Approx(4.0 * inv.y).epsilon(1e-10));
      CHECK(scaled.z == doctest::Approx(8.0 * inv.z).epsilon(1e-9));
      CHECK(*scaled.zeta == doctest::Approx(*inv.zeta).epsilon(1e-9));
    }
  }
}

TEST_SUITE("principal deviatoric strains") {
  TEST_CASE("factorable examples") {
    CHECK(principal_deviatoric_strains(0, 0) == Vec3{0, 0, 0});
    const Vec3 a = principal_deviatoric_strains(6, 6);
    CHECK(a[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(a[1] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(a[2] == doctest::Approx(-1.0).epsilon(1e-8));
    const Vec3 b = principal_deviatoric_strains(2, 0);
    CHECK(b[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(b[1]) <= 1e-15);
    CHECK(b[2] == doctest::Approx(-1.0).epsilon(1e-15));
  }

  TEST_CASE("recovers the eigenvalues of dev log V") {
    Rng rng(81);
    for (int n = 0; n < 200; ++n) {
      const Tensor3 f = sampling::random_gradient(rng, 1.0);
      const auto inv = strain_invariants(f);
      const Tensor3 l = eulerian_strain(f, StrainFamily::builtin("hencky")).L;
      const Vec3 expected = sym_eigen(SymTensor3::symmetrize(deviator(l))).values;
      const Vec3 got = principal_deviatoric_strains(inv.y, inv.z);
      for (int i = 0; i < 3; ++i)
        CHECK(std::abs(got[i] - expected[i]) <= 1e-8);
    }
  }

  TEST_CASE("unrealizable invariants") {
    CHECK_THROWS_AS(principal_deviatoric_strains(1, 1), NotRealizable);
    CHECK_THROWS_AS(principal_deviatoric_strains(-1, 0), NotRealizable);
    CHECK_THROWS_AS(principal_deviatoric_strains(0, 1), NotRealizable);
  }
}

TEST_SUITE("classification") {
  TEST_CASE("named cases") {
    CHECK(classify(strain_invariants(kI)).kind == DeformationClass::PureDilatation);
    CHECK(classify(strain_invariants(3.0 * kI)).kind == DeformationClass::PureDilatation);
    CHECK(classify(strain_invariants(simple_shear(1.0))).kind == DeformationClass::SimpleShearLike);
    CHECK(classify(strain_invariants(uniaxial(2.0))).kind == DeformationClass::UniaxialLike);
    CHECK(classify(strain_invariants(Tensor3::diag(2, 1, 1))).kind == DeformationClass::UniaxialLike);
    CHECK(classify(strain_invariants(Tensor3::diag(2, 1.3, 1))).kind == DeformationClass::Intermediate);
    CHECK(to_string(DeformationClass::SimpleShearLike) == "SimpleShearLike");
  }
}
