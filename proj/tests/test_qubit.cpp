#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entcoh/optimize.hpp"
#include "entcoh/qubit.hpp"

using namespace entcoh;

namespace {

Mat2 random_hermitian(Rng& rng) {
  const double a = rng.uniform(-1.0, 1.0);
  const double c = rng.uniform(-1.0, 1.0);
  const Amp b(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  Mat2 h;
  h << a, b, std::conj(b), c;
  return h;
}

Mat2 random_psd(Rng& rng) {
  Mat2 g;
  g << Amp(rng.uniform(-1, 1), rng.uniform(-1, 1)),
      Amp(rng.uniform(-1, 1), rng.uniform(-1, 1)),
      Amp(rng.uniform(-1, 1), rng.uniform(-1, 1)),
      Amp(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return g * g.adjoint();
}

DensityOperator random_density(Rng& rng) {
  Mat2 p = random_psd(rng);
  return make_density(p / p.trace().real());
}

}  // namespace

TEST_CASE("binary entropy endpoints, maximum, and a fixed interior value") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(binary_entropy(0.146447) == doctest::Approx(0.60088).epsilon(2e-4));
}

TEST_CASE("binary entropy clamps tiny excursions and rejects real ones") {
  CHECK(binary_entropy(-1e-10) == 0.0);
  CHECK(binary_entropy(1.0 + 1e-10) == 0.0);
  CHECK_THROWS_AS(binary_entropy(-1e-8), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("binary entropy symmetry on a dense grid") {
  for (int i = 0; i <= 10000; ++i) {
    const double x = i / 10000.0;
    CHECK(std::abs(binary_entropy(x) - binary_entropy(1.0 - x)) <= 1e-14);
  }
}

TEST_CASE("von Neumann entropy of reference states") {
  CHECK(von_neumann_entropy(DensityOperator{0.5 * Mat2::Identity()}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const PureState plus = normalized_state(1.0, 1.0);
  CHECK(von_neumann_entropy(projector(plus)) == doctest::Approx(0.0).epsilon(1e-12));
  Mat2 d = Mat2::Zero();
  d(0, 0) = 0.853553;
  d(1, 1) = 0.146447;
  CHECK(von_neumann_entropy(DensityOperator{d}) ==
        doctest::Approx(0.60088).epsilon(2e-4));
}

TEST_CASE("von Neumann entropy rejects invalid operators") {
  Mat2 bad = Mat2::Identity();  // trace 2
  CHECK_THROWS_AS(von_neumann_entropy(DensityOperator{bad}), invariant_error);
  Mat2 nh;
  nh << 0.5, 0.3, -0.3, 0.5;  // not Hermitian
  CHECK_THROWS_AS(von_neumann_entropy(DensityOperator{nh}), invariant_error);
}

TEST_CASE("von Neumann entropy stays in [0,1] on random densities") {
  Rng rng(101);
  for (int i = 0; i < 10000; ++i) {
    const double s = von_neumann_entropy(random_density(rng));
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
  }
}

TEST_CASE("eigen2 on the identity returns an orthonormal pair") {
  const Eigen2 ed = eigen2(Mat2::Identity());
  CHECK(ed.val[0] == doctest::Approx(1.0));
  CHECK(ed.val[1] == doctest::Approx(1.0));
  CHECK(std::abs(ed.vec[0].dot(ed.vec[1])) <= 1e-12);
  CHECK(ed.vec[0].norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen2 on Pauli-Z returns the computational basis") {
  Mat2 z;
  z << 1.0, 0.0, 0.0, -1.0;
  const Eigen2 ed = eigen2(z);
  CHECK(ed.val[0] == doctest::Approx(1.0));
  CHECK(ed.val[1] == doctest::Approx(-1.0));
  CHECK(std::abs(ed.vec[0](0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(ed.vec[1](1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigen2 fixed example with residual check") {
  Mat2 h;
  h << 0.75, 0.25, 0.25, 0.25;
  const Eigen2 ed = eigen2(h);
  CHECK(ed.val[0] == doctest::Approx(0.853553).epsilon(1e-6));
  CHECK(ed.val[1] == doctest::Approx(0.146447).epsilon(1e-6));
  for (int k = 0; k < 2; ++k) {
    const Vec2 resid = h * ed.vec[k] - ed.val[k] * ed.vec[k];
    CHECK(resid.cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("eigen2 reconstructs random Hermitian matrices") {
  Rng rng(202);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 h = random_hermitian(rng);
    const Eigen2 ed = eigen2(h);
    const Mat2 rec = ed.val[0] * (ed.vec[0] * ed.vec[0].adjoint()) +
                     ed.val[1] * (ed.vec[1] * ed.vec[1].adjoint());
    CHECK((h - rec).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(std::abs(ed.vec[0].dot(ed.vec[1])) <= 1e-12);
    CHECK(ed.val[0] >= ed.val[1]);
  }
}

TEST_CASE("matrix square root on reference and random inputs") {
  CHECK((matrix_sqrt_psd(Mat2::Identity()) - Mat2::Identity())
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  Mat2 d = Mat2::Zero();
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  const Mat2 s = matrix_sqrt_psd(d);
  CHECK(s(0, 0).real() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s(1, 1).real() == doctest::Approx(0.866025).epsilon(1e-6));

  const PureState psi = normalized_state(Amp(0.6, 0.0), Amp(0.0, 0.8));
  const Mat2 proj = projector(psi).m;
  CHECK((matrix_sqrt_psd(proj) - proj).cwiseAbs().maxCoeff() <= 1e-12);

  Rng rng(303);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 p = random_psd(rng);
    const Mat2 r = matrix_sqrt_psd(p);
    CHECK((r * r - p).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("matrix square root rejects negative spectra") {
  Mat2 neg;
  neg << -0.5, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(matrix_sqrt_psd(neg), invariant_error);
}

TEST_CASE("measurement bases are orthonormal across the chart") {
  Rng rng(404);
  for (int i = 0; i < 10000; ++i) {
    const MeasurementBasis t{rng.uniform(0.0, M_PI),
                             rng.uniform(0.0, 2.0 * M_PI)};
    CHECK(std::abs(t.e1().dot(t.e2())) <= 1e-12);
    CHECK(t.e1().norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.e2().norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pure state construction validates its norm") {
  CHECK_THROWS_AS(make_pure_state(0.8, 0.8), invariant_error);
  const PureState s = normalized_state(Amp(3.0, 0.0), Amp(0.0, 4.0));
  CHECK(std::abs(overlap(s, s) - Amp(1.0, 0.0)) <= 1e-12);
  CHECK_NOTHROW(make_pure_state(s.amp(0), s.amp(1)));
}

TEST_CASE("density construction validates Hermiticity, trace, and positivity") {
  Mat2 tr2 = Mat2::Identity();
  CHECK_THROWS_AS(make_density(tr2), invariant_error);
  Mat2 indefinite;
  indefinite << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(make_density(indefinite), invariant_error);
  CHECK_NOTHROW(make_density(0.5 * Mat2::Identity()));
}

TEST_CASE("golden section finds a parabola minimum") {
  auto f = [](double x) { return (x - 1.2) * (x - 1.2) + 0.3; };
  const MinResult r = golden_min(f, 0.0, 3.0, 1e-10);
  CHECK(r.x == doctest::Approx(1.2).epsilon(1e-8));
  CHECK(r.fx == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("grid scans respect their tie-break directions") {
  auto flat = [](double) { return 1.0; };
  const MinResult lo = grid_min_midpoint(flat, 0.0, 1.0, 8, 1e-12);
  CHECK(lo.x == doctest::Approx(0.0625).epsilon(1e-14));
  const MinResult hi = grid_min_endpoint(flat, 0.0, 1.0, 9, 1e-12, true);
  CHECK(hi.x == 1.0);
  const MinResult first = grid_min_endpoint(flat, 0.0, 1.0, 9, 1e-12, false);
  CHECK(first.x == 0.0);
}

TEST_CASE("refinement keeps the grid candidate on flat objectives") {
  auto flat = [](double) { return 2.0; };
  const MinResult cand{0.5, 2.0, 9};
  const MinResult kept = refine_min(flat, 0.0, 1.0, cand, 0.1, 1e-10, 1e-12);
  CHECK(kept.x == 0.5);

  auto slope = [](double x) { return x; };
  const MinResult moved = refine_min(slope, 0.0, 1.0, MinResult{0.5, 0.5, 9},
                                     0.25, 1e-10, 1e-12);
  CHECK(moved.x == doctest::Approx(0.25).epsilon(1e-6));
}
