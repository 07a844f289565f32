#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace entcoh {

using Amp  = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normalized single-qubit state, amplitudes on |0> and |1>.
struct PureState {
  Vec2 amp = Vec2(1.0, 0.0);
};

// Throws invariant_error unless |a0|^2 + |a1|^2 = 1 within 1e-12.
PureState make_pure_state(Amp a0, Amp a1);
// Rescales to unit norm; throws on the zero vector.
PureState normalized_state(Amp a0, Amp a1);
Amp overlap(const PureState& a, const PureState& b);

// 2x2 Hermitian, PSD, unit-trace operator.
struct DensityOperator {
  Mat2 m = 0.5 * Mat2::Identity();
};

// Throws invariant_error unless Hermitian/trace-1 within 1e-12 and
// eigenvalues >= -1e-12.
DensityOperator make_density(const Mat2& m);
DensityOperator projector(const PureState& s);
double purity(const DensityOperator& rho);

// Orthonormal basis {e1, e2} on the Bloch sphere, half-angle convention:
// e1 = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct MeasurementBasis {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2pi)
  Vec2 e1() const;
  Vec2 e2() const;
};

// -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0. Inputs slightly outside
// [0,1] (up to 1e-9) are clamped; beyond that a std::domain_error.
double binary_entropy(double x);

// -sum lambda log2 lambda over the eigenvalues of rho, in bits.
double von_neumann_entropy(const DensityOperator& rho);

struct Eigen2 {
  double val[2];  // sorted descending
  Vec2 vec[2];
};

// Closed-form eigendecomposition of a 2x2 Hermitian matrix (the input is
// symmetrized first). Degenerate spectra return the computational basis.
Eigen2 eigen2(const Mat2& h);

// Hermitian PSD square root; throws invariant_error if an eigenvalue < -1e-10.
Mat2 matrix_sqrt_psd(const Mat2& rho);

}  // namespace entcoh
