#include "entcoh/qubit.hpp"

#include <cmath>

namespace entcoh {

PureState make_pure_state(Amp a0, Amp a1) {
  const double n2 = std::norm(a0) + std::norm(a1);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw invariant_error("pure state not normalized");
  return PureState{Vec2(a0, a1)};
}

PureState normalized_state(Amp a0, Amp a1) {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (n < 1e-150) throw invariant_error("cannot normalize zero vector");
  return PureState{Vec2(a0 / n, a1 / n)};
}

Amp overlap(const PureState& a, const PureState& b) {
  return a.amp.dot(b.amp);
}

DensityOperator make_density(const Mat2& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw invariant_error("density operator not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > 1e-12 ||
      std::abs(m.trace().imag()) > 1e-12)
    throw invariant_error("density operator trace != 1");
  const Mat2 h = 0.5 * (m + m.adjoint());
  const Eigen2 ed = eigen2(h);
  if (ed.val[0] < -1e-12 || ed.val[1] < -1e-12)
    throw invariant_error("density operator not PSD");
  return DensityOperator{h};
}

DensityOperator projector(const PureState& s) {
  return DensityOperator{s.amp * s.amp.adjoint()};
}

double purity(const DensityOperator& rho) {
  return (rho.m * rho.m).trace().real();
}

Vec2 MeasurementBasis::e1() const {
  const Amp ph = std::polar(1.0, phi);
  return Vec2(std::cos(0.5 * theta), ph * std::sin(0.5 * theta));
}

Vec2 MeasurementBasis::e2() const {
  const Amp ph = std::polar(1.0, phi);
  return Vec2(std::sin(0.5 * theta), -ph * std::cos(0.5 * theta));
}

double binary_entropy(double x) {
  if (x < -1e-9 || x > 1.0 + 1e-9)
    throw std::domain_error("binary_entropy argument outside [0,1]");
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double von_neumann_entropy(const DensityOperator& rho) {
  const Mat2& m = rho.m;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
      std::abs(m.trace().real() - 1.0) > 1e-12)
    throw invariant_error("not a density operator");
  const Eigen2 ed = eigen2(m);
  if (ed.val[0] < -1e-12 || ed.val[1] < -1e-12)
    throw invariant_error("not a density operator");
  double lam = ed.val[0];
  if (lam < 0.0) lam = 0.0;
  if (lam > 1.0) lam = 1.0;
  return binary_entropy(lam);
}

Eigen2 eigen2(const Mat2& h_in) {
  const Mat2 h = 0.5 * (h_in + h_in.adjoint());
  const double a = h(0, 0).real();
  const double c = h(1, 1).real();
  const Amp b = h(0, 1);
  const double mean = 0.5 * (a + c);
  const double d = 0.5 * (a - c);
  const double r = std::hypot(d, std::abs(b));

  Eigen2 out;
  out.val[0] = mean + r;
  out.val[1] = mean - r;

  const double scale = std::abs(mean) + r + 1.0;
  if (std::abs(b) <= 1e-300 || r <= 1e-16 * scale) {
    // diagonal or degenerate: computational basis, larger diagonal first
    if (d >= 0.0) {
      out.vec[0] = Vec2(1.0, 0.0);
      out.vec[1] = Vec2(0.0, 1.0);
    } else {
      out.vec[0] = Vec2(0.0, 1.0);
      out.vec[1] = Vec2(1.0, 0.0);
    }
    return out;
  }

  Vec2 v0(b, Amp(r - d, 0.0));
  v0.normalize();
  Vec2 v1(Amp(-(r - d), 0.0), std::conj(b));
  v1.normalize();
  out.vec[0] = v0;
  out.vec[1] = v1;
  return out;
}

Mat2 matrix_sqrt_psd(const Mat2& rho) {
  const Eigen2 ed = eigen2(rho);
  if (ed.val[1] < -1e-10)
    throw invariant_error("matrix_sqrt_psd: negative eigenvalue");
  const double l0 = ed.val[0] > 0.0 ? ed.val[0] : 0.0;
  const double l1 = ed.val[1] > 0.0 ? ed.val[1] : 0.0;
  Mat2 s = std::sqrt(l0) * (ed.vec[0] * ed.vec[0].adjoint()) +
           std::sqrt(l1) * (ed.vec[1] * ed.vec[1].adjoint());
  return 0.5 * (s + s.adjoint());
}

}  // namespace entcoh
