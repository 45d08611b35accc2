#include "minbreg/mirror_map.hpp"

#include <cmath>

namespace minbreg {

namespace {

double norm_pow(const Vector& v, double r) {
  double acc = 0.0;
  for (Index j = 0; j < v.size(); ++j) {
    acc += std::pow(std::abs(v[j]), r);
  }
  return std::pow(acc, 1.0 / r);
}

// g_j = ||v||_r^{2-r} |v_j|^{r-1} sign(v_j), the gradient of 1/2 ||.||_r^2.
Vector half_sq_norm_grad(const Vector& v, double r) {
  Vector g = Vector::Zero(v.size());
  const double nrm = norm_pow(v, r);
  if (nrm == 0.0) {
    return g;
  }
  const double scale = std::pow(nrm, 2.0 - r);
  for (Index j = 0; j < v.size(); ++j) {
    const double a = std::abs(v[j]);
    if (a > 0.0) {
      g[j] = scale * std::pow(a, r - 1.0) * (v[j] > 0.0 ? 1.0 : -1.0);
    }
  }
  return g;
}

}  // namespace

MirrorMap MirrorMap::make(double p) {
  if (!(p > 1.0) || !(p <= 2.0)) {
    throw std::invalid_argument("MirrorMap: exponent p must lie in (1, 2], got " +
                                std::to_string(p));
  }
  return MirrorMap{p, p / (p - 1.0), p - 1.0};
}

double MirrorMap::lp_norm(const Vector& v) const { return norm_pow(v, p); }

double MirrorMap::lq_norm(const Vector& v) const { return norm_pow(v, q); }

double MirrorMap::psi(const Vector& theta) const {
  const double nrm = lp_norm(theta);
  return 0.5 * nrm * nrm;
}

double MirrorMap::psi_star(const Vector& s) const {
  const double nrm = lq_norm(s);
  return 0.5 * nrm * nrm;
}

Vector MirrorMap::grad_psi(const Vector& theta) const {
  return half_sq_norm_grad(theta, p);
}

Vector MirrorMap::grad_psi_star(const Vector& s) const {
  return half_sq_norm_grad(s, q);
}

double MirrorMap::bregman(const Vector& theta, const Vector& eta) const {
  if (theta.size() != eta.size()) {
    throw std::invalid_argument("bregman: dimension mismatch");
  }
  return psi(theta) - psi(eta) - grad_psi(eta).dot(theta - eta);
}

}  // namespace minbreg
