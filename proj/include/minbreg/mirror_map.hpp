#pragma once

#include "minbreg/types.hpp"

namespace minbreg {

// The regularizer psi(theta) = 1/2 ||theta||_p^2 for p in (1, 2], together
// with its conjugate psi*(s) = 1/2 ||s||_q^2 (1/p + 1/q = 1), both gradients,
// and the induced Bregman divergence. psi is (p-1)-strongly convex w.r.t.
// the l_p norm; everything reduces to the half-squared-Euclidean forms at
// p = 2. Fractional powers are computed as |u|^r * sign(u) with no epsilon
// floor, and the gradients are defined to be 0 at the origin.
struct MirrorMap {
  double p;   // primal exponent, in (1, 2]
  double q;   // dual exponent, p / (p - 1)
  double mu;  // strong-convexity constant, p - 1

  static MirrorMap make(double p);

  double psi(const Vector& theta) const;
  double psi_star(const Vector& s) const;
  Vector grad_psi(const Vector& theta) const;
  Vector grad_psi_star(const Vector& s) const;
  double bregman(const Vector& theta, const Vector& eta) const;

  double lp_norm(const Vector& v) const;  // ||v||_p
  double lq_norm(const Vector& v) const;  // ||v||_q
};

}  // namespace minbreg
