#pragma once

// Exact arithmetic for the discrete invariants of U(p,q)-Higgs bundles:
// Toledo invariants, Milnor-Wood bounds, minimum energy levels and the
// dimension formulas for the moduli spaces involved.

#include <stdexcept>

#include "higgsatlas/rational.hpp"

namespace higgsatlas {

// The pair of ranks (p,q) defining U(p,q).
struct Signature {
  Int p;
  Int q;

  Signature(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p < 1 || q < 1) throw std::invalid_argument("Signature: ranks must be >= 1");
  }

  Int n() const { return p + q; }
  Int k() const { return gcd(p, q); }
  Int min_pq() const { return p < q ? p : q; }
  Int max_pq() const { return p > q ? p : q; }
};

// Genus of the base curve; deg K = 2g-2.
struct Curve {
  Int g;

  explicit Curve(Int g_) : g(std::move(g_)) {
    if (g < 2) throw std::invalid_argument("Curve: genus must be >= 2");
  }

  Int deg_canonical() const { return 2 * g - 2; }
};

// (a,b) = (deg V, deg W).
struct InvariantPair {
  Int a;
  Int b;

  Int d() const { return a + b; }

  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

// tau = 2(qa - pb)/(p+q).
inline Rational toledo(const Signature& sig, const InvariantPair& inv) {
  return Rational(2 * (sig.q * inv.a - sig.p * inv.b), sig.n());
}

// tau_M = min{p,q}(2g-2).
inline Rational toledo_max(const Signature& sig, const Curve& curve) {
  return Rational(sig.min_pq() * curve.deg_canonical());
}

inline bool milnor_wood_ok(const Signature& sig, const Curve& curve,
                           const InvariantPair& inv) {
  return toledo(sig, inv).abs() <= toledo_max(sig, curve);
}

// Per-inequality results of the slope bounds for a Higgs field with the
// given ranks of beta and gamma. The Toledo reformulations and the slope
// forms are recorded separately; they must always agree.
struct SlopeBoundsReport {
  bool gamma_bound_ok;        // tau/2 <= rk(gamma)(g-1)
  bool beta_bound_ok;         // -tau/2 <= rk(beta)(g-1)
  bool slope_form_gamma_ok;   // p(mu(V) - mu(E)) <= rk(gamma)(g-1)
  bool slope_form_beta_ok;    // q(mu(W) - mu(E)) <= rk(beta)(g-1)

  bool all_ok() const {
    return gamma_bound_ok && beta_bound_ok && slope_form_gamma_ok && slope_form_beta_ok;
  }
};

inline SlopeBoundsReport slope_bounds_report(const Signature& sig, const Curve& curve,
                                             const InvariantPair& inv, const Int& rk_beta,
                                             const Int& rk_gamma) {
  const Int m = sig.min_pq();
  if (rk_beta < 0 || rk_beta > m || rk_gamma < 0 || rk_gamma > m)
    throw std::invalid_argument("slope_bounds_report: rank argument outside [0, min(p,q)]");

  const Rational tau = toledo(sig, inv);
  const Rational half_tau = tau / Rational(2);
  const Int gm1 = curve.g - 1;

  const Rational mu_v(inv.a, sig.p);
  const Rational mu_w(inv.b, sig.q);
  const Rational mu_e(inv.d(), sig.n());

  SlopeBoundsReport r;
  r.gamma_bound_ok = half_tau <= Rational(rk_gamma * gm1);
  r.beta_bound_ok = -half_tau <= Rational(rk_beta * gm1);
  r.slope_form_gamma_ok = Rational(sig.p) * (mu_v - mu_e) <= Rational(rk_gamma * gm1);
  r.slope_form_beta_ok = Rational(sig.q) * (mu_w - mu_e) <= Rational(rk_beta * gm1);

  // The slope forms are algebraic rewrites of the Toledo forms.
  if (r.gamma_bound_ok != r.slope_form_gamma_ok || r.beta_bound_ok != r.slope_form_beta_ok)
    throw std::logic_error("slope_bounds_report: slope and Toledo forms disagree");
  return r;
}

// 1 + (p+q)^2 (g-1), the dimension of the stable moduli space.
inline Int expected_dim_higgs(const Signature& sig, const Curve& curve) {
  return 1 + sig.n() * sig.n() * (curve.g - 1);
}

// Dimension at maximal |tau| with p != q, computed as the sum of the two
// factor dimensions: a U(m,m)-Higgs moduli space plus a bundle moduli space
// of rank |p-q|.
inline Int rigid_dim(const Signature& sig, const Curve& curve) {
  if (sig.p == sig.q)
    throw std::invalid_argument("rigid_dim: requires p != q");
  const Int m = sig.min_pq();
  const Int big = sig.max_pq();
  const Int gm1 = curve.g - 1;
  const Int higgs_factor = 1 + (2 * m) * (2 * m) * gm1;
  const Int bundle_factor = 1 + (big - m) * (big - m) * gm1;
  const Int total = higgs_factor + bundle_factor;
  // Closed form 2 + (5m^2 + M^2 - 2pq)(g-1).
  const Int closed = 2 + (5 * m * m + big * big - 2 * sig.p * sig.q) * gm1;
  if (total != closed) throw std::logic_error("rigid_dim: factor sum disagrees with closed form");
  return total;
}

// Minimum value |tau|/2 of the Morse function on M(a,b).
inline Rational min_energy(const Signature& sig, const InvariantPair& inv) {
  const Rational tau = toledo(sig, inv);
  const Rational value = tau.abs() / Rational(2);
  // Cross-check against the two explicit forms of the minimum level.
  const Rational mu_e(inv.d(), sig.n());
  if (tau.sign() <= 0) {
    const Rational gamma_zero_form = Rational(inv.b) - Rational(sig.q) * mu_e;
    if (gamma_zero_form != value) throw std::logic_error("min_energy: gamma=0 form mismatch");
  }
  if (tau.sign() >= 0) {
    const Rational beta_zero_form = Rational(inv.a) - Rational(sig.p) * mu_e;
    if (beta_zero_form != value) throw std::logic_error("min_energy: beta=0 form mismatch");
  }
  return value;
}

// Smooth dimension of the moduli of triples of type (n1,n2,d1,d2):
// (g-1)(n1^2 + n2^2 - n1 n2) - n1 d2 + n2 d1 + 1. Stated only for n1 != n2.
inline Int triple_moduli_dim(const Int& n1, const Int& n2, const Int& d1, const Int& d2,
                             const Curve& curve) {
  if (n1 == n2)
    throw std::invalid_argument("triple_moduli_dim: dimension formula not asserted for n1 = n2");
  return (curve.g - 1) * (n1 * n1 + n2 * n2 - n1 * n2) - n1 * d2 + n2 * d1 + 1;
}

}  // namespace higgsatlas
