#pragma once

// Alpha-stability machinery for holomorphic triples: the alpha-slope, the
// allowed parameter range, the correspondence between Higgs-bundle minima
// and triples at alpha = 2g-2, critical-value enumeration and the moduli
// descriptors for the distinguished parameter values.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "higgsatlas/core.hpp"
#include "higgsatlas/rational.hpp"

namespace higgsatlas {

// (n1,n2,d1,d2) = ranks and degrees of (E1,E2).
struct TripleType {
  Int n1;
  Int n2;
  Int d1;
  Int d2;

  TripleType(Int n1_, Int n2_, Int d1_, Int d2_)
      : n1(std::move(n1_)), n2(std::move(n2_)), d1(std::move(d1_)), d2(std::move(d2_)) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("TripleType: ranks must be >= 1");
  }

  Rational mu1() const { return Rational(d1, n1); }
  Rational mu2() const { return Rational(d2, n2); }
  Rational mu_total() const { return Rational(d1 + d2, n1 + n2); }

  friend bool operator==(const TripleType&, const TripleType&) = default;
};

// [alpha_m, alpha_M]; hi absent means +infinity (n1 = n2). The interval is
// flagged empty when alpha_m < 0 (the necessary condition 0 <= alpha_m fails).
struct AlphaInterval {
  Rational lo;
  std::optional<Rational> hi;
  bool empty = false;

  friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;
};

enum class Orientation { GammaZero, BetaZero, Both };

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::GammaZero: return "gamma_zero";
    case Orientation::BetaZero: return "beta_zero";
    case Orientation::Both: return "both";
  }
  return "?";
}

// The triple(s) whose alpha = 2g-2 moduli space realizes the minima N(a,b).
struct HiggsTripleCorrespondence {
  Orientation orientation;
  std::optional<TripleType> gamma_zero;  // (p, q, a + p(2g-2), b), for tau <= 0
  std::optional<TripleType> beta_zero;   // (q, p, b + q(2g-2), a), for tau >= 0

  // The unique triple when tau != 0; for tau = 0 both sides exist and the
  // gamma = 0 side is returned (either gives the same alpha interval).
  const TripleType& triple() const {
    if (orientation == Orientation::BetaZero) return *beta_zero;
    return *gamma_zero;
  }
};

// mu_alpha(T) = (d1 + d2 + alpha n2)/(n1 + n2).
inline Rational mu_alpha(const TripleType& t, const Rational& alpha) {
  return (Rational(t.d1 + t.d2) + alpha * Rational(t.n2)) / Rational(t.n1 + t.n2);
}

// alpha_m = mu1 - mu2; alpha_M = (1 + (n1+n2)/|n1-n2|)(mu1 - mu2), infinite
// when n1 = n2.
inline AlphaInterval alpha_range(const TripleType& t) {
  AlphaInterval iv;
  iv.lo = t.mu1() - t.mu2();
  if (t.n1 != t.n2) {
    const Int diff = t.n1 > t.n2 ? t.n1 - t.n2 : t.n2 - t.n1;
    iv.hi = (Rational(1) + Rational(t.n1 + t.n2, diff)) * iv.lo;
  }
  iv.empty = iv.lo.sign() < 0;
  return iv;
}

inline HiggsTripleCorrespondence higgs_to_triple(const Signature& sig, const Curve& curve,
                                                 const InvariantPair& inv) {
  const int s = toledo(sig, inv).sign();
  const Int degk = curve.deg_canonical();
  HiggsTripleCorrespondence c;
  if (s <= 0)
    c.gamma_zero = TripleType(sig.p, sig.q, inv.a + sig.p * degk, inv.b);
  if (s >= 0)
    c.beta_zero = TripleType(sig.q, sig.p, inv.b + sig.q * degk, inv.a);
  c.orientation = s < 0 ? Orientation::GammaZero
                        : (s > 0 ? Orientation::BetaZero : Orientation::Both);
  return c;
}

// Closed forms for the alpha-range of the corresponding triple:
// alpha_m = (2g-2) - ((p+q)/2pq)|tau|, alpha_M = (2 max{p,q}/|p-q|) alpha_m.
inline AlphaInterval alpha_bounds_from_higgs(const Signature& sig, const Curve& curve,
                                             const InvariantPair& inv) {
  AlphaInterval iv;
  const Rational abs_tau = toledo(sig, inv).abs();
  iv.lo = Rational(curve.deg_canonical()) -
          Rational(sig.n(), 2 * sig.p * sig.q) * abs_tau;
  if (sig.p != sig.q) {
    const Int diff = sig.max_pq() - sig.min_pq();
    iv.hi = Rational(2 * sig.max_pq(), diff) * iv.lo;
  }
  iv.empty = iv.lo.sign() < 0;
  return iv;
}

enum class PositionOf2g2 {
  Interior,
  AtAlphaMin,            // tau = 0
  AtAlphaMax,            // |tau| = tau_M, p != q
  AtAlphaMinZero_pEQq,   // |tau| = tau_M, p = q (alpha_m = 0)
  Outside,               // Milnor-Wood fails
};

inline const char* to_string(PositionOf2g2 pos) {
  switch (pos) {
    case PositionOf2g2::Interior: return "interior";
    case PositionOf2g2::AtAlphaMin: return "at_alpha_min";
    case PositionOf2g2::AtAlphaMax: return "at_alpha_max";
    case PositionOf2g2::AtAlphaMinZero_pEQq: return "at_alpha_min_zero_p_eq_q";
    case PositionOf2g2::Outside: return "outside";
  }
  return "?";
}

inline PositionOf2g2 position_of_2g2(const Signature& sig, const Curve& curve,
                                     const InvariantPair& inv) {
  if (!milnor_wood_ok(sig, curve, inv)) return PositionOf2g2::Outside;
  const Rational tau = toledo(sig, inv);
  if (tau.sign() == 0) return PositionOf2g2::AtAlphaMin;
  if (tau.abs() == toledo_max(sig, curve))
    return sig.p != sig.q ? PositionOf2g2::AtAlphaMax : PositionOf2g2::AtAlphaMinZero_pEQq;
  return PositionOf2g2::Interior;
}

// Numeric shape of a proper subtriple: ranks (n1',n2') and total degree d'.
struct SubtripleShape {
  Int n1p;
  Int n2p;
  Int dp;
};

// All critical values strictly above alpha_m and at most window_hi (capped
// strictly below alpha_M when n1 != n2). A critical value is an alpha where
// some numerically possible proper subtriple has equal alpha-slope but a
// different ordinary slope. Shapes carry any integer total degree, so this
// is a superset of the geometrically realizable wall set.
inline std::vector<Rational> critical_values(const TripleType& t, const Rational& window_hi) {
  const AlphaInterval range = alpha_range(t);
  if (window_hi <= range.lo)
    throw std::invalid_argument("critical_values: window_hi must exceed alpha_m");

  const Int n = t.n1 + t.n2;
  const Int d = t.d1 + t.d2;
  const Rational mu = t.mu_total();
  const Rational lo = range.lo;
  // Upper end: window cap, and strictly below alpha_M when finite.
  const Rational hi = (range.hi && *range.hi < window_hi) ? *range.hi : window_hi;
  const bool hi_inclusive = !(range.hi && hi == *range.hi);

  std::vector<Rational> values;
  for (Int n1p = 0; n1p <= t.n1; ++n1p) {
    for (Int n2p = 0; n2p <= t.n2; ++n2p) {
      const Int np = n1p + n2p;
      if (np == 0 || np == n) continue;
      const Int denom = n2p * n - t.n2 * np;  // nonzero <=> alpha-slope condition solvable
      if (denom == 0) continue;
      // dp(alpha) = (np*d - denom*alpha)/n; scan the integer dp landing in
      // the alpha-window (the map is monotonic in alpha).
      const Rational dp_at_lo = (Rational(np * d) - Rational(denom) * lo) / Rational(n);
      const Rational dp_at_hi = (Rational(np * d) - Rational(denom) * hi) / Rational(n);
      const Rational dp_min = std::min(dp_at_lo, dp_at_hi);
      const Rational dp_max = std::max(dp_at_lo, dp_at_hi);
      const Int dp_first = floor_int(dp_min);
      const Int dp_last = ceil_int(dp_max);
      for (Int dp = dp_first; dp <= dp_last; ++dp) {
        const Rational alpha(np * d - n * dp, denom);
        if (!(alpha > lo)) continue;
        if (hi_inclusive ? !(alpha <= hi) : !(alpha < hi)) continue;
        if (Rational(dp, np) == mu) continue;
        values.push_back(alpha);
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// GCD(n1+n2, d1+d2 - m n1) = 1 certifies that alpha = m is not critical and
// that alpha-independent semistability cannot occur.
inline bool gcd_noncritical_test(const TripleType& t, const Int& m) {
  return gcd(t.n1 + t.n2, t.d1 + t.d2 - m * t.n1) == 1;
}

// False when GCD(n2, n1+n2, d1+d2) = 1 excludes alpha-independent
// semistability; true means it is not excluded by this criterion.
inline bool alpha_independent_possible(const TripleType& t) {
  return gcd(t.n2, gcd(t.n1 + t.n2, t.d1 + t.d2)) != 1;
}

inline Int triple_moduli_dim(const TripleType& t, const Curve& curve) {
  return triple_moduli_dim(t.n1, t.n2, t.d1, t.d2, curve);
}

enum class DescriptorWhere { AtAlphaMin, GenericLarge, AtAlphaMax, EqualRanksSmallGap };

struct ModuliDescriptor {
  bool nonempty = false;
  bool irreducible = false;
  std::string product_description;
  std::optional<Int> fiber_dim;
};

inline ModuliDescriptor moduli_descriptor(const TripleType& t, const Curve& curve,
                                          DescriptorWhere where) {
  auto m_space = [](const Int& n, const Int& d) {
    return "M(" + n.str() + "," + d.str() + ")";
  };
  ModuliDescriptor desc;
  switch (where) {
    case DescriptorWhere::AtAlphaMin:
      // phi = 0 with both bundles polystable.
      desc.nonempty = true;
      desc.irreducible = true;
      desc.product_description = m_space(t.n1, t.d1) + " x " + m_space(t.n2, t.d2);
      return desc;
    case DescriptorWhere::GenericLarge: {
      desc.nonempty = true;
      desc.irreducible = true;
      const Int gm1 = curve.g - 1;
      if (t.n1 > t.n2) {
        desc.fiber_dim = t.n2 * t.d1 - t.n1 * t.d2 + t.n2 * (t.n1 - t.n2) * gm1 - 1;
        desc.product_description = "P^N fibration over " + m_space(t.n1 - t.n2, t.d1 - t.d2) +
                                   " x " + m_space(t.n2, t.d2);
      } else if (t.n1 < t.n2) {
        desc.fiber_dim = t.n2 * t.d1 - t.n1 * t.d2 + t.n1 * (t.n2 - t.n1) * gm1 - 1;
        desc.product_description = "P^N fibration over " + m_space(t.n2 - t.n1, t.d2 - t.d1) +
                                   " x " + m_space(t.n1, t.d1);
      } else {
        desc.fiber_dim = t.n1 * (t.d1 - t.d2) - 1;
        desc.product_description = "P^N fibration over " + m_space(t.n1, t.d2) + " x Sym^" +
                                   Int(t.d1 - t.d2).str() + "(X)";
      }
      return desc;
    }
    case DescriptorWhere::AtAlphaMax:
      if (t.n1 == t.n2)
        throw std::invalid_argument("moduli_descriptor: alpha_M requires n1 != n2");
      desc.nonempty = true;
      desc.irreducible = true;
      if (t.n1 > t.n2)
        desc.product_description = m_space(t.n2, t.d2) + " x " + m_space(t.n1 - t.n2, t.d1 - t.d2);
      else
        desc.product_description = m_space(t.n1, t.d1) + " x " + m_space(t.n2 - t.n1, t.d2 - t.d1);
      return desc;
    case DescriptorWhere::EqualRanksSmallGap:
      if (t.n1 != t.n2)
        throw std::invalid_argument("moduli_descriptor: equal-ranks case requires n1 = n2");
      if (t.d1 < t.d2)
        throw std::invalid_argument("moduli_descriptor: equal-ranks case requires d1 >= d2");
      desc.nonempty = true;
      desc.irreducible = true;
      if (t.d1 == t.d2) desc.product_description = m_space(t.n1, t.d1);
      return desc;
  }
  throw std::logic_error("moduli_descriptor: unreachable");
}

}  // namespace higgsatlas
