#pragma once

// Component atlas of the PU(p,q) representation variety: the fundamental
// region and its lattice points, canonical representatives, the tau exact
// sequence, coprimality bookkeeping along tau-lines, and the per-component
// classification record.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "higgsatlas/core.hpp"
#include "higgsatlas/morse.hpp"
#include "higgsatlas/triples.hpp"

namespace higgsatlas {

// Fundamental region for (p,q) at genus g; B = (n/2) tau_M.
struct RegionSpec {
  Signature sig;
  Curve curve;

  RegionSpec(Signature s, Curve c) : sig(std::move(s)), curve(std::move(c)) {}

  Int bound() const { return sig.n() * sig.min_pq() * (curve.g - 1); }
};

// a < p, b < q, not both negative, |aq - bp| <= B. This realizes the six
// prose boundary pieces with the rays a = p and b = q excluded.
inline bool in_region(const RegionSpec& spec, const InvariantPair& inv) {
  if (inv.a >= spec.sig.p || inv.b >= spec.sig.q) return false;
  if (inv.a < 0 && inv.b < 0) return false;
  const Int line = inv.a * spec.sig.q - inv.b * spec.sig.p;
  const Int bound = spec.bound();
  return line >= -bound && line <= bound;
}

// The unique representative of [a,b] inside the region, found by scanning
// the finitely many shifts (a+lp, b+lq) with a+lp in [-B, p].
inline InvariantPair canonical_rep(const RegionSpec& spec, const InvariantPair& inv) {
  if (!milnor_wood_ok(spec.sig, spec.curve, inv))
    throw std::invalid_argument("canonical_rep: class has no component (Milnor-Wood fails)");
  const Int bound = spec.bound();
  const Int l_lo = ceil_int(Rational(-bound - inv.a, spec.sig.p));
  const Int l_hi = floor_int(Rational(spec.sig.p - inv.a, spec.sig.p));
  std::optional<InvariantPair> rep;
  for (Int l = l_lo; l <= l_hi; ++l) {
    const InvariantPair candidate{inv.a + l * spec.sig.p, inv.b + l * spec.sig.q};
    if (!in_region(spec, candidate)) continue;
    if (rep) throw std::logic_error("canonical_rep: representative not unique");
    rep = candidate;
  }
  if (!rep) throw std::logic_error("canonical_rep: no representative found");
  return *rep;
}

// All lattice points of the region, in lexicographic order.
inline std::vector<InvariantPair> enumerate_region(const RegionSpec& spec) {
  const Int bound = spec.bound();
  std::vector<InvariantPair> points;
  const Int a_lo = -bound / spec.sig.q - 1;
  const Int b_lo = -bound / spec.sig.p - 1;
  for (Int a = a_lo; a < spec.sig.p; ++a)
    for (Int b = b_lo; b < spec.sig.q; ++b)
      if (in_region(spec, InvariantPair{a, b})) points.push_back(InvariantPair{a, b});
  return points;
}

// Closed form 2n min{p,q}(g-1) + k, asserted against the enumeration.
inline Int count_components(const RegionSpec& spec) {
  const Int formula =
      2 * spec.sig.n() * spec.sig.min_pq() * (spec.curve.g - 1) + spec.sig.k();
  const Int enumerated(enumerate_region(spec).size());
  if (formula != enumerated)
    throw std::logic_error("count_components: closed form disagrees with enumeration");
  return formula;
}

// Points of the region on the line aq - bp = t k; exactly k of them when t
// is in range |t| <= B/k.
struct TauFiber {
  std::vector<InvariantPair> points;
  bool out_of_range = false;
};

inline TauFiber tau_fiber(const RegionSpec& spec, const Int& t) {
  TauFiber fiber;
  const Int k = spec.sig.k();
  if (t * k > spec.bound() || t * k < -spec.bound()) {
    fiber.out_of_range = true;
    return fiber;
  }
  for (const auto& pt : enumerate_region(spec))
    if (pt.a * spec.sig.q - pt.b * spec.sig.p == t * k) fiber.points.push_back(pt);
  return fiber;
}

// Checks, over |t| <= t_window, the three clauses of the tau exact sequence:
// image exactly (2k/n)Z, fibers of size k, kernel generated by [p/k, q/k].
struct ExactSequenceReport {
  bool image_ok = false;
  bool fibers_ok = false;
  bool kernel_ok = false;

  bool all_ok() const { return image_ok && fibers_ok && kernel_ok; }
};

inline ExactSequenceReport exact_sequence_check(const RegionSpec& spec, const Int& t_window) {
  if (t_window < 1) throw std::invalid_argument("exact_sequence_check: t_window must be >= 1");
  ExactSequenceReport report;
  const Int k = spec.sig.k();
  const Int n = spec.sig.n();
  const Int t_max = spec.bound() / k;
  const Int t_cap = std::min(t_window, t_max);

  report.image_ok = true;
  report.fibers_ok = true;
  for (Int t = -t_cap; t <= t_cap; ++t) {
    const TauFiber fiber = tau_fiber(spec, t);
    if (Int(fiber.points.size()) != k) report.fibers_ok = false;
    for (const auto& pt : fiber.points)
      if (toledo(spec.sig, pt) != Rational(2 * k * t, n)) report.image_ok = false;
  }
  // Every tau value over the region must be a multiple of 2k/n.
  for (const auto& pt : enumerate_region(spec)) {
    const Rational tau = toledo(spec.sig, pt);
    if (!(tau / Rational(2 * k, n)).is_integer()) report.image_ok = false;
  }

  // Kernel: tau(p/k, q/k) = 0 and the t = 0 fiber is hit by the k multiples
  // of (p/k, q/k).
  const InvariantPair generator{spec.sig.p / k, spec.sig.q / k};
  report.kernel_ok = toledo(spec.sig, generator).sign() == 0;
  std::vector<InvariantPair> kernel_reps;
  for (Int j = 0; j < k; ++j)
    kernel_reps.push_back(
        canonical_rep(spec, InvariantPair{j * generator.a, j * generator.b}));
  std::sort(kernel_reps.begin(), kernel_reps.end(), [](const auto& x, const auto& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  kernel_reps.erase(std::unique(kernel_reps.begin(), kernel_reps.end()), kernel_reps.end());
  TauFiber zero_fiber = tau_fiber(spec, 0);
  std::sort(zero_fiber.points.begin(), zero_fiber.points.end(),
            [](const auto& x, const auto& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
  if (kernel_reps != zero_fiber.points) report.kernel_ok = false;
  return report;
}

// Split of the region by GCD(p+q, a+b) = 1, with the witnesses: the class
// of (p, q-1) is coprime, the class of (0,0) is not.
struct CoprimePartition {
  std::vector<InvariantPair> coprime;     // C_1
  std::vector<InvariantPair> complement;  // C - C_1
};

inline CoprimePartition coprime_partition(const RegionSpec& spec) {
  CoprimePartition parts;
  for (const auto& pt : enumerate_region(spec))
    (gcd(spec.sig.n(), pt.d()) == 1 ? parts.coprime : parts.complement).push_back(pt);
  if (parts.coprime.empty() || parts.complement.empty())
    throw std::logic_error("coprime_partition: both parts must be non-empty");
  auto contains = [](const std::vector<InvariantPair>& v, const InvariantPair& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  const InvariantPair witness =
      canonical_rep(spec, InvariantPair{spec.sig.p, spec.sig.q - 1});
  if (!contains(parts.coprime, witness))
    throw std::logic_error("coprime_partition: class of (p, q-1) must be coprime");
  if (!contains(parts.complement, canonical_rep(spec, InvariantPair{0, 0})))
    throw std::logic_error("coprime_partition: class of (0,0) must be in the complement");
  return parts;
}

// GCD(a+b, n/k) is constant along each tau-line; if that constant is not 1
// then GCD(a+b, n) != 1 at every point of the line.
struct GcdLineReport {
  bool in_range = false;
  bool constant_ok = false;
  bool noncoprime_propagates = false;
  Int gcd_value = 0;  // the constant GCD(a+b, n/k) on the line
};

inline GcdLineReport gcd_line_invariance_check(const RegionSpec& spec, const Int& t) {
  GcdLineReport report;
  const TauFiber fiber = tau_fiber(spec, t);
  if (fiber.out_of_range || fiber.points.empty()) return report;
  report.in_range = true;
  const Int n_over_k = spec.sig.n() / spec.sig.k();
  report.gcd_value = gcd(fiber.points.front().d(), n_over_k);
  report.constant_ok = true;
  for (const auto& pt : fiber.points)
    if (gcd(pt.d(), n_over_k) != report.gcd_value) report.constant_ok = false;
  report.noncoprime_propagates = true;
  if (report.gcd_value != 1)
    for (const auto& pt : fiber.points)
      if (gcd(pt.d(), spec.sig.n()) == 1) report.noncoprime_propagates = false;
  return report;
}

// Achieved range of d = a+b over the region. d_min always equals -n(g-1);
// the top of the range -n(g-1) <= d < n is not fully achieved (top_gap).
struct DRange {
  Int d_min;
  Int d_max;
  bool top_gap;  // some d with d_max < d < n never occurs
};

inline DRange d_range(const RegionSpec& spec) {
  const auto points = enumerate_region(spec);
  DRange range{points.front().d(), points.front().d(), false};
  for (const auto& pt : points) {
    range.d_min = std::min(range.d_min, pt.d());
    range.d_max = std::max(range.d_max, pt.d());
  }
  if (range.d_min != -spec.sig.n() * (spec.curve.g - 1))
    throw std::logic_error("d_range: d_min does not match -n(g-1)");
  range.top_gap = range.d_max < spec.sig.n() - 1;
  return range;
}

enum class Connectedness { Connected, StableClosureConnected, Unknown };

inline const char* to_string(Connectedness c) {
  switch (c) {
    case Connectedness::Connected: return "connected";
    case Connectedness::StableClosureConnected: return "stable_closure_connected";
    case Connectedness::Unknown: return "unknown";
  }
  return "?";
}

// Canonical label data of one component class.
struct ComponentClass {
  InvariantPair rep;
  Rational tau;
  Int d;
  bool coprime;  // GCD(p+q, a+b) = 1
  Int t;         // line index: aq - bp = t k
};

// Decomposition at maximal |tau| with p != q: a U(m,m)-Higgs factor with
// extreme Toledo invariant times a bundle moduli space of rank |p-q|.
struct RigidityFactorization {
  Int higgs_rank;    // m = min{p,q}; factor M(m, m, higgs_a, higgs_b)
  Int higgs_a;
  Int higgs_b;
  Int bundle_rank;   // |p - q|
  Int bundle_deg;
};

// Identification M(a,b) ~ M_{K^2}(p,a) when p = q and |a-b| = p(2g-2); the
// fiber rank of the vector-bundle open subset is h^0(End V (x) K^2).
struct KSquaredDescriptor {
  Int rank;
  Int degree;
  Int fiber_rank;  // p^2 (3g-3), by Riemann-Roch
};

struct ComponentRecord {
  ComponentClass cls;
  bool nonempty = false;
  bool stable_locus_nonempty = false;
  bool smooth = false;
  Int dimension = 0;
  Connectedness connectedness = Connectedness::Unknown;
  std::optional<RigidityFactorization> rigidity;
  std::optional<KSquaredDescriptor> k_squared;
  std::optional<HiggsTripleCorrespondence> triple;
  std::optional<AlphaInterval> alpha;
  std::optional<Rational> min_energy_level;
};

inline RigidityFactorization rigidity_factorization(const Signature& sig, const Curve& curve,
                                                    const InvariantPair& inv) {
  const Int m = sig.min_pq();
  const Int degk = curve.deg_canonical();
  const int s = toledo(sig, inv).sign();
  RigidityFactorization rf;
  rf.higgs_rank = m;
  rf.bundle_rank = sig.max_pq() - m;
  if (sig.p < sig.q) {
    // The rank-p sector maps into W; the Higgs factor keeps V.
    rf.higgs_a = inv.a;
    rf.higgs_b = s > 0 ? Int(inv.a - sig.p * degk) : Int(inv.a + sig.p * degk);
    rf.bundle_deg = inv.b - rf.higgs_b;
  } else {
    // p > q: the Higgs factor keeps W.
    rf.higgs_b = inv.b;
    rf.higgs_a = s > 0 ? Int(inv.b + sig.q * degk) : Int(inv.b - sig.q * degk);
    rf.bundle_deg = inv.a - rf.higgs_a;
  }
  // Degrees of the factors account for the whole of (a,b).
  if (rf.higgs_a + rf.higgs_b + rf.bundle_deg != inv.d())
    throw std::logic_error("rigidity_factorization: degree bookkeeping failed");
  // The Higgs factor has Toledo invariant +-m(2g-2).
  const Rational factor_tau =
      toledo(Signature(m, m), InvariantPair{rf.higgs_a, rf.higgs_b});
  if (factor_tau.abs() != Rational(m * degk))
    throw std::logic_error("rigidity_factorization: factor Toledo invariant not extreme");
  return rf;
}

inline ComponentRecord classify(const Signature& sig, const Curve& curve,
                                const InvariantPair& inv) {
  const RegionSpec spec(sig, curve);
  ComponentRecord rec;
  rec.cls.tau = toledo(sig, inv);
  rec.cls.d = inv.d();
  rec.cls.coprime = gcd(sig.n(), inv.d()) == 1;
  rec.cls.t = (inv.a * sig.q - inv.b * sig.p) / sig.k();
  rec.nonempty = milnor_wood_ok(sig, curve, inv);
  if (!rec.nonempty) {
    rec.cls.rep = inv;
    return rec;
  }
  rec.cls.rep = canonical_rep(spec, inv);

  const Rational tau_abs = rec.cls.tau.abs();
  const Rational tau_m = toledo_max(sig, curve);
  const bool tau_zero = rec.cls.tau.sign() == 0;
  const bool tau_extreme = tau_abs == tau_m;

  rec.stable_locus_nonempty = !tau_zero && !(tau_extreme && sig.p != sig.q);
  rec.smooth = rec.cls.coprime;

  if (tau_extreme && sig.p != sig.q) {
    rec.dimension = rigid_dim(sig, curve);
    rec.rigidity = rigidity_factorization(sig, curve, inv);
  } else {
    rec.dimension = expected_dim_higgs(sig, curve);
  }

  if (sig.p == sig.q && tau_extreme) {
    // |a - b| = p(2g-2): K^2-twisted Higgs pair moduli.
    rec.k_squared = KSquaredDescriptor{sig.p, inv.a, sig.p * sig.p * (3 * curve.g - 3)};
  }

  const Int degk = curve.deg_canonical();
  const bool markman_xia = sig.p == sig.q && tau_abs > Rational((sig.p - 1) * degk) &&
                           tau_abs <= Rational(sig.p * degk);
  if (tau_zero || (tau_extreme && sig.p != sig.q) || rec.cls.coprime || markman_xia)
    rec.connectedness = Connectedness::Connected;
  else if (rec.stable_locus_nonempty)
    rec.connectedness = Connectedness::StableClosureConnected;
  else
    rec.connectedness = Connectedness::Unknown;

  rec.triple = higgs_to_triple(sig, curve, inv);
  rec.alpha = alpha_bounds_from_higgs(sig, curve, inv);
  rec.min_energy_level = min_energy(sig, inv);
  return rec;
}

}  // namespace higgsatlas
