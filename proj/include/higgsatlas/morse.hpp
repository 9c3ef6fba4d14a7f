#pragma once

// Fixed points of the circle action as systems of Hodge bundles: weight
// vectors, adjoint-level rank/degree bookkeeping, Euler characteristics of
// the weight-k complexes, Hessian eigenspace dimensions, the Morse index,
// and the numeric minimum test.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "higgsatlas/core.hpp"
#include "higgsatlas/rational.hpp"

namespace higgsatlas {

enum class Sector { V, W };

struct HodgeSummand {
  Int rank;
  Int degree;
  Sector sector;
};

// Chain F_1 + ... + F_m with Phi mapping F_i to F_{i+1} (x) K. Stable fixed
// points have strictly alternating sectors; reducible ones need not.
struct HodgeSystem {
  std::vector<HodgeSummand> summands;

  explicit HodgeSystem(std::vector<HodgeSummand> s) : summands(std::move(s)) {
    if (summands.empty()) throw std::invalid_argument("HodgeSystem: needs at least one summand");
    for (const auto& f : summands)
      if (f.rank < 1) throw std::invalid_argument("HodgeSystem: ranks must be >= 1");
  }

  std::size_t length() const { return summands.size(); }

  Int total_rank() const {
    Int r = 0;
    for (const auto& f : summands) r += f.rank;
    return r;
  }

  bool alternating() const {
    for (std::size_t i = 1; i < summands.size(); ++i)
      if (summands[i].sector == summands[i - 1].sector) return false;
    return true;
  }

  // Ranks in each sector give the implied signature; valid only when both
  // sectors are populated.
  Signature implied_signature() const {
    Int p = 0, q = 0;
    for (const auto& f : summands) (f.sector == Sector::V ? p : q) += f.rank;
    return Signature(p, q);
  }
};

// Weights of the trace-free infinitesimal gauge transformation: consecutive
// unit increments with sum(lambda_i rank_i) = 0.
inline std::vector<Rational> weights(const HodgeSystem& h) {
  Int weighted = 0, total = 0;
  Int i = 0;
  for (const auto& f : h.summands) {
    weighted += i * f.rank;
    total += f.rank;
    ++i;
  }
  const Rational lambda1 = Rational(-weighted, total);
  std::vector<Rational> out;
  out.reserve(h.length());
  for (std::size_t j = 0; j < h.length(); ++j)
    out.push_back(lambda1 + Rational(Int(j)));
  return out;
}

// Data of U_k = sum over i-j=k of Hom(F_j,F_i), split by sector parity of
// the map: same-sector pieces in U^+, cross-sector in U^-.
struct AdjointLevel {
  Int k;
  Int rank_plus = 0;
  Int deg_plus = 0;
  Int rank_minus = 0;
  Int deg_minus = 0;

  Int rank_total() const { return rank_plus + rank_minus; }
  Int deg_total() const { return deg_plus + deg_minus; }
};

inline AdjointLevel adjoint_level(const HodgeSystem& h, const Int& k) {
  AdjointLevel level;
  level.k = k;
  const Int m(h.summands.size());
  for (Int j = 0; j < m; ++j) {
    const Int i = j + k;
    if (i < 0 || i >= m) continue;
    const auto& src = h.summands[static_cast<std::size_t>(j)];
    const auto& dst = h.summands[static_cast<std::size_t>(i)];
    const Int rank = src.rank * dst.rank;
    const Int deg = src.rank * dst.degree - dst.rank * src.degree;
    if (src.sector == dst.sector) {
      level.rank_plus += rank;
      level.deg_plus += deg;
    } else {
      level.rank_minus += rank;
      level.deg_minus += deg;
    }
  }
  return level;
}

// chi(C*_k) = chi(U_k^+) - chi(U_{k+1}^- (x) K)
//           = (1-g)(rk U_k^+ + rk U_{k+1}^-) + deg U_k^+ - deg U_{k+1}^-.
inline Int chi_k(const HodgeSystem& h, const Int& k, const Curve& curve) {
  const AdjointLevel lk = adjoint_level(h, k);
  const AdjointLevel lk1 = adjoint_level(h, k + 1);
  return (1 - curve.g) * (lk.rank_plus + lk1.rank_minus) + lk.deg_plus - lk1.deg_minus;
}

// dim of the Hessian eigenspace for eigenvalue -k, via the stability
// vanishing H^0 = H^2 = 0 for k >= 1: dim H^1(C*_k) = -chi(C*_k).
// chi > 0 means the data cannot come from a polystable fixed point; the
// dimension is clamped at 0 and the caller can flag it via chi_k.
inline Int hessian_dim(const HodgeSystem& h, const Int& k, const Curve& curve) {
  if (k < 1) throw std::invalid_argument("hessian_dim: requires k >= 1");
  const Int chi = chi_k(h, k, curve);
  return chi < 0 ? -chi : Int(0);
}

// Sum of Hessian eigenspace dimensions over k >= 1; levels vanish for
// k >= m, so the sum is finite.
inline Int morse_index(const HodgeSystem& h, const Curve& curve) {
  Int total = 0;
  const Int m(h.summands.size());
  for (Int k = 1; k < m; ++k) total += hessian_dim(h, k, curve);
  return total;
}

enum class MinimumVerdict { NotMinimum, CandidateMinimum };

inline const char* to_string(MinimumVerdict v) {
  return v == MinimumVerdict::NotMinimum ? "not_minimum" : "candidate_minimum";
}

// Necessary numeric conditions for ad(Phi): U_k^+ -> U_{k+1}^- (x) K to be
// an isomorphism for all k >= 1: equal ranks, and degrees matching up to the
// K-twist. Rank-undetectable injectivity failures are not caught, so
// CandidateMinimum is a necessary-condition verdict only.
inline MinimumVerdict minimum_numeric_test(const HodgeSystem& h, const Curve& curve) {
  const Int m(h.summands.size());
  const Int degk = curve.deg_canonical();
  for (Int k = 1; k < m; ++k) {
    const AdjointLevel lk = adjoint_level(h, k);
    const AdjointLevel lk1 = adjoint_level(h, k + 1);
    if (lk.rank_plus == 0 && lk1.rank_minus == 0) continue;
    if (lk.rank_plus != lk1.rank_minus) return MinimumVerdict::NotMinimum;
    if (lk.deg_plus != lk1.deg_minus + degk * lk1.rank_minus)
      return MinimumVerdict::NotMinimum;
  }
  return MinimumVerdict::CandidateMinimum;
}

// 1 - chi(U^+) + chi(U^- (x) K) with rk U^+ = p^2+q^2, deg U^+ = 0,
// rk U^- = 2pq, deg(U^- (x) K) = 2pq(2g-2). Must equal 1+(p+q)^2(g-1).
inline Int deformation_dim(const Signature& sig, const Curve& curve) {
  const Int rk_plus = sig.p * sig.p + sig.q * sig.q;
  const Int rk_minus = 2 * sig.p * sig.q;
  const Int chi_plus = (1 - curve.g) * rk_plus;  // deg U^+ = 0
  const Int chi_minus_twisted = (1 - curve.g) * rk_minus + rk_minus * curve.deg_canonical();
  return 1 - chi_plus + chi_minus_twisted;
}

// The two-step system realizing the minimum N(a,b): beta = 0 when tau > 0
// (chain V -> W), gamma = 0 when tau < 0 (chain W -> V). At tau = 0 both
// orderings are valid; V-first is returned and the flag records the tie.
struct CanonicalMinimum {
  HodgeSystem system;
  bool both_orderings_valid;
};

inline CanonicalMinimum canonical_minimum_system(const Signature& sig, const Curve& curve,
                                                 const InvariantPair& inv) {
  (void)curve;
  const int s = toledo(sig, inv).sign();
  const HodgeSummand v{sig.p, inv.a, Sector::V};
  const HodgeSummand w{sig.q, inv.b, Sector::W};
  std::vector<HodgeSummand> chain = s < 0 ? std::vector<HodgeSummand>{w, v}
                                          : std::vector<HodgeSummand>{v, w};
  return CanonicalMinimum{HodgeSystem(std::move(chain)), s == 0};
}

// Text format for the CLI: comma-separated "rank:degree:sector" entries,
// e.g. "1:0:V,1:0:W,1:0:V".
inline HodgeSystem parse_hodge_system(const std::string& text) {
  std::vector<HodgeSummand> summands;
  std::stringstream ss(text);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    const auto c1 = entry.find(':');
    const auto c2 = entry.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("HodgeSystem: malformed entry '" + entry + "'");
    const std::string sector = entry.substr(c2 + 1);
    if (sector != "V" && sector != "W")
      throw std::invalid_argument("HodgeSystem: sector must be V or W in '" + entry + "'");
    try {
      summands.push_back(HodgeSummand{Int(entry.substr(0, c1)),
                                      Int(entry.substr(c1 + 1, c2 - c1 - 1)),
                                      sector == "V" ? Sector::V : Sector::W});
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("HodgeSystem: bad integer in '" + entry + "'");
    }
  }
  return HodgeSystem(std::move(summands));
}

inline std::string format_hodge_system(const HodgeSystem& h) {
  std::string out;
  for (const auto& f : h.summands) {
    if (!out.empty()) out += ",";
    out += f.rank.str() + ":" + f.degree.str() + ":" + (f.sector == Sector::V ? "V" : "W");
  }
  return out;
}

}  // namespace higgsatlas
