#pragma once

// Independent brute-force verifiers for the closed-form operations. Every
// check here recomputes its expected value from first principles (lattice
// scans, direct slope comparisons, per-pair level sums) rather than calling
// the formula under test.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "higgsatlas/atlas.hpp"
#include "higgsatlas/core.hpp"
#include "higgsatlas/morse.hpp"
#include "higgsatlas/triples.hpp"

namespace higgsatlas {

struct GridSpec {
  Int p_max = 3;
  Int q_max = 3;
  Int g_max = 3;
  Int t_window = 6;
  unsigned seed = 1;

  GridSpec() = default;
  GridSpec(Int p, Int q, Int g) : p_max(std::move(p)), q_max(std::move(q)), g_max(std::move(g)) {
    if (p_max < 1 || q_max < 1 || g_max < 2)
      throw std::invalid_argument("GridSpec: need p_max,q_max >= 1 and g_max >= 2");
  }
};

struct VerifyReport {
  std::string suite;
  long long cases = 0;
  std::vector<std::string> failures;
  long long elapsed_ms = 0;

  bool pass() const { return failures.empty(); }
};

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(VerifyReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
  }

 private:
  VerifyReport& report_;
  std::chrono::steady_clock::time_point start_;
};

// Region membership spelled out from the boundary list, independent of
// atlas::enumerate_region's scan.
inline long long brute_region_count(const Int& p, const Int& q, const Int& g) {
  const Int bound = (p + q) * (p < q ? p : q) * (g - 1);
  long long count = 0;
  for (Int a = -bound; a < p; ++a) {
    for (Int b = -bound; b < q; ++b) {
      if (a < 0 && b < 0) continue;
      const Int line = a * q - b * p;
      if (line < -bound || line > bound) continue;
      ++count;
    }
  }
  return count;
}

// Direct check whether alpha is critical for t: some proper numeric
// subtriple with different ordinary slope has equal alpha-slope.
inline bool brute_is_critical(const TripleType& t, const Rational& alpha) {
  const Int n = t.n1 + t.n2;
  const Int d = t.d1 + t.d2;
  const Rational mu_t = mu_alpha(t, alpha);
  for (Int n1p = 0; n1p <= t.n1; ++n1p) {
    for (Int n2p = 0; n2p <= t.n2; ++n2p) {
      const Int np = n1p + n2p;
      if (np == 0 || np == n) continue;
      // mu_alpha(T') = (dp + alpha n2p)/np = mu_t solves to one dp.
      const Rational dp_rat = Rational(np) * mu_t - alpha * Rational(n2p);
      if (!dp_rat.is_integer()) continue;
      const Int dp = dp_rat.as_integer();
      if (Rational(dp, np) != Rational(d, n)) return true;
    }
  }
  return false;
}

}  // namespace detail

// Enumeration cardinality equals 2n min{p,q}(g-1) + k on the whole grid.
inline VerifyReport verify_counts(const GridSpec& grid) {
  VerifyReport report;
  report.suite = "counts";
  detail::SuiteTimer timer(report);
  for (Int p = 1; p <= grid.p_max; ++p) {
    for (Int q = 1; q <= grid.q_max; ++q) {
      for (Int g = 2; g <= grid.g_max; ++g) {
        ++report.cases;
        const Int m = p < q ? p : q;
        const Int formula = 2 * (p + q) * m * (g - 1) + gcd(p, q);
        const long long brute = detail::brute_region_count(p, q, g);
        if (formula != brute)
          report.failures.push_back("counts mismatch at p=" + p.str() + " q=" + q.str() +
                                    " g=" + g.str() + ": formula " + formula.str() +
                                    " vs enumeration " + std::to_string(brute));
      }
    }
  }
  return report;
}

// Lemma closed forms agree with the triple-side alpha range, and the
// position of 2g-2 satisfies all four biconditionals, over every region
// point of the grid.
inline VerifyReport verify_alpha_consistency(const GridSpec& grid) {
  VerifyReport report;
  report.suite = "alpha";
  detail::SuiteTimer timer(report);
  for (Int p = 1; p <= grid.p_max; ++p) {
    for (Int q = 1; q <= grid.q_max; ++q) {
      for (Int g = 2; g <= grid.g_max; ++g) {
        const Signature sig(p, q);
        const Curve curve(g);
        const RegionSpec spec(sig, curve);
        for (const auto& inv : enumerate_region(spec)) {
          ++report.cases;
          auto fail = [&](const std::string& what) {
            report.failures.push_back(what + " at p=" + p.str() + " q=" + q.str() +
                                      " g=" + g.str() + " a=" + inv.a.str() +
                                      " b=" + inv.b.str());
          };
          const AlphaInterval higgs_side = alpha_bounds_from_higgs(sig, curve, inv);
          const auto correspondence = higgs_to_triple(sig, curve, inv);
          std::vector<TripleType> sides;
          if (correspondence.gamma_zero) sides.push_back(*correspondence.gamma_zero);
          if (correspondence.beta_zero) sides.push_back(*correspondence.beta_zero);
          for (const auto& t : sides) {
            if (alpha_range(t) != higgs_side) fail("alpha range mismatch");
            // mu_alpha at 2g-2 equals mu(E) + 2g-2.
            const Rational mu_e(inv.d(), sig.n());
            if (mu_alpha(t, Rational(curve.deg_canonical())) !=
                mu_e + Rational(curve.deg_canonical()))
              fail("mu_alpha(2g-2) identity");
          }
          // Biconditionals for the position of 2g-2.
          const auto pos = position_of_2g2(sig, curve, inv);
          const Rational tau = toledo(sig, inv);
          const Rational tau_m = toledo_max(sig, curve);
          const Rational two_g2(curve.deg_canonical());
          if ((pos == PositionOf2g2::Outside) != !milnor_wood_ok(sig, curve, inv))
            fail("outside biconditional");
          if ((pos == PositionOf2g2::AtAlphaMin) != (tau.sign() == 0)) fail("tau=0 biconditional");
          if ((pos == PositionOf2g2::AtAlphaMax) != (tau.abs() == tau_m && p != q))
            fail("alpha_M biconditional");
          if ((pos == PositionOf2g2::AtAlphaMinZero_pEQq) != (tau.abs() == tau_m && p == q))
            fail("alpha_m=0 biconditional");
          // Endpoint coincidences mirror the interval itself.
          if (pos == PositionOf2g2::AtAlphaMin && higgs_side.lo != two_g2)
            fail("alpha_m != 2g-2 at tau=0");
          if (pos == PositionOf2g2::AtAlphaMax && higgs_side.hi != two_g2)
            fail("alpha_M != 2g-2 at |tau|=tau_M");
          if (pos == PositionOf2g2::AtAlphaMinZero_pEQq && higgs_side.lo.sign() != 0)
            fail("alpha_m != 0 at |tau|=tau_M, p=q");
        }
      }
    }
  }
  return report;
}

// Whenever GCD(n1+n2, d1+d2 - (2g-2) n1) = 1 on the grid's induced triples,
// direct slope comparison finds 2g-2 non-critical.
inline VerifyReport verify_critical_gcd(const GridSpec& grid) {
  VerifyReport report;
  report.suite = "critical";
  detail::SuiteTimer timer(report);
  for (Int p = 1; p <= grid.p_max; ++p) {
    for (Int q = 1; q <= grid.q_max; ++q) {
      for (Int g = 2; g <= grid.g_max; ++g) {
        const Signature sig(p, q);
        const Curve curve(g);
        const Int m = curve.deg_canonical();
        for (const auto& inv : enumerate_region(RegionSpec(sig, curve))) {
          const auto correspondence = higgs_to_triple(sig, curve, inv);
          std::vector<TripleType> sides;
          if (correspondence.gamma_zero) sides.push_back(*correspondence.gamma_zero);
          if (correspondence.beta_zero) sides.push_back(*correspondence.beta_zero);
          for (const auto& t : sides) {
            ++report.cases;
            if (!gcd_noncritical_test(t, m)) continue;
            if (detail::brute_is_critical(t, Rational(m)))
              report.failures.push_back("gcd test passed but 2g-2 critical for (" +
                                        t.n1.str() + "," + t.n2.str() + "," + t.d1.str() +
                                        "," + t.d2.str() + ") g=" + g.str());
          }
        }
      }
    }
  }
  // Pinned example: (1,1,2,1) has critical set {3,5,7,9} in (1,10].
  ++report.cases;
  const TripleType pinned(1, 1, 2, 1);
  const std::vector<Rational> expected{Rational(3), Rational(5), Rational(7), Rational(9)};
  if (critical_values(pinned, Rational(10)) != expected)
    report.failures.push_back("critical set of (1,1,2,1) in (1,10] is not {3,5,7,9}");
  return report;
}

// deformation_dim = expected_dim_higgs everywhere; rigid_dim equals its
// factor sum and stays strictly below the expected dimension for p != q.
inline VerifyReport verify_dimensions(const GridSpec& grid) {
  VerifyReport report;
  report.suite = "dims";
  detail::SuiteTimer timer(report);
  for (Int p = 1; p <= grid.p_max; ++p) {
    for (Int q = 1; q <= grid.q_max; ++q) {
      for (Int g = 2; g <= grid.g_max; ++g) {
        ++report.cases;
        const Signature sig(p, q);
        const Curve curve(g);
        auto fail = [&](const std::string& what) {
          report.failures.push_back(what + " at p=" + p.str() + " q=" + q.str() +
                                    " g=" + g.str());
        };
        if (deformation_dim(sig, curve) != expected_dim_higgs(sig, curve))
          fail("deformation_dim != expected_dim_higgs");
        if (p != q) {
          const Int m = sig.min_pq();
          const Int big = sig.max_pq();
          const Int factor_sum =
              (1 + 4 * m * m * (g - 1)) + (1 + (big - m) * (big - m) * (g - 1));
          if (rigid_dim(sig, curve) != factor_sum) fail("rigid_dim != factor sum");
          if (!(rigid_dim(sig, curve) < expected_dim_higgs(sig, curve)))
            fail("rigid_dim not below expected dimension");
        }
      }
    }
  }
  return report;
}

// Level identities, duality, parity split and minimum verdicts on seeded
// random Hodge systems, recomputed per pair rather than via adjoint_level.
inline VerifyReport verify_morse_axioms(const GridSpec& grid, int systems = 500) {
  VerifyReport report;
  report.suite = "morse";
  detail::SuiteTimer timer(report);
  std::mt19937 rng(grid.seed);
  std::uniform_int_distribution<int> length_dist(1, 6);
  std::uniform_int_distribution<int> rank_dist(1, 3);
  std::uniform_int_distribution<int> deg_dist(-5, 5);
  std::uniform_int_distribution<int> sector_dist(0, 1);

  for (int trial = 0; trial < systems; ++trial) {
    ++report.cases;
    std::vector<HodgeSummand> summands;
    const int len = length_dist(rng);
    const bool alternate = sector_dist(rng) == 0;
    Sector sector = sector_dist(rng) == 0 ? Sector::V : Sector::W;
    for (int i = 0; i < len; ++i) {
      summands.push_back(HodgeSummand{Int(rank_dist(rng)), Int(deg_dist(rng)), sector});
      if (alternate)
        sector = sector == Sector::V ? Sector::W : Sector::V;
      else
        sector = sector_dist(rng) == 0 ? Sector::V : Sector::W;
    }
    const HodgeSystem h(summands);
    const Curve curve(Int(2 + trial % 3));
    auto fail = [&](const std::string& what) {
      report.failures.push_back(what + " for system " + format_hodge_system(h) +
                                " g=" + curve.g.str());
    };

    // Weight vector: unit increments and trace-free, checked directly.
    const auto lambdas = weights(h);
    Rational trace(0);
    for (std::size_t i = 0; i < h.length(); ++i) {
      trace = trace + lambdas[i] * Rational(h.summands[i].rank);
      if (i > 0 && lambdas[i] - lambdas[i - 1] != Rational(1)) fail("weights: increments not 1");
    }
    if (trace.sign() != 0) fail("weights: not trace-free");

    // Level sums: sum rk U_k = (sum r_i)^2 and sum deg U_k = 0, recomputed
    // from the levels; duality between k and -k; parity split when the
    // chain alternates.
    const Int m(h.length());
    Int rank_sum = 0, deg_sum = 0;
    for (Int k = -(m - 1); k < m; ++k) {
      const AdjointLevel level = adjoint_level(h, k);
      rank_sum += level.rank_total();
      deg_sum += level.deg_total();
      const AdjointLevel dual = adjoint_level(h, -k);
      if (level.rank_total() != dual.rank_total() || level.deg_total() != -dual.deg_total())
        fail("level duality");
      if (h.alternating()) {
        const bool even = k % 2 == 0;
        if (even && level.rank_minus != 0) fail("parity split: U_k^- != 0 for even k");
        if (!even && level.rank_plus != 0) fail("parity split: U_k^+ != 0 for odd k");
      }
    }
    if (rank_sum != h.total_rank() * h.total_rank()) fail("sum rk U_k != (sum r_i)^2");
    if (deg_sum != 0) fail("sum deg U_k != 0");

    // The two-step minimum statements concern genuine fixed-point chains,
    // which alternate sectors; same-sector pairs are reducible configurations.
    if (h.alternating() && h.length() == 2 && morse_index(h, curve) != 0)
      fail("two-step index != 0");
    if (h.alternating() && h.length() == 2 &&
        minimum_numeric_test(h, curve) != MinimumVerdict::CandidateMinimum)
      fail("two-step not CandidateMinimum");
    if (h.alternating() && h.length() >= 3 && h.length() % 2 == 1 &&
        minimum_numeric_test(h, curve) != MinimumVerdict::NotMinimum)
      fail("odd alternating chain not NotMinimum");
  }
  return report;
}

inline std::vector<VerifyReport> verify_all(const GridSpec& grid) {
  return {verify_counts(grid), verify_alpha_consistency(grid), verify_critical_gcd(grid),
          verify_dimensions(grid), verify_morse_axioms(grid)};
}

}  // namespace higgsatlas
