// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if anything fails. argv[1] must be the path to the CLI
// binary (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "higgsatlas/atlas.hpp"
#include "higgsatlas/oracle.hpp"
#include "higgsatlas/serialize.hpp"

using namespace higgsatlas;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << index << "] " << name;
  if (!ok && !detail.empty()) std::cout << "  -- " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

bool criterion_counts(std::string& detail) {
  int cases = 0;
  for (long long p = 1; p <= 4; ++p)
    for (long long q = 1; q <= 4; ++q)
      for (long long g : {2LL, 3LL, 4LL}) {
        const Signature sig(p, q);
        const Curve curve(g);
        const RegionSpec spec(sig, curve);
        ++cases;
        const Int expected =
            2 * Int(p + q) * sig.min_pq() * Int(g - 1) + gcd(Int(p), Int(q));
        const Int got = count_components(spec);
        const Int brute = Int(enumerate_region(spec).size());
        if (got != expected || brute != expected) {
          detail = "(p,q,g)=(" + std::to_string(p) + "," + std::to_string(q) + "," +
                   std::to_string(g) + ") formula " + expected.str() + " got " + got.str() +
                   " brute " + brute.str();
          return false;
        }
      }
  if (cases != 48) {
    detail = "expected 48 cases, ran " + std::to_string(cases);
    return false;
  }
  return true;
}

bool criterion_fibers(std::string& detail) {
  struct Case {
    long long p, q;
  };
  for (const Case c : {Case{2, 4}, Case{2, 6}, Case{3, 3}}) {
    const Signature sig(c.p, c.q);
    const RegionSpec spec(sig, Curve(2));
    const Int k = sig.k();
    const Int t_max = spec.bound() / k;
    for (Int t = -t_max; t <= t_max; ++t) {
      const TauFiber fiber = tau_fiber(spec, t);
      if (Int(fiber.points.size()) != k) {
        detail = "fiber size != gcd(p,q) at t=" + t.str();
        return false;
      }
      const Rational want(2 * k * t, sig.n());
      for (const auto& pt : fiber.points) {
        if (toledo(sig, pt) != want) {
          detail = "tau mismatch on fiber t=" + t.str();
          return false;
        }
        if (pt.a * Int(c.q) - pt.b * Int(c.p) != t * k) {
          detail = "point off the line aq-bp=tk at t=" + t.str();
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_24_fiber(std::string& detail) {
  const Signature sig(2, 4);
  const RegionSpec spec(sig, Curve(2));
  const TauFiber fiber = tau_fiber(spec, Int(-2));
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& pt : fiber.points) got.insert({pt.a.str(), pt.b.str()});
  const std::set<std::pair<std::string, std::string>> want{{"-1", "0"}, {"0", "2"}};
  if (got != want) {
    detail = "fiber points differ";
    return false;
  }
  const Int n = sig.n();
  const Int k = sig.k();
  if (gcd(Int(-1) + Int(0), n / k) != 1 || gcd(Int(0) + Int(2), n) != 2) {
    detail = "gcd values on the fiber differ";
    return false;
  }
  // Same tau, different coprimality class: the gcd of d with n is not a
  // function of tau alone.
  return true;
}

bool criterion_alpha(std::string& detail) {
  for (long long p = 1; p <= 4; ++p)
    for (long long q = 1; q <= 4; ++q)
      for (long long g = 2; g <= 3; ++g) {
        const Signature sig(p, q);
        const Curve curve(g);
        const RegionSpec spec(sig, curve);
        for (const auto& pt : enumerate_region(spec)) {
          const Rational tau = toledo(sig, pt);
          const Rational tau_m = toledo_max(sig, curve);
          const AlphaInterval closed = alpha_bounds_from_higgs(sig, curve, pt);
          const auto corr = higgs_to_triple(sig, curve, pt);
          const AlphaInterval direct = alpha_range(corr.triple());
          if (!(closed == direct)) {
            detail = "closed-form/direct alpha range mismatch at (a,b)=(" + pt.a.str() +
                     "," + pt.b.str() + ")";
            return false;
          }
          const PositionOf2g2 pos = position_of_2g2(sig, curve, pt);
          const bool mw = milnor_wood_ok(sig, curve, pt);
          const bool extreme = tau.abs() == tau_m;
          bool ok = true;
          ok = ok && ((pos == PositionOf2g2::Outside) == !mw);
          if (mw) {
            ok = ok && ((pos == PositionOf2g2::AtAlphaMin) == (tau.sign() == 0));
            ok = ok && ((pos == PositionOf2g2::AtAlphaMax) == (extreme && p != q));
            ok = ok &&
                 ((pos == PositionOf2g2::AtAlphaMinZero_pEQq) == (extreme && p == q));
          }
          if (!ok) {
            detail = "position biconditional fails at (p,q,g,a,b)=(" + std::to_string(p) +
                     "," + std::to_string(q) + "," + std::to_string(g) + "," + pt.a.str() +
                     "," + pt.b.str() + ")";
            return false;
          }
        }
      }
  return true;
}

bool criterion_mu(std::string& detail) {
  for (long long p = 1; p <= 4; ++p)
    for (long long q = 1; q <= 4; ++q)
      for (long long g = 2; g <= 3; ++g) {
        const Signature sig(p, q);
        const Curve curve(g);
        for (const auto& pt : enumerate_region(RegionSpec(sig, curve))) {
          if (!milnor_wood_ok(sig, curve, pt)) continue;
          const auto corr = higgs_to_triple(sig, curve, pt);
          const TripleType t = corr.triple();
          const Rational mu_e = Rational(pt.d(), sig.n());
          const Rational at_2g2 = mu_alpha(t, Rational(curve.deg_canonical()));
          if (at_2g2 != mu_e + Rational(curve.deg_canonical())) {
            detail = "mu_alpha identity fails at (p,q,g,a,b)=(" + std::to_string(p) + "," +
                     std::to_string(q) + "," + std::to_string(g) + "," + pt.a.str() + "," +
                     pt.b.str() + ")";
            return false;
          }
        }
      }
  return true;
}

bool criterion_critical(std::string& detail) {
  const TripleType t(1, 1, 2, 1);
  const auto values = critical_values(t, Rational(10));
  std::vector<Rational> want{Rational(3), Rational(5), Rational(7), Rational(9)};
  if (values != want) {
    detail = "(1,1,2,1) critical set in (1,10] differs";
    return false;
  }
  // On every triple induced by the grid: whenever the gcd test certifies
  // m = 2g-2 non-critical, the direct wall enumeration must agree.
  for (long long p = 1; p <= 4; ++p)
    for (long long q = 1; q <= 4; ++q)
      for (long long g = 2; g <= 3; ++g) {
        const Signature sig(p, q);
        const Curve curve(g);
        const Int m = curve.deg_canonical();
        for (const auto& pt : enumerate_region(RegionSpec(sig, curve))) {
          if (!milnor_wood_ok(sig, curve, pt)) continue;
          const TripleType tt = higgs_to_triple(sig, curve, pt).triple();
          if (!gcd_noncritical_test(tt, m)) continue;
          const AlphaInterval iv = alpha_range(tt);
          if (Rational(m) <= iv.lo) continue;
          const auto crit = critical_values(tt, Rational(m) + Rational(1, 2));
          if (std::find(crit.begin(), crit.end(), Rational(m)) != crit.end()) {
            detail = "gcd test certified a critical value for (" + tt.n1.str() + "," +
                     tt.n2.str() + "," + tt.d1.str() + "," + tt.d2.str() + ")";
            return false;
          }
        }
      }
  return true;
}

bool criterion_dimensions(std::string& detail) {
  const GridSpec grid(6, 6, 5);
  const VerifyReport rep = verify_dimensions(grid);
  if (!rep.pass()) {
    detail = rep.failures.empty() ? "dimension suite failed" : rep.failures.front();
    return false;
  }
  const Int rigid = rigid_dim(Signature(2, 3), Curve(2));
  const Int expected = expected_dim_higgs(Signature(2, 3), Curve(2));
  if (rigid != 19 || expected != 26 || !(rigid < expected)) {
    detail = "rigid/expected pinned values differ: " + rigid.str() + " vs " + expected.str();
    return false;
  }
  return true;
}

bool criterion_morse(std::string& detail) {
  GridSpec grid(4, 4, 4);
  grid.seed = 20240817;
  const VerifyReport rep = verify_morse_axioms(grid, 500);
  if (!rep.pass()) {
    detail = rep.failures.empty() ? "morse suite failed" : rep.failures.front();
    return false;
  }
  return true;
}

bool criterion_drange(std::string& detail) {
  for (long long p = 1; p <= 4; ++p)
    for (long long q = 1; q <= 4; ++q)
      for (long long g = 2; g <= 3; ++g) {
        const RegionSpec spec((Signature(p, q)), Curve(g));
        const DRange range = d_range(spec);
        if (range.d_min != -Int(p + q) * Int(g - 1)) {
          detail = "d_min formula fails at (p,q,g)=(" + std::to_string(p) + "," +
                   std::to_string(q) + "," + std::to_string(g) + ")";
          return false;
        }
      }
  const DRange small = d_range(RegionSpec(Signature(1, 1), Curve(2)));
  if (!(small.d_min == -2 && small.d_max == 0 && small.top_gap)) {
    detail = "p=q=1,g=2 range should be [-2,0] with the top value unattained";
    return false;
  }
  return true;
}

bool criterion_determinism(const std::string& cli, std::string& detail) {
  const std::string out1 = "/tmp/higgs_verify_1.json";
  const std::string out2 = "/tmp/higgs_verify_2.json";
  const std::string cmd_base = cli +
      " verify --suite all --p-max 3 --q-max 3 --g-max 3 --json-out ";
  const auto start = std::chrono::steady_clock::now();
  const int rc1 = std::system((cmd_base + out1 + " 2>/dev/null").c_str());
  const int rc2 = std::system((cmd_base + out2 + " 2>/dev/null").c_str());
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (rc1 != 0 || rc2 != 0) {
    detail = "verify exited nonzero";
    return false;
  }
  if (elapsed >= 30) {
    detail = "two verify runs took " + std::to_string(elapsed) + "s (budget 30s)";
    return false;
  }
  std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  if (s1.str().empty() || s1.str() != s2.str()) {
    detail = "JSON reports differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-higgs-atlas-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  std::string d;

  d.clear(); report(1, "component count formula on the 48-case grid", criterion_counts(d), d);
  d.clear(); report(2, "tau-fiber structure for (2,4), (2,6), (3,3)", criterion_fibers(d), d);
  d.clear(); report(3, "(2,4) fiber at t=-2 separates coprimality classes", criterion_24_fiber(d), d);
  d.clear(); report(4, "alpha range closed forms and 2g-2 position biconditionals", criterion_alpha(d), d);
  d.clear(); report(5, "mu_alpha(2g-2) = mu(E) + (2g-2) across the grid", criterion_mu(d), d);
  d.clear(); report(6, "critical-value enumeration and gcd-test soundness", criterion_critical(d), d);
  d.clear(); report(7, "dimension coherence up to p,q <= 6, g <= 5", criterion_dimensions(d), d);
  d.clear(); report(8, "Morse axioms on 500 seeded Hodge systems", criterion_morse(d), d);
  d.clear(); report(9, "degree range d_min = -n(g-1) with unattained top value", criterion_drange(d), d);
  d.clear(); report(10, "CLI verify determinism: identical JSON, exit 0, under budget", criterion_determinism(cli, d), d);

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
