// Command-line surface for the component atlas, triple stability ranges,
// Hodge-system Morse data and the brute-force verification suites.
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "higgsatlas/atlas.hpp"
#include "higgsatlas/oracle.hpp"
#include "higgsatlas/serialize.hpp"

using namespace higgsatlas;

namespace {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Int(text));
  return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

void print_record(const ComponentRecord& rec) {
  std::cout << "class        [a,b] = [" << rec.cls.rep.a << "," << rec.cls.rep.b << "]"
            << "  d = " << rec.cls.d << "  t = " << rec.cls.t << "\n"
            << "tau          " << rec.cls.tau.str() << "\n"
            << "coprime      " << (rec.cls.coprime ? "yes" : "no") << "\n"
            << "nonempty     " << (rec.nonempty ? "yes" : "no (Milnor-Wood fails)") << "\n";
  if (!rec.nonempty) return;
  std::cout << "stable locus " << (rec.stable_locus_nonempty ? "nonempty" : "empty") << "\n"
            << "smooth       " << (rec.smooth ? "yes" : "not guaranteed") << "\n"
            << "dimension    " << rec.dimension << "\n"
            << "connected    " << to_string(rec.connectedness) << "\n";
  if (rec.rigidity)
    std::cout << "rigidity     M(" << rec.rigidity->higgs_rank << "," << rec.rigidity->higgs_rank
              << "," << rec.rigidity->higgs_a << "," << rec.rigidity->higgs_b << ") x M("
              << rec.rigidity->bundle_rank << "," << rec.rigidity->bundle_deg << ")\n";
  if (rec.k_squared)
    std::cout << "K^2 pairs    M_{K^2}(" << rec.k_squared->rank << "," << rec.k_squared->degree
              << "), fiber rank " << rec.k_squared->fiber_rank << "\n";
  if (rec.triple) {
    std::cout << "triple       " << to_string(rec.triple->orientation);
    auto show = [](const TripleType& t) {
      return "(" + t.n1.str() + "," + t.n2.str() + "," + t.d1.str() + "," + t.d2.str() + ")";
    };
    if (rec.triple->gamma_zero) std::cout << " " << show(*rec.triple->gamma_zero);
    if (rec.triple->beta_zero) std::cout << " " << show(*rec.triple->beta_zero);
    std::cout << "\n";
  }
  if (rec.alpha)
    std::cout << "alpha range  [" << rec.alpha->lo.str() << ", "
              << (rec.alpha->hi ? rec.alpha->hi->str() : "inf") << (rec.alpha->hi ? "]" : ")")
              << "\n";
  if (rec.min_energy_level) std::cout << "min energy   " << rec.min_energy_level->str() << "\n";
}

int run_classify(long long p, long long q, long long g, long long a, long long b,
                 bool as_json) {
  const ComponentRecord rec = classify(Signature(p, q), Curve(g), InvariantPair{a, b});
  if (as_json)
    std::cout << to_json(rec).dump(2) << "\n";
  else
    print_record(rec);
  return 0;
}

int run_atlas(long long p, long long q, long long g, const std::string& tsv_path,
              bool as_json) {
  const RegionSpec spec(Signature(p, q), Curve(g));
  const auto points = enumerate_region(spec);
  std::string tsv = tsv_header();
  json rows = json::array();
  for (const auto& pt : points) {
    const ComponentRecord rec = classify(spec.sig, spec.curve, pt);
    tsv += tsv_row(rec);
    if (as_json) rows.push_back(to_json(rec));
  }
  const Int count = count_components(spec);
  if (!tsv_path.empty()) {
    std::ofstream out(tsv_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << tsv_path << "\n";
      return 1;
    }
    out << tsv;
  }
  if (as_json) {
    std::cout << json{{"components", rows}, {"count", count.str()}}.dump(2) << "\n";
  } else {
    std::cout << tsv;
    std::cout << "# components: " << count << " = 2n min{p,q}(g-1) + gcd(p,q)\n";
  }
  return 0;
}

int run_triples_alpha(long long n1, long long n2, long long d1, long long d2,
                      const std::string& alpha_text) {
  const TripleType t(n1, n2, d1, d2);
  const AlphaInterval iv = alpha_range(t);
  std::cout << "alpha_m = " << iv.lo.str() << "\n";
  std::cout << "alpha_M = " << (iv.hi ? iv.hi->str() : "inf") << "\n";
  if (iv.empty) std::cout << "interval empty (alpha_m < 0)\n";
  std::cout << "alpha-independent semistability excluded: "
            << (alpha_independent_possible(t) ? "no" : "yes") << "\n";
  if (!alpha_text.empty()) {
    const Rational alpha = parse_rational(alpha_text);
    std::cout << "mu_alpha = " << mu_alpha(t, alpha).str() << "\n";
  }
  return 0;
}

int run_sweep_tau(long long p, long long q, long long g) {
  // Data table behind the alpha-range-versus-tau picture: one row per
  // tau-line of the fundamental region.
  const Signature sig(p, q);
  const Curve curve(g);
  const RegionSpec spec(sig, curve);
  const Int k = sig.k();
  const Int t_max = spec.bound() / k;
  std::cout << "t\ttau\talpha_m\talpha_M\tposition_of_2g2\n";
  for (Int t = -t_max; t <= t_max; ++t) {
    const InvariantPair pt = tau_fiber(spec, t).points.front();
    const AlphaInterval iv = alpha_bounds_from_higgs(sig, curve, pt);
    std::cout << t << "\t" << toledo(sig, pt).str() << "\t" << iv.lo.str() << "\t"
              << (iv.hi ? iv.hi->str() : "inf") << "\t"
              << to_string(position_of_2g2(sig, curve, pt)) << "\n";
  }
  return 0;
}

int run_triples_critical(long long n1, long long n2, long long d1, long long d2,
                         const std::string& window_text, long long g) {
  const TripleType t(n1, n2, d1, d2);
  const AlphaInterval iv = alpha_range(t);
  Rational window;
  if (!window_text.empty())
    window = parse_rational(window_text);
  else if (g >= 2)
    window = iv.lo + Rational(4 * g);
  else
    window = iv.lo + Rational(8);
  if (window <= iv.lo) {
    std::cerr << "error: window must exceed alpha_m = " << iv.lo.str() << "\n";
    return 2;
  }
  std::cout << "alpha_m = " << iv.lo.str() << ", alpha_M = "
            << (iv.hi ? iv.hi->str() : "inf") << ", window (alpha_m, " << window.str()
            << "]\n";
  std::cout << "critical values (numeric superset of the wall set):\n";
  for (const Rational& v : critical_values(t, window)) std::cout << "  " << v.str() << "\n";
  std::cout << "gcd non-criticality test at integers in the window:\n";
  for (Int m = floor_int(iv.lo) + 1; Rational(m) <= window; ++m)
    std::cout << "  m = " << m << ": "
              << (gcd_noncritical_test(t, m) ? "certified non-critical" : "inconclusive")
              << "\n";
  return 0;
}

int run_morse(const std::string& system_text, long long g) {
  const HodgeSystem h = parse_hodge_system(system_text);
  const Curve curve(g);
  std::cout << "system  " << format_hodge_system(h) << "\n";
  std::cout << "weights ";
  for (const auto& lambda : weights(h)) std::cout << lambda.str() << " ";
  std::cout << "\n";
  const Int m(h.length());
  std::cout << "k\trk U_k^+\tdeg U_k^+\trk U_k^-\tdeg U_k^-\tchi_k\thessian_dim\n";
  for (Int k = -(m - 1); k < m; ++k) {
    const AdjointLevel level = adjoint_level(h, k);
    std::cout << k << "\t" << level.rank_plus << "\t" << level.deg_plus << "\t"
              << level.rank_minus << "\t" << level.deg_minus << "\t";
    std::cout << chi_k(h, k, curve) << "\t";
    if (k >= 1) {
      std::cout << hessian_dim(h, k, curve);
      if (chi_k(h, k, curve) > 0) std::cout << " (chi > 0: not realizable as polystable)";
    } else {
      std::cout << "-";
    }
    std::cout << "\n";
  }
  std::cout << "morse index  " << morse_index(h, curve) << "\n";
  std::cout << "minimum test " << to_string(minimum_numeric_test(h, curve)) << "\n";
  return 0;
}

int run_verify(const std::string& suite, long long p_max, long long q_max, long long g_max,
               unsigned seed, const std::string& json_path) {
  GridSpec grid(p_max, q_max, g_max);
  grid.seed = seed;
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    // Suites are independent pure tasks; run them on a capped pool and merge
    // in fixed order so the report stays deterministic.
    unsigned workers = std::thread::hardware_concurrency();
    if (const char* cap = std::getenv("HIGGS_ATLAS_THREADS")) {
      const long parsed = std::strtol(cap, nullptr, 10);
      if (parsed >= 1) workers = static_cast<unsigned>(parsed);
    }
    std::vector<std::function<VerifyReport()>> tasks{
        [&] { return verify_counts(grid); },
        [&] { return verify_alpha_consistency(grid); },
        [&] { return verify_critical_gcd(grid); },
        [&] { return verify_dimensions(grid); },
        [&] { return verify_morse_axioms(grid); }};
    if (workers <= 1) {
      for (auto& task : tasks) reports.push_back(task());
    } else {
      std::vector<std::future<VerifyReport>> futures;
      for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
      for (auto& future : futures) reports.push_back(future.get());
    }
  } else if (suite == "counts")
    reports = {verify_counts(grid)};
  else if (suite == "alpha")
    reports = {verify_alpha_consistency(grid)};
  else if (suite == "critical")
    reports = {verify_critical_gcd(grid)};
  else if (suite == "dims")
    reports = {verify_dimensions(grid)};
  else if (suite == "morse")
    reports = {verify_morse_axioms(grid)};
  else {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return 2;
  }

  bool all_pass = true;
  json out = json::array();
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass();
    out.push_back(to_json(report));
    std::cerr << report.suite << ": " << (report.pass() ? "pass" : "FAIL") << " ("
              << report.cases << " cases, " << report.elapsed_ms << " ms)\n";
    for (const auto& failure : report.failures) std::cerr << "  " << failure << "\n";
  }
  const std::string dumped = out.dump(2) + "\n";
  if (!json_path.empty()) {
    std::ofstream file(json_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 1;
    }
    file << dumped;
  } else {
    std::cout << dumped;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact component atlas for U(p,q)-Higgs bundle moduli"};
  app.require_subcommand(1);

  long long p = 1, q = 1, g = 2, a = 0, b = 0;
  long long n1 = 1, n2 = 1, d1 = 0, d2 = 0;
  bool as_json = false;
  std::string tsv_path, alpha_text, window_text, system_text, json_path;
  std::string suite = "all";
  long long p_max = 3, q_max = 3, g_max = 3;
  unsigned seed = 1;
  long long triple_g = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify one component M(a,b)");
  classify_cmd->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--g", g)->required()->check(CLI::Range(2LL, 1000000LL));
  classify_cmd->add_option("--a", a)->required();
  classify_cmd->add_option("--b", b)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* atlas_cmd = app.add_subcommand("atlas", "Emit the full component table");
  atlas_cmd->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  atlas_cmd->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  atlas_cmd->add_option("--g", g)->required()->check(CLI::Range(2LL, 1000000LL));
  atlas_cmd->add_option("--tsv", tsv_path);
  atlas_cmd->add_flag("--json", as_json);

  auto* alpha_cmd = app.add_subcommand("triples-alpha", "Alpha range of a triple type");
  alpha_cmd->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  alpha_cmd->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  alpha_cmd->add_option("--d1", d1)->required();
  alpha_cmd->add_option("--d2", d2)->required();
  alpha_cmd->add_option("--alpha", alpha_text, "evaluate mu_alpha at this value");
  bool sweep_tau = false;
  alpha_cmd->add_flag("--sweep-tau", sweep_tau, "tabulate alpha ranges per tau line");
  alpha_cmd->add_option("--p", p);
  alpha_cmd->add_option("--q", q);
  alpha_cmd->add_option("--g", g);

  auto* critical_cmd = app.add_subcommand("triples-critical", "Critical values in a window");
  critical_cmd->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  critical_cmd->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  critical_cmd->add_option("--d1", d1)->required();
  critical_cmd->add_option("--d2", d2)->required();
  critical_cmd->add_option("--window", window_text, "upper end of the window (rational)");
  critical_cmd->add_option("--g", triple_g, "genus for the default window alpha_m + 4g");

  auto* morse_cmd = app.add_subcommand("morse", "Morse data of a Hodge system");
  morse_cmd->add_option("--system", system_text, "rank:degree:sector, comma separated")
      ->required();
  morse_cmd->add_option("--g", g)->required()->check(CLI::Range(2LL, 1000000LL));

  auto* verify_cmd = app.add_subcommand("verify", "Run brute-force verification suites");
  verify_cmd->add_option("--suite", suite)->check(
      CLI::IsMember({"all", "counts", "alpha", "critical", "dims", "morse"}));
  verify_cmd->add_option("--p-max", p_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--q-max", q_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--g-max", g_max)->check(CLI::Range(2LL, 1000000LL));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--json-out", json_path, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(p, q, g, a, b, as_json);
    if (atlas_cmd->parsed()) return run_atlas(p, q, g, tsv_path, as_json);
    if (alpha_cmd->parsed())
      return sweep_tau ? run_sweep_tau(p, q, g) : run_triples_alpha(n1, n2, d1, d2, alpha_text);
    if (critical_cmd->parsed())
      return run_triples_critical(n1, n2, d1, d2, window_text, triple_g);
    if (morse_cmd->parsed()) return run_morse(system_text, g);
    if (verify_cmd->parsed()) return run_verify(suite, p_max, q_max, g_max, seed, json_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
