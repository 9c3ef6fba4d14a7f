#pragma once

// JSON and TSV renderings of the atlas records and verification reports.
// Rationals serialize as "num/den" in lowest terms, plain "num" when the
// denominator is 1.

#include <string>

#include <nlohmann/json.hpp>

#include "higgsatlas/atlas.hpp"
#include "higgsatlas/oracle.hpp"

namespace higgsatlas {

using nlohmann::json;

inline json to_json(const AlphaInterval& iv) {
  json j;
  j["lo"] = iv.lo.str();
  j["hi"] = iv.hi ? json(iv.hi->str()) : json("inf");
  j["empty"] = iv.empty;
  return j;
}

inline json to_json(const TripleType& t) {
  return json{{"n1", t.n1.str()}, {"n2", t.n2.str()}, {"d1", t.d1.str()}, {"d2", t.d2.str()}};
}

inline json to_json(const HiggsTripleCorrespondence& c) {
  json j;
  j["orientation"] = to_string(c.orientation);
  if (c.gamma_zero) j["gamma_zero_triple"] = to_json(*c.gamma_zero);
  if (c.beta_zero) j["beta_zero_triple"] = to_json(*c.beta_zero);
  return j;
}

inline json to_json(const ComponentRecord& rec) {
  json j;
  j["class"] = json{{"rep", json{{"a", rec.cls.rep.a.str()}, {"b", rec.cls.rep.b.str()}}},
                    {"tau", rec.cls.tau.str()},
                    {"d", rec.cls.d.str()},
                    {"coprime", rec.cls.coprime},
                    {"t", rec.cls.t.str()}};
  j["nonempty"] = rec.nonempty;
  if (!rec.nonempty) return j;
  j["stable_locus_nonempty"] = rec.stable_locus_nonempty;
  j["smooth"] = rec.smooth;
  j["dimension"] = rec.dimension.str();
  j["connectedness"] = to_string(rec.connectedness);
  if (rec.rigidity)
    j["rigidity"] = json{{"higgs_rank", rec.rigidity->higgs_rank.str()},
                         {"higgs_a", rec.rigidity->higgs_a.str()},
                         {"higgs_b", rec.rigidity->higgs_b.str()},
                         {"bundle_rank", rec.rigidity->bundle_rank.str()},
                         {"bundle_deg", rec.rigidity->bundle_deg.str()}};
  if (rec.k_squared)
    j["k_squared"] = json{{"rank", rec.k_squared->rank.str()},
                          {"degree", rec.k_squared->degree.str()},
                          {"fiber_rank", rec.k_squared->fiber_rank.str()}};
  if (rec.triple) j["triple"] = to_json(*rec.triple);
  if (rec.alpha) j["alpha"] = to_json(*rec.alpha);
  if (rec.min_energy_level) j["min_energy"] = rec.min_energy_level->str();
  return j;
}

// elapsed_ms is deliberately not serialized so that reports are
// byte-identical across runs with the same seed.
inline json to_json(const VerifyReport& report) {
  json j;
  j["suite"] = report.suite;
  j["cases"] = report.cases;
  j["failures"] = report.failures;
  j["pass"] = report.pass();
  return j;
}

inline const char* tsv_header() {
  return "a\tb\td\tt\ttau\tcoprime\tnonempty\tstable_nonempty\tsmooth\tdimension\t"
         "connectedness\trigidity_flag\n";
}

inline std::string tsv_row(const ComponentRecord& rec) {
  auto flag = [](bool v) { return v ? "true" : "false"; };
  std::string row = rec.cls.rep.a.str() + "\t" + rec.cls.rep.b.str() + "\t" +
                    rec.cls.d.str() + "\t" + rec.cls.t.str() + "\t" + rec.cls.tau.str() +
                    "\t" + flag(rec.cls.coprime) + "\t" + flag(rec.nonempty) + "\t" +
                    flag(rec.stable_locus_nonempty) + "\t" + flag(rec.smooth) + "\t" +
                    rec.dimension.str() + "\t" + to_string(rec.connectedness) + "\t" +
                    flag(rec.rigidity.has_value());
  row += "\n";
  return row;
}

}  // namespace higgsatlas
