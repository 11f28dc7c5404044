#include "hermiq/serialize.hpp"

namespace hermiq::io {

json field_json(const Field& F) {
  return json{{"p", F.p()},
              {"k", F.k()},
              {"q", F.q()},
              {"modulus", F.modulus()},
              {"nu", F.to_string(F.nu())},
              {"beta", F.to_string(F.beta())}};
}

json coeffs_json(const Field& F, const QuadricCoeffs& qc) {
  return json{{"a", F.to_string(qc.a)}, {"b", F.to_string(qc.b)},
              {"c", F.to_string(qc.c)}, {"d", F.to_string(qc.d)},
              {"e", F.to_string(qc.e)}, {"f", F.to_string(qc.f)}};
}

QuadricCoeffs coeffs_from_json(const Field& F, const json& j) {
  auto get = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
      throw Error(std::string("coefficient '") + key + "' missing or not a string");
    return F.parse_fq2(j.at(key).get<std::string>());
  };
  return {get("a"), get("b"), get("c"), get("d"), get("e"), get("f")};
}

json count_json(std::int64_t affine, std::int64_t infinity) {
  return json{{"affine", affine}, {"infinity", infinity}, {"total", affine + infinity}};
}

json classifier_json(const Field& F, const QuadricCoeffs& qc,
                     const classifier::ClassifierReport& rep) {
  json j{{"field", field_json(F)},
         {"coeffs", coeffs_json(F, qc)},
         {"rank_A", rep.rank_a},
         {"rank_Ainf", rep.rank_ainf},
         {"det_Ainf", F.to_string(rep.det_ainf)},
         {"det_is_square", rep.det_is_square},
         {"case", classifier::to_string(rep.case_label)},
         {"affine_count", rep.affine_count},
         {"cinf_count", rep.cinf_count},
         {"total", rep.total}};
  if (rep.sub != classifier::SubBranch::None)
    j["sub"] = classifier::to_string(rep.sub);
  return j;
}

namespace {

json budget_json(const canonical::Budget& b) {
  if (b.mode == canonical::Budget::Mode::Exhaustive)
    return json{{"mode", "exhaustive"}};
  return json{{"mode", "sampled"}, {"samples", b.samples}, {"seed", b.seed},
              {"rng", "splitmix64"}};
}

json witnesses_json(const Field& F,
                    const std::map<std::int64_t, QuadricCoeffs>& w) {
  json arr = json::array();
  for (const auto& [size, qc] : w)
    arr.push_back(json{{"size", size}, {"coeffs", coeffs_json(F, qc)}});
  return arr;
}

}  // namespace

json spectrum_json(const Field& F, const canonical::SpectrumResult& sp) {
  json j{{"field", field_json(F)},
         {"type", to_string(sp.type)},
         {"achieved", sp.achieved},
         {"witnesses", witnesses_json(F, sp.witnesses)}};
  j.update(budget_json(sp.budget));
  return j;
}

std::string spectrum_csv(const Field& F, const canonical::SpectrumResult& sp) {
  std::string out = "size,a,b,c,d,e,f\n";
  for (const auto& [size, qc] : sp.witnesses) {
    out += std::to_string(size);
    for (const Fq2Elem* v : {&qc.a, &qc.b, &qc.c, &qc.d, &qc.e, &qc.f})
      out += "," + F.to_string(*v);
    out += "\n";
  }
  return out;
}

json verify_json(const Field& F, const canonical::VerifyReport& rep) {
  json results = json::array();
  for (const auto& v : rep.verdicts) {
    json r{{"type", to_string(v.type)},
           {"expected", v.expected},
           {"achieved", v.achieved},
           {"status", canonical::to_string(v.status)},
           {"witnesses", witnesses_json(F, v.witnesses)}};
    if (!v.unexpected.empty()) r["unexpected"] = v.unexpected;
    json missing = json::array();
    for (const std::int64_t n : v.expected)
      if (!v.achieved.count(n)) missing.push_back(n);
    if (!missing.empty()) r["missing"] = missing;
    results.push_back(std::move(r));
  }
  json j{{"field", field_json(F)},
         {"q", rep.q},
         {"results", std::move(results)},
         {"status", canonical::to_string(rep.status)}};
  j.update(budget_json(rep.budget));
  if (rep.budget.mode == canonical::Budget::Mode::Sampled)
    j["witness_budget"] = rep.witness_budget;
  return j;
}

std::string verify_csv(const Field& F, const canonical::VerifyReport& rep) {
  std::string out = "type,size,a,b,c,d,e,f\n";
  for (const auto& v : rep.verdicts)
    for (const auto& [size, qc] : v.witnesses) {
      out += std::string(to_string(v.type)) + "," + std::to_string(size);
      for (const Fq2Elem* x : {&qc.a, &qc.b, &qc.c, &qc.d, &qc.e, &qc.f})
        out += "," + F.to_string(*x);
      out += "\n";
    }
  return out;
}

json extremal_json(const Field& F, const QuadricCoeffs& qc,
                   const extremal::StructureReport& rep) {
  json clauses = json::array();
  for (const auto& c : rep.clauses) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    clauses.push_back(std::move(e));
  }
  return json{{"field", field_json(F)},
              {"coeffs", coeffs_json(F, qc)},
              {"clauses", std::move(clauses)},
              {"pass", rep.pass}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hermiq::io
