// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criterion 2 is expected to stay red: the q=3 exhaustive
// scan, double-checked by the brute-force oracle below, proves that the
// hyperbolic size q^3-q^2+1 = 19 is not realized at q=3, while the pinned
// list contains it (see the analysis printed when the criterion runs).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hermiq/canonical.hpp"
#include "hermiq/classifier.hpp"
#include "hermiq/extremal.hpp"
#include "hermiq/oracle.hpp"
#include "hermiq/rng.hpp"
#include "hermiq/serialize.hpp"

using namespace hermiq;
using canonical::Budget;
using canonical::Status;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
  if (!pass) ++failures;
}

template <class Fn>
void guarded(int id, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(id, false, std::string("aborted by exception: ") + e.what());
  }
}

std::string join(const std::set<std::int64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Everything the q=3 exhaustive pass feeds: criterion 5 (full oracle
// equivalence), criterion 6 (structural invariants) and criterion 7 (the lists
// of extremal instances).
struct Q3Scan {
  std::int64_t tuples = 0;
  std::int64_t mismatches = 0;
  std::int64_t rank_violations = 0;    // rank A_inf < 2
  std::int64_t rank2_nonhyp = 0;       // rank 2 without hyperbolic type
  std::int64_t c78_nonhyp = 0;         // C7/C8 outside hyperbolic quadrics
  std::int64_t xi_violations = 0;      // rank-2 section sizes
  std::int64_t rank2_triples = 0;
  std::vector<QuadricCoeffs> minimum_instances;
  std::vector<QuadricCoeffs> maximum_instances;
  std::set<std::int64_t> oracle_hyperbolic;  // brute-force spectrum, no classifier
};

Q3Scan scan_q3(const Field& F) {
  Q3Scan out;
  const int s = F.q2();
  const Fq2Elem zero = F.zero2();
  const std::int64_t q = F.q(), q2 = q * q, q3 = q2 * q;
  for (int ra = 0; ra < s; ++ra)
    for (int rb = 0; rb < s; ++rb)
      for (int rc = 0; rc < s; ++rc) {
        const Fq2Elem a = F.element2(ra), b = F.element2(rb), c = F.element2(rc);
        if (a == zero && b == zero && c == zero) continue;
        const QuadricCoeffs probe{a, b, c, zero, zero, zero};
        const QuadricType t = quadric_type(F, probe);
        {
          const auto m = classifier::build_a(F, probe);
          if (m.rank_infinity < 2) ++out.rank_violations;
          if (m.rank_infinity == 2) {
            ++out.rank2_triples;
            if (t != QuadricType::Hyperbolic) ++out.rank2_nonhyp;
            const std::int64_t cinf = classifier::count_infinity(F, probe);
            const std::int64_t xi = classifier::xi_infinity_points(F, m.infinity);
            const bool ok = (cinf == 2 * q2 + 1 && xi == 2 * q2 + q + 1) ||
                            (cinf == 1 && xi == q + 1);
            if (!ok) ++out.xi_violations;
          }
        }
        for (int rd = 0; rd < s; ++rd)
          for (int re = 0; re < s; ++re)
            for (int rf = 0; rf < s; ++rf) {
              const QuadricCoeffs qc{a, b, c, F.element2(rd), F.element2(re),
                                     F.element2(rf)};
              const auto rep = classifier::classify(F, qc);
              const std::int64_t oc = oracle::total_count(F, qc);
              ++out.tuples;
              if (rep.total != oc) ++out.mismatches;
              if ((rep.case_label == classifier::Case::C7 ||
                   rep.case_label == classifier::Case::C8) &&
                  t != QuadricType::Hyperbolic)
                ++out.c78_nonhyp;
              if (t == QuadricType::Hyperbolic) {
                out.oracle_hyperbolic.insert(oc);
                if (oc == q2 + 1) out.minimum_instances.push_back(qc);
                if (oc == 2 * q3 + q2 + 1) out.maximum_instances.push_back(qc);
              }
            }
      }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  Field F3(3, 1), F5(5, 1), F7(7, 1);
  const Budget exhaustive = Budget::exhaustive();

  // ---- criteria 1-3: exhaustive q=3 spectra ------------------------------
  guarded(1, [&] {
    const auto sp = canonical::spectrum(F3, QuadricType::Elliptic, exhaustive);
    const std::set<std::int64_t> want = {19, 22, 25, 28, 31, 34, 37};
    report(1, sp.achieved == want,
           "q=3 exhaustive elliptic spectrum " + join(sp.achieved) + " == " + join(want));
  });
  Q3Scan scan;
  bool scan_ok = false;
  try {
    scan = scan_q3(F3);  // shared by criteria 2 and 5-7
    scan_ok = true;
  } catch (const std::exception& e) {
    std::printf("        q=3 exhaustive scan aborted: %s\n", e.what());
  }
  guarded(2, [&] {
    const auto sp = canonical::spectrum(F3, QuadricType::Hyperbolic, exhaustive);
    const std::set<std::int64_t> want = {10, 19, 22, 25, 28, 31, 34, 37, 43, 46, 52, 64};
    const bool pass = sp.achieved == want;
    report(2, pass,
           "q=3 exhaustive hyperbolic spectrum " + join(sp.achieved) + " == " + join(want));
    if (!pass) {
      std::printf("        brute-force oracle spectrum over all %lld tuples: %s\n",
                  static_cast<long long>(scan.tuples),
                  join(scan.oracle_hyperbolic).c_str());
      std::printf("        q^3-q^2+1 = 19 needs an elliptic-base C5 with a one-point\n"
                  "        section at infinity; at q=3 that stratum is empty (the\n"
                  "        determinant condition 4*norm(a) = (norm(c)-1)^2 only meets\n"
                  "        the rank-2 locus), so 19 cannot be realized.\n");
    }
  });
  guarded(3, [&] {
    const auto sp = canonical::spectrum(F3, QuadricType::Cone, exhaustive);
    const std::set<std::int64_t> allowed = {19, 22, 25, 28, 31, 34, 37, 43};
    bool subset = true;
    for (const auto v : sp.achieved)
      if (!allowed.count(v)) subset = false;
    const bool pass = subset && sp.achieved.count(25) == 0 &&
                      sp.achieved == canonical::kConeSpectrumQ3;
    report(3, pass,
           "q=3 exhaustive cone spectrum " + join(sp.achieved) +
               " within " + join(allowed) + ", point-type C1/C3 sizes absent, frozen set");
  });

  // ---- criterion 4: sampled scans at q=5 and q=7 -------------------------
  guarded(4, [&] {
    bool pass = true;
    std::string detail;
    {
      const auto rep = canonical::verify_spectra(F5, Budget::sampled(1000000, 0));
      pass = rep.status == Status::Pass;
      for (const auto& v : rep.verdicts) {
        if (v.type == QuadricType::Elliptic &&
            v.expected != std::set<std::int64_t>{101, 106, 121, 126, 131, 146, 151})
          pass = false;
        if (v.type == QuadricType::Cone && !v.expected.count(171)) pass = false;
        if (v.type == QuadricType::Hyperbolic)
          for (const std::int64_t n : {26LL, 171LL, 176LL, 196LL, 276LL})
            if (!v.expected.count(n) || !v.achieved.count(n)) pass = false;
      }
      detail = "q=5 " + std::string(canonical::to_string(rep.status));
    }
    {
      const auto rep = canonical::verify_spectra(F7, Budget::sampled(1000000, 0));
      if (rep.status != Status::Pass) pass = false;
      detail += ", q=7 " + std::string(canonical::to_string(rep.status));
    }
    report(4, pass, "sampled scans (10^6 draws, seed 0) plus witness search: " + detail);
  });

  // ---- criterion 5: oracle/classifier equivalence ------------------------
  guarded(5, [&] {
    std::int64_t r5 = 0, r7 = 0;
    const std::int64_t n_random = 10000;
    SplitMix64 rng5(0), rng7(0);
    for (std::int64_t i = 0; i < n_random; ++i) {
      const QuadricCoeffs qc = draw_quadric(F5, rng5);
      if (classifier::total_count(F5, qc) != oracle::total_count(F5, qc)) ++r5;
    }
    for (std::int64_t i = 0; i < n_random; ++i) {
      const QuadricCoeffs qc = draw_quadric(F7, rng7);
      if (classifier::total_count(F7, qc) != oracle::total_count(F7, qc)) ++r7;
    }
    const bool pass = scan_ok && scan.mismatches == 0 && r5 == 0 && r7 == 0;
    report(5, pass,
           "oracle equals classifier: " + std::to_string(scan.mismatches) + "/" +
               std::to_string(scan.tuples) + " mismatches exhaustive q=3, " +
               std::to_string(r5) + "/10000 at q=5, " + std::to_string(r7) +
               "/10000 at q=7");
  });

  // ---- criterion 6: structural invariant suite ---------------------------
  guarded(6, [&] {
    bool pass = scan_ok && scan.rank_violations == 0 && scan.rank2_nonhyp == 0 &&
                scan.c78_nonhyp == 0 && scan.xi_violations == 0 &&
                scan.rank2_triples == 36;
    std::string detail = "q=3 exhaustive (rank>=2, rank2=>hyperbolic, C7/C8=>hyperbolic, "
                         "section sizes on " + std::to_string(scan.rank2_triples) +
                         " rank-2 triples)";
    // sampled q=5 invariants
    {
      SplitMix64 rng(1);
      for (int i = 0; i < 10000; ++i) {
        const QuadricCoeffs qc = draw_quadric(F5, rng);
        const auto rep = classifier::classify(F5, qc);
        if (rep.rank_ainf < 2) pass = false;
        if (rep.rank_ainf == 2 && quadric_type(F5, qc) != QuadricType::Hyperbolic)
          pass = false;
        if ((rep.case_label == classifier::Case::C7 ||
             rep.case_label == classifier::Case::C8) &&
            quadric_type(F5, qc) != QuadricType::Hyperbolic)
          pass = false;
      }
      // the two q=5 rank-2 strata and their section sizes
      const Fq2Elem zero = F5.zero2();
      const Fq2Elem w = F5.pow(F5.beta(), F5.q() - 1);
      int strata = 0;
      for (int r = 1; r < F5.q2(); ++r) {
        const Fq2Elem x = F5.element2(r);
        if (F5.mul(F5.scalar(4), F5.norm(x)) == F5.one()) {
          const QuadricCoeffs qc{x, F5.neg(F5.mul(w, x)), zero, zero, zero, zero};
          const auto m = classifier::build_a(F5, qc);
          if (m.rank_infinity != 2 ||
              classifier::xi_infinity_points(F5, m.infinity) != 2 * 25 + 5 + 1)
            pass = false;
          ++strata;
        }
        if (F5.norm(x) == F5.one()) {
          const QuadricCoeffs qc{zero, zero, x, zero, zero, zero};
          const auto m = classifier::build_a(F5, qc);
          if (m.rank_infinity != 2 ||
              classifier::xi_infinity_points(F5, m.infinity) != 5 + 1)
            pass = false;
          ++strata;
        }
      }
      if (strata != 12) pass = false;
      detail += "; q=5 sampled 10^4 plus 12 rank-2 strata";
    }
    // determinant closed form, 10^3 random instances per q
    for (const Field* P : {&F3, &F5, &F7}) {
      SplitMix64 rng(2);
      for (int i = 0; i < 1000; ++i) {
        const QuadricCoeffs qc = draw_quadric(*P, rng);
        const auto m = classifier::build_a(*P, qc);
        if (classifier::det4(*P, m.infinity) !=
            classifier::det_infinity_closed_form(*P, qc))
          pass = false;
      }
    }
    detail += "; det(A_inf) closed form on 10^3 instances per q in {3,5,7}";
    report(6, pass, detail);
  });

  // ---- criterion 7: extremal structure -----------------------------------
  guarded(7, [&] {
    bool pass = scan_ok && !scan.minimum_instances.empty() && !scan.maximum_instances.empty();
    std::int64_t min_fail = 0, max_fail = 0;
    for (const auto& qc : scan.minimum_instances) {
      const auto rep = extremal::check_minimum_structure(F3, qc);
      if (!rep.pass) {
        ++min_fail;
        pass = false;
      }
    }
    for (const auto& qc : scan.maximum_instances) {
      const auto rep = extremal::check_maximum_structure(F3, qc);
      if (!rep.pass) {
        ++max_fail;
        pass = false;
      }
    }
    report(7, pass,
           "extremal structure: " + std::to_string(scan.minimum_instances.size()) +
               " size-10 instances (" + std::to_string(min_fail) + " failed), " +
               std::to_string(scan.maximum_instances.size()) + " size-64 instances (" +
               std::to_string(max_fail) + " failed), regulus identity included");
  });

  // ---- criterion 8: determinism -------------------------------------------
  guarded(8, [&] {
    const std::string inproc1 =
        io::dump(io::verify_json(F3, canonical::verify_spectra(F3, exhaustive)));
    const std::string inproc2 =
        io::dump(io::verify_json(F3, canonical::verify_spectra(F3, exhaustive)));
    bool pass = inproc1 == inproc2;
    std::string detail = "library reports byte-identical";
#ifdef HERMIQ_CLI_PATH
    const std::string out1 = "acceptance_verify_1.json";
    const std::string out2 = "acceptance_verify_2.json";
    const std::string base = std::string(HERMIQ_CLI_PATH) +
                             " verify --q 3 --exhaustive --out ";
    const int rc1 = std::system((base + out1).c_str());
    const int rc2 = std::system((base + out2).c_str());
    const std::string b1 = read_file(out1), b2 = read_file(out2);
    if (b1.empty() || b1 != b2 || rc1 != rc2) pass = false;
    detail += ", CLI runs byte-identical (" + std::to_string(b1.size()) + " bytes)";
    std::remove(out1.c_str());
    std::remove(out2.c_str());
#endif
    report(8, pass, "repeated verify --q 3 --exhaustive: " + detail);
  });

  std::printf("SUMMARY: %d/8 criteria passed\n", 8 - failures);
  return failures;
}
