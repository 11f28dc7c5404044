#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hermiq/classifier.hpp"
#include "hermiq/varieties.hpp"

namespace hermiq::canonical {

/// Normal forms for the pair (type of Q, shape of the intersection at
/// infinity): b and c are pinned in terms of a and powers of beta, except for
/// hyp-point where c stays free subject to norm(c) != -norm(a).
enum class FamilyTag { HypPoint, HypLine, HypTwoLines, ConePoint, ConeLine, Elliptic };
const char* to_string(FamilyTag t);
QuadricType family_type(FamilyTag t);
/// 1, q^2+1 or 2q^2+1 as declared by the tag (elliptic and the point tags give 1).
std::int64_t family_cinf(const Field& F, FamilyTag t);

struct Budget {
  enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  static Budget exhaustive() { return {}; }
  static Budget sampled(std::uint64_t n, std::uint64_t s) {
    return {Mode::Sampled, n, s};
  }
};

void enumerate_family(const Field& F, FamilyTag tag, const Budget& budget,
                      const std::function<void(const QuadricCoeffs&)>& fn);

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct SpectrumResult {
  int q = 0;
  QuadricType type = QuadricType::Elliptic;
  Budget budget;
  std::set<std::int64_t> achieved;
  std::map<std::int64_t, QuadricCoeffs> witnesses;
};

/// Size lists per quadric type. The q = 3 cone list is the frozen result of
/// the exhaustive scan (the generic cone list holds only for q > 3).
std::set<std::int64_t> expected_sizes(int q, QuadricType type);
extern const std::set<std::int64_t> kConeSpectrumQ3;

/// Achieved intersection sizes with one witness per size; every first-seen
/// size is re-counted by the brute-force oracle. Exhaustive mode scans all
/// coefficient tuples of the type; sampled mode draws uniformly from them.
SpectrumResult spectrum(const Field& F, QuadricType type, const Budget& budget);
/// Same, but scanning the union of the type's normal-form families.
SpectrumResult family_spectrum(const Field& F, QuadricType type, const Budget& budget);

/// Deterministic witness hunt over the family grids with rank-steering
/// probes for d, e, f. Decrements budget per classifier call. Any size seen
/// outside `expected` is added to *out_of_list.
std::map<std::int64_t, QuadricCoeffs> witness_search(
    const Field& F, QuadricType type, std::set<std::int64_t> missing,
    const std::set<std::int64_t>& expected, std::uint64_t& budget,
    std::set<std::int64_t>* out_of_list);

struct TypeVerdict {
  QuadricType type = QuadricType::Elliptic;
  std::set<std::int64_t> expected;
  std::set<std::int64_t> achieved;
  std::set<std::int64_t> unexpected;
  std::map<std::int64_t, QuadricCoeffs> witnesses;
  Status status = Status::Fail;
};

struct VerifyReport {
  int q = 0;
  Budget budget;
  std::uint64_t witness_budget = 0;
  std::vector<TypeVerdict> verdicts;
  Status status = Status::Fail;
};

/// Compares achieved spectra against the expected lists for all three types.
/// Exhaustive mode requires set equality; sampled mode requires containment
/// plus a witness for every expected size, else Inconclusive on budget
/// exhaustion. Any size outside the lists is a Fail.
VerifyReport verify_spectra(const Field& F, const Budget& budget,
                            std::uint64_t witness_budget = 4000000);

}  // namespace hermiq::canonical
