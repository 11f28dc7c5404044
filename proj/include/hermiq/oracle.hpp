#pragma once

#include <cstdint>
#include <vector>

#include "hermiq/varieties.hpp"

namespace hermiq::oracle {

struct AffinePoint {
  Fq2Elem x, y, z;
  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

struct IntersectionSet {
  std::vector<AffinePoint> affine;
  std::vector<ProjPoint> infinity;
  std::int64_t total() const {
    return static_cast<std::int64_t>(affine.size() + infinity.size());
  }
};

// Brute force over raw polynomial membership only; never the closed forms.
// Affine enumeration is row-major over (x, y) in element order.
std::vector<AffinePoint> enumerate_affine(const Field& F, const QuadricCoeffs& qc);
std::vector<ProjPoint> enumerate_infinity(const Field& F, const QuadricCoeffs& qc);
IntersectionSet intersection(const Field& F, const QuadricCoeffs& qc);

// Count-only fast paths; no point sets are materialized.
std::int64_t affine_count(const Field& F, const QuadricCoeffs& qc);
std::int64_t infinity_count(const Field& F, const QuadricCoeffs& qc);
std::int64_t total_count(const Field& F, const QuadricCoeffs& qc);

/// z = ax^2 + by^2 + cxy + dx + ey + f.
Fq2Elem quadric_z(const Field& F, const QuadricCoeffs& qc, Fq2Elem x, Fq2Elem y);

}  // namespace hermiq::oracle
