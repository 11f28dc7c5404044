#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hermiq/varieties.hpp"

namespace hermiq::classifier {

using Mat4 = std::array<FqElem, 16>;
using Mat5 = std::array<FqElem, 25>;

/// Symmetric 5x5 matrix over GF(q) of the quadric of AG(4,q) whose points
/// (x0,x1,y0,y1) are exactly the affine intersection, plus its upper-left
/// 4x4 block cutting the part at infinity.
struct MatrixA {
  Mat5 full;
  Mat4 infinity;
  int rank_infinity = 0;  // always >= 2; checked at construction
};

MatrixA build_a(const Field& F, const QuadricCoeffs& qc);

/// Value of the full quadratic form at (x0,x1,y0,y1,1).
FqElem eval_form(const Field& F, const Mat5& m, FqElem x0, FqElem x1, FqElem y0, FqElem y1);

int rank5(const Field& F, const Mat5& m);
int rank4(const Field& F, const Mat4& m);
FqElem det4(const Field& F, const Mat4& m);
/// Closed form (c^2-4ab)^{q+1} - 4a^{q+1} - 4b^{q+1} - 2c^{q+1} + 1 for the
/// determinant of the infinity block.
FqElem det_infinity_closed_form(const Field& F, const QuadricCoeffs& qc);
/// Diagonal of a congruent diagonalization; nonzero entries give rank and
/// discriminant.
std::vector<FqElem> congruent_diagonal(const Field& F, const FqElem* m, int n);

/// C1..C8 follow the rank/determinant table; C9 is the bordered-rank-jump
/// configuration rank A = rank A_inf + 2 (the affine tangent hyperplane
/// passes through the radical), which always leaves exactly q^3 affine
/// points.
enum class Case { C1, C2, C3, C4, C5, C6, C7, C8, C9 };
enum class SubBranch { None, ConeOverHyperbolic, ConeOverElliptic, PlanePair, Line };
const char* to_string(Case c);
const char* to_string(SubBranch s);

struct ClassifierReport {
  int rank_a = 0;
  int rank_ainf = 0;
  FqElem det_ainf{};
  bool det_is_square = false;
  Case case_label = Case::C1;
  SubBranch sub = SubBranch::None;
  std::int64_t affine_count = 0;
  std::int64_t cinf_count = 0;
  std::int64_t total = 0;
};

/// Points of H ∩ Q on the plane J = 0, counted from the root directions of
/// aX^2 + cXY + bY^2 that satisfy the norm condition X^{q+1} + Y^{q+1} = 0.
std::int64_t count_infinity(const Field& F, const QuadricCoeffs& qc);

ClassifierReport classify(const Field& F, const QuadricCoeffs& qc);
std::int64_t total_count(const Field& F, const QuadricCoeffs& qc);

/// Size of the quadric of PG(3,q) cut by a symmetric 4x4 matrix, by direct
/// enumeration; used to validate the rank-2 section sizes.
std::int64_t xi_infinity_points(const Field& F, const Mat4& m);

}  // namespace hermiq::classifier
