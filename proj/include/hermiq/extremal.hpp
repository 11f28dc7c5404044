#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermiq/oracle.hpp"
#include "hermiq/varieties.hpp"

namespace hermiq::extremal {

/// Gram matrices of the two polarities; their product is the collineation
/// Psi : u -> M_Q^{-1} M_H u^(q).
struct PolarityPair {
  Mat4q2 m_h, m_q, m_q_inv;
};

/// Throws SingularGramError for cones (M_Q must be invertible).
PolarityPair make_polarity_pair(const Field& F, const QuadricCoeffs& qc);

ProjPoint psi_apply(const Field& F, const PolarityPair& pp, const ProjPoint& P);
/// True when Psi^2 is a scalar multiple of the identity, i.e. the two
/// polarities commute.
bool is_permutable(const Field& F, const QuadricCoeffs& qc);

std::vector<ProjPoint> psi_fixed_points(const Field& F, const PolarityPair& pp);

/// Fixed-point set of an involutory semilinear collineation, stored as a
/// frame (4 independent points plus a unit point) with its full point list.
struct BaerSubgeometry {
  std::array<ProjPoint, 5> frame;
  std::vector<ProjPoint> points;  // sorted
  bool contains(const ProjPoint& P) const;
};

/// Checks the fixed set really is a Baer subgeometry: (q+1)(q^2+1) points
/// carrying a frame in general position.
std::optional<BaerSubgeometry> baer_subgeometry(const Field& F,
                                                std::vector<ProjPoint> fixed);

/// Line of PG(3,q^2) spanned by its two least points.
struct Line {
  ProjPoint p, r;
  friend auto operator<=>(const Line&, const Line&) = default;
};

Line line_through(const Field& F, const ProjPoint& A, const ProjPoint& B);
std::vector<ProjPoint> line_points(const Field& F, const Line& L);
bool on_line(const Field& F, const Line& L, const ProjPoint& S);
std::optional<ProjPoint> line_meet(const Field& F, const Line& L1, const Line& L2);
std::int64_t line_hermitian_count(const Field& F, const Line& L);

struct Reguli {
  std::vector<Line> first, second;
};

/// The two rulings of a hyperbolic quadric, each of q^2+1 generators,
/// ordered along the generators through a base point.
Reguli quadric_reguli(const Field& F, const QuadricCoeffs& qc);

struct ClauseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  bool pass = false;
  std::vector<ClauseResult> clauses;
};

/// Structure of a minimum-size intersection (q^2+1 points): hyperbolic
/// quadric, intersection an ovoid of it, fixed pointwise by Psi, and equal
/// to the quadric's trace on the Baer subgeometry of fixed points.
/// Throws WrongCardinalityError unless the oracle total is q^2+1.
StructureReport check_minimum_structure(const Field& F, const QuadricCoeffs& qc);

/// Structure of a maximum-size intersection (2q^3+q^2+1 points): permutable
/// pair, at least q+1 generators per regulus inside the Hermitian surface,
/// their pairwise meets inside a Baer subgeometry, and the whole intersection
/// covered by those (extended) generators.
/// Throws WrongCardinalityError unless the oracle total is 2q^3+q^2+1.
StructureReport check_maximum_structure(const Field& F, const QuadricCoeffs& qc);

}  // namespace hermiq::extremal
