#include "hermiq/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hermiq::extremal {

namespace {

Mat4q2 mat_mul(const Field& F, const Mat4q2& A, const Mat4q2& B) {
  Mat4q2 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Fq2Elem s = F.zero2();
      for (int t = 0; t < 4; ++t) s = F.add(s, F.mul(A[i * 4 + t], B[t * 4 + j]));
      r[i * 4 + j] = s;
    }
  return r;
}

Mat4q2 mat_conj(const Field& F, const Mat4q2& A) {
  Mat4q2 r;
  for (int i = 0; i < 16; ++i) r[i] = F.frobenius(A[i]);
  return r;
}

std::array<Fq2Elem, 4> mat_vec(const Field& F, const Mat4q2& A,
                               const std::array<Fq2Elem, 4>& v) {
  std::array<Fq2Elem, 4> r;
  for (int i = 0; i < 4; ++i) {
    Fq2Elem s = F.zero2();
    for (int j = 0; j < 4; ++j) s = F.add(s, F.mul(A[i * 4 + j], v[j]));
    r[i] = s;
  }
  return r;
}

Mat4q2 mat_inverse(const Field& F, Mat4q2 a) {
  Mat4q2 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i * 4 + j] = i == j ? F.one2() : F.zero2();
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (a[r * 4 + col] != F.zero2()) { pivot = r; break; }
    if (pivot < 0) throw SingularGramError("Gram matrix is singular");
    if (pivot != col)
      for (int c = 0; c < 4; ++c) {
        std::swap(a[pivot * 4 + c], a[col * 4 + c]);
        std::swap(inv[pivot * 4 + c], inv[col * 4 + c]);
      }
    const Fq2Elem pinv = F.inv(a[col * 4 + col]);
    for (int c = 0; c < 4; ++c) {
      a[col * 4 + c] = F.mul(a[col * 4 + c], pinv);
      inv[col * 4 + c] = F.mul(inv[col * 4 + c], pinv);
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Fq2Elem factor = a[r * 4 + col];
      if (factor == F.zero2()) continue;
      for (int c = 0; c < 4; ++c) {
        a[r * 4 + c] = F.sub(a[r * 4 + c], F.mul(factor, a[col * 4 + c]));
        inv[r * 4 + c] = F.sub(inv[r * 4 + c], F.mul(factor, inv[col * 4 + c]));
      }
    }
  }
  return inv;
}

Fq2Elem bilinear(const Field& F, const Mat4q2& M, const ProjPoint& u,
                 const ProjPoint& v) {
  Fq2Elem s = F.zero2();
  for (int i = 0; i < 4; ++i) {
    if (u.h[i] == F.zero2()) continue;
    Fq2Elem row = F.zero2();
    for (int j = 0; j < 4; ++j) row = F.add(row, F.mul(M[i * 4 + j], v.h[j]));
    s = F.add(s, F.mul(u.h[i], row));
  }
  return s;
}

std::vector<ProjPoint> quadric_points(const Field& F, const QuadricCoeffs& qc) {
  std::vector<ProjPoint> pts;
  for_each_proj_point(F, [&](const ProjPoint& P) {
    if (on_quadric(F, qc, P)) pts.push_back(P);
  });
  return pts;
}

}  // namespace

PolarityPair make_polarity_pair(const Field& F, const QuadricCoeffs& qc) {
  PolarityPair pp;
  pp.m_h = hermitian_gram(F);
  pp.m_q = quadric_gram(F, qc);
  pp.m_q_inv = mat_inverse(F, pp.m_q);
  return pp;
}

ProjPoint psi_apply(const Field& F, const PolarityPair& pp, const ProjPoint& P) {
  std::array<Fq2Elem, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = F.frobenius(P.h[i]);
  return normalize(F, mat_vec(F, pp.m_q_inv, mat_vec(F, pp.m_h, v)));
}

bool is_permutable(const Field& F, const QuadricCoeffs& qc) {
  const PolarityPair pp = make_polarity_pair(F, qc);
  // Psi^2 as a linear map: M_Q^{-1} M_H conj(M_Q^{-1}) M_H (M_H has entries
  // in GF(q), so conjugating it is a no-op).
  const Mat4q2 n = mat_mul(
      F, mat_mul(F, pp.m_q_inv, pp.m_h), mat_mul(F, mat_conj(F, pp.m_q_inv), pp.m_h));
  Fq2Elem lambda = F.zero2();
  for (int i = 0; i < 4; ++i)
    if (n[i * 4 + i] != F.zero2()) { lambda = n[i * 4 + i]; break; }
  if (lambda == F.zero2()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Fq2Elem want = i == j ? lambda : F.zero2();
      if (n[i * 4 + j] != want) return false;
    }
  return true;
}

std::vector<ProjPoint> psi_fixed_points(const Field& F, const PolarityPair& pp) {
  std::vector<ProjPoint> fixed;
  for_each_proj_point(F, [&](const ProjPoint& P) {
    if (psi_apply(F, pp, P) == P) fixed.push_back(P);
  });
  return fixed;
}

bool BaerSubgeometry::contains(const ProjPoint& P) const {
  return std::binary_search(points.begin(), points.end(), P);
}

std::optional<BaerSubgeometry> baer_subgeometry(const Field& F,
                                                std::vector<ProjPoint> fixed) {
  const std::int64_t q = F.q();
  if (static_cast<std::int64_t>(fixed.size()) != (q + 1) * (q * q + 1))
    return std::nullopt;
  std::sort(fixed.begin(), fixed.end());

  // Greedy simplex: four points of incremental rank.
  auto rank_of = [&](const std::vector<ProjPoint>& pts) {
    Mat4q2 m{};
    for (auto& v : m) v = F.zero2();
    for (std::size_t r = 0; r < pts.size() && r < 4; ++r)
      for (int c = 0; c < 4; ++c) m[r * 4 + c] = pts[r].h[c];
    return gram_rank(F, m);
  };
  std::vector<ProjPoint> simplex;
  for (const auto& P : fixed) {
    if (simplex.size() == 4) break;
    simplex.push_back(P);
    if (rank_of(simplex) != static_cast<int>(simplex.size())) simplex.pop_back();
  }
  if (simplex.size() != 4) return std::nullopt;

  // Unit point: all coordinates nonzero in the simplex basis.
  Mat4q2 basis{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) basis[c * 4 + r] = simplex[r].h[c];
  const Mat4q2 basis_inv = mat_inverse(F, basis);
  for (const auto& U : fixed) {
    const auto coords = mat_vec(F, basis_inv, U.h);
    bool all = true;
    for (int i = 0; i < 4; ++i)
      if (coords[i] == F.zero2()) { all = false; break; }
    if (all) {
      BaerSubgeometry sub;
      sub.frame = {simplex[0], simplex[1], simplex[2], simplex[3], U};
      sub.points = std::move(fixed);
      return sub;
    }
  }
  return std::nullopt;
}

Line line_through(const Field& F, const ProjPoint& A, const ProjPoint& B) {
  if (A == B) throw Error("line requires two distinct points");
  // Canonical span representatives: the two least points on the line.
  std::vector<ProjPoint> pts;
  pts.reserve(F.q2() + 1);
  pts.push_back(B);
  for (int t = 0; t < F.q2(); ++t) {
    std::array<Fq2Elem, 4> h;
    const Fq2Elem lam = F.element2(t);
    for (int i = 0; i < 4; ++i) h[i] = F.add(A.h[i], F.mul(lam, B.h[i]));
    pts.push_back(normalize(F, h));
  }
  std::sort(pts.begin(), pts.end());
  return {pts[0], pts[1]};
}

std::vector<ProjPoint> line_points(const Field& F, const Line& L) {
  std::vector<ProjPoint> pts;
  pts.reserve(F.q2() + 1);
  pts.push_back(L.r);
  for (int t = 0; t < F.q2(); ++t) {
    std::array<Fq2Elem, 4> h;
    const Fq2Elem lam = F.element2(t);
    for (int i = 0; i < 4; ++i) h[i] = F.add(L.p.h[i], F.mul(lam, L.r.h[i]));
    pts.push_back(normalize(F, h));
  }
  return pts;
}

bool on_line(const Field& F, const Line& L, const ProjPoint& S) {
  // S in span(p, r): solve lambda*p + mu*r = S on a 2x2 subsystem, verify all.
  int i = -1, j = -1;
  Fq2Elem det = F.zero2();
  for (int r1 = 0; r1 < 4 && i < 0; ++r1)
    for (int r2 = r1 + 1; r2 < 4; ++r2) {
      det = F.sub(F.mul(L.p.h[r1], L.r.h[r2]), F.mul(L.p.h[r2], L.r.h[r1]));
      if (det != F.zero2()) { i = r1; j = r2; break; }
    }
  if (i < 0) throw Error("degenerate line");
  const Fq2Elem dinv = F.inv(det);
  const Fq2Elem lam =
      F.mul(F.sub(F.mul(S.h[i], L.r.h[j]), F.mul(S.h[j], L.r.h[i])), dinv);
  const Fq2Elem mu =
      F.mul(F.sub(F.mul(L.p.h[i], S.h[j]), F.mul(L.p.h[j], S.h[i])), dinv);
  for (int c = 0; c < 4; ++c)
    if (S.h[c] != F.add(F.mul(lam, L.p.h[c]), F.mul(mu, L.r.h[c]))) return false;
  return true;
}

std::optional<ProjPoint> line_meet(const Field& F, const Line& L1, const Line& L2) {
  // Kernel of the 4x4 matrix with columns p1, r1, p2, r2.
  Mat4q2 m;
  for (int r = 0; r < 4; ++r) {
    m[r * 4 + 0] = L1.p.h[r];
    m[r * 4 + 1] = L1.r.h[r];
    m[r * 4 + 2] = L2.p.h[r];
    m[r * 4 + 3] = L2.r.h[r];
  }
  const auto ker = gram_kernel_vector(F, m);
  if (!ker) return std::nullopt;
  std::array<Fq2Elem, 4> h;
  for (int c = 0; c < 4; ++c)
    h[c] = F.add(F.mul((*ker)[0], L1.p.h[c]), F.mul((*ker)[1], L1.r.h[c]));
  bool zero = true;
  for (int c = 0; c < 4; ++c)
    if (h[c] != F.zero2()) zero = false;
  if (zero) return std::nullopt;  // equal lines
  return normalize(F, h);
}

std::int64_t line_hermitian_count(const Field& F, const Line& L) {
  std::int64_t n = 0;
  for (const auto& P : line_points(F, L))
    if (on_hermitian(F, P)) ++n;
  return n;
}

Reguli quadric_reguli(const Field& F, const QuadricCoeffs& qc) {
  if (quadric_type(F, qc) != QuadricType::Hyperbolic)
    throw Error("reguli exist only on hyperbolic quadrics");
  const Mat4q2 mq = quadric_gram(F, qc);
  const std::vector<ProjPoint> pts = quadric_points(F, qc);

  // The two generators through P: conjugate points R on the quadric split
  // into the two lines of the tangent-plane section.
  auto gens_through = [&](const ProjPoint& P) {
    std::optional<Line> g1, g2;
    for (const auto& R : pts) {
      if (R == P) continue;
      if (bilinear(F, mq, P, R) != F.zero2()) continue;
      if (!g1) {
        g1 = line_through(F, P, R);
      } else if (!on_line(F, *g1, R)) {
        g2 = line_through(F, P, R);
        break;
      }
    }
    if (!g1 || !g2) throw Error("point carries fewer than two generators");
    return std::pair<Line, Line>(*g1, *g2);
  };

  const auto [g1, g2] = gens_through(pts.front());
  Reguli reg;
  std::set<Line> seen;
  // Generators crossing g1 form one regulus, those crossing g2 the other.
  for (const auto& S : line_points(F, g1)) {
    const auto [h1, h2] = gens_through(S);
    const Line other = on_line(F, g1, h1.p) && on_line(F, g1, h1.r) ? h2 : h1;
    if (seen.insert(other).second) reg.second.push_back(other);
  }
  for (const auto& S : line_points(F, g2)) {
    const auto [h1, h2] = gens_through(S);
    const Line other = on_line(F, g2, h1.p) && on_line(F, g2, h1.r) ? h2 : h1;
    if (seen.insert(other).second) reg.first.push_back(other);
  }
  const std::int64_t want = static_cast<std::int64_t>(F.q2()) + 1;
  if (static_cast<std::int64_t>(reg.first.size()) != want ||
      static_cast<std::int64_t>(reg.second.size()) != want)
    throw Error("regulus enumeration did not find q^2+1 generators");
  return reg;
}

namespace {

std::vector<ProjPoint> intersection_points(const Field& F,
                                           const oracle::IntersectionSet& inter) {
  std::vector<ProjPoint> pts;
  pts.reserve(inter.affine.size() + inter.infinity.size());
  for (const auto& ap : inter.affine)
    pts.push_back(make_point(F, F.one2(), ap.x, ap.y, ap.z));
  for (const auto& P : inter.infinity) pts.push_back(P);
  std::sort(pts.begin(), pts.end());
  return pts;
}

void add_clause(StructureReport& rep, std::string name, bool pass,
                std::string detail = "") {
  rep.clauses.push_back({std::move(name), pass, std::move(detail)});
  if (!pass) rep.pass = false;
}

}  // namespace

StructureReport check_minimum_structure(const Field& F, const QuadricCoeffs& qc) {
  const std::int64_t q = F.q();
  const oracle::IntersectionSet inter = oracle::intersection(F, qc);
  if (inter.total() != q * q + 1)
    throw WrongCardinalityError("expected an intersection of size q^2+1, got " +
                                std::to_string(inter.total()));
  StructureReport rep;
  rep.pass = true;
  const std::vector<ProjPoint> omega = intersection_points(F, inter);

  const bool hyp = quadric_type(F, qc) == QuadricType::Hyperbolic;
  add_clause(rep, "quadric is hyperbolic", hyp);
  if (!hyp) return rep;

  const Reguli reg = quadric_reguli(F, qc);
  std::int64_t worst = 0;
  for (const auto* side : {&reg.first, &reg.second})
    for (const auto& L : *side) {
      std::int64_t m = 0;
      for (const auto& P : omega)
        if (on_line(F, L, P)) ++m;
      worst = std::max(worst, m);
    }
  add_clause(rep, "intersection is an ovoid: every generator meets it at most once",
             worst <= 1, "max generator incidence " + std::to_string(worst));

  const PolarityPair pp = make_polarity_pair(F, qc);
  bool fixes = true;
  for (const auto& P : omega)
    if (psi_apply(F, pp, P) != P) { fixes = false; break; }
  const auto fixed = psi_fixed_points(F, pp);
  const auto baer = baer_subgeometry(F, fixed);
  add_clause(rep, "polarity product fixes the intersection pointwise",
             fixes && is_permutable(F, qc));
  add_clause(rep, "fixed points form a Baer subgeometry containing the intersection",
             baer.has_value() &&
                 std::all_of(omega.begin(), omega.end(),
                             [&](const ProjPoint& P) { return baer->contains(P); }),
             "fixed points: " + std::to_string(fixed.size()));

  if (baer) {
    std::vector<ProjPoint> trace;
    for (const auto& P : baer->points)
      if (on_quadric(F, qc, P)) trace.push_back(P);
    add_clause(rep, "intersection equals the quadric's trace on the subgeometry",
               trace == omega,
               "trace size " + std::to_string(trace.size()));
  } else {
    add_clause(rep, "intersection equals the quadric's trace on the subgeometry",
               false, "no Baer subgeometry");
  }
  return rep;
}

StructureReport check_maximum_structure(const Field& F, const QuadricCoeffs& qc) {
  const std::int64_t q = F.q();
  const std::int64_t q2 = q * q, q3 = q2 * q;
  const oracle::IntersectionSet inter = oracle::intersection(F, qc);
  if (inter.total() != 2 * q3 + q2 + 1)
    throw WrongCardinalityError("expected an intersection of size 2q^3+q^2+1, got " +
                                std::to_string(inter.total()));
  StructureReport rep;
  rep.pass = true;
  const std::vector<ProjPoint> omega = intersection_points(F, inter);

  const bool hyp = quadric_type(F, qc) == QuadricType::Hyperbolic;
  add_clause(rep, "quadric is hyperbolic", hyp);
  if (!hyp) return rep;

  add_clause(rep, "polarities commute (permutable pair)", is_permutable(F, qc));

  const Reguli reg = quadric_reguli(F, qc);
  std::vector<Line> omega1, omega2;
  bool sizes_ok = true, identity_ok = true;
  for (const auto* side : {&reg.first, &reg.second}) {
    std::int64_t r1 = 0, r2 = 0, r3 = 0;
    for (const auto& L : *side) {
      const std::int64_t m = line_hermitian_count(F, L);
      if (m == 1) ++r1;
      else if (m == q + 1) ++r2;
      else if (m == q2 + 1) {
        ++r3;
        (side == &reg.first ? omega1 : omega2).push_back(L);
      } else sizes_ok = false;
    }
    if (r1 + (q + 1) * r2 + (q2 + 1) * r3 != 2 * q3 + q2 + 1) identity_ok = false;
    if (r1 + r2 + r3 != q2 + 1) identity_ok = false;
  }
  add_clause(rep, "every generator meets H in 1, q+1 or q^2+1 points", sizes_ok);
  add_clause(rep, "regulus incidence identity r1+(q+1)r2+(q^2+1)r3 = 2q^3+q^2+1",
             identity_ok);
  add_clause(rep, "each regulus keeps at least q+1 generators inside H",
             static_cast<std::int64_t>(omega1.size()) >= q + 1 &&
                 static_cast<std::int64_t>(omega2.size()) >= q + 1,
             std::to_string(omega1.size()) + " and " + std::to_string(omega2.size()));

  std::set<ProjPoint> qprime;
  bool meets_ok = true;
  for (const auto& L1 : omega1)
    for (const auto& L2 : omega2) {
      const auto P = line_meet(F, L1, L2);
      if (!P) { meets_ok = false; continue; }
      qprime.insert(*P);
    }
  const PolarityPair pp = make_polarity_pair(F, qc);
  bool fixed_ok = meets_ok;
  for (const auto& P : qprime)
    if (psi_apply(F, pp, P) != P) { fixed_ok = false; break; }
  const auto baer = baer_subgeometry(F, psi_fixed_points(F, pp));
  const bool inside =
      baer && std::all_of(qprime.begin(), qprime.end(),
                          [&](const ProjPoint& P) { return baer->contains(P); });
  add_clause(rep, "inner quadric lies in a Baer subgeometry",
             fixed_ok && inside,
             "inner quadric size " + std::to_string(qprime.size()));

  bool covered = true;
  for (const auto& P : omega) {
    bool hit = false;
    for (const auto& L : omega1)
      if (on_line(F, L, P)) { hit = true; break; }
    if (!hit)
      for (const auto& L : omega2)
        if (on_line(F, L, P)) { hit = true; break; }
    if (!hit) { covered = false; break; }
  }
  add_clause(rep, "every intersection point lies on an extended generator", covered);
  return rep;
}

}  // namespace hermiq::extremal
