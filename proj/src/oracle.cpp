#include "hermiq/oracle.hpp"

namespace hermiq::oracle {

Fq2Elem quadric_z(const Field& F, const QuadricCoeffs& qc, Fq2Elem x, Fq2Elem y) {
  // ((a*x + d) + c*y)*x + (b*y + e)*y + f
  Fq2Elem zx = F.add(F.mul(qc.a, x), qc.d);
  zx = F.add(zx, F.mul(qc.c, y));
  Fq2Elem zy = F.add(F.mul(qc.b, y), qc.e);
  return F.add(F.add(F.mul(zx, x), F.mul(zy, y)), qc.f);
}

namespace {

// Direction (X0 : Y0) at infinity satisfies both homogeneous conditions.
bool direction_on_both(const Field& F, const QuadricCoeffs& qc, Fq2Elem x, Fq2Elem y) {
  if (F.add(F.norm(x), F.norm(y)) != F.zero()) return false;
  Fq2Elem v = F.mul(qc.a, F.mul(x, x));
  v = F.add(v, F.mul(qc.b, F.mul(y, y)));
  v = F.add(v, F.mul(qc.c, F.mul(x, y)));
  return v == F.zero2();
}

}  // namespace

std::vector<AffinePoint> enumerate_affine(const Field& F, const QuadricCoeffs& qc) {
  std::vector<AffinePoint> out;
  const int s = F.q2();
  for (int rx = 0; rx < s; ++rx) {
    const Fq2Elem x = F.element2(rx);
    const FqElem nx = F.norm(x);
    for (int ry = 0; ry < s; ++ry) {
      const Fq2Elem y = F.element2(ry);
      const Fq2Elem z = quadric_z(F, qc, x, y);
      if (F.trace(z) == F.add(nx, F.norm(y))) out.push_back({x, y, z});
    }
  }
  return out;
}

std::int64_t affine_count(const Field& F, const QuadricCoeffs& qc) {
  std::int64_t n = 0;
  const int s = F.q2();
  for (int rx = 0; rx < s; ++rx) {
    const Fq2Elem x = F.element2(rx);
    const FqElem nx = F.norm(x);
    for (int ry = 0; ry < s; ++ry) {
      const Fq2Elem y = F.element2(ry);
      const Fq2Elem z = quadric_z(F, qc, x, y);
      if (F.trace(z) == F.add(nx, F.norm(y))) ++n;
    }
  }
  return n;
}

std::vector<ProjPoint> enumerate_infinity(const Field& F, const QuadricCoeffs& qc) {
  std::vector<ProjPoint> out;
  const int s = F.q2();
  const Fq2Elem zero = F.zero2(), one = F.one2();
  ProjPoint P;
  for (int ry = 0; ry < s; ++ry) {
    const Fq2Elem y = F.element2(ry);
    if (!direction_on_both(F, qc, one, y)) continue;
    for (int rz = 0; rz < s; ++rz) {
      P.h = {zero, one, y, F.element2(rz)};
      out.push_back(P);
    }
  }
  if (direction_on_both(F, qc, zero, one)) {
    for (int rz = 0; rz < s; ++rz) {
      P.h = {zero, zero, one, F.element2(rz)};
      out.push_back(P);
    }
  }
  P.h = {zero, zero, zero, one};
  out.push_back(P);
  return out;
}

std::int64_t infinity_count(const Field& F, const QuadricCoeffs& qc) {
  const int s = F.q2();
  std::int64_t dirs = 0;
  for (int ry = 0; ry < s; ++ry)
    if (direction_on_both(F, qc, F.one2(), F.element2(ry))) ++dirs;
  if (direction_on_both(F, qc, F.zero2(), F.one2())) ++dirs;
  return 1 + dirs * static_cast<std::int64_t>(s);
}

IntersectionSet intersection(const Field& F, const QuadricCoeffs& qc) {
  return {enumerate_affine(F, qc), enumerate_infinity(F, qc)};
}

std::int64_t total_count(const Field& F, const QuadricCoeffs& qc) {
  return affine_count(F, qc) + infinity_count(F, qc);
}

}  // namespace hermiq::oracle
