#include "hermiq/varieties.hpp"

namespace hermiq {

ProjPoint normalize(const Field& F, std::array<Fq2Elem, 4> h) {
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (h[i] != F.zero2()) { lead = i; break; }
  if (lead < 0) throw Error("projective point cannot be all zero");
  const Fq2Elem s = F.inv(h[lead]);
  ProjPoint P;
  for (int i = 0; i < 4; ++i) P.h[i] = F.mul(h[i], s);
  return P;
}

ProjPoint make_point(const Field& F, Fq2Elem j, Fq2Elem x, Fq2Elem y, Fq2Elem z) {
  return normalize(F, {j, x, y, z});
}

std::uint64_t point_key(const Field& F, const ProjPoint& P) {
  std::uint64_t key = 0;
  for (int i = 0; i < 4; ++i) key = key * static_cast<std::uint64_t>(F.q2()) + F.rank2(P.h[i]);
  return key;
}

ProjPoint infinity_point(const Field& F) {
  ProjPoint P;
  P.h = {F.zero2(), F.zero2(), F.zero2(), F.one2()};
  return P;
}

QuadricCoeffs::QuadricCoeffs(Fq2Elem a_, Fq2Elem b_, Fq2Elem c_, Fq2Elem d_, Fq2Elem e_, Fq2Elem f_)
    : a(a_), b(b_), c(c_), d(d_), e(e_), f(f_) {
  const Fq2Elem zero{};
  if (a == zero && b == zero && c == zero)
    throw NotIrreducibleError("quadric requires (a,b,c) != (0,0,0)");
}

const char* to_string(QuadricType t) {
  switch (t) {
    case QuadricType::Elliptic: return "elliptic";
    case QuadricType::Hyperbolic: return "hyperbolic";
    case QuadricType::Cone: return "cone";
  }
  return "?";
}

Fq2Elem discriminant(const Field& F, const QuadricCoeffs& qc) {
  return F.sub(F.mul(F.scalar2(4), F.mul(qc.a, qc.b)), F.mul(qc.c, qc.c));
}

QuadricType quadric_type(const Field& F, const QuadricCoeffs& qc) {
  const Fq2Elem d = discriminant(F, qc);
  if (d == F.zero2()) return QuadricType::Cone;
  return F.is_square(d) ? QuadricType::Hyperbolic : QuadricType::Elliptic;
}

bool on_hermitian(const Field& F, const ProjPoint& P) {
  const Fq2Elem j = P.h[0], x = P.h[1], y = P.h[2], z = P.h[3];
  const Fq2Elem lhs = F.add(F.mul(F.frobenius(z), j), F.mul(z, F.frobenius(j)));
  const Fq2Elem rhs = F.add(F.embed(F.norm(x)), F.embed(F.norm(y)));
  return lhs == rhs;
}

bool on_quadric(const Field& F, const QuadricCoeffs& qc, const ProjPoint& P) {
  const Fq2Elem j = P.h[0], x = P.h[1], y = P.h[2], z = P.h[3];
  Fq2Elem rhs = F.mul(qc.a, F.mul(x, x));
  rhs = F.add(rhs, F.mul(qc.b, F.mul(y, y)));
  rhs = F.add(rhs, F.mul(qc.c, F.mul(x, y)));
  rhs = F.add(rhs, F.mul(qc.d, F.mul(x, j)));
  rhs = F.add(rhs, F.mul(qc.e, F.mul(y, j)));
  rhs = F.add(rhs, F.mul(qc.f, F.mul(j, j)));
  return F.mul(j, z) == rhs;
}

Mat4q2 hermitian_gram(const Field& F) {
  Mat4q2 m{};
  for (auto& v : m) v = F.zero2();
  const Fq2Elem mone = F.neg(F.one2());
  m[0 * 4 + 3] = mone;
  m[3 * 4 + 0] = mone;
  m[1 * 4 + 1] = F.one2();
  m[2 * 4 + 2] = F.one2();
  return m;
}

Mat4q2 quadric_gram(const Field& F, const QuadricCoeffs& qc) {
  const Fq2Elem h = F.embed(F.half());
  Mat4q2 m{};
  m[0 * 4 + 0] = qc.f;
  m[0 * 4 + 1] = m[1 * 4 + 0] = F.mul(qc.d, h);
  m[0 * 4 + 2] = m[2 * 4 + 0] = F.mul(qc.e, h);
  m[0 * 4 + 3] = m[3 * 4 + 0] = F.neg(h);
  m[1 * 4 + 1] = qc.a;
  m[1 * 4 + 2] = m[2 * 4 + 1] = F.mul(qc.c, h);
  m[2 * 4 + 2] = qc.b;
  m[1 * 4 + 3] = m[3 * 4 + 1] = F.zero2();
  m[2 * 4 + 3] = m[3 * 4 + 2] = F.zero2();
  m[3 * 4 + 3] = F.zero2();
  return m;
}

int gram_rank(const Field& F, Mat4q2 m) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r)
      if (m[r * 4 + col] != F.zero2()) { pivot = r; break; }
    if (pivot < 0) continue;
    for (int c = 0; c < 4; ++c) std::swap(m[pivot * 4 + c], m[rank * 4 + c]);
    const Fq2Elem pinv = F.inv(m[rank * 4 + col]);
    for (int r = rank + 1; r < 4; ++r) {
      const Fq2Elem factor = F.mul(m[r * 4 + col], pinv);
      if (factor == F.zero2()) continue;
      for (int c = col; c < 4; ++c)
        m[r * 4 + c] = F.sub(m[r * 4 + c], F.mul(factor, m[rank * 4 + c]));
    }
    ++rank;
  }
  return rank;
}

std::optional<std::array<Fq2Elem, 4>> gram_kernel_vector(const Field& F, Mat4q2 m) {
  // Row-reduce, then back-substitute for the first free column.
  int pivot_col[4] = {-1, -1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r)
      if (m[r * 4 + col] != F.zero2()) { pivot = r; break; }
    if (pivot < 0) continue;
    for (int c = 0; c < 4; ++c) std::swap(m[pivot * 4 + c], m[rank * 4 + c]);
    const Fq2Elem pinv = F.inv(m[rank * 4 + col]);
    for (int c = 0; c < 4; ++c) m[rank * 4 + c] = F.mul(m[rank * 4 + c], pinv);
    for (int r = 0; r < 4; ++r) {
      if (r == rank) continue;
      const Fq2Elem factor = m[r * 4 + col];
      if (factor == F.zero2()) continue;
      for (int c = 0; c < 4; ++c)
        m[r * 4 + c] = F.sub(m[r * 4 + c], F.mul(factor, m[rank * 4 + c]));
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank == 4) return std::nullopt;
  int free_col = -1;
  for (int c = 0; c < 4 && free_col < 0; ++c) {
    bool is_pivot = false;
    for (int r = 0; r < rank; ++r)
      if (pivot_col[r] == c) is_pivot = true;
    if (!is_pivot) free_col = c;
  }
  std::array<Fq2Elem, 4> v;
  for (auto& x : v) x = F.zero2();
  v[free_col] = F.one2();
  for (int r = 0; r < rank; ++r)
    v[pivot_col[r]] = F.neg(m[r * 4 + free_col]);
  return v;
}

std::optional<ProjPoint> quadric_vertex(const Field& F, const QuadricCoeffs& qc) {
  const auto v = gram_kernel_vector(F, quadric_gram(F, qc));
  if (!v) return std::nullopt;
  return normalize(F, *v);
}

bool tangent_plane_check(const Field& F, const QuadricCoeffs& qc) {
  const ProjPoint pinf = infinity_point(F);
  if (!on_hermitian(F, pinf) || !on_quadric(F, qc, pinf)) return false;
  // Gradient of a quadratic form u^T M u is 2 M u; for the Hermitian form the
  // tangent plane at u has coordinates M_H u^(q).
  const Mat4q2 mq = quadric_gram(F, qc);
  const Mat4q2 mh = hermitian_gram(F);
  std::array<Fq2Elem, 4> gq, gh;
  for (int i = 0; i < 4; ++i) {
    Fq2Elem sq = F.zero2(), sh = F.zero2();
    for (int j = 0; j < 4; ++j) {
      sq = F.add(sq, F.mul(mq[i * 4 + j], pinf.h[j]));
      sh = F.add(sh, F.mul(mh[i * 4 + j], F.frobenius(pinf.h[j])));
    }
    gq[i] = F.add(sq, sq);
    gh[i] = sh;
  }
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (gq[i] != F.zero2()) { lead = i; break; }
  if (lead < 0) return false;  // the point would be singular on the quadric
  if (gh[lead] == F.zero2()) return false;
  const Fq2Elem lambda = F.div(gh[lead], gq[lead]);
  for (int i = 0; i < 4; ++i)
    if (gh[i] != F.mul(lambda, gq[i])) return false;
  return true;
}

}  // namespace hermiq
