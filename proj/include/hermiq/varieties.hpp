#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hermiq/gf.hpp"

namespace hermiq {

/// Point of PG(3,q^2), homogeneous coordinates (J,X,Y,Z) normalized so the
/// first nonzero coordinate is 1.
struct ProjPoint {
  std::array<Fq2Elem, 4> h{};
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

ProjPoint make_point(const Field& F, Fq2Elem j, Fq2Elem x, Fq2Elem y, Fq2Elem z);
ProjPoint normalize(const Field& F, std::array<Fq2Elem, 4> h);
std::uint64_t point_key(const Field& F, const ProjPoint& P);
ProjPoint infinity_point(const Field& F);

/// Coefficients of z = ax^2 + by^2 + cxy + dx + ey + f over GF(q^2).
/// Requires (a,b,c) != (0,0,0); anything else is a plane, not a quadric.
struct QuadricCoeffs {
  Fq2Elem a, b, c, d, e, f;
  QuadricCoeffs(Fq2Elem a_, Fq2Elem b_, Fq2Elem c_, Fq2Elem d_, Fq2Elem e_, Fq2Elem f_);
  friend auto operator<=>(const QuadricCoeffs&, const QuadricCoeffs&) = default;
};

enum class QuadricType { Elliptic, Hyperbolic, Cone };
const char* to_string(QuadricType t);

/// 4ab - c^2; zero for cones, a nonzero square exactly for hyperbolic quadrics.
Fq2Elem discriminant(const Field& F, const QuadricCoeffs& qc);
QuadricType quadric_type(const Field& F, const QuadricCoeffs& qc);

bool on_hermitian(const Field& F, const ProjPoint& P);
bool on_quadric(const Field& F, const QuadricCoeffs& qc, const ProjPoint& P);

/// Both tangent planes at (0,0,0,1) computed from the gradients; true when
/// they agree (always the plane J = 0 for this family).
bool tangent_plane_check(const Field& F, const QuadricCoeffs& qc);

using Mat4q2 = std::array<Fq2Elem, 16>;

Mat4q2 hermitian_gram(const Field& F);
Mat4q2 quadric_gram(const Field& F, const QuadricCoeffs& qc);
int gram_rank(const Field& F, Mat4q2 m);
std::optional<std::array<Fq2Elem, 4>> gram_kernel_vector(const Field& F, Mat4q2 m);
/// Radical of the Gram matrix; the vertex for rank-3 quadrics.
std::optional<ProjPoint> quadric_vertex(const Field& F, const QuadricCoeffs& qc);

/// The fixed Hermitian surface z^q + z = x^{q+1} + y^{q+1}.
class HermitianSurface {
 public:
  explicit HermitianSurface(const Field& f) : field_(&f) {}
  bool contains(const ProjPoint& P) const { return on_hermitian(*field_, P); }
  Mat4q2 gram() const { return hermitian_gram(*field_); }
  std::int64_t point_count() const {
    const std::int64_t q = field_->q();
    return (q * q + 1) * (q * q * q + 1);
  }
  const Field& field() const { return *field_; }

 private:
  const Field* field_;
};

template <class Fn>
void for_each_proj_point(const Field& F, Fn&& fn) {
  const int s = F.q2();
  const Fq2Elem one = F.one2();
  const Fq2Elem zero = F.zero2();
  ProjPoint P;
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z = 0; z < s; ++z) {
        P.h = {one, F.element2(x), F.element2(y), F.element2(z)};
        fn(P);
      }
  for (int y = 0; y < s; ++y)
    for (int z = 0; z < s; ++z) {
      P.h = {zero, one, F.element2(y), F.element2(z)};
      fn(P);
    }
  for (int z = 0; z < s; ++z) {
    P.h = {zero, zero, one, F.element2(z)};
    fn(P);
  }
  P.h = {zero, zero, zero, one};
  fn(P);
}

}  // namespace hermiq
