#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hermiq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidFieldError : Error { using Error::Error; };
struct SizeLimitError : Error { using Error::Error; };
struct NotIrreducibleError : Error { using Error::Error; };
struct SingularGramError : Error { using Error::Error; };
struct WrongCardinalityError : Error { using Error::Error; };

/// Element of GF(q), stored by its rank in the canonical element order:
/// coefficient vectors over GF(p), compared low-degree coefficient first.
struct FqElem {
  std::uint16_t v = 0;
  friend auto operator<=>(FqElem, FqElem) = default;
};

/// Element of GF(q^2), the value x0 + x1*eps in the basis {1, eps},
/// where eps^2 = nu for the stored primitive element nu of GF(q).
struct Fq2Elem {
  FqElem x0, x1;
  friend auto operator<=>(Fq2Elem, Fq2Elem) = default;
};

/// Arithmetic context for GF(q) and GF(q^2), q = p^k with p an odd prime.
///
/// Construction is deterministic for fixed (p, k): it picks the least monic
/// irreducible modulus of degree k over GF(p), the least primitive element
/// nu of GF(q), and the least primitive element beta of GF(q^2) whose
/// (q+1)/2-th power equals the basis element eps. That choice makes
/// eps^q = -eps and eps^2 = nu hold with eps = (0, 1).
class Field {
 public:
  static constexpr int kDefaultMaxQ = 128;

  Field(int p, int k, int max_q = kDefaultMaxQ);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int q2() const { return q_ * q_; }
  /// Modulus polynomial, coefficient i belongs to t^i; monic of degree k.
  const std::vector<int>& modulus() const { return modulus_; }
  FqElem nu() const { return nu_; }
  Fq2Elem beta() const { return beta_; }
  Fq2Elem epsilon() const { return {zero(), one()}; }

  // GF(q)
  FqElem zero() const { return {0}; }
  FqElem one() const { return one_; }
  FqElem element(int rank) const { return {static_cast<std::uint16_t>(rank)}; }
  int rank(FqElem x) const { return x.v; }
  std::vector<int> digits(FqElem x) const;
  FqElem scalar(long long n) const;

  FqElem add(FqElem a, FqElem b) const { return {add_[a.v * q_ + b.v]}; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem neg(FqElem a) const { return {neg_[a.v]}; }
  FqElem mul(FqElem a, FqElem b) const { return {mul_[a.v * q_ + b.v]}; }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, unsigned long long e) const;
  FqElem half() const { return half_; }
  /// Quadratic character; 0 counts as a square.
  bool is_square(FqElem a) const { return sq_[a.v] != 0; }
  unsigned multiplicative_order(FqElem a) const;

  // GF(q^2)
  Fq2Elem zero2() const { return {zero(), zero()}; }
  Fq2Elem one2() const { return {one(), zero()}; }
  Fq2Elem element2(int rank) const { return {element(rank / q_), element(rank % q_)}; }
  int rank2(Fq2Elem x) const { return x.x0.v * q_ + x.x1.v; }
  Fq2Elem embed(FqElem x) const { return {x, zero()}; }
  Fq2Elem scalar2(long long n) const { return embed(scalar(n)); }

  Fq2Elem add(Fq2Elem a, Fq2Elem b) const { return {add(a.x0, b.x0), add(a.x1, b.x1)}; }
  Fq2Elem sub(Fq2Elem a, Fq2Elem b) const { return {sub(a.x0, b.x0), sub(a.x1, b.x1)}; }
  Fq2Elem neg(Fq2Elem a) const { return {neg(a.x0), neg(a.x1)}; }
  Fq2Elem mul(Fq2Elem a, Fq2Elem b) const {
    return {add(mul(a.x0, b.x0), mul(nu_, mul(a.x1, b.x1))),
            add(mul(a.x0, b.x1), mul(a.x1, b.x0))};
  }
  Fq2Elem inv(Fq2Elem a) const;
  Fq2Elem div(Fq2Elem a, Fq2Elem b) const { return mul(a, inv(b)); }
  Fq2Elem pow(Fq2Elem a, unsigned long long e) const;
  /// x -> x^q, the conjugation x0 - x1*eps.
  Fq2Elem frobenius(Fq2Elem a) const { return {a.x0, neg(a.x1)}; }
  /// x -> x^{q+1} = x0^2 - nu*x1^2, an element of GF(q).
  FqElem norm(Fq2Elem a) const { return sub(mul(a.x0, a.x0), mul(nu_, mul(a.x1, a.x1))); }
  FqElem trace(Fq2Elem a) const { return add(a.x0, a.x0); }
  /// Quadratic character in GF(q^2): chi(x) = chi_q(norm x); 0 is a square.
  bool is_square(Fq2Elem a) const;
  /// Least square root in element order, or absent for nonsquares.
  std::optional<Fq2Elem> sqrt(Fq2Elem a) const;
  unsigned multiplicative_order(Fq2Elem a) const;

  // Canonical text encoding: "x0+x1*e"; x0, x1 are integers for k = 1 and
  // comma-separated coefficient vectors otherwise. Round-trips exactly.
  std::string to_string(FqElem x) const;
  std::string to_string(Fq2Elem x) const;
  FqElem parse_fq(std::string_view s) const;
  Fq2Elem parse_fq2(std::string_view s) const;

 private:
  FqElem from_digits(const std::vector<int>& c) const;
  bool is_primitive(FqElem a) const;
  bool is_primitive(Fq2Elem a) const;

  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
  std::vector<std::uint8_t> sq_;
  std::vector<unsigned long long> q1_primes_, q21_primes_;
  FqElem one_{}, half_{}, nu_{};
  Fq2Elem beta_{};
};

}  // namespace hermiq
