#include "hermiq/gf.hpp"

#include <algorithm>

namespace hermiq {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned long long> distinct_prime_factors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over GF(p); coefficient i belongs to t^i.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Remainder modulo a monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = poly_deg(m);
  for (int d = poly_deg(a); d >= dm; d = poly_deg(a)) {
    const int coef = a[d];
    if (coef != 0) {
      for (int i = 0; i <= dm; ++i) {
        int& t = a[d - dm + i];
        t = ((t - coef * m[i]) % p + p) % p;
      }
    }
    a[d] = 0;
  }
  a.resize(std::max(dm, 1));
  return a;
}

bool is_irreducible(const Poly& m, int p) {
  const int k = poly_deg(m);
  for (int d = 1; 2 * d <= k; ++d) {
    // every monic divisor candidate of degree d
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      g[d] = 1;
      long long t = n;
      for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
      if (poly_deg(poly_mod(m, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int p, int k, int max_q) : p_(p), k_(k) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw InvalidFieldError("p must be an odd prime, got " + std::to_string(p));
  if (k < 1) throw InvalidFieldError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > max_q)
      throw SizeLimitError("q = " + std::to_string(p) + "^" + std::to_string(k) +
                           " exceeds the bound " + std::to_string(max_q));
  }
  q_ = static_cast<int>(q);

  // Least monic irreducible modulus of degree k, lower coefficients ordered
  // like elements (c0 most significant).
  {
    long long count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (long long n = 0; n < count; ++n) {
      Poly m(k_ + 1, 0);
      m[k_] = 1;
      long long t = n;
      for (int i = k_ - 1; i >= 0; --i) { m[i] = static_cast<int>(t % p_); t /= p_; }
      if (is_irreducible(m, p_)) {
        modulus_ = m;
        break;
      }
    }
  }

  // Rank <-> digit conversions for table construction.
  auto rank_digits = [&](int r) {
    std::vector<int> c(k_);
    for (int i = k_ - 1; i >= 0; --i) { c[i] = r % p_; r /= p_; }
    return c;
  };
  auto digits_rank = [&](const std::vector<int>& c) {
    int r = 0;
    for (int i = 0; i < k_; ++i) r = r * p_ + c[i];
    return r;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (int ra = 0; ra < q_; ++ra) {
    const auto ca = rank_digits(ra);
    {
      std::vector<int> cn(k_);
      for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_[ra] = static_cast<std::uint16_t>(digits_rank(cn));
    }
    for (int rb = 0; rb < q_; ++rb) {
      const auto cb = rank_digits(rb);
      std::vector<int> cs(k_);
      for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<std::size_t>(ra) * q_ + rb] =
          static_cast<std::uint16_t>(digits_rank(cs));
      Poly prod = poly_mod(poly_mul(ca, cb, p_), modulus_, p_);
      std::vector<int> cp(k_, 0);
      for (int i = 0; i < k_ && i < static_cast<int>(prod.size()); ++i) cp[i] = prod[i];
      mul_[static_cast<std::size_t>(ra) * q_ + rb] =
          static_cast<std::uint16_t>(digits_rank(cp));
    }
  }

  {
    std::vector<int> c1(k_, 0);
    c1[0] = 1;
    one_ = FqElem{static_cast<std::uint16_t>(digits_rank(c1))};
  }

  inv_.assign(q_, 0);
  for (int ra = 1; ra < q_; ++ra)
    for (int rb = 1; rb < q_; ++rb)
      if (mul_[static_cast<std::size_t>(ra) * q_ + rb] == one_.v) { inv_[ra] = static_cast<std::uint16_t>(rb); break; }

  half_ = inv(scalar(2));

  sq_.assign(q_, 0);
  sq_[0] = 1;
  for (int r = 1; r < q_; ++r) sq_[mul_[static_cast<std::size_t>(r) * q_ + r]] = 1;

  q1_primes_ = distinct_prime_factors(static_cast<unsigned long long>(q_) - 1);
  q21_primes_ = distinct_prime_factors(static_cast<unsigned long long>(q_) * q_ - 1);

  for (int r = 1; r < q_; ++r)
    if (is_primitive(element(r))) { nu_ = element(r); break; }

  // beta: least primitive element whose (q+1)/2 power is the basis eps.
  const unsigned long long d = static_cast<unsigned long long>(q_ + 1) / 2;
  for (int r = 1; r < q2(); ++r) {
    const Fq2Elem cand = element2(r);
    if (pow(cand, d) != epsilon()) continue;
    if (is_primitive(cand)) { beta_ = cand; break; }
  }
  if (beta_ == zero2()) throw std::logic_error("no admissible primitive beta found");
}

std::vector<int> Field::digits(FqElem x) const {
  std::vector<int> c(k_);
  int r = x.v;
  for (int i = k_ - 1; i >= 0; --i) { c[i] = r % p_; r /= p_; }
  return c;
}

FqElem Field::from_digits(const std::vector<int>& c) const {
  int r = 0;
  for (int i = 0; i < k_; ++i) r = r * p_ + c[i];
  return element(r);
}

FqElem Field::scalar(long long n) const {
  std::vector<int> c(k_, 0);
  c[0] = static_cast<int>(((n % p_) + p_) % p_);
  return from_digits(c);
}

FqElem Field::inv(FqElem a) const {
  if (a.v == 0) throw Error("inverse of zero in GF(q)");
  return {inv_[a.v]};
}

FqElem Field::pow(FqElem a, unsigned long long e) const {
  FqElem r = one();
  FqElem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

unsigned Field::multiplicative_order(FqElem a) const {
  if (a.v == 0) return 0;
  unsigned ord = 1;
  FqElem acc = a;
  while (acc != one()) { acc = mul(acc, a); ++ord; }
  return ord;
}

bool Field::is_primitive(FqElem a) const {
  if (a.v == 0) return false;
  const unsigned long long n = static_cast<unsigned long long>(q_) - 1;
  for (auto r : q1_primes_)
    if (pow(a, n / r) == one()) return false;
  return true;
}

Fq2Elem Field::inv(Fq2Elem a) const {
  const FqElem n = norm(a);
  if (n.v == 0) throw Error("inverse of zero in GF(q^2)");
  const FqElem ni = inv(n);
  const Fq2Elem conj = frobenius(a);
  return {mul(conj.x0, ni), mul(conj.x1, ni)};
}

Fq2Elem Field::pow(Fq2Elem a, unsigned long long e) const {
  Fq2Elem r = one2();
  Fq2Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

unsigned Field::multiplicative_order(Fq2Elem a) const {
  if (a == zero2()) return 0;
  unsigned ord = 1;
  Fq2Elem acc = a;
  while (acc != one2()) { acc = mul(acc, a); ++ord; }
  return ord;
}

bool Field::is_primitive(Fq2Elem a) const {
  if (a == zero2()) return false;
  const unsigned long long n = static_cast<unsigned long long>(q_) * q_ - 1;
  for (auto r : q21_primes_)
    if (pow(a, n / r) == one2()) return false;
  return true;
}

bool Field::is_square(Fq2Elem a) const {
  if (a == zero2()) return true;
  return is_square(norm(a));
}

std::optional<Fq2Elem> Field::sqrt(Fq2Elem a) const {
  if (a == zero2()) return zero2();
  if (!is_square(a)) return std::nullopt;
  if (q_ <= 11) {
    for (int r = 0; r < q2(); ++r) {
      const Fq2Elem x = element2(r);
      if (mul(x, x) == a) return x;
    }
    throw Error("square root search failed");  // unreachable
  }
  // Tonelli-Shanks in GF(q^2); beta is a nonresidue since it is primitive.
  unsigned long long t = static_cast<unsigned long long>(q_) * q_ - 1;
  unsigned s = 0;
  while ((t & 1) == 0) { t >>= 1; ++s; }
  Fq2Elem c = pow(beta_, t);
  Fq2Elem u = pow(a, (t + 1) / 2);
  Fq2Elem b = pow(a, t);
  unsigned m = s;
  while (b != one2()) {
    unsigned i = 0;
    Fq2Elem bb = b;
    while (bb != one2()) { bb = mul(bb, bb); ++i; }
    Fq2Elem g = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) g = mul(g, g);
    u = mul(u, g);
    c = mul(g, g);
    b = mul(b, c);
    m = i;
  }
  return std::min(u, neg(u));
}

std::string Field::to_string(FqElem x) const {
  if (k_ == 1) return std::to_string(x.v);
  const auto c = digits(x);
  std::string s;
  for (int i = 0; i < k_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string Field::to_string(Fq2Elem x) const {
  return to_string(x.x0) + "+" + to_string(x.x1) + "*e";
}

FqElem Field::parse_fq(std::string_view s) const {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) throw Error("bad field element '" + std::string(s) + "'");
    int val = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw Error("bad field element '" + std::string(s) + "'");
      val = val * 10 + (ch - '0');
      if (val >= p_) throw Error("coefficient out of range in '" + std::string(s) + "'");
    }
    c.push_back(val);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(c.size()) != k_)
    throw Error("expected " + std::to_string(k_) + " coefficients in '" + std::string(s) + "'");
  return from_digits(c);
}

Fq2Elem Field::parse_fq2(std::string_view s) const {
  const std::size_t plus = s.find('+');
  if (plus == std::string_view::npos || s.size() < plus + 3 ||
      s.substr(s.size() - 2) != "*e")
    throw Error("bad GF(q^2) element '" + std::string(s) + "', want \"x0+x1*e\"");
  const FqElem x0 = parse_fq(s.substr(0, plus));
  const FqElem x1 = parse_fq(s.substr(plus + 1, s.size() - plus - 3));
  return {x0, x1};
}

}  // namespace hermiq
