#include "kss/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kss {
namespace {

// ---- dense polynomial helpers over Q ------------------------------------
// Polynomials are coefficient vectors, constant term first, with no
// guaranteed trailing-zero trimming unless stated.

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Division with remainder; the divisor must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  int db = degree(b);
  if (db < 0) throw DivisionByZero();
  int da = degree(a);
  if (da < db) return {Poly{}, std::move(a)};
  Poly q(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational& lead = b[static_cast<std::size_t>(db)];
  for (int d = da; d >= db; --d) {
    Rational c = a[static_cast<std::size_t>(d)] / lead;
    if (c == 0) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(d - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(a);
  return {std::move(q), std::move(a)};
}

Poly x_pow_n_minus_1(unsigned n) {
  Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

std::mutex cyclo_mutex;
std::map<unsigned, Poly> cyclo_cache;

// Phi_N via exact division: x^N - 1 = prod_{d | N} Phi_d.
const Poly& cyclotomic_impl(unsigned n) {
  auto it = cyclo_cache.find(n);
  if (it != cyclo_cache.end()) return it->second;
  Poly work = x_pow_n_minus_1(n);
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    auto [q, r] = divmod(std::move(work), cyclotomic_impl(d));
    if (degree(r) >= 0)
      throw InternalInconsistency("cyclotomic polynomial division not exact");
    work = std::move(q);
  }
  trim(work);
  return cyclo_cache.emplace(n, std::move(work)).first->second;
}

// Reduce a polynomial in zeta_N modulo Phi_N and pad to length phi(N).
std::vector<Rational> reduce(Poly p, unsigned n) {
  const Poly& phi = cyclotomic_polynomial(n);
  auto [q, r] = divmod(std::move(p), phi);
  (void)q;
  r.resize(euler_phi(n), Rational(0));
  return r;
}

// Extended Euclid over Q[x]: returns (g, s) with s*a + t*b = g, g = gcd
// normalized monic; only the Bezout coefficient of `a` is needed.
std::pair<Poly, Poly> egcd_first(Poly a, Poly b) {
  Poly s0{Rational(1)}, s1;
  while (degree(b) >= 0) {
    auto [q, r] = divmod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    Poly s2 = s0;
    Poly qs1 = mul(q, s1);
    if (qs1.size() > s2.size()) s2.resize(qs1.size(), Rational(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  trim(a);
  trim(s0);
  return {std::move(a), std::move(s0)};
}

std::atomic<bool> strict_conductors_flag{false};

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) throw InvalidInput("euler_phi(0) undefined");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidInput("cyclotomic polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  return cyclotomic_impl(n);
}

void set_strict_conductors(bool enabled) { strict_conductors_flag = enabled; }
bool strict_conductors() { return strict_conductors_flag; }

CycScalar::CycScalar(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycScalar CycScalar::zero(unsigned conductor) {
  return from_rational(Rational(0), conductor);
}

CycScalar CycScalar::one(unsigned conductor) {
  return from_rational(Rational(1), conductor);
}

CycScalar CycScalar::from_rational(const Rational& q, unsigned conductor) {
  if (conductor == 0) throw InvalidInput("conductor must be >= 1");
  std::vector<Rational> c(euler_phi(conductor), Rational(0));
  c[0] = q;
  c[0].canonicalize();
  if (conductor == 1) {
    // phi(1) = 1 but Phi_1 = x - 1, so reduction is trivial already.
  }
  return CycScalar(conductor, std::move(c));
}

CycScalar CycScalar::from_integer(long v, unsigned conductor) {
  return from_rational(Rational(v), conductor);
}

CycScalar CycScalar::root_of_unity(unsigned conductor, long k) {
  if (conductor == 0) throw InvalidInput("conductor must be >= 1");
  long n = static_cast<long>(conductor);
  long r = ((k % n) + n) % n;
  Poly p(static_cast<std::size_t>(r) + 1, Rational(0));
  p[static_cast<std::size_t>(r)] = 1;
  return CycScalar(conductor, reduce(std::move(p), conductor));
}

CycScalar CycScalar::imaginary_unit(unsigned conductor) {
  if (conductor % 4 != 0) throw ConductorTooSmall(conductor, 4);
  return root_of_unity(conductor, static_cast<long>(conductor / 4));
}

bool CycScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycScalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational CycScalar::as_rational() const {
  if (!is_rational())
    throw InvalidInput("value is not rational: " + str());
  return coeffs_[0];
}

CycScalar CycScalar::embedded(unsigned conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0)
    throw ConductorMismatch(conductor_, conductor);
  unsigned step = conductor / conductor_;
  Poly p(static_cast<std::size_t>(conductor_ - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    p[j * step] = coeffs_[j];
  return CycScalar(conductor, reduce(std::move(p), conductor));
}

std::pair<CycScalar, CycScalar> CycScalar::aligned(const CycScalar& a,
                                                   const CycScalar& b) {
  if (a.conductor_ == b.conductor_) return {a, b};
  if (strict_conductors()) throw ConductorMismatch(a.conductor_, b.conductor_);
  unsigned l = std::lcm(a.conductor_, b.conductor_);
  return {a.embedded(l), b.embedded(l)};
}

CycScalar CycScalar::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return CycScalar(conductor_, std::move(c));
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  auto [x, y] = CycScalar::aligned(a, b);
  std::vector<Rational> c(x.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] + y.coeffs_[i];
  return CycScalar(x.conductor_, std::move(c));
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
  auto [x, y] = CycScalar::aligned(a, b);
  std::vector<Rational> c(x.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] - y.coeffs_[i];
  return CycScalar(x.conductor_, std::move(c));
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  auto [x, y] = CycScalar::aligned(a, b);
  return CycScalar(x.conductor_, reduce(mul(x.coeffs_, y.coeffs_), x.conductor_));
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Poly a = coeffs_;
  trim(a);
  auto [g, s] = egcd_first(std::move(a), cyclotomic_polynomial(conductor_));
  // Phi_N is irreducible over Q, so gcd with any nonzero residue is a
  // nonzero constant.
  if (degree(g) != 0)
    throw InternalInconsistency("cyclotomic inverse: gcd not constant");
  Rational inv_g = Rational(1) / g[0];
  for (auto& c : s) c *= inv_g;
  return CycScalar(conductor_, reduce(std::move(s), conductor_));
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) {
  auto [x, y] = CycScalar::aligned(a, b);
  return x * y.inverse();
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar base = *this;
  CycScalar acc = CycScalar::one(conductor_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    base = base * base;
    k >>= 1UL;
  }
  return acc;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  auto [x, y] = CycScalar::aligned(a, b);
  return x.coeffs_ == y.coeffs_;
}

int CycScalar::compare(const CycScalar& a, const CycScalar& b) {
  if (a.conductor_ != b.conductor_)
    return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = mpq_cmp(a.coeffs_[i].get_mpq_t(), b.coeffs_[i].get_mpq_t());
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycScalar::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace kss
