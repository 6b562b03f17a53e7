#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kss/cyclotomic.hpp"
#include "kss/semigroup.hpp"

namespace kss {

// ---- functions on a finite semigroup ------------------------------------

// A complex-valued (Q(zeta_N)-valued) function given by its value table.
class DenseFunc {
 public:
  DenseFunc() = default;
  DenseFunc(std::vector<CycScalar> values) : values_(std::move(values)) {}
  static DenseFunc zero(std::size_t n, unsigned conductor);
  static DenseFunc constant(std::size_t n, const CycScalar& v);

  std::size_t size() const { return values_.size(); }
  const CycScalar& eval(Elem x) const;
  void set(Elem x, const CycScalar& v);
  const std::vector<CycScalar>& values() const { return values_; }

  bool is_zero() const;
  // f o sigma
  DenseFunc pullback(const std::vector<Elem>& sigma) const;

  friend DenseFunc operator+(const DenseFunc& a, const DenseFunc& b);
  friend DenseFunc operator-(const DenseFunc& a, const DenseFunc& b);
  friend DenseFunc operator*(const CycScalar& s, const DenseFunc& f);
  friend bool operator==(const DenseFunc& a, const DenseFunc& b);
  friend bool operator!=(const DenseFunc& a, const DenseFunc& b) {
    return !(a == b);
  }

 private:
  std::vector<CycScalar> values_;
};

// ---- exponential polynomials on the grid N^2 -----------------------------

// Monomial factor of a grid term: 1, x or y.  Higher degrees never occur in
// the solution catalog (additive parts are degree <= 1).
enum class GridMono : std::uint8_t { kConst = 0, kX = 1, kY = 2 };

struct GridTerm {
  CycScalar coeff;
  CycScalar a1, a2;  // bases; nonzero
  GridMono mono = GridMono::kConst;
};

// A function N^2 -> Q(zeta_N) of the shape
//     sum_k  c_k * a1_k^x * a2_k^y * m_k(x, y),   m_k in {1, x, y}.
// Terms are kept normalized: keys (a1, a2, mono) are unique and sorted, all
// coefficients are nonzero, so structural equality is semantic equality
// (distinct exponential-monomial terms are linearly independent functions).
class GridFunc {
 public:
  GridFunc() = default;
  explicit GridFunc(std::vector<GridTerm> terms);

  static GridFunc zero();
  // chi(x, y) = a1^x a2^y; bases must be nonzero.
  static GridFunc exponential(const CycScalar& a1, const CycScalar& a2);
  // A(x, y) = b1 x + b2 y.
  static GridFunc additive(const CycScalar& b1, const CycScalar& b2);

  const std::vector<GridTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CycScalar eval(GridPoint p) const;
  GridFunc pullback(GridSigma sigma) const;  // f o sigma

  friend GridFunc operator+(const GridFunc& a, const GridFunc& b);
  friend GridFunc operator-(const GridFunc& a, const GridFunc& b);
  friend GridFunc operator*(const CycScalar& s, const GridFunc& f);
  // Pointwise product; throws InvalidInput if the result would leave the
  // degree <= 1 form (i.e. both factors carry an x/y monomial).
  friend GridFunc operator*(const GridFunc& a, const GridFunc& b);
  friend bool operator==(const GridFunc& a, const GridFunc& b);
  friend bool operator!=(const GridFunc& a, const GridFunc& b) {
    return !(a == b);
  }

 private:
  void normalize();
  std::vector<GridTerm> terms_;
};

// ---- exact identity checking over the grid --------------------------------
// Exponential polynomials in the four variables (x1, x2, y1, y2) ranging
// over N^4, with monomial degree <= 2.  Distinct (bases, monomial) shapes
// are linearly independent as functions on N^4, so an identity of grid
// functions in two point arguments holds everywhere iff its expansion here
// normalizes to zero.  This powers the strict (window-free) verification
// mode.
class Exp4Poly {
 public:
  // One coordinate of a substituted grid argument: the sum of a subset of
  // the four variables plus a constant, e.g. w = x sigma(y) z0 has first
  // coordinate x1 + y2 + s0 (swap involution).
  struct LinearArg {
    std::array<bool, 4> vars{};  // which of x1, x2, y1, y2 occur
    long long constant = 0;
  };

  Exp4Poly() = default;

  // f evaluated at the grid point (u, v).
  static Exp4Poly substitute(const GridFunc& f, const LinearArg& u,
                             const LinearArg& v);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend Exp4Poly operator+(const Exp4Poly& a, const Exp4Poly& b);
  friend Exp4Poly operator-(const Exp4Poly& a, const Exp4Poly& b);
  friend Exp4Poly operator*(const CycScalar& s, const Exp4Poly& f);
  friend Exp4Poly operator*(const Exp4Poly& a, const Exp4Poly& b);

  // Human-readable rendering of the residual terms, for reports.
  std::string str() const;

 private:
  struct Key {
    std::array<CycScalar, 4> bases;
    std::array<std::uint8_t, 4> mono;
    bool operator<(const Key& other) const;
  };
  void add_term(const Key& k, const CycScalar& c);
  std::map<Key, CycScalar> terms_;
};

}  // namespace kss
