#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kss/errors.hpp"

namespace kss {

using Elem = std::uint32_t;

// A finite semigroup given by its Cayley table.  Associativity is checked
// exhaustively on construction (O(n^3)); the first failing triple is
// reported in the exception.
class FiniteSemigroup {
 public:
  static FiniteSemigroup from_table(
      std::vector<std::vector<Elem>> table,
      std::optional<std::vector<std::string>> names = std::nullopt);

  std::size_t size() const { return table_.size(); }
  Elem compose(Elem a, Elem b) const;
  const std::string& name(Elem a) const;
  std::optional<Elem> index_of(const std::string& name) const;
  const std::vector<std::vector<Elem>>& table() const { return table_; }

 private:
  FiniteSemigroup(std::vector<std::vector<Elem>> table,
                  std::vector<std::string> names);
  std::vector<std::vector<Elem>> table_;
  std::vector<std::string> names_;
};

// Report-valued involution check: sigma must be an involutive automorphism,
// i.e. sigma(sigma(x)) = x and sigma(xy) = sigma(x)sigma(y).
struct InvolutionReport {
  bool ok = true;
  std::string violation;  // empty when ok
};
InvolutionReport check_involution(const FiniteSemigroup& sg,
                                  const std::vector<Elem>& sigma);

// smallest (index i >= 1, period p >= 1) with x^{i+p} = x^i
struct IndexPeriod {
  unsigned index;
  unsigned period;
};
IndexPeriod index_period(const FiniteSemigroup& sg, Elem x);

// A finite semigroup together with an involutive automorphism and the fixed
// element z0 the equation is anchored at.
class FiniteContext {
 public:
  using Func = class DenseFunc;  // defined in functions.hpp
  using Element = Elem;

  FiniteContext(FiniteSemigroup sg, std::vector<Elem> sigma, Elem z0);

  const FiniteSemigroup& semigroup() const { return sg_; }
  std::size_t size() const { return sg_.size(); }
  Elem compose(Elem a, Elem b) const { return sg_.compose(a, b); }
  Elem apply_sigma(Elem a) const;
  Elem z0() const { return z0_; }
  const std::vector<Elem>& sigma() const { return sigma_; }
  // Every element; also the domain equation verification runs over.
  const std::vector<Elem>& domain() const { return domain_; }
  std::string element_label(Elem a) const { return sg_.name(a); }

 private:
  FiniteSemigroup sg_;
  std::vector<Elem> sigma_;
  Elem z0_;
  std::vector<Elem> domain_;
};

// The set S S z0 = { x y z0 : x, y in S } as a membership mask plus the
// element list, and whether it is all of S.
struct SquaresIdeal {
  std::vector<bool> member;
  std::vector<Elem> elements;
  bool equals_all = false;
};
SquaresIdeal squares_ideal(const FiniteContext& ctx);

// ---- the additive grid N^2 ----------------------------------------------
// N = {1, 2, 3, ...} with coordinate-wise addition.  The only involutive
// automorphisms are the identity and the coordinate swap.

struct GridPoint {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class GridSigma { kIdentity, kSwap };

class GridContext {
 public:
  using Func = class GridFunc;  // defined in functions.hpp
  using Element = GridPoint;

  // window: equation checks run over all pairs with coordinates in
  // [1, window].
  GridContext(GridSigma sigma, GridPoint z0, unsigned window = 12);

  GridSigma sigma_kind() const { return sigma_; }
  unsigned window() const { return window_; }
  GridPoint compose(GridPoint a, GridPoint b) const {
    return {a.x + b.x, a.y + b.y};
  }
  GridPoint apply_sigma(GridPoint p) const {
    return sigma_ == GridSigma::kSwap ? GridPoint{p.y, p.x} : p;
  }
  GridPoint z0() const { return z0_; }
  const std::vector<GridPoint>& domain() const { return domain_; }
  std::string element_label(GridPoint p) const {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  }

 private:
  GridSigma sigma_;
  GridPoint z0_;
  unsigned window_;
  std::vector<GridPoint> domain_;
};

// S S z0 on the grid is { (n, m) : n >= s0 + 2, m >= t0 + 2 } for
// z0 = (s0, t0); returned as a predicate plus a rendered description of the
// set and its complement.
struct GridSquaresIdeal {
  long long min_x;  // s0 + 2
  long long min_y;  // t0 + 2
  bool contains(GridPoint p) const { return p.x >= min_x && p.y >= min_y; }
  std::string description;
  std::string complement_description;
};
GridSquaresIdeal squares_ideal(const GridContext& ctx);

}  // namespace kss
