#include "kss/semigroup.hpp"

#include <algorithm>

namespace kss {

FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<Elem>> table,
                                 std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {}

FiniteSemigroup FiniteSemigroup::from_table(
    std::vector<std::vector<Elem>> table,
    std::optional<std::vector<std::string>> names) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("semigroup must have at least one element");
  for (const auto& row : table) {
    if (row.size() != n)
      throw InvalidInput("multiplication table must be square");
    for (Elem v : row)
      if (v >= n) throw IndexOutOfRange("table entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw NotAssociative(x, y, z);
  std::vector<std::string> labels;
  if (names) {
    if (names->size() != n)
      throw InvalidInput("name list must match table size");
    labels = std::move(*names);
  } else {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  return FiniteSemigroup(std::move(table), std::move(labels));
}

Elem FiniteSemigroup::compose(Elem a, Elem b) const {
  if (a >= size() || b >= size())
    throw IndexOutOfRange("element index out of range");
  return table_[a][b];
}

const std::string& FiniteSemigroup::name(Elem a) const {
  if (a >= size()) throw IndexOutOfRange("element index out of range");
  return names_[a];
}

std::optional<Elem> FiniteSemigroup::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

InvolutionReport check_involution(const FiniteSemigroup& sg,
                                  const std::vector<Elem>& sigma) {
  const std::size_t n = sg.size();
  InvolutionReport rep;
  if (sigma.size() != n) {
    rep.ok = false;
    rep.violation = "sigma must assign an image to every element";
    return rep;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (sigma[x] >= n) {
      rep.ok = false;
      rep.violation = "sigma image out of range at " + sg.name(static_cast<Elem>(x));
      return rep;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (sigma[sigma[x]] != x) {
      rep.ok = false;
      rep.violation =
          "sigma(sigma(" + sg.name(static_cast<Elem>(x)) + ")) != " +
          sg.name(static_cast<Elem>(x));
      return rep;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (sigma[sg.compose(x, y)] != sg.compose(sigma[x], sigma[y])) {
        rep.ok = false;
        rep.violation = "sigma is not multiplicative at (" + sg.name(x) +
                        ", " + sg.name(y) + ")";
        return rep;
      }
    }
  }
  return rep;
}

IndexPeriod index_period(const FiniteSemigroup& sg, Elem x) {
  // Walk the power sequence x, x^2, ... until it revisits a value.
  std::vector<Elem> seen;
  Elem cur = x;
  for (;;) {
    auto it = std::find(seen.begin(), seen.end(), cur);
    if (it != seen.end()) {
      unsigned index = static_cast<unsigned>(it - seen.begin()) + 1;
      unsigned period = static_cast<unsigned>(seen.size() - (it - seen.begin()));
      return {index, period};
    }
    seen.push_back(cur);
    cur = sg.compose(cur, x);
  }
}

FiniteContext::FiniteContext(FiniteSemigroup sg, std::vector<Elem> sigma,
                             Elem z0)
    : sg_(std::move(sg)), sigma_(std::move(sigma)), z0_(z0) {
  auto rep = check_involution(sg_, sigma_);
  if (!rep.ok) throw NotAnInvolution(rep.violation);
  if (z0_ >= sg_.size()) throw IndexOutOfRange("z0 out of range");
  domain_.resize(sg_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i)
    domain_[i] = static_cast<Elem>(i);
}

Elem FiniteContext::apply_sigma(Elem a) const {
  if (a >= sg_.size()) throw IndexOutOfRange("element index out of range");
  return sigma_[a];
}

SquaresIdeal squares_ideal(const FiniteContext& ctx) {
  const std::size_t n = ctx.size();
  SquaresIdeal out;
  out.member.assign(n, false);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      out.member[ctx.compose(ctx.compose(x, y), ctx.z0())] = true;
  for (Elem e = 0; e < n; ++e)
    if (out.member[e]) out.elements.push_back(e);
  out.equals_all = out.elements.size() == n;
  return out;
}

GridContext::GridContext(GridSigma sigma, GridPoint z0, unsigned window)
    : sigma_(sigma), z0_(z0), window_(window) {
  if (z0.x < 1 || z0.y < 1)
    throw InvalidInput("grid points have coordinates >= 1");
  if (window_ < 1) throw InvalidInput("window must be >= 1");
  domain_.reserve(static_cast<std::size_t>(window_) * window_);
  for (long long x = 1; x <= static_cast<long long>(window_); ++x)
    for (long long y = 1; y <= static_cast<long long>(window_); ++y)
      domain_.push_back({x, y});
}

GridSquaresIdeal squares_ideal(const GridContext& ctx) {
  GridSquaresIdeal out;
  out.min_x = ctx.z0().x + 2;
  out.min_y = ctx.z0().y + 2;
  out.description = "{ (n,m) : n >= " + std::to_string(out.min_x) +
                    ", m >= " + std::to_string(out.min_y) + " }";
  out.complement_description =
      "{ (n,m) : n <= " + std::to_string(out.min_x - 1) +
      " } union { (n,m) : m <= " + std::to_string(out.min_y - 1) + " }";
  return out;
}

}  // namespace kss
