#include "kss/functions.hpp"

#include <algorithm>
#include <sstream>

namespace kss {

// ---- DenseFunc -----------------------------------------------------------

DenseFunc DenseFunc::zero(std::size_t n, unsigned conductor) {
  return DenseFunc(std::vector<CycScalar>(n, CycScalar::zero(conductor)));
}

DenseFunc DenseFunc::constant(std::size_t n, const CycScalar& v) {
  return DenseFunc(std::vector<CycScalar>(n, v));
}

const CycScalar& DenseFunc::eval(Elem x) const {
  if (x >= values_.size()) throw IndexOutOfRange("function argument out of range");
  return values_[x];
}

void DenseFunc::set(Elem x, const CycScalar& v) {
  if (x >= values_.size()) throw IndexOutOfRange("function argument out of range");
  values_[x] = v;
}

bool DenseFunc::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const CycScalar& v) { return v.is_zero(); });
}

DenseFunc DenseFunc::pullback(const std::vector<Elem>& sigma) const {
  if (sigma.size() != values_.size())
    throw InvalidInput("sigma size does not match function domain");
  std::vector<CycScalar> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[sigma[i]];
  return DenseFunc(std::move(out));
}

DenseFunc operator+(const DenseFunc& a, const DenseFunc& b) {
  if (a.size() != b.size()) throw InvalidInput("function domains differ");
  std::vector<CycScalar> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values_[i] + b.values_[i];
  return DenseFunc(std::move(out));
}

DenseFunc operator-(const DenseFunc& a, const DenseFunc& b) {
  if (a.size() != b.size()) throw InvalidInput("function domains differ");
  std::vector<CycScalar> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values_[i] - b.values_[i];
  return DenseFunc(std::move(out));
}

DenseFunc operator*(const CycScalar& s, const DenseFunc& f) {
  std::vector<CycScalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * f.values_[i];
  return DenseFunc(std::move(out));
}

bool operator==(const DenseFunc& a, const DenseFunc& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.values_[i] != b.values_[i]) return false;
  return true;
}

// ---- GridFunc ------------------------------------------------------------

namespace {

// sort key ignoring the coefficient
bool term_key_less(const GridTerm& a, const GridTerm& b) {
  int c = CycScalar::compare(a.a1, b.a1);
  if (c != 0) return c < 0;
  c = CycScalar::compare(a.a2, b.a2);
  if (c != 0) return c < 0;
  return static_cast<int>(a.mono) < static_cast<int>(b.mono);
}

bool term_key_equal(const GridTerm& a, const GridTerm& b) {
  return a.a1 == b.a1 && a.a2 == b.a2 && a.mono == b.mono;
}

}  // namespace

GridFunc::GridFunc(std::vector<GridTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.a1.is_zero() || t.a2.is_zero())
      throw InvalidInput("grid term bases must be nonzero");
  normalize();
}

void GridFunc::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_key_less);
  std::vector<GridTerm> out;
  for (auto& t : terms_) {
    if (!out.empty() && term_key_equal(out.back(), t)) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const GridTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

GridFunc GridFunc::zero() { return GridFunc(); }

GridFunc GridFunc::exponential(const CycScalar& a1, const CycScalar& a2) {
  if (a1.is_zero() || a2.is_zero())
    throw InvalidInput("exponential bases must be nonzero");
  unsigned n = std::max(a1.conductor(), a2.conductor());
  return GridFunc({GridTerm{CycScalar::one(n), a1, a2, GridMono::kConst}});
}

GridFunc GridFunc::additive(const CycScalar& b1, const CycScalar& b2) {
  unsigned n = std::max(b1.conductor(), b2.conductor());
  CycScalar one = CycScalar::one(n);
  std::vector<GridTerm> ts;
  if (!b1.is_zero()) ts.push_back(GridTerm{b1, one, one, GridMono::kX});
  if (!b2.is_zero()) ts.push_back(GridTerm{b2, one, one, GridMono::kY});
  return GridFunc(std::move(ts));
}

CycScalar GridFunc::eval(GridPoint p) const {
  if (terms_.empty()) return CycScalar::zero(1);
  CycScalar acc = CycScalar::zero(terms_[0].coeff.conductor());
  for (const auto& t : terms_) {
    CycScalar v = t.coeff * t.a1.pow(p.x) * t.a2.pow(p.y);
    if (t.mono == GridMono::kX)
      v = v * CycScalar::from_integer(p.x, v.conductor());
    else if (t.mono == GridMono::kY)
      v = v * CycScalar::from_integer(p.y, v.conductor());
    acc = acc + v;
  }
  return acc;
}

GridFunc GridFunc::pullback(GridSigma sigma) const {
  if (sigma == GridSigma::kIdentity) return *this;
  std::vector<GridTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    GridMono m = t.mono;
    if (m == GridMono::kX)
      m = GridMono::kY;
    else if (m == GridMono::kY)
      m = GridMono::kX;
    out.push_back(GridTerm{t.coeff, t.a2, t.a1, m});
  }
  return GridFunc(std::move(out));
}

GridFunc operator+(const GridFunc& a, const GridFunc& b) {
  std::vector<GridTerm> ts = a.terms_;
  ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
  return GridFunc(std::move(ts));
}

GridFunc operator-(const GridFunc& a, const GridFunc& b) {
  std::vector<GridTerm> ts = a.terms_;
  for (const auto& t : b.terms_)
    ts.push_back(GridTerm{-t.coeff, t.a1, t.a2, t.mono});
  return GridFunc(std::move(ts));
}

GridFunc operator*(const CycScalar& s, const GridFunc& f) {
  std::vector<GridTerm> ts;
  ts.reserve(f.terms_.size());
  for (const auto& t : f.terms_)
    ts.push_back(GridTerm{s * t.coeff, t.a1, t.a2, t.mono});
  return GridFunc(std::move(ts));
}

GridFunc operator*(const GridFunc& a, const GridFunc& b) {
  std::vector<GridTerm> ts;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      GridMono m;
      if (s.mono == GridMono::kConst)
        m = t.mono;
      else if (t.mono == GridMono::kConst)
        m = s.mono;
      else
        throw InvalidInput(
            "product of grid functions leaves the degree <= 1 term form");
      ts.push_back(GridTerm{s.coeff * t.coeff, s.a1 * t.a1, s.a2 * t.a2, m});
    }
  }
  return GridFunc(std::move(ts));
}

bool operator==(const GridFunc& a, const GridFunc& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (!(term_key_equal(s, t) && s.coeff == t.coeff)) return false;
  }
  return true;
}

// ---- Exp4Poly ------------------------------------------------------------

bool Exp4Poly::Key::operator<(const Key& other) const {
  for (int i = 0; i < 4; ++i) {
    int c = CycScalar::compare(bases[i], other.bases[i]);
    if (c != 0) return c < 0;
  }
  return mono < other.mono;
}

void Exp4Poly::add_term(const Key& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Exp4Poly Exp4Poly::substitute(const GridFunc& f, const LinearArg& u,
                              const LinearArg& v) {
  Exp4Poly out;
  for (const auto& t : f.terms()) {
    unsigned n = t.coeff.conductor();
    CycScalar scale = t.coeff * t.a1.pow(u.constant) * t.a2.pow(v.constant);
    Key base_key;
    for (int i = 0; i < 4; ++i) {
      CycScalar b = CycScalar::one(n);
      if (u.vars[static_cast<std::size_t>(i)]) b = b * t.a1;
      if (v.vars[static_cast<std::size_t>(i)]) b = b * t.a2;
      base_key.bases[static_cast<std::size_t>(i)] = b;
      base_key.mono[static_cast<std::size_t>(i)] = 0;
    }
    if (t.mono == GridMono::kConst) {
      out.add_term(base_key, scale);
      continue;
    }
    // substituted monomial = sum of the argument's variables + constant
    const LinearArg& arg = t.mono == GridMono::kX ? u : v;
    for (int i = 0; i < 4; ++i) {
      if (!arg.vars[static_cast<std::size_t>(i)]) continue;
      Key k = base_key;
      k.mono[static_cast<std::size_t>(i)] = 1;
      out.add_term(k, scale);
    }
    if (arg.constant != 0)
      out.add_term(base_key,
                   scale * CycScalar::from_integer(arg.constant, n));
  }
  return out;
}

Exp4Poly operator+(const Exp4Poly& a, const Exp4Poly& b) {
  Exp4Poly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

Exp4Poly operator-(const Exp4Poly& a, const Exp4Poly& b) {
  Exp4Poly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

Exp4Poly operator*(const CycScalar& s, const Exp4Poly& f) {
  Exp4Poly out;
  for (const auto& [k, c] : f.terms_) out.add_term(k, s * c);
  return out;
}

Exp4Poly operator*(const Exp4Poly& a, const Exp4Poly& b) {
  Exp4Poly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Exp4Poly::Key k;
      unsigned total = 0;
      for (int i = 0; i < 4; ++i) {
        auto idx = static_cast<std::size_t>(i);
        k.bases[idx] = ka.bases[idx] * kb.bases[idx];
        k.mono[idx] = static_cast<std::uint8_t>(ka.mono[idx] + kb.mono[idx]);
        total += k.mono[idx];
      }
      if (total > 2)
        throw InternalInconsistency("exp4 product exceeded degree 2");
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

std::string Exp4Poly::str() const {
  static const char* kVars[4] = {"x1", "x2", "y1", "y2"};
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (int i = 0; i < 4; ++i) {
      auto idx = static_cast<std::size_t>(i);
      if (!k.bases[idx].is_one())
        out << "*(" << k.bases[idx].str() << ")^" << kVars[i];
      for (std::uint8_t d = 0; d < k.mono[idx]; ++d) out << "*" << kVars[i];
    }
  }
  return out.str();
}

}  // namespace kss
