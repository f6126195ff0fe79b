#pragma once

// Sparse multivariate polynomials over the rationals.
//
// A polynomial lives in a Ring: the tensor shape fixes the variables x_a,
// a in [n], and the monomial order fixes the term order. Terms are kept
// sorted in decreasing order so the leading term is always terms().front().

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "nucideal/tensor_index.hpp"

namespace nucideal {

using Rational = mpq_class;
using Integer = mpz_class;

struct VarPower {
  VarIndex var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

// x^alpha stored sparsely: (variable, exponent) pairs with increasing variable
// rank and positive exponents.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarIndex v, std::uint32_t exp = 1) {
    Monomial m;
    if (exp > 0) {
      m.factors_.push_back({v, exp});
      m.degree_ = exp;
    }
    return m;
  }

  // Accepts unsorted input with repeats; zero exponents are dropped.
  static Monomial from_factors(std::vector<VarPower> factors) {
    std::sort(factors.begin(), factors.end(), [](const VarPower& x, const VarPower& y) { return x.var < y.var; });
    Monomial m;
    for (const auto& f : factors) {
      if (f.exp == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().var == f.var) {
        m.factors_.back().exp += f.exp;
      } else {
        m.factors_.push_back(f);
      }
      m.degree_ += f.exp;
    }
    return m;
  }

  const std::vector<VarPower>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t exponent(VarIndex v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const VarPower& f, VarIndex key) { return f.var < key; });
    return (it != factors_.end() && it->var == v) ? it->exp : 0;
  }

  VarIndex max_var() const { return factors_.back().var; }

  bool is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const VarPower& f) { return f.exp <= 1; });
  }

  // Pure power x_v^e with e >= 1.
  bool is_pure_power() const { return factors_.size() == 1; }

  // this | other
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    std::size_t j = 0;
    for (const auto& f : factors_) {
      while (j < other.factors_.size() && other.factors_[j].var < f.var) ++j;
      if (j == other.factors_.size() || other.factors_[j].var != f.var || other.factors_[j].exp < f.exp) return false;
      ++j;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
      if (factors_[i].var == other.factors_[j].var) return false;
      if (factors_[i].var < other.factors_[j].var) {
        ++i;
      } else {
        ++j;
      }
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
      if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].var < b.factors_[j].var)) {
        out.factors_.push_back(a.factors_[i++]);
      } else if (i == a.factors_.size() || b.factors_[j].var < a.factors_[i].var) {
        out.factors_.push_back(b.factors_[j++]);
      } else {
        out.factors_.push_back({a.factors_[i].var, a.factors_[i].exp + b.factors_[j].exp});
        ++i;
        ++j;
      }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  // a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::invalid_argument("monomial quotient is not exact");
    Monomial out;
    std::size_t j = 0;
    for (const auto& f : a.factors_) {
      std::uint32_t e = f.exp;
      if (j < b.factors_.size() && b.factors_[j].var == f.var) e -= b.factors_[j++].exp;
      if (e > 0) out.factors_.push_back({f.var, e});
    }
    out.degree_ = a.degree_ - b.degree_;
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
      if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].var < b.factors_[j].var)) {
        out.factors_.push_back(a.factors_[i++]);
      } else if (i == a.factors_.size() || b.factors_[j].var < a.factors_[i].var) {
        out.factors_.push_back(b.factors_[j++]);
      } else {
        out.factors_.push_back({a.factors_[i].var, std::max(a.factors_[i].exp, b.factors_[j].exp)});
        ++i;
        ++j;
      }
    }
    for (const auto& f : out.factors_) out.degree_ += f.exp;
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Structural order used for containers only (not a monomial order).
  friend bool structural_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(
        a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
        [](const VarPower& x, const VarPower& y) { return x.var != y.var ? x.var < y.var : x.exp < y.exp; });
  }

 private:
  std::vector<VarPower> factors_;
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic order with x_0 > x_1 > ... (variable rank),
// optionally refined into a two-block elimination order: a set of
// eliminated variables compared first (grevlex on that block), then the kept
// variables (grevlex on the remaining block).
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder grevlex() { return MonomialOrder(); }

  static MonomialOrder elimination(std::vector<bool> eliminated) {
    MonomialOrder o;
    if (std::any_of(eliminated.begin(), eliminated.end(), [](bool b) { return b; })) {
      o.eliminated_ = std::move(eliminated);
    }
    return o;
  }

  bool is_grevlex() const { return eliminated_.empty(); }
  bool is_eliminated(VarIndex v) const { return v < eliminated_.size() && eliminated_[v]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (eliminated_.empty()) return grevlex_compare(a, b, [](VarIndex) { return true; }, a.degree(), b.degree());
    auto in_block = [this](VarIndex v) { return is_eliminated(v); };
    auto out_block = [this](VarIndex v) { return !is_eliminated(v); };
    auto first = grevlex_compare(a, b, in_block, block_degree(a, in_block), block_degree(b, in_block));
    if (first != std::strong_ordering::equal) return first;
    return grevlex_compare(a, b, out_block, block_degree(a, out_block), block_degree(b, out_block));
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::greater; }

  std::string name() const { return eliminated_.empty() ? "grevlex" : "block-grevlex"; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  template <class Pred>
  static std::uint32_t block_degree(const Monomial& m, Pred pred) {
    std::uint32_t d = 0;
    for (const auto& f : m.factors()) {
      if (pred(f.var)) d += f.exp;
    }
    return d;
  }

  // x^a > x^b iff deg a > deg b, or degrees tie and the last nonzero entry of
  // a - b (in variable rank) is negative.
  template <class Pred>
  static std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b, Pred pred, std::uint32_t da,
                                              std::uint32_t db) {
    if (da != db) return da <=> db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(fa.size()) - 1;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(fb.size()) - 1;
    while (i >= 0 || j >= 0) {
      if (i >= 0 && !pred(fa[i].var)) {
        --i;
        continue;
      }
      if (j >= 0 && !pred(fb[j].var)) {
        --j;
        continue;
      }
      if (i < 0) return std::strong_ordering::greater;
      if (j < 0) return std::strong_ordering::less;
      if (fa[i].var == fb[j].var) {
        if (fa[i].exp != fb[j].exp) {
          return fa[i].exp < fb[j].exp ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        --i;
        --j;
      } else if (fa[i].var > fb[j].var) {
        return std::strong_ordering::less;
      } else {
        return std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::vector<bool> eliminated_;
};

struct Ring {
  TensorShape shape;
  MonomialOrder order;
  std::size_t num_vars() const { return shape.num_entries(); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(TensorShape shape, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring>(Ring{std::move(shape), std::move(order)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a->shape == b->shape && a->order == b->order);
}

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  explicit Polynomial(const TensorShape& shape) : ring_(make_ring(shape)) {}

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& order = p.ring_->order;
    std::sort(terms.begin(), terms.end(),
              [&order](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    p.check_vars();
    return p;
  }

  // Trusts that terms are already sorted, merged and nonzero.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial(), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, VarIndex v, std::uint32_t exp = 1) {
    if (v >= ring->num_vars()) throw std::out_of_range("variable rank out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(v, exp), Rational(1)});
    return p;
  }

  static Polynomial variable(RingPtr ring, const MultiIndex& a, std::uint32_t exp = 1) {
    VarIndex v = variable_rank(a, ring->shape);
    return variable(std::move(ring), v, exp);
  }

  static Polynomial monomial(RingPtr ring, Monomial m, Rational c = 1) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    p.check_vars();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TensorShape& shape() const { return ring_->shape; }
  const MonomialOrder& order() const { return ring_->order; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  std::uint32_t degree_in(VarIndex v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
  }

  std::set<VarIndex> variables() const {
    std::set<VarIndex> out;
    for (const auto& t : terms_) {
      for (const auto& f : t.mono.factors()) out.insert(f.var);
    }
    return out;
  }

  Polynomial with_ring(RingPtr ring) const {
    if (!(ring->shape == ring_->shape)) throw std::invalid_argument("shape mismatch in ring change");
    return from_terms(std::move(ring), terms_);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coeff());
  }

  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1U) out = out * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return merge(f, g, Rational(1)); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return merge(f, g, Rational(-1)); }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend Polynomial operator*(const Polynomial& f, const Rational& c) {
    Polynomial out(f.ring_);
    if (c == 0) return out;
    out.terms_ = f.terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    if (g.terms_.size() == 1) return f.mul_term(g.terms_[0].mono, g.terms_[0].coeff);
    if (f.terms_.size() == 1) return g.mul_term(f.terms_[0].mono, f.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& s : f.terms_) {
      for (const auto& t : g.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return from_terms(f.ring_, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  // f - c * m * g, the reduction step.
  Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
    return merge_scaled(*this, g, -c, &m);
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i) {
      if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff) return false;
    }
    return true;
  }

  Polynomial partial_derivative(VarIndex v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      std::uint32_t e = t.mono.exponent(v);
      if (e == 0) continue;
      out.push_back({t.mono / Monomial::variable(v), t.coeff * e});
    }
    return from_terms(ring_, std::move(out));
  }

  Polynomial partial_derivative(const MultiIndex& a) const { return partial_derivative(variable_rank(a, shape())); }

  // point[v] is the value of the variable with rank v.
  template <class T>
  T evaluate_dense(std::span<const T> point) const {
    if (point.size() != ring_->num_vars()) throw std::invalid_argument("evaluation point has wrong dimension");
    T acc = T(0);
    for (const auto& t : terms_) {
      T val;
      if constexpr (std::is_same_v<T, double>) {
        val = t.coeff.get_d();
      } else {
        val = T(t.coeff);
      }
      for (const auto& f : t.mono.factors()) {
        for (std::uint32_t k = 0; k < f.exp; ++k) val *= point[f.var];
      }
      acc += val;
    }
    return acc;
  }

  Rational evaluate(std::span<const Rational> point) const { return evaluate_dense<Rational>(point); }

  // Every variable occurring in the polynomial must be assigned.
  Rational evaluate(const std::map<MultiIndex, Rational>& point) const {
    Rational acc = 0;
    for (const auto& t : terms_) {
      Rational val = t.coeff;
      for (const auto& f : t.mono.factors()) {
        auto a = index_of_rank(f.var, shape());
        auto it = point.find(a);
        if (it == point.end()) throw std::invalid_argument("missing assignment for " + a.variable_name());
        for (std::uint32_t k = 0; k < f.exp; ++k) val *= it->second;
      }
      acc += val;
    }
    return acc;
  }

 private:
  static void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_)) {
      throw std::invalid_argument(f.ring_->shape == g.ring_->shape ? "monomial order mismatch" : "shape mismatch");
    }
  }

  void check_vars() const {
    const std::size_t n = ring_->num_vars();
    for (const auto& t : terms_) {
      if (!t.mono.is_one() && t.mono.max_var() >= n) throw std::out_of_range("variable rank out of range");
    }
  }

  static Polynomial merge(const Polynomial& f, const Polynomial& g, const Rational& sign) {
    return merge_scaled(f, g, sign, nullptr);
  }

  // f + c * m * g (m == nullptr means m = 1).
  static Polynomial merge_scaled(const Polynomial& f, const Polynomial& g, const Rational& c, const Monomial* m) {
    require_same_ring(f, g);
    if (c == 0 || g.is_zero()) return f;
    const auto& order = f.ring_->order;
    Polynomial out(f.ring_);
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial gm;
    bool have_gm = false;
    auto load = [&]() {
      if (j < g.terms_.size()) {
        gm = m ? g.terms_[j].mono * *m : g.terms_[j].mono;
        have_gm = true;
      } else {
        have_gm = false;
      }
    };
    load();
    while (i < f.terms_.size() || have_gm) {
      if (!have_gm) {
        out.terms_.push_back(f.terms_[i++]);
        continue;
      }
      if (i == f.terms_.size()) {
        out.terms_.push_back({gm, g.terms_[j].coeff * c});
        ++j;
        load();
        continue;
      }
      auto cmp = order.compare(f.terms_[i].mono, gm);
      if (cmp == std::strong_ordering::greater) {
        out.terms_.push_back(f.terms_[i++]);
      } else if (cmp == std::strong_ordering::less) {
        out.terms_.push_back({gm, g.terms_[j].coeff * c});
        ++j;
        load();
      } else {
        Rational sum = f.terms_[i].coeff + g.terms_[j].coeff * c;
        if (sum != 0) out.terms_.push_back({f.terms_[i].mono, std::move(sum)});
        ++i;
        ++j;
        load();
      }
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

// A rational as "p" or "p/q".
inline std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string format_monomial(const Monomial& m, const TensorShape& shape) {
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += index_of_rank(f.var, shape).variable_name();
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

// Canonical text: terms in decreasing order, explicit '*' and '^'.
inline std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += format_monomial(t.mono, p.shape());
    }
  }
  return out;
}

}  // namespace nucideal
