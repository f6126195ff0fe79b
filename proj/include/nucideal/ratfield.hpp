#pragma once

// Univariate polynomials in a distinguished variable x_a whose coefficients
// are polynomials in the remaining variables. Read as elements of k[x_a] with
// k the fraction field of the coefficient ring: denominators are cleared and
// every predicate used here (coprimality, gcd degree) is invariant under
// multiplication by nonzero coefficient-ring elements.
//
// gcd over Q(J) having degree 0 implies the same over C(J): the gcd degree
// can only drop under field extension.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nucideal/polynomial.hpp"

namespace nucideal {

// f / g for g | f; throws std::domain_error otherwise.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial p = f;
  std::vector<Term> quot;
  const auto& lg = g.leading_monomial();
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (!lg.divides(lt.mono)) throw std::domain_error("polynomial division is not exact");
    Rational c = lt.coeff / g.leading_coeff();
    Monomial m = lt.mono / lg;
    quot.push_back({m, c});
    p = p.sub_scaled(c, m, g);
  }
  // Quotient terms come out in strictly decreasing order.
  return Polynomial::from_sorted_terms(f.ring(), std::move(quot));
}

class UnivariateOverField {
 public:
  UnivariateOverField(RingPtr ring, VarIndex main_var) : ring_(std::move(ring)), var_(main_var) {}
  UnivariateOverField(RingPtr ring, VarIndex main_var, std::vector<Polynomial> coeffs)
      : ring_(std::move(ring)), var_(main_var), coeffs_(std::move(coeffs)) {
    trim();
  }

  // Splits f by powers of the main variable.
  static UnivariateOverField from_polynomial(const Polynomial& f, VarIndex main_var) {
    UnivariateOverField u(f.ring(), main_var);
    std::vector<std::vector<Term>> buckets(f.degree_in(main_var) + 1);
    for (const auto& t : f.terms()) {
      std::uint32_t e = t.mono.exponent(main_var);
      buckets[e].push_back({t.mono / Monomial::variable(main_var, e), t.coeff});
    }
    for (auto& b : buckets) u.coeffs_.push_back(Polynomial::from_terms(f.ring(), std::move(b)));
    u.trim();
    return u;
  }

  const RingPtr& ring() const { return ring_; }
  VarIndex main_var() const { return var_; }
  // Coefficients by ascending degree; empty for the zero polynomial.
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& leading() const { return coeffs_.back(); }

  Polynomial to_polynomial() const {
    Polynomial out(ring_);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      out = out + coeffs_[e] * Polynomial::variable(ring_, var_, static_cast<std::uint32_t>(e));
    }
    return out;
  }

  UnivariateOverField derivative() const {
    std::vector<Polynomial> out;
    for (std::size_t e = 1; e < coeffs_.size(); ++e) out.push_back(coeffs_[e] * Rational(static_cast<long>(e)));
    return UnivariateOverField(ring_, var_, std::move(out));
  }

  UnivariateOverField scaled(const Polynomial& c) const {
    std::vector<Polynomial> out;
    for (const auto& k : coeffs_) out.push_back(k * c);
    return UnivariateOverField(ring_, var_, std::move(out));
  }

  UnivariateOverField divided_exact(const Polynomial& c) const {
    std::vector<Polynomial> out;
    for (const auto& k : coeffs_) out.push_back(divide_exact(k, c));
    return UnivariateOverField(ring_, var_, std::move(out));
  }

  std::size_t max_coeff_terms() const {
    std::size_t m = 0;
    for (const auto& c : coeffs_) m = std::max(m, c.num_terms());
    return m;
  }

  // self * c - x^shift * d * other
  UnivariateOverField sub_shifted(const Polynomial& c, const Polynomial& d, std::size_t shift,
                                  const UnivariateOverField& other) const {
    std::vector<Polynomial> out;
    std::size_t len = std::max(coeffs_.size(), other.coeffs_.size() + shift);
    for (std::size_t e = 0; e < len; ++e) {
      Polynomial v(ring_);
      if (e < coeffs_.size()) v = coeffs_[e] * c;
      if (e >= shift && e - shift < other.coeffs_.size()) v = v - other.coeffs_[e - shift] * d;
      out.push_back(std::move(v));
    }
    return UnivariateOverField(ring_, var_, std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  RingPtr ring_;
  VarIndex var_;
  std::vector<Polynomial> coeffs_;
};

// H as an element of Q[J][x_a]. Every variable of H must lie in J or be x_a.
inline UnivariateOverField as_univariate(const Polynomial& h, const MultiIndex& a, const std::vector<MultiIndex>& J) {
  const auto& shape = h.shape();
  const VarIndex main = variable_rank(a, shape);
  std::set<VarIndex> allowed{main};
  for (const auto& b : J) allowed.insert(variable_rank(b, shape));
  for (VarIndex v : h.variables()) {
    if (!allowed.count(v)) {
      throw std::invalid_argument("foreign variable " + index_of_rank(v, shape).variable_name() + " outside J and " +
                                  a.variable_name());
    }
  }
  return UnivariateOverField::from_polynomial(h, main);
}

// lc(B)^(deg A - deg B + 1) * A mod B.
inline UnivariateOverField pseudo_remainder(const UnivariateOverField& A, const UnivariateOverField& B) {
  if (B.is_zero()) throw std::domain_error("pseudo-division by zero");
  if (A.main_var() != B.main_var()) throw std::invalid_argument("main variable mismatch");
  if (A.degree() < B.degree()) return A;
  const int e = A.degree() - B.degree() + 1;
  const Polynomial& lb = B.leading();
  UnivariateOverField R = A;
  int steps = 0;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    const Polynomial lr = R.leading();
    R = R.sub_shifted(lb, lr, static_cast<std::size_t>(R.degree() - B.degree()), B);
    ++steps;
  }
  if (steps < e) R = R.scaled(lb.pow(static_cast<unsigned>(e - steps)));
  return R;
}

namespace detail {

// Last nonzero element of the subresultant PRS of A and B (deg A >= deg B,
// B != 0). Similar to gcd(A, B) in k[x].
inline UnivariateOverField subresultant_last(UnivariateOverField A, UnivariateOverField B) {
  if (A.degree() < B.degree()) std::swap(A, B);
  const RingPtr ring = A.ring();
  Polynomial g = Polynomial::constant(ring, 1);
  Polynomial h = Polynomial::constant(ring, 1);
  for (;;) {
    const int delta = A.degree() - B.degree();
    UnivariateOverField R = pseudo_remainder(A, B);
    if (R.is_zero()) return B;
    if (R.degree() == 0) return R;
    A = B;
    B = R.divided_exact(g * h.pow(static_cast<unsigned>(delta)));
    g = A.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

inline Polynomial normalize_unit(const Polynomial& p) { return p.is_zero() ? p : p.monic(); }

inline VarIndex top_variable(const Polynomial& f, const Polynomial& g) {
  VarIndex v = 0;
  bool any = false;
  for (const auto* p : {&f, &g}) {
    for (VarIndex w : p->variables()) {
      if (!any || w > v) v = w;
      any = true;
    }
  }
  return v;
}

}  // namespace detail

inline Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g);

// gcd of all coefficients, monic over Q.
inline Polynomial content(const UnivariateOverField& u) {
  Polynomial c(u.ring());
  for (const auto& k : u.coeffs()) {
    c = multivariate_gcd(c, k);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

// Recursive gcd in Q[x_0, ..., x_{n-1}], normalized to be monic.
inline Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return detail::normalize_unit(g);
  if (g.is_zero()) return detail::normalize_unit(f);
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), 1);
  const VarIndex v = detail::top_variable(f, g);
  auto F = UnivariateOverField::from_polynomial(f, v);
  auto G = UnivariateOverField::from_polynomial(g, v);
  Polynomial cf = content(F);
  Polynomial cg = content(G);
  Polynomial c = multivariate_gcd(cf, cg);
  if (F.degree() == 0 || G.degree() == 0) return c;
  auto pf = F.divided_exact(cf);
  auto pg = G.divided_exact(cg);
  auto last = detail::subresultant_last(pf, pg);
  if (last.degree() == 0) return c;
  last = last.divided_exact(content(last));
  return detail::normalize_unit(c * last.to_polynomial());
}

struct GcdOptions {
  // Coefficients larger than this skip primitive-part extraction.
  std::size_t content_term_cap = 2000;
};

// gcd in k[x_a], returned primitive (when under the cap) and scaled so the
// leading coefficient has leading rational coefficient 1.
inline UnivariateOverField gcd_in_k(const UnivariateOverField& u, const UnivariateOverField& v,
                                    const GcdOptions& opts = {}) {
  if (u.main_var() != v.main_var()) throw std::invalid_argument("main variable mismatch");
  if (u.is_zero() && v.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  const RingPtr ring = u.is_zero() ? v.ring() : u.ring();
  auto one = UnivariateOverField(ring, u.main_var(), {Polynomial::constant(ring, 1)});
  UnivariateOverField r = u.is_zero() ? v : v.is_zero() ? u : detail::subresultant_last(u, v);
  if (r.degree() == 0) return one;
  if (r.max_coeff_terms() <= opts.content_term_cap) r = r.divided_exact(content(r));
  const Rational lc = r.leading().leading_coeff();
  if (lc != 1) r = r.scaled(Polynomial::constant(ring, Rational(1) / lc));
  return r;
}

struct SquarefreeReport {
  bool strongly_squarefree = false;
  int degree = 0;      // degree of H in x_a
  int gcd_degree = 0;  // degree of gcd(H, dH/dx_a) in x_a
};

// H coprime to dH/dx_a in k[x_a].
inline SquarefreeReport squarefree_report(const Polynomial& h, const MultiIndex& a, const std::vector<MultiIndex>& J,
                                          const GcdOptions& opts = {}) {
  auto u = as_univariate(h, a, J);
  if (u.degree() < 1) throw std::invalid_argument("polynomial is constant in " + a.variable_name());
  auto g = gcd_in_k(u, u.derivative(), opts);
  return {g.degree() == 0, u.degree(), g.degree()};
}

inline bool is_strongly_squarefree(const Polynomial& h, const MultiIndex& a, const std::vector<MultiIndex>& J,
                                   const GcdOptions& opts = {}) {
  return squarefree_report(h, a, J, opts).strongly_squarefree;
}

}  // namespace nucideal
