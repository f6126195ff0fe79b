#pragma once

// Decision procedures for the nuclear p-norm ideals, each producing a
// replayable certificate:
//
//  * primality of I_2s through a maximal algebraically independent set J and,
//    for every variable outside J, an elimination polynomial H_a in
//    I ∩ Q[J ∪ {a}] that is coprime to its derivative over Q(J);
//  * radicality of zero-dimensional I_1 and I_inf via Seidenberg's lemma;
//  * radicality of I_0 via square-free leading terms;
//  * real radicality of a prime I_2s via the Jacobian rank at e_1 ⊗ ... ⊗ e_1.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nucideal/groebner.hpp"
#include "nucideal/ideals.hpp"
#include "nucideal/polynomial.hpp"
#include "nucideal/ratfield.hpp"
#include "nucideal/tensor_index.hpp"

namespace nucideal {

class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& what, std::vector<std::string> trace = {})
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

// Dimension of I_2s: sum n_i - d.
inline int dimension(const TensorShape& shape) { return shape.dim_sum() - static_cast<int>(shape.order()); }

struct IndependentSet {
  TensorShape shape;
  std::vector<MultiIndex> J;  // lexicographic order
  bool verified = false;
};

// Indices with at most one entry != 1, minus (1,...,1,n_d).
inline IndependentSet build_J(const TensorShape& shape) {
  IndependentSet out{shape, {}, false};
  MultiIndex last = axis_index(shape, shape.order() - 1, shape.dim(shape.order() - 1));
  for (const auto& a : all_indices(shape)) {
    if (a.support_size() <= 1 && !(a == last)) out.J.push_back(a);
  }
  return out;
}

inline bool contains(const std::vector<MultiIndex>& set, const MultiIndex& a) {
  return std::find(set.begin(), set.end(), a) != set.end();
}

// Variables outside J split into case 1 (a_d != n_d, at least two entries != 1)
// and case 2 (a_d == n_d).
struct CasePartition {
  std::vector<MultiIndex> case1;
  std::vector<MultiIndex> case2;
};

inline CasePartition case_partition(const TensorShape& shape, const std::vector<MultiIndex>& J) {
  CasePartition out;
  const std::size_t d = shape.order();
  for (const auto& a : all_indices(shape)) {
    if (contains(J, a)) continue;
    if (a[d - 1] == shape.dim(d - 1)) {
      out.case2.push_back(a);
    } else if (a.support_size() >= 2) {
      out.case1.push_back(a);
    } else {
      throw CertificateError("index " + a.to_string() + " lies outside J and outside both cases");
    }
  }
  return out;
}

struct IndependenceCheck {
  bool independent = false;
  bool verified = false;  // false when the elimination hit a resource cap
  std::vector<Polynomial> witnesses;
  std::string note;
};

// I ∩ Q[J] = {0}, decided by elimination.
inline IndependenceCheck check_alg_independent(const IdealSpec& ideal, const std::vector<MultiIndex>& J,
                                               const ResourceLimits& limits = {}) {
  IndependenceCheck out;
  try {
    out.witnesses = eliminate(std::span<const Polynomial>(ideal.generators), J, limits);
    out.verified = true;
    out.independent = out.witnesses.empty();
  } catch (const ResourceLimitError& e) {
    out.note = e.what();
  }
  return out;
}

// g_a = x_(a1,1..1) x_(1,a2,1..1) ... x_(1..1,ad).
inline Polynomial axis_product(const RingPtr& ring, const MultiIndex& a) {
  Polynomial out = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < a.size(); ++i) out = out * Polynomial::variable(ring, axis_index(ring->shape, i, a[i]));
  return out;
}

// x_(1..1)^(d-1) x_a - g_a for a with two or more entries != 1 and a_d != n_d.
inline Polynomial construct_H_case1(const MultiIndex& a, const RingPtr& ring, const PTag& p) {
  const auto& shape = ring->shape;
  if (!p.is_even() && p.kind() != PTag::Kind::zero) {
    throw std::invalid_argument("case 1 elimination polynomials are defined for p = 0 or even p");
  }
  if (!a.valid_for(shape)) throw std::invalid_argument("index " + a.to_string() + " outside shape");
  const std::size_t d = shape.order();
  if (a[d - 1] == shape.dim(d - 1)) throw std::invalid_argument(a.to_string() + " has a_d = n_d: case 2");
  if (a.support_size() < 2) throw std::invalid_argument(a.to_string() + " has fewer than two entries != 1");
  auto x1 = Polynomial::variable(ring, ones_index(shape), static_cast<std::uint32_t>(d - 1));
  return x1 * Polynomial::variable(ring, a) - axis_product(ring, a);
}

inline Polynomial construct_H_case1(const MultiIndex& a, const TensorShape& shape, const PTag& p) {
  return construct_H_case1(a, make_ring(shape), p);
}

struct Case2Construction {
  Polynomial H;
  Polynomial f;  // coefficient of x_a^(2s), in Q[J]
  Polynomial g;  // H = f x_a^(2s) - g, in Q[J]
  std::size_t rewrite_steps = 0;
  std::vector<std::string> trace;
};

namespace detail {

// Rewrites a monomial of x_(1..1)^(2s(d-1)) P^(2s) x_b^(2s) into Q[J ∪ {a}]
// with two rules, always acting on the lowest-rank variable outside J ∪ {a}:
//   x_(1..1)^(d-1) x_b            -> g_b                      (b has >= 2 entries != 1)
//   P x_(1..1,n_d)                -> x_(1..1)^(d-1) x_a       (P = prod_{i<d} x_(1..a_i..1))
class Case2Rewriter {
 public:
  Case2Rewriter(const RingPtr& ring, const MultiIndex& a, const std::vector<MultiIndex>& J)
      : ring_(ring), shape_(ring->shape), a_(variable_rank(a, shape_)) {
    const std::size_t d = shape_.order();
    for (const auto& b : J) allowed_.insert(variable_rank(b, shape_));
    allowed_.insert(a_);
    one_ = variable_rank(ones_index(shape_), shape_);
    last_ = variable_rank(axis_index(shape_, d - 1, shape_.dim(d - 1)), shape_);
    std::vector<VarPower> p;
    for (std::size_t i = 0; i + 1 < d; ++i) p.push_back({variable_rank(axis_index(shape_, i, a[i]), shape_), 1});
    P_ = Monomial::from_factors(p);
    one_pow_ = Monomial::variable(one_, static_cast<std::uint32_t>(d - 1));
  }

  Monomial rewrite(Monomial m, std::size_t& steps, std::vector<std::string>& trace, std::size_t cap) const {
    for (;;) {
      std::optional<VarIndex> bad;
      for (const auto& f : m.factors()) {
        if (!allowed_.count(f.var)) {
          bad = f.var;
          break;
        }
      }
      if (!bad) return m;
      if (++steps > cap) throw CertificateError("case 2 rewriting exceeded the step cap", trace);
      const MultiIndex b = index_of_rank(*bad, shape_);
      if (*bad == last_) {
        Monomial lhs = P_ * Monomial::variable(last_);
        if (!lhs.divides(m)) {
          trace.push_back("stuck: " + format_monomial(m, shape_) + " lacks P*" + b.variable_name());
          throw CertificateError("case 2 rewriting is stuck on " + b.variable_name(), trace);
        }
        m = (m / lhs) * one_pow_ * Monomial::variable(a_);
      } else if (b.support_size() >= 2) {
        Monomial lhs = one_pow_ * Monomial::variable(*bad);
        if (!lhs.divides(m)) {
          trace.push_back("stuck: " + format_monomial(m, shape_) + " lacks x_(1..1)^(d-1)*" + b.variable_name());
          throw CertificateError("case 2 rewriting is stuck on " + b.variable_name(), trace);
        }
        std::vector<VarPower> gb;
        for (std::size_t i = 0; i < b.size(); ++i) gb.push_back({variable_rank(axis_index(shape_, i, b[i]), shape_), 1});
        m = (m / lhs) * Monomial::from_factors(gb);
      } else {
        throw CertificateError("no rewriting rule for " + b.variable_name(), trace);
      }
    }
  }

  const Monomial& P() const { return P_; }
  VarIndex one() const { return one_; }

 private:
  RingPtr ring_;
  TensorShape shape_;
  VarIndex a_;
  VarIndex one_ = 0;
  VarIndex last_ = 0;
  std::set<VarIndex> allowed_;
  Monomial P_;
  Monomial one_pow_;
};

}  // namespace detail

// H = f x_a^(2s) - g for a with a_d = n_d. Starts from
//   x_(1..1)^(2s(d-1)) (1 - sum_{b in J} x_b^(2s)) P^(2s)
// which is congruent to x_(1..1)^(2s(d-1)) P^(2s) sum_{b not in J} x_b^(2s),
// rewrites the right-hand side into Q[J ∪ {a}] and subtracts.
inline Case2Construction construct_H_case2(const MultiIndex& a, const RingPtr& ring, int s,
                                           std::size_t step_cap = 1000000) {
  const auto& shape = ring->shape;
  if (s < 1) throw std::invalid_argument("case 2 needs s >= 1");
  if (!a.valid_for(shape)) throw std::invalid_argument("index " + a.to_string() + " outside shape");
  const std::size_t d = shape.order();
  if (a[d - 1] != shape.dim(d - 1)) throw std::invalid_argument(a.to_string() + " has a_d != n_d: case 1");
  const auto J = build_J(shape).J;
  const auto p2s = static_cast<std::uint32_t>(2 * s);

  detail::Case2Rewriter rw(ring, a, J);
  Monomial prefix = Monomial::variable(rw.one(), p2s * static_cast<std::uint32_t>(d - 1));
  for (std::uint32_t k = 0; k < p2s; ++k) prefix = prefix * rw.P();

  Case2Construction out{Polynomial(ring), Polynomial(ring), Polynomial(ring), 0, {}};
  // Left side, in Q[J].
  std::vector<Term> lhs{{prefix, Rational(1)}};
  for (const auto& b : J) lhs.push_back({prefix * Monomial::variable(variable_rank(b, shape), p2s), Rational(-1)});
  Polynomial left = Polynomial::from_terms(ring, std::move(lhs));
  out.trace.push_back("seed: " + format(left));

  std::vector<Term> rhs;
  for (const auto& b : all_indices(shape)) {
    if (contains(J, b)) continue;
    Monomial m = prefix * Monomial::variable(variable_rank(b, shape), p2s);
    Monomial r = rw.rewrite(m, out.rewrite_steps, out.trace, step_cap);
    out.trace.push_back(format_monomial(m, shape) + " -> " + format_monomial(r, shape));
    rhs.push_back({r, Rational(1)});
  }
  Polynomial right = Polynomial::from_terms(ring, std::move(rhs));
  out.H = right - left;

  auto u = as_univariate(out.H, a, J);
  for (int e = 0; e <= u.degree(); ++e) {
    if (e != 0 && e != static_cast<int>(p2s) && !u.coeffs()[static_cast<std::size_t>(e)].is_zero()) {
      throw CertificateError("rewritten H has a stray x_a^" + std::to_string(e) + " term", out.trace);
    }
  }
  out.f = u.degree() >= static_cast<int>(p2s) ? u.coeffs()[p2s] : Polynomial(ring);
  out.g = u.is_zero() ? Polynomial(ring) : -u.coeffs()[0];
  if (out.f.is_zero()) throw CertificateError("rewriting produced f = 0", out.trace);
  if (out.g.is_zero()) throw CertificateError("rewriting produced g = 0", out.trace);
  return out;
}

inline Case2Construction construct_H_case2(const MultiIndex& a, const TensorShape& shape, int s) {
  return construct_H_case2(a, make_ring(shape), s);
}

// Groebner basis used for membership tests: the generators themselves when
// they pass Buchberger's criterion, otherwise a completion.
struct MembershipBasis {
  GroebnerBasis basis;
  bool generators_checked = false;  // is_groebner_basis ran on the generators
  bool generators_are_gb = false;
  bool completed = false;           // buchberger completion was computed
  std::string note;
};

inline MembershipBasis membership_basis(const IdealSpec& ideal, const ResourceLimits& limits = {}) {
  MembershipBasis out;
  const RingPtr ring = ideal.ring();
  if (ideal.claimed_groebner) {
    auto check = is_groebner_basis(std::span<const Polynomial>(ideal.generators), limits);
    out.generators_checked = true;
    out.generators_are_gb = check.is_gb;
    if (check.is_gb) {
      out.basis = GroebnerBasis{ring, ideal.generators, {}};
      return out;
    }
    out.note = "generators claimed to be a Groebner basis fail Buchberger's criterion; using completion";
  }
  out.basis = ideal.generators.empty() ? GroebnerBasis{ring, {}, {}}
                                       : buchberger(std::span<const Polynomial>(ideal.generators), limits);
  out.completed = true;
  return out;
}

struct EliminationRecord {
  MultiIndex a;
  int case_id = 0;  // 1 or 2
  Polynomial H;
  std::optional<Polynomial> f;
  std::optional<Polynomial> g;
  bool variables_ok = false;   // H ∈ Q[J ∪ {a}]
  bool membership_ok = false;  // H reduces to 0
  bool squarefree_ok = false;  // gcd(H, H') = 1 in Q(J)[x_a]
  int degree = 0;
  int gcd_degree = -1;
  std::string failure;

  EliminationRecord(MultiIndex a_, int case_, Polynomial h)
      : a(std::move(a_)), case_id(case_), H(std::move(h)) {}

  bool passed() const { return variables_ok && membership_ok && squarefree_ok; }
};

enum class PrimeVerdict { prime, not_established };

inline std::string to_string(PrimeVerdict v) { return v == PrimeVerdict::prime ? "prime" : "not_established"; }

struct PrimalityCertificate {
  TensorShape shape;
  PTag p_tag = PTag::p0();
  IndependentSet J;
  IndependenceCheck independence;
  bool generators_are_gb = false;
  bool gb_completed = false;
  std::size_t gb_size = 0;
  std::string gb_note;
  std::vector<EliminationRecord> records;  // ordered by variable rank
  bool primary_assumed = false;
  // Where primariness comes from: "proved (p = 2)", "assumed by caller" or "missing".
  std::string primary_source;
  PrimeVerdict verdict = PrimeVerdict::not_established;
  std::optional<int> dimension;
  std::vector<std::string> reasons;
};

struct PrimalityOptions {
  ResourceLimits limits;
  GcdOptions gcd;
};

inline PrimalityCertificate primality_certificate(const TensorShape& shape, const PTag& p, bool primary_assumed,
                                                  const PrimalityOptions& opts = {}) {
  if (!p.is_even()) throw std::invalid_argument("primality pipeline needs an even p = 2s");
  PrimalityCertificate cert;
  cert.shape = shape;
  cert.p_tag = p;
  cert.primary_assumed = primary_assumed;
  const RingPtr ring = make_ring(shape);
  const IdealSpec ideal = build_ideal(shape, p, ring);

  // For n = (1,...,1), I_2 = <x^2 - 1> is not primary.
  const bool all_ones = shape.num_entries() == 1;
  const bool primary_proved = p.s() == 1 && !all_ones;
  if (primary_proved) {
    cert.primary_source = "proved (p = 2)";
  } else if (primary_assumed) {
    cert.primary_source = "assumed by caller";
  } else {
    cert.primary_source = "missing";
    cert.reasons.push_back("primariness of I_" + p.to_string() + " is not established; pass the primary assumption");
  }

  cert.J = build_J(shape);
  cert.independence = check_alg_independent(ideal, cert.J.J, opts.limits);
  cert.J.verified = cert.independence.verified;
  if (!cert.independence.verified) {
    cert.reasons.push_back("independence check aborted: " + cert.independence.note);
  } else if (!cert.independence.independent) {
    cert.reasons.push_back("J is algebraically dependent modulo the ideal");
  }

  MembershipBasis mb = membership_basis(ideal, opts.limits);
  cert.generators_are_gb = mb.generators_are_gb;
  cert.gb_completed = mb.completed;
  cert.gb_size = mb.basis.size();
  cert.gb_note = mb.note;

  const auto partition = case_partition(shape, cert.J.J);
  std::vector<std::pair<MultiIndex, int>> todo;
  for (const auto& a : partition.case1) todo.emplace_back(a, 1);
  for (const auto& a : partition.case2) todo.emplace_back(a, 2);
  std::sort(todo.begin(), todo.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  for (const auto& [a, which] : todo) {
    EliminationRecord rec(a, which, Polynomial(ring));
    try {
      if (which == 1) {
        rec.H = construct_H_case1(a, ring, p);
      } else {
        auto c2 = construct_H_case2(a, ring, p.s());
        rec.H = c2.H;
        rec.f = c2.f;
        rec.g = c2.g;
      }
      std::set<VarIndex> allowed{variable_rank(a, shape)};
      for (const auto& b : cert.J.J) allowed.insert(variable_rank(b, shape));
      rec.variables_ok = true;
      for (VarIndex v : rec.H.variables()) rec.variables_ok = rec.variables_ok && allowed.count(v) > 0;
      rec.membership_ok = ideal_member(rec.H, mb.basis, opts.limits);
      if (rec.variables_ok) {
        auto sq = squarefree_report(rec.H, a, cert.J.J, opts.gcd);
        rec.squarefree_ok = sq.strongly_squarefree;
        rec.degree = sq.degree;
        rec.gcd_degree = sq.gcd_degree;
      }
      if (!rec.passed()) rec.failure = "check failed";
    } catch (const CertificateError& e) {
      rec.failure = e.what();
    } catch (const ResourceLimitError& e) {
      rec.failure = std::string("resource cap: ") + e.what();
    }
    if (!rec.passed()) cert.reasons.push_back("elimination polynomial for " + a.variable_name() + ": " + rec.failure);
    cert.records.push_back(std::move(rec));
  }

  bool all_records = std::all_of(cert.records.begin(), cert.records.end(), [](const auto& r) { return r.passed(); });
  bool primary_ok = primary_proved || primary_assumed;
  if (all_records && cert.independence.verified && cert.independence.independent && primary_ok) {
    cert.verdict = PrimeVerdict::prime;
    cert.dimension = static_cast<int>(cert.J.J.size());
  }
  return cert;
}

// Zero-dimensional iff every variable has a pure power among the leading monomials.
inline bool zero_dimensional_check(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring->num_vars();
  std::vector<bool> hit(n, false);
  for (const auto& g : gb.polynomials) {
    if (g.is_zero()) continue;
    const auto& m = g.leading_monomial();
    if (m.is_one()) return true;  // unit ideal
    if (m.is_pure_power()) hit[m.factors().front().var] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

struct SeidenbergRecord {
  MultiIndex a;
  Polynomial f_a;
  bool membership_ok = false;
  int gcd_degree = -1;
  bool coprime = false;
};

struct LeadingTermRecord {
  Monomial lt;
  bool squarefree = false;
};

enum class RadicalMethod { seidenberg, squarefree_lt };

inline std::string to_string(RadicalMethod m) { return m == RadicalMethod::seidenberg ? "seidenberg" : "squarefree_LT"; }

struct RadicalCertificate {
  TensorShape shape;
  std::optional<PTag> p_tag;
  RadicalMethod method = RadicalMethod::seidenberg;
  bool zero_dimensional = false;
  std::vector<SeidenbergRecord> univariate;  // seidenberg
  std::vector<LeadingTermRecord> leading_terms;  // squarefree_LT
  bool radical = false;
  std::vector<std::string> reasons;
};

// Seidenberg's lemma: a zero-dimensional ideal containing, for every
// variable, a univariate polynomial coprime to its derivative is radical.
inline RadicalCertificate seidenberg_certificate(const GroebnerBasis& gb,
                                                 const std::function<Polynomial(VarIndex)>& univariate_for) {
  RadicalCertificate cert;
  cert.shape = gb.ring->shape;
  cert.method = RadicalMethod::seidenberg;
  cert.zero_dimensional = zero_dimensional_check(gb);
  if (!cert.zero_dimensional) {
    cert.reasons.push_back("ideal is not zero-dimensional; Seidenberg's lemma does not apply");
    return cert;
  }
  bool ok = true;
  for (VarIndex v = 0; v < gb.ring->num_vars(); ++v) {
    SeidenbergRecord rec{index_of_rank(v, cert.shape), univariate_for(v), false, -1, false};
    rec.membership_ok = ideal_member(rec.f_a, gb);
    auto vars = rec.f_a.variables();
    if (vars.size() > 1 || (vars.size() == 1 && *vars.begin() != v) || rec.f_a.degree_in(v) < 1) {
      cert.reasons.push_back("f for " + rec.a.variable_name() + " is not univariate in that variable");
    } else {
      auto u = UnivariateOverField::from_polynomial(rec.f_a, v);
      auto g = gcd_in_k(u, u.derivative());
      rec.gcd_degree = g.degree();
      rec.coprime = rec.gcd_degree == 0;
    }
    if (!rec.membership_ok) cert.reasons.push_back("f for " + rec.a.variable_name() + " is not in the ideal");
    if (!rec.coprime) cert.reasons.push_back("f for " + rec.a.variable_name() + " shares a factor with its derivative");
    ok = ok && rec.membership_ok && rec.coprime;
    cert.univariate.push_back(std::move(rec));
  }
  cert.radical = ok;
  return cert;
}

// f_a = x_a^3 - x_a for p = 1, x_a^2 - 1 for p = inf.
inline RadicalCertificate seidenberg_certificate(const TensorShape& shape, const PTag& p,
                                                 const ResourceLimits& limits = {}) {
  const RingPtr ring = make_ring(shape);
  const IdealSpec ideal = build_ideal(shape, p, ring);
  const MembershipBasis mb = membership_basis(ideal, limits);
  std::function<Polynomial(VarIndex)> fa;
  if (p.kind() == PTag::Kind::one) {
    fa = [&ring](VarIndex v) { return Polynomial::variable(ring, v, 3) - Polynomial::variable(ring, v); };
  } else if (p.kind() == PTag::Kind::infinity) {
    fa = [&ring](VarIndex v) { return Polynomial::variable(ring, v, 2) - Polynomial::constant(ring, 1); };
  } else {
    // No univariate family is known here; only the zero-dimensionality guard runs.
    fa = [&ring](VarIndex) { return Polynomial(ring); };
  }
  auto cert = seidenberg_certificate(mb.basis, fa);
  cert.p_tag = p;
  if (!mb.note.empty()) cert.reasons.push_back(mb.note);
  return cert;
}

// A Groebner basis with square-free leading monomials generates a radical ideal.
inline RadicalCertificate squarefree_LT_certificate(const GroebnerBasis& gb) {
  RadicalCertificate cert;
  cert.shape = gb.ring->shape;
  cert.method = RadicalMethod::squarefree_lt;
  cert.zero_dimensional = zero_dimensional_check(gb);
  bool ok = true;
  for (const auto& g : gb.polynomials) {
    if (g.is_zero()) continue;
    LeadingTermRecord rec{g.leading_monomial(), g.leading_monomial().is_squarefree()};
    if (!rec.squarefree) {
      ok = false;
      cert.reasons.push_back("leading term " + format_monomial(rec.lt, cert.shape) + " is not square-free");
    }
    cert.leading_terms.push_back(std::move(rec));
  }
  cert.radical = ok;
  return cert;
}

// Rank of a rational matrix by fraction-free (Bareiss) elimination.
inline std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("ragged matrix");
    Integer den = 1;
    for (const auto& q : rows[i]) den = lcm(den, Integer(q.get_den()));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j].get_num() * (den / rows[i][j].get_den());
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

struct SmoothnessCertificate {
  TensorShape shape;
  PTag p_tag = PTag::p_even(1);
  std::vector<Rational> point;  // e_1 ⊗ ... ⊗ e_1, indexed by variable rank
  bool on_variety = false;
  std::size_t jacobian_rows = 0;
  std::size_t jacobian_cols = 0;
  std::size_t rank = 0;
  std::size_t required_rank = 0;
  bool prime_established = false;
  // Single-point criterion: prime, y on the variety, rank >= n - dim.
  bool real_radical = false;
  std::vector<std::string> reasons;
};

inline std::vector<std::vector<Rational>> jacobian_at(const std::vector<Polynomial>& gens,
                                                      const std::vector<Rational>& point) {
  std::vector<std::vector<Rational>> out;
  for (const auto& g : gens) {
    std::vector<Rational> row;
    for (VarIndex v = 0; v < point.size(); ++v) row.push_back(g.partial_derivative(v).evaluate(point));
    out.push_back(std::move(row));
  }
  return out;
}

inline SmoothnessCertificate smoothness_certificate(const TensorShape& shape, const PTag& p, bool prime_established) {
  if (!p.is_even()) throw std::invalid_argument("smoothness certificate needs an even p = 2s");
  SmoothnessCertificate cert;
  cert.shape = shape;
  cert.p_tag = p;
  cert.prime_established = prime_established;
  const IdealSpec ideal = build_ideal(shape, p);
  const std::size_t n = shape.num_entries();
  cert.point.assign(n, Rational(0));
  cert.point[0] = 1;
  cert.on_variety = std::all_of(ideal.generators.begin(), ideal.generators.end(),
                                [&](const Polynomial& g) { return g.evaluate(cert.point) == 0; });
  if (!cert.on_variety) cert.reasons.push_back("e_1 ⊗ ... ⊗ e_1 is not on the variety");
  auto jac = jacobian_at(ideal.generators, cert.point);
  cert.jacobian_rows = jac.size();
  cert.jacobian_cols = n;
  cert.rank = exact_rank(jac);
  cert.required_rank = n - static_cast<std::size_t>(dimension(shape));
  if (cert.rank < cert.required_rank) cert.reasons.push_back("Jacobian rank below n - dim");
  if (!prime_established) cert.reasons.push_back("primality not established; single-point criterion needs a prime");
  cert.real_radical = cert.on_variety && cert.rank >= cert.required_rank && prime_established;
  return cert;
}

}  // namespace nucideal
