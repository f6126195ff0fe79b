#pragma once

// Multivariate division, S-polynomials, Buchberger's criterion and
// completion, ideal membership and elimination over Q.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nucideal/polynomial.hpp"

namespace nucideal {

struct ResourceLimits {
  std::size_t max_basis = 5000;
  std::size_t max_terms = 1000000;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
  std::size_t max_basis_size = 0;
};

struct GroebnerBasis {
  RingPtr ring;
  // Reduced: monic, interreduced, sorted by decreasing leading monomial.
  std::vector<Polynomial> polynomials;
  BuchbergerStats stats;

  const MonomialOrder& order() const { return ring->order; }
  std::size_t size() const { return polynomials.size(); }
};

namespace detail {

inline void check_terms(const Polynomial& p, const ResourceLimits& limits) {
  if (p.num_terms() > limits.max_terms) {
    throw ResourceLimitError("polynomial exceeded " + std::to_string(limits.max_terms) + " terms");
  }
}

// Divisors in decreasing leading-monomial order; zero polynomials dropped.
inline std::vector<const Polynomial*> sorted_divisors(std::span<const Polynomial> divisors) {
  std::vector<const Polynomial*> out;
  for (const auto& g : divisors) {
    if (!g.is_zero()) out.push_back(&g);
  }
  if (!out.empty()) {
    const auto& order = out.front()->order();
    std::stable_sort(out.begin(), out.end(), [&order](const Polynomial* a, const Polynomial* b) {
      return order.greater(a->leading_monomial(), b->leading_monomial());
    });
  }
  return out;
}

// Full reduction; the first divisor (in the given list order) whose leading
// monomial divides the current term is used. quotients, when non-null, is
// indexed like divisors.
inline Polynomial reduce_impl(const Polynomial& f, const std::vector<const Polynomial*>& divisors,
                              std::vector<Polynomial>* quotients, const std::vector<std::size_t>* quotient_slot,
                              const ResourceLimits& limits) {
  for (const auto* g : divisors) {
    if (!same_ring(f.ring(), g->ring())) {
      throw std::invalid_argument(f.shape() == g->shape() ? "monomial order mismatch" : "shape mismatch");
    }
  }
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* hit = nullptr;
    std::size_t hit_at = 0;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (divisors[k]->leading_monomial().divides(lt.mono)) {
        hit = divisors[k];
        hit_at = k;
        break;
      }
    }
    if (hit) {
      Rational c = lt.coeff / hit->leading_coeff();
      Monomial m = lt.mono / hit->leading_monomial();
      if (quotients) {
        auto& q = (*quotients)[(*quotient_slot)[hit_at]];
        q = q + Polynomial::monomial(q.ring(), m, c);
      }
      p = p.sub_scaled(c, m, *hit);
      check_terms(p, limits);
    } else {
      rem.push_back(lt);
      std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_sorted_terms(p.ring(), std::move(tail));
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(rem));
}

}  // namespace detail

// Normal form of f with respect to G. Divisors are tried in order of
// decreasing leading monomial.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                         const ResourceLimits& limits = {}) {
  return detail::reduce_impl(f, detail::sorted_divisors(divisors), nullptr, nullptr, limits);
}

inline Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb, const ResourceLimits& limits = {}) {
  return reduce(f, std::span<const Polynomial>(gb.polynomials), limits);
}

struct Division {
  Polynomial remainder;
  // quotients[i] belongs to divisors[i]: f = sum_i quotients[i] * divisors[i] + remainder.
  std::vector<Polynomial> quotients;
};

inline Division divide(const Polynomial& f, std::span<const Polynomial> divisors, const ResourceLimits& limits = {}) {
  std::vector<const Polynomial*> order;
  std::vector<std::size_t> slot;
  {
    std::vector<std::size_t> idx(divisors.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    idx.erase(std::remove_if(idx.begin(), idx.end(), [&](std::size_t i) { return divisors[i].is_zero(); }), idx.end());
    const auto& mo = f.order();
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return mo.greater(divisors[a].leading_monomial(), divisors[b].leading_monomial());
    });
    for (auto i : idx) {
      order.push_back(&divisors[i]);
      slot.push_back(i);
    }
  }
  Division out{Polynomial(f.ring()), std::vector<Polynomial>(divisors.size(), Polynomial(f.ring()))};
  out.remainder = detail::reduce_impl(f, order, &out.quotients, &slot, limits);
  return out;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), Rational(1 / f.leading_coeff()));
  return a.sub_scaled(Rational(1 / g.leading_coeff()), l / g.leading_monomial(), g);
}

struct GroebnerCheck {
  bool is_gb = true;
  std::size_t spairs_checked = 0;
  struct Witness {
    std::size_t first;
    std::size_t second;
    Polynomial remainder;
  };
  std::optional<Witness> witness;
};

// Buchberger's criterion: every S-polynomial reduces to zero. All pairs are
// reduced; no pair is skipped by a criterion.
inline GroebnerCheck is_groebner_basis(std::span<const Polynomial> basis, const ResourceLimits& limits = {}) {
  GroebnerCheck out;
  auto divisors = detail::sorted_divisors(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[j].is_zero()) continue;
      ++out.spairs_checked;
      Polynomial r = detail::reduce_impl(s_polynomial(basis[i], basis[j]), divisors, nullptr, nullptr, limits);
      if (!r.is_zero()) {
        out.is_gb = false;
        out.witness = GroebnerCheck::Witness{i, j, std::move(r)};
        return out;
      }
    }
  }
  return out;
}

namespace detail {

class Buchberger {
 public:
  Buchberger(RingPtr ring, const ResourceLimits& limits) : ring_(std::move(ring)), limits_(limits) {}

  void add_input(const Polynomial& f) {
    Polynomial r = reduce_active(f);
    if (!r.is_zero()) insert(r.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats_.pairs_reduced;
      Polynomial r = reduce_active(s_polynomial(polys_[pr.i], polys_[pr.j]));
      if (r.is_zero()) {
        ++stats_.zero_reductions;
      } else {
        insert(r.monic());
      }
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(polys_[k]);
    }
    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      bool redundant = false;
      for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
        if (l == k) continue;
        const auto& mk = basis[k].leading_monomial();
        const auto& ml = basis[l].leading_monomial();
        if (ml.divides(mk) && (!(ml == mk) || l < k)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis[k]);
    }
    // Interreduce tails.
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(minimal[l]);
      }
      const auto& g = minimal[k];
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial t = reduce(Polynomial::from_sorted_terms(ring_, std::move(tail)), others, limits_);
      reduced.push_back((Polynomial::monomial(ring_, g.leading_monomial()) + t).monic());
    }
    const auto& order = ring_->order;
    std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
      return order.greater(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{ring_, std::move(reduced), stats_};
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    auto c = ring_->order.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].leading_monomial(); }

  Polynomial reduce_active(const Polynomial& f) const {
    std::vector<const Polynomial*> divisors;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) divisors.push_back(&polys_[k]);
    }
    const auto& order = ring_->order;
    std::stable_sort(divisors.begin(), divisors.end(), [&order](const Polynomial* a, const Polynomial* b) {
      return order.greater(a->leading_monomial(), b->leading_monomial());
    });
    return reduce_impl(f, divisors, nullptr, nullptr, limits_);
  }

  // Gebauer-Moeller update: Buchberger's coprime and chain criteria.
  void insert(Polynomial h_poly) {
    check_terms(h_poly, limits_);
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(h_poly));
    active_.push_back(false);
    const Monomial& lh = lm(h);

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < h; ++k) {
      if (active_[k]) candidates.push_back(k);
    }
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::size_t g = candidates[c];
      const Monomial lgh = lcm(lm(g), lh);
      bool keep = lm(g).coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t c2 = c + 1; c2 < candidates.size() && keep; ++c2) {
          if (lcm(lm(candidates[c2]), lh).divides(lgh)) keep = false;
        }
        for (std::size_t g2 : kept) {
          if (!keep) break;
          if (lcm(lm(g2), lh).divides(lgh)) keep = false;
        }
      }
      if (keep) kept.push_back(g);
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lm(p.j), lh) == p.lcm);
      if (drop) {
        ++stats_.pairs_skipped;
      } else {
        next.push_back(std::move(p));
      }
    }
    for (std::size_t g : kept) {
      if (lm(g).coprime(lh)) {
        ++stats_.pairs_skipped;
        continue;
      }
      next.push_back(Pair{g, h, lcm(lm(g), lh)});
    }
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < h; ++k) {
      if (active_[k] && lh.divides(lm(k))) active_[k] = false;
    }
    active_[h] = true;
    std::size_t count = static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
    stats_.max_basis_size = std::max(stats_.max_basis_size, count);
    if (count > limits_.max_basis) {
      throw ResourceLimitError("Groebner basis exceeded " + std::to_string(limits_.max_basis) + " elements");
    }
  }

  RingPtr ring_;
  ResourceLimits limits_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  BuchbergerStats stats_;
};

}  // namespace detail

// Reduced Groebner basis of <generators> in the generators' ring.
inline GroebnerBasis buchberger(std::span<const Polynomial> generators, const ResourceLimits& limits = {}) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  RingPtr ring = generators.front().ring();
  detail::Buchberger alg(ring, limits);
  for (const auto& f : generators) {
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("generators live in different rings");
    alg.add_input(f);
  }
  alg.run();
  return alg.finish();
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb, const ResourceLimits& limits = {}) {
  return reduce(f, gb, limits).is_zero();
}

// Generators of <generators> ∩ Q[keep], computed with a block order in which
// the complement of keep is eliminated. Results are returned in the
// generators' original ring.
inline std::vector<Polynomial> eliminate(std::span<const Polynomial> generators, const std::vector<VarIndex>& keep,
                                         const ResourceLimits& limits = {}) {
  if (generators.empty()) return {};
  const RingPtr original = generators.front().ring();
  const std::size_t n = original->num_vars();
  std::vector<bool> eliminated(n, true);
  for (VarIndex v : keep) {
    if (v >= n) throw std::out_of_range("kept variable out of range");
    eliminated[v] = false;
  }
  RingPtr elim_ring = make_ring(original->shape, MonomialOrder::elimination(eliminated));
  std::vector<Polynomial> moved;
  for (const auto& g : generators) moved.push_back(g.with_ring(elim_ring));
  GroebnerBasis gb = buchberger(moved, limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.polynomials) {
    bool inside = true;
    for (VarIndex v : g.variables()) inside = inside && !eliminated[v];
    if (inside) out.push_back(g.with_ring(original));
  }
  return out;
}

inline std::vector<Polynomial> eliminate(std::span<const Polynomial> generators, const std::vector<MultiIndex>& keep,
                                         const ResourceLimits& limits = {}) {
  if (generators.empty()) return {};
  std::vector<VarIndex> vars;
  for (const auto& a : keep) vars.push_back(variable_rank(a, generators.front().shape()));
  return eliminate(generators, vars, limits);
}

}  // namespace nucideal
