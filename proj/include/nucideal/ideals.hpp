#pragma once

// Generator sets of the nuclear p-norm ideals I_0, I_1, I_2s and I_inf.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nucideal/polynomial.hpp"
#include "nucideal/tensor_index.hpp"

namespace nucideal {

// Which member of the I_p family: p = 0, 1, an even 2s, or infinity.
class PTag {
 public:
  enum class Kind { zero, one, even, infinity };

  static PTag p0() { return PTag(Kind::zero, 0); }
  static PTag p1() { return PTag(Kind::one, 0); }
  static PTag p_inf() { return PTag(Kind::infinity, 0); }
  static PTag p_even(int s) {
    if (s < 1) throw std::invalid_argument("invalid p: even exponent requires s >= 1");
    return PTag(Kind::even, s);
  }

  // "0", "1", "inf" or a positive even integer.
  static PTag parse(std::string_view text) {
    if (text == "inf") return p_inf();
    if (text == "0") return p0();
    if (text == "1") return p1();
    bool digits = !text.empty() && text.size() < 8;
    for (char c : text) digits = digits && c >= '0' && c <= '9';
    if (digits) {
      int p = std::stoi(std::string(text));
      if (p >= 2 && p % 2 == 0) return p_even(p / 2);
    }
    throw std::invalid_argument("invalid p '" + std::string(text) + "': expected 0, 1, inf or a positive even integer");
  }

  Kind kind() const { return kind_; }
  bool is_even() const { return kind_ == Kind::even; }
  // s for p = 2s; 0 otherwise.
  int s() const { return s_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::zero: return "0";
      case Kind::one: return "1";
      case Kind::infinity: return "inf";
      case Kind::even: return std::to_string(2 * s_);
    }
    return "?";
  }

  friend bool operator==(const PTag&, const PTag&) = default;

 private:
  PTag(Kind kind, int s) : kind_(kind), s_(s) {}
  Kind kind_;
  int s_;
};

struct IdealSpec {
  TensorShape shape;
  PTag p_tag;
  std::vector<Polynomial> generators;
  bool claimed_groebner = false;

  RingPtr ring() const { return generators.empty() ? make_ring(shape) : generators.front().ring(); }
};

// x_a x_b - x_{a v b} x_{a ^ b} for every incomparable pair, a < b lexicographically.
inline std::vector<Polynomial> rank1_binomials(const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& [a, b] : incomparable_pairs(ring->shape)) {
    auto xa = Polynomial::variable(ring, a);
    auto xb = Polynomial::variable(ring, b);
    auto xj = Polynomial::variable(ring, join(a, b));
    auto xm = Polynomial::variable(ring, meet(a, b));
    out.push_back(xa * xb - xj * xm);
  }
  return out;
}

inline std::vector<Polynomial> rank1_binomials(const TensorShape& shape) { return rank1_binomials(make_ring(shape)); }

// sum_a x_a^(2s) - 1
inline Polynomial power_sphere(const RingPtr& ring, std::uint32_t power) {
  std::vector<Term> terms;
  for (VarIndex v = 0; v < ring->num_vars(); ++v) terms.push_back({Monomial::variable(v, power), Rational(1)});
  terms.push_back({Monomial(), Rational(-1)});
  return Polynomial::from_terms(ring, std::move(terms));
}

inline IdealSpec build_ideal(const TensorShape& shape, const PTag& p, RingPtr ring = nullptr) {
  if (!ring) ring = make_ring(shape);
  if (!(ring->shape == shape)) throw std::invalid_argument("ring shape does not match ideal shape");
  IdealSpec spec{shape, p, {}, false};
  const auto n = static_cast<VarIndex>(ring->num_vars());
  auto& gens = spec.generators;
  switch (p.kind()) {
    case PTag::Kind::zero:
      gens = rank1_binomials(ring);
      spec.claimed_groebner = true;
      break;
    case PTag::Kind::one: {
      gens.push_back(power_sphere(ring, 2));
      for (VarIndex v = 0; v < n; ++v) {
        gens.push_back(Polynomial::variable(ring, v, 3) - Polynomial::variable(ring, v));
      }
      for (VarIndex v = 0; v < n; ++v) {
        for (VarIndex w = v + 1; w < n; ++w) {
          gens.push_back(Polynomial::monomial(ring, Monomial::variable(v) * Monomial::variable(w)));
        }
      }
      spec.claimed_groebner = true;
      break;
    }
    case PTag::Kind::even: {
      gens.push_back(power_sphere(ring, static_cast<std::uint32_t>(2 * p.s())));
      auto bins = rank1_binomials(ring);
      gens.insert(gens.end(), bins.begin(), bins.end());
      spec.claimed_groebner = p.s() == 1;
      break;
    }
    case PTag::Kind::infinity: {
      for (VarIndex v = 0; v < n; ++v) {
        gens.push_back(Polynomial::variable(ring, v, 2) - Polynomial::constant(ring, 1));
      }
      auto bins = rank1_binomials(ring);
      gens.insert(gens.end(), bins.begin(), bins.end());
      spec.claimed_groebner = false;
      break;
    }
  }
  return spec;
}

}  // namespace nucideal
