// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nucideal/nucideal.hpp"

using namespace nucideal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::span<const Polynomial> view(const std::vector<Polynomial>& v) { return std::span<const Polynomial>(v); }

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng) {
  const auto n = static_cast<VarIndex>(ring->num_vars());
  std::uniform_int_distribution<int> nterms(1, 6), coeff(-9, 9), deg(0, 3);
  std::uniform_int_distribution<VarIndex> var(0, n - 1);
  std::vector<Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    std::vector<VarPower> f;
    for (int i = deg(rng); i > 0; --i) f.push_back({var(rng), 1});
    int c = coeff(rng);
    terms.push_back({Monomial::from_factors(f), Rational(c == 0 ? 1 : c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// 1. Generator sets of I_0, I_1, I_2 are Groebner bases.
void criterion1(Check& c) {
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}}) {
    TensorShape s(dims);
    auto t0 = Clock::now();
    for (auto p : {PTag::p0(), PTag::p1(), PTag::p_even(1)}) {
      auto I = build_ideal(s, p);
      c.expect(is_groebner_basis(view(I.generators)).is_gb, "I_" + p.to_string() + " on " + s.to_string());
    }
    double dt = seconds_since(t0);
    c.expect(dt < 10.0, s.to_string() + " took " + std::to_string(dt) + " s");
    c.detail << " " << s.to_string() << ":" << dt << "s";
  }
}

// 2. Radical certificates.
void criterion2(Check& c) {
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    TensorShape s(dims);
    for (auto p : {PTag::p1(), PTag::p_inf()}) {
      auto cert = seidenberg_certificate(s, p);
      c.expect(cert.radical && cert.zero_dimensional, "seidenberg I_" + p.to_string() + " on " + s.to_string());
    }
  }
  for (auto dims : std::vector<std::vector<int>>{{3, 3}, {2, 2, 2}}) {
    TensorShape s(dims);
    auto I = build_ideal(s, PTag::p0());
    auto mb = membership_basis(I);
    c.expect(mb.generators_are_gb, "I_0 generators are a basis on " + s.to_string());
    c.expect(squarefree_LT_certificate(mb.basis).radical, "squarefree LT on " + s.to_string());
  }
}

// 3. Primality pipeline.
void criterion3(Check& c) {
  const TensorShape s33{3, 3};
  auto t0 = Clock::now();
  auto cert = primality_certificate(s33, PTag::p_even(1), false);
  double dt = seconds_since(t0);
  c.expect(cert.J.J == std::vector<MultiIndex>{{1, 1}, {1, 2}, {2, 1}, {3, 1}}, "J on 3x3");
  c.expect(cert.independence.verified && cert.independence.independent, "J independent on 3x3");
  auto R = make_ring(s33);
  const auto expected_H = parse_polynomial("x[1,1]*x[2,2] - x[1,2]*x[2,1]", R);
  bool found = false;
  for (const auto& r : cert.records) {
    c.expect(r.variables_ok && r.membership_ok && r.squarefree_ok, "record " + r.a.to_string());
    if (r.a == MultiIndex{2, 2}) found = r.H.with_ring(R) == expected_H;
  }
  c.expect(found, "H for (2,2) is the minor");
  c.expect(cert.verdict == PrimeVerdict::prime, "3x3 verdict prime");
  c.expect(cert.dimension == 4, "3x3 dimension 4");
  c.expect(dt < 60.0, "3x3 runtime");
  c.detail << " 3x3:" << dt << "s";

  for (auto [dims, dim] : std::vector<std::pair<std::vector<int>, int>>{{{2, 2}, 2}, {{2, 2, 2}, 3}}) {
    TensorShape s(dims);
    t0 = Clock::now();
    auto other = primality_certificate(s, PTag::p_even(1), false);
    dt = seconds_since(t0);
    c.expect(other.verdict == PrimeVerdict::prime, s.to_string() + " verdict prime");
    c.expect(other.dimension == dim && dim == s.dim_sum() - static_cast<int>(s.order()), s.to_string() + " dimension");
    c.expect(dt < 60.0, s.to_string() + " runtime");
    c.detail << " " << s.to_string() << ":" << dt << "s";
  }
}

// 4. Smoothness at e_1 x ... x e_1.
void criterion4(Check& c) {
  for (auto [dims, rank] : std::vector<std::pair<std::vector<int>, std::size_t>>{{{2, 2}, 2}, {{3, 3}, 5}, {{2, 2, 2}, 5}}) {
    TensorShape s(dims);
    const bool prime = primality_certificate(s, PTag::p_even(1), false).verdict == PrimeVerdict::prime;
    auto cert = smoothness_certificate(s, PTag::p_even(1), prime);
    const std::size_t formula = s.num_entries() - static_cast<std::size_t>(s.dim_sum() - static_cast<int>(s.order()));
    c.expect(cert.rank == rank && rank == formula, s.to_string() + " rank " + std::to_string(cert.rank));
    c.expect(cert.real_radical, s.to_string() + " real radical");
    c.detail << " " << s.to_string() << ":rank " << cert.rank;
  }
}

// 5. Algebraic independence of J.
void criterion5(Check& c) {
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {3, 3}}) {
    TensorShape s(dims);
    auto I = build_ideal(s, PTag::p_even(1));
    auto t0 = Clock::now();
    auto left = eliminate(view(I.generators), build_J(s).J);
    double dt = seconds_since(t0);
    c.expect(left.empty(), "elimination on " + s.to_string() + " left " + std::to_string(left.size()));
    c.expect(dt < 300.0, s.to_string() + " runtime");
    c.detail << " " << s.to_string() << ":" << dt << "s";
  }
}

// 6. f not in I_0 implies f^2 not in I_0.
void criterion6(Check& c) {
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    TensorShape s(dims);
    auto I = build_ideal(s, PTag::p0());
    std::mt19937_64 rng(20240601);
    int tested = 0, violations = 0;
    while (tested < 500) {
      auto f = random_poly(I.ring(), rng);
      if (reduce(f, view(I.generators)).is_zero()) continue;
      ++tested;
      if (reduce(f * f, view(I.generators)).is_zero()) ++violations;
    }
    c.expect(violations == 0, std::to_string(violations) + " squares in I_0 on " + s.to_string());
    c.detail << " " << s.to_string() << ":" << tested << " polynomials";
  }
}

// 7. Numeric oracle.
void criterion7(Check& c) {
  auto t0 = Clock::now();
  const std::uint64_t seed = 42;
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {3, 3}, {2, 2, 2}}) {
    TensorShape s(dims);
    auto I = build_ideal(s, PTag::p_even(1));
    double worst = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) worst = std::max(worst, max_generator_residual(sample_rank_one(s, PTag::p_even(1), seed, i), I));
    c.expect(worst <= 1e-9, "residual " + std::to_string(worst) + " on " + s.to_string());

    const std::size_t predicted = s.num_entries() - static_cast<std::size_t>(dimension(s));
    int match = 0;
    for (std::uint64_t i = 0; i < 100; ++i) match += numeric_jacobian_rank(I, sample_rank_one(s, PTag::p_even(1), seed + 1, i)) == predicted;
    c.expect(match >= 99, "rank match " + std::to_string(match) + "/100 on " + s.to_string());

    double orbit = 0;
    for (std::uint64_t i = 0; i < 100; ++i) orbit = std::max(orbit, random_rotation_orbit_check(sample_rank_one(s, PTag::p_even(1), seed + 2, i), s, i));
    c.expect(orbit <= 1e-8, "orbit residual on " + s.to_string());
    c.detail << " " << s.to_string() << ":res " << worst << " orbit " << orbit << " rank " << match << "/100";
  }

  TensorShape s{2, 2};
  auto rng = SplitMix64::stream(seed, 999);
  double nn_max = 0;
  for (int t = 0; t < 1000; ++t) {
    const int k = 2 + static_cast<int>(rng.next() % 4);
    std::vector<double> w(static_cast<std::size_t>(k));
    double total = 0;
    for (auto& x : w) total += (x = rng.uniform());
    std::vector<double> mix(4, 0.0);
    for (int j = 0; j < k; ++j) {
      auto pt = sample_rank_one(s, PTag::p_even(1), seed + 3, static_cast<std::uint64_t>(t * 8 + j));
      for (std::size_t i = 0; i < 4; ++i) mix[i] += w[static_cast<std::size_t>(j)] / total * pt.values[i];
    }
    nn_max = std::max(nn_max, nuclear_norm_svd(as_matrix(NumericPoint{s, mix})));
  }
  c.expect(nn_max <= 1.0 + 1e-9, "nuclear norm " + std::to_string(nn_max));
  double dt = seconds_since(t0);
  c.expect(dt < 30.0, "runtime " + std::to_string(dt) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, " max nuclear norm %.15f, %.2fs", nn_max, dt);
  c.detail << buf;
}

// 8. Negative controls.
void criterion8(Check& c) {
  auto guard = seidenberg_certificate(TensorShape{2, 2}, PTag::p_even(1));
  c.expect(!guard.zero_dimensional && !guard.radical, "seidenberg guard on I_2");

  auto gated = primality_certificate(TensorShape{2, 2}, PTag::p_even(2), false);
  c.expect(gated.verdict == PrimeVerdict::not_established, "p = 4 without primary hypothesis");

  TensorShape s{3, 3};
  auto I = build_ideal(s, PTag::p_even(1));
  auto pt = sample_rank_one(s, PTag::p_even(1), 5, 0);
  DenseMatrix scale(3, std::vector<double>(3, 0.0)), id = scale;
  for (std::size_t i = 0; i < 3; ++i) {
    scale[i][i] = 2.0;
    id[i][i] = 1.0;
  }
  double broken = max_generator_residual(apply_mode_transforms(pt, {scale, id}), I);
  c.expect(broken > 0.1, "scaling residual " + std::to_string(broken));
  c.detail << " scaled residual " << broken;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"groebner bases of I_0, I_1, I_2", criterion1},
      {"radical certificates", criterion2},
      {"primality pipeline", criterion3},
      {"smoothness / real radical", criterion4},
      {"algebraic independence of J", criterion5},
      {"sum-of-squares property of I_0", criterion6},
      {"numeric oracle", criterion7},
      {"negative controls", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " |"
              << c.detail.str() << std::endl;
    failed += c.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
