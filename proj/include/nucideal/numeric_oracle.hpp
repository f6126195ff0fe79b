#pragma once

// Floating-point cross-checks: rank-one samples of the real variety, generator
// residuals, rotation invariance, nuclear norms of matrices and numeric
// Jacobian ranks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nucideal/ideals.hpp"
#include "nucideal/polynomial.hpp"
#include "nucideal/tensor_index.hpp"

namespace nucideal {

// SplitMix64 (Steele, Lea, Flood 2014):
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Stream (seed, index) starts from state = mix(seed) ^ mix(index + golden).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed) ^ mix(index + kGolden));
  }

  std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform in (0, 1).
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  // Box-Muller; one normal per call.
  double normal() {
    if (spare_) {
      double v = *spare_;
      spare_.reset();
      return v;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
  std::optional<double> spare_;
};

struct NumericPoint {
  TensorShape shape;
  std::vector<double> values;  // indexed by variable rank

  static NumericPoint zeros(const TensorShape& shape) { return {shape, std::vector<double>(shape.num_entries(), 0.0)}; }

  // e_1 ⊗ ... ⊗ e_1
  static NumericPoint first_basis_tensor(const TensorShape& shape) {
    auto p = zeros(shape);
    p.values[0] = 1.0;
    return p;
  }

  static NumericPoint outer(const TensorShape& shape, const std::vector<std::vector<double>>& factors) {
    if (factors.size() != shape.order()) throw std::invalid_argument("one factor per mode expected");
    auto p = zeros(shape);
    const auto idx = all_indices(shape);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      double v = 1.0;
      for (std::size_t i = 0; i < shape.order(); ++i) v *= factors[i].at(static_cast<std::size_t>(idx[r][i] - 1));
      p.values[r] = v;
    }
    return p;
  }
};

inline double vector_p_norm(std::span<const double> v, double p) {
  if (std::isinf(p)) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double acc = 0;
  for (double x : v) acc += std::pow(std::abs(x), p);
  return std::pow(acc, 1.0 / p);
}

// Rank-one sample on the real variety of I_p:
//  * even p: Gaussian factors, each normalized to unit p-norm;
//  * p = inf: random sign vectors;
//  * p = 1: ±e_a for a uniformly random index a (the real variety of I_1);
//  * p = 0: Gaussian factors, no normalization.
inline NumericPoint sample_rank_one(const TensorShape& shape, const PTag& p, std::uint64_t seed,
                                    std::uint64_t index = 0) {
  auto rng = SplitMix64::stream(seed, index);
  if (p.kind() == PTag::Kind::one) {
    auto pt = NumericPoint::zeros(shape);
    auto r = static_cast<std::size_t>(rng.next() % pt.values.size());
    pt.values[r] = (rng.next() & 1U) ? 1.0 : -1.0;
    return pt;
  }
  std::vector<std::vector<double>> factors;
  for (std::size_t i = 0; i < shape.order(); ++i) {
    std::vector<double> u(static_cast<std::size_t>(shape.dim(i)));
    if (p.kind() == PTag::Kind::infinity) {
      for (auto& x : u) x = (rng.next() & 1U) ? 1.0 : -1.0;
    } else {
      for (auto& x : u) x = rng.normal();
      if (p.is_even()) {
        double nrm = vector_p_norm(u, 2.0 * p.s());
        for (auto& x : u) x /= nrm;
      }
    }
    factors.push_back(std::move(u));
  }
  return NumericPoint::outer(shape, factors);
}

inline double max_generator_residual(const NumericPoint& point, const IdealSpec& ideal) {
  if (!(point.shape == ideal.shape)) throw std::invalid_argument("point and ideal shapes differ");
  double worst = 0.0;
  std::span<const double> vals(point.values);
  for (const auto& g : ideal.generators) worst = std::max(worst, std::abs(g.evaluate_dense<double>(vals)));
  return worst;
}

using DenseMatrix = std::vector<std::vector<double>>;  // row-major, rectangular

// T ×_mode M for every mode: out[a] = sum_b prod_i M_i[a_i][b_i] T[b].
inline NumericPoint apply_mode_transforms(const NumericPoint& point, const std::vector<DenseMatrix>& mats) {
  const auto& shape = point.shape;
  if (mats.size() != shape.order()) throw std::invalid_argument("one matrix per mode expected");
  NumericPoint cur = point;
  const auto idx = all_indices(shape);
  for (std::size_t mode = 0; mode < shape.order(); ++mode) {
    const auto& M = mats[mode];
    const std::size_t n = static_cast<std::size_t>(shape.dim(mode));
    if (M.size() != n) throw std::invalid_argument("mode matrix has wrong size");
    NumericPoint next = NumericPoint::zeros(shape);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      MultiIndex b = idx[r];
      const std::size_t row = static_cast<std::size_t>(idx[r][mode] - 1);
      double acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        b[mode] = static_cast<int>(j) + 1;
        acc += M[row].at(j) * cur.values[variable_rank(b, shape)];
      }
      next.values[r] = acc;
    }
    cur = std::move(next);
  }
  return cur;
}

// Product of Givens rotations over every coordinate plane, random angles.
inline DenseMatrix random_rotation(std::size_t n, SplitMix64& rng) {
  DenseMatrix Q(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) Q[i][i] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      for (std::size_t k = 0; k < n; ++k) {
        const double qi = Q[i][k];
        const double qj = Q[j][k];
        Q[i][k] = c * qi - s * qj;
        Q[j][k] = s * qi + c * qj;
      }
    }
  }
  return Q;
}

// Residual against I_2 after a random SO(n_1) x ... x SO(n_d) action.
inline double random_rotation_orbit_check(const NumericPoint& point, const TensorShape& shape, std::uint64_t seed) {
  if (!(point.shape == shape)) throw std::invalid_argument("point shape mismatch");
  auto rng = SplitMix64::stream(seed, 0x0b17);
  std::vector<DenseMatrix> mats;
  for (std::size_t i = 0; i < shape.order(); ++i) mats.push_back(random_rotation(static_cast<std::size_t>(shape.dim(i)), rng));
  return max_generator_residual(apply_mode_transforms(point, mats), build_ideal(shape, PTag::p_even(1)));
}

struct JacobiOptions {
  int max_sweeps = 60;
  double tol = 1e-15;  // relative off-diagonal threshold
};

// Singular values (descending) by one-sided Jacobi on the columns of A, or of
// A^T when A has more columns than rows.
inline std::vector<double> singular_values(const DenseMatrix& A, const JacobiOptions& opts = {}) {
  if (A.empty() || A.front().empty()) return {};
  std::size_t m = A.size();
  std::size_t n = A.front().size();
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("ragged matrix");
  }
  // Work on columns of a tall matrix W (rows x cols, rows >= cols).
  const bool transpose = n > m;
  const std::size_t rows = transpose ? n : m;
  const std::size_t cols = transpose ? m : n;
  std::vector<std::vector<double>> col(cols, std::vector<double>(rows));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (transpose) {
        col[i][j] = A[i][j];
      } else {
        col[j][i] = A[i][j];
      }
    }
  }
  double frob = 0;
  for (const auto& c : col) {
    for (double x : c) frob += x * x;
  }
  const double floor = frob * std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();
  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0, beta = 0, gamma = 0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += col[p][k] * col[p][k];
          beta += col[q][k] * col[q][k];
          gamma += col[p][k] * col[q][k];
        }
        if (gamma == 0.0 || alpha <= floor || beta <= floor || std::abs(gamma) <= opts.tol * std::sqrt(alpha * beta)) {
          continue;
        }
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < rows; ++k) {
          const double xp = col[p][k];
          const double xq = col[q][k];
          col[p][k] = c * xp - s * xq;
          col[q][k] = s * xp + c * xq;
        }
      }
    }
  }
  if (!converged) throw std::runtime_error("one-sided Jacobi SVD did not converge");
  std::vector<double> sv;
  for (const auto& c : col) {
    double acc = 0;
    for (double x : c) acc += x * x;
    sv.push_back(std::sqrt(acc));
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

// Sum of singular values.
inline double nuclear_norm_svd(const DenseMatrix& A) {
  double acc = 0;
  for (double s : singular_values(A)) acc += s;
  return acc;
}

// An order-2 point as an n1 x n2 matrix.
inline DenseMatrix as_matrix(const NumericPoint& p) {
  if (p.shape.order() != 2) throw std::invalid_argument("matrix view needs an order-2 tensor");
  const auto n1 = static_cast<std::size_t>(p.shape.dim(0));
  const auto n2 = static_cast<std::size_t>(p.shape.dim(1));
  DenseMatrix M(n1, std::vector<double>(n2));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) M[i][j] = p.values[i * n2 + j];
  }
  return M;
}

// Default threshold: max(m, n) * eps * largest singular value.
inline std::size_t numeric_rank(const DenseMatrix& A, std::optional<double> tol = std::nullopt) {
  auto sv = singular_values(A);
  if (sv.empty()) return 0;
  const double thresh =
      tol.value_or(static_cast<double>(std::max(A.size(), A.front().size())) * std::numeric_limits<double>::epsilon() * sv.front());
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [thresh](double s) { return s > thresh; }));
}

inline DenseMatrix numeric_jacobian(const IdealSpec& ideal, const NumericPoint& point) {
  const std::size_t n = point.values.size();
  std::span<const double> vals(point.values);
  DenseMatrix J;
  for (const auto& g : ideal.generators) {
    std::vector<double> row(n);
    for (VarIndex v = 0; v < n; ++v) row[v] = g.partial_derivative(v).evaluate_dense<double>(vals);
    J.push_back(std::move(row));
  }
  return J;
}

inline std::size_t numeric_jacobian_rank(const IdealSpec& ideal, const NumericPoint& point,
                                         std::optional<double> tol = std::nullopt) {
  if (ideal.generators.empty()) return 0;
  return numeric_rank(numeric_jacobian(ideal, point), tol);
}

}  // namespace nucideal
