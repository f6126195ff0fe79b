#pragma once

// Multi-index combinatorics on the tensor index set [n1] x ... x [nd].
//
// Multi-indices are 1-based. Variables are addressed by their 0-based rank in
// the lexicographic enumeration of the index set, so x_(1,...,1) has rank 0
// and is the largest variable of every monomial order used in this library.

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nucideal {

using VarIndex = std::uint32_t;

class TensorShape {
 public:
  TensorShape() = default;
  explicit TensorShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
      throw std::invalid_argument("invalid shape: tensor order must be at least 1");
    }
    for (int n : dims_) {
      if (n < 1) throw std::invalid_argument("invalid shape: every dimension must be positive");
    }
  }
  TensorShape(std::initializer_list<int> dims) : TensorShape(std::vector<int>(dims)) {}

  std::size_t order() const { return dims_.size(); }
  int dim(std::size_t i) const { return dims_.at(i); }
  const std::vector<int>& dims() const { return dims_; }

  std::size_t num_entries() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                           [](std::size_t acc, int n) { return acc * static_cast<std::size_t>(n); });
  }
  int dim_sum() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

  // "n1xn2x...": the command-line spelling.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) out += 'x';
      out += std::to_string(dims_[i]);
    }
    return out;
  }

  static TensorShape parse(std::string_view text) {
    std::vector<int> dims;
    std::size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("invalid shape: empty");
    while (pos <= text.size()) {
      std::size_t next = text.find('x', pos);
      if (next == std::string_view::npos) next = text.size();
      auto piece = text.substr(pos, next - pos);
      if (piece.empty() || piece.size() > 6 ||
          !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("invalid shape: '" + std::string(text) + "'");
      }
      dims.push_back(std::stoi(std::string(piece)));
      pos = next + 1;
    }
    return TensorShape(std::move(dims));
  }

  friend bool operator==(const TensorShape&, const TensorShape&) = default;

 private:
  std::vector<int> dims_;
};

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  bool valid_for(const TensorShape& shape) const {
    if (entries_.size() != shape.order()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 1 || entries_[i] > shape.dim(i)) return false;
    }
    return true;
  }

  // Number of entries different from 1.
  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e != 1; }));
  }

  // "(a1,...,ad)"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

  // "x[a1,...,ad]"
  std::string variable_name() const {
    std::string out = "x[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  // Lexicographic order on entries.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

namespace detail {
inline void require_same_order(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size() || a.size() == 0) {
    throw std::invalid_argument("multi-index shape mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}
}  // namespace detail

// Componentwise minimum a ∧ b.
inline MultiIndex meet(const MultiIndex& a, const MultiIndex& b) {
  detail::require_same_order(a, b);
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return MultiIndex(std::move(out));
}

// Componentwise maximum a ∨ b.
inline MultiIndex join(const MultiIndex& a, const MultiIndex& b) {
  detail::require_same_order(a, b);
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return MultiIndex(std::move(out));
}

// True iff a and b are incomparable in the product order.
inline bool incomparable(const MultiIndex& a, const MultiIndex& b) {
  detail::require_same_order(a, b);
  bool greater = false;
  bool less = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    greater = greater || a[i] > b[i];
    less = less || a[i] < b[i];
  }
  return greater && less;
}

// All multi-indices of the shape in lexicographic order; position == variable rank.
inline std::vector<MultiIndex> all_indices(const TensorShape& shape) {
  std::vector<MultiIndex> out;
  out.reserve(shape.num_entries());
  std::vector<int> cur(shape.order(), 1);
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = shape.order();
    while (i > 0) {
      --i;
      if (cur[i] < shape.dim(i)) {
        ++cur[i];
        break;
      }
      cur[i] = 1;
      if (i == 0) return out;
    }
  }
}

inline VarIndex variable_rank(const MultiIndex& a, const TensorShape& shape) {
  if (!a.valid_for(shape)) {
    throw std::out_of_range("multi-index " + a.to_string() + " out of bounds for shape " + shape.to_string());
  }
  std::size_t rank = 0;
  for (std::size_t i = 0; i < shape.order(); ++i) {
    rank = rank * static_cast<std::size_t>(shape.dim(i)) + static_cast<std::size_t>(a[i] - 1);
  }
  return static_cast<VarIndex>(rank);
}

inline MultiIndex index_of_rank(VarIndex rank, const TensorShape& shape) {
  if (rank >= shape.num_entries()) throw std::out_of_range("variable rank out of range");
  std::vector<int> entries(shape.order());
  std::size_t r = rank;
  for (std::size_t i = shape.order(); i-- > 0;) {
    entries[i] = static_cast<int>(r % static_cast<std::size_t>(shape.dim(i))) + 1;
    r /= static_cast<std::size_t>(shape.dim(i));
  }
  return MultiIndex(std::move(entries));
}

// The index with value j in mode i and 1 elsewhere.
inline MultiIndex axis_index(const TensorShape& shape, std::size_t mode, int j) {
  std::vector<int> entries(shape.order(), 1);
  entries.at(mode) = j;
  return MultiIndex(std::move(entries));
}

inline MultiIndex ones_index(const TensorShape& shape) { return MultiIndex(std::vector<int>(shape.order(), 1)); }

// Unordered incomparable pairs {a, b}, stored with a < b lexicographically.
inline std::vector<std::pair<MultiIndex, MultiIndex>> incomparable_pairs(const TensorShape& shape) {
  const auto idx = all_indices(shape);
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (incomparable(idx[i], idx[j])) out.emplace_back(idx[i], idx[j]);
    }
  }
  return out;
}

}  // namespace nucideal
