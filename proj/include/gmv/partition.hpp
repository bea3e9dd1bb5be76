#pragma once

// Integer partitions, conjugation and the majorization order on integer and
// real sequences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gmv {

inline constexpr double kDefaultTolerance = 1e-7;

/// Non-increasing sequence of non-negative integers. Trailing zeros are
/// allowed and ignored by equality.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts arbitrary non-negative counts into a partition.
  static Partition from_unsorted(std::vector<int> values);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero beyond the stored length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  std::int64_t sum() const noexcept;
  std::size_t nonzero_count() const noexcept;

  Partition stripped() const;
  Partition padded(std::size_t length) const;

  /// Comma-separated parts, e.g. "4,1,1".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept;

private:
  std::vector<int> parts_;
};

/// Real sequence; `sorted` asserts the values are non-increasing.
struct RealSeq {
  std::vector<double> values;
  bool sorted = false;

  RealSeq() = default;
  RealSeq(std::vector<double> v, bool is_sorted);

  static RealSeq from_partition(const Partition& p);
  std::size_t size() const noexcept { return values.size(); }
};

struct MajorizationVerdict {
  bool holds = false;
  /// Length k of the first failing prefix (1-based), if any.
  std::optional<std::size_t> first_violation;
  /// sum(t[0..k)) - sum(s[0..k)) for k = 1..n.
  std::vector<double> prefix_margins;
  /// sum(t) - sum(s).
  double sum_gap = 0.0;
};

/// p^T(j) = #{i : p(i) >= j} for j = 1..p(1).
Partition conjugate(const Partition& p);

RealSeq sort_desc(const RealSeq& v);
RealSeq concat(const RealSeq& x, const RealSeq& y);
/// Elementwise sum after zero padding. Both inputs must be sorted; the
/// result is sorted.
RealSeq add_sorted(const RealSeq& x, const RealSeq& y);

/// Is s majorized by t? Prefix sums and total compared with an additive
/// tolerance. Throws std::invalid_argument if either input is not flagged
/// sorted.
MajorizationVerdict majorizes(const RealSeq& t, const RealSeq& s,
                              double tolerance = kDefaultTolerance);

/// Prefix-sum dominance only (no total-sum test).
MajorizationVerdict dominance_prefix(const RealSeq& t, const RealSeq& s,
                                     double tolerance = kDefaultTolerance);

/// Exact integer fast paths.
MajorizationVerdict majorizes(const Partition& t, const Partition& s);
MajorizationVerdict dominance_prefix(const Partition& t, const Partition& s);

/// Elementwise sum of two partitions (result is a partition).
Partition operator+(const Partition& a, const Partition& b);
/// Sorted multiset union of two partitions.
Partition sorted_concat(const Partition& a, const Partition& b);

/// Row-major dense matrix.
template <typename T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), data(r * c, fill) {}

  T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

using IntMatrix = Matrix<int>;
using RealMatrix = Matrix<double>;

/// Convex combination of at most n random permutation matrices. Rows and
/// columns sum to 1. Throws std::invalid_argument for n == 0.
RealMatrix random_doubly_stochastic(std::size_t n, std::uint64_t seed);

std::vector<double> multiply(const RealMatrix& m, std::span<const double> v);

/// Column sums of a 0-1 matrix are majorized by the conjugate of its row
/// sums. Throws std::invalid_argument on a non-binary entry.
MajorizationVerdict gale_ryser_check(const IntMatrix& m);

}  // namespace gmv
