#include "gmv/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gmv {

namespace {

void validate_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition is not non-increasing");
  }
}

bool is_non_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::less<>{}) == v.end();
}

void require_sorted(const RealSeq& t, const RealSeq& s) {
  if (!t.sorted || !s.sorted)
    throw std::invalid_argument("majorization requires sequences sorted non-increasing");
}

template <typename Value, typename Cmp>
MajorizationVerdict compare_prefixes(const std::vector<Value>& t, const std::vector<Value>& s,
                                     bool check_sum, Cmp below) {
  const std::size_t n = std::max(t.size(), s.size());
  MajorizationVerdict verdict;
  verdict.prefix_margins.reserve(n);
  Value st{}, ss{};
  for (std::size_t k = 0; k < n; ++k) {
    st += k < t.size() ? t[k] : Value{};
    ss += k < s.size() ? s[k] : Value{};
    const Value margin = st - ss;
    verdict.prefix_margins.push_back(static_cast<double>(margin));
    if (below(margin) && !verdict.first_violation) verdict.first_violation = k + 1;
  }
  verdict.sum_gap = static_cast<double>(st - ss);
  verdict.holds = !verdict.first_violation.has_value();
  if (check_sum && !verdict.holds) return verdict;
  if (check_sum && (below(st - ss) || below(ss - st))) {
    verdict.holds = false;
    verdict.first_violation = n;
  }
  return verdict;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate_parts(parts_); }

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate_parts(parts_); }

Partition Partition::from_unsorted(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>{});
  return Partition(std::move(values));
}

std::int64_t Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::size_t Partition::nonzero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

Partition Partition::stripped() const {
  std::vector<int> out(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(nonzero_count()));
  return Partition(std::move(out));
}

Partition Partition::padded(std::size_t length) const {
  std::vector<int> out = parts_;
  if (out.size() < length) out.resize(length, 0);
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool operator==(const Partition& a, const Partition& b) noexcept {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

RealSeq::RealSeq(std::vector<double> v, bool is_sorted) : values(std::move(v)), sorted(is_sorted) {
  if (sorted && !is_non_increasing(values))
    throw std::invalid_argument("sequence flagged sorted is not non-increasing");
}

RealSeq RealSeq::from_partition(const Partition& p) {
  return RealSeq(std::vector<double>(p.parts().begin(), p.parts().end()), true);
}

Partition conjugate(const Partition& p) {
  const int first = p[0];
  std::vector<int> out(static_cast<std::size_t>(first), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

RealSeq sort_desc(const RealSeq& v) {
  std::vector<double> out = v.values;
  std::stable_sort(out.begin(), out.end(), std::greater<>{});
  return RealSeq(std::move(out), true);
}

RealSeq concat(const RealSeq& x, const RealSeq& y) {
  std::vector<double> out = x.values;
  out.insert(out.end(), y.values.begin(), y.values.end());
  return RealSeq(std::move(out), false);
}

RealSeq add_sorted(const RealSeq& x, const RealSeq& y) {
  require_sorted(x, y);
  const std::size_t n = std::max(x.size(), y.size());
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = (i < x.size() ? x.values[i] : 0.0) + (i < y.size() ? y.values[i] : 0.0);
  return RealSeq(std::move(out), true);
}

MajorizationVerdict majorizes(const RealSeq& t, const RealSeq& s, double tolerance) {
  require_sorted(t, s);
  return compare_prefixes(t.values, s.values, true,
                          [tolerance](double m) { return m < -tolerance; });
}

MajorizationVerdict dominance_prefix(const RealSeq& t, const RealSeq& s, double tolerance) {
  require_sorted(t, s);
  return compare_prefixes(t.values, s.values, false,
                          [tolerance](double m) { return m < -tolerance; });
}

MajorizationVerdict majorizes(const Partition& t, const Partition& s) {
  std::vector<std::int64_t> tv(t.parts().begin(), t.parts().end());
  std::vector<std::int64_t> sv(s.parts().begin(), s.parts().end());
  return compare_prefixes(tv, sv, true, [](std::int64_t m) { return m < 0; });
}

MajorizationVerdict dominance_prefix(const Partition& t, const Partition& s) {
  std::vector<std::int64_t> tv(t.parts().begin(), t.parts().end());
  std::vector<std::int64_t> sv(s.parts().begin(), s.parts().end());
  return compare_prefixes(tv, sv, false, [](std::int64_t m) { return m < 0; });
}

Partition operator+(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return Partition(std::move(out));
}

Partition sorted_concat(const Partition& a, const Partition& b) {
  std::vector<int> out = a.parts();
  out.insert(out.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(out));
}

RealMatrix random_doubly_stochastic(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("doubly stochastic matrix needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> count_dist(1, n);
  std::uniform_real_distribution<double> weight_dist(0.05, 1.0);

  const std::size_t terms = count_dist(rng);
  std::vector<double> weights(terms);
  for (double& w : weights) w = weight_dist(rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  RealMatrix p(n, n, 0.0);
  std::vector<std::size_t> perm(n);
  for (std::size_t t = 0; t < terms; ++t) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t r = 0; r < n; ++r) p(r, perm[r]) += weights[t] / total;
  }
  return p;
}

std::vector<double> multiply(const RealMatrix& m, std::span<const double> v) {
  if (v.size() != m.cols) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<double> out(m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[r] += m(r, c) * v[c];
  return out;
}

MajorizationVerdict gale_ryser_check(const IntMatrix& m) {
  std::vector<int> rows(m.rows, 0), cols(m.cols, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      const int x = m(r, c);
      if (x != 0 && x != 1) throw std::invalid_argument("Gale-Ryser check needs a 0-1 matrix");
      rows[r] += x;
      cols[c] += x;
    }
  }
  const Partition row_conj = conjugate(Partition::from_unsorted(std::move(rows)));
  return majorizes(row_conj, Partition::from_unsorted(std::move(cols)));
}

}  // namespace gmv
