#include "gmv/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace gmv {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kClampFactor = 1e-9;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymMatrix::SymMatrix(RealMatrix m) : m_(std::move(m)) {
  if (m_.rows != m_.cols) throw std::invalid_argument("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (std::size_t j = i + 1; j < m_.cols; ++j)
      if (std::abs(m_(i, j) - m_(j, i)) > kSymmetryTolerance)
        throw std::invalid_argument("matrix is not symmetric");
}

SymMatrix SymMatrix::from_int(const IntMatrix& m) {
  RealMatrix r(m.rows, m.cols);
  std::transform(m.data.begin(), m.data.end(), r.data.begin(),
                 [](int x) { return static_cast<double>(x); });
  return SymMatrix(std::move(r));
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order(); ++i) t += m_(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : m_.data) s += x * x;
  return std::sqrt(s);
}

Spectrum eigenvalues_sym(const SymMatrix& m) {
  const std::size_t n = m.order();
  RealMatrix a = m.matrix();
  RealMatrix v(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double threshold = kOffDiagonalTolerance * std::max(1.0, m.frobenius_norm());
  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle zeroing a(p, q) (Golub & Van Loan, Alg. 8.5.1).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);

  double residual = 0.0;
  const RealMatrix& orig = m.matrix();
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t r = 0; r < n; ++r) {
      double mv = 0.0;
      for (std::size_t k = 0; k < n; ++k) mv += orig(r, k) * v(k, e);
      residual = std::max(residual, std::abs(mv - values[e] * v(r, e)));
    }

  std::sort(values.begin(), values.end(), std::greater<>{});
  return Spectrum{RealSeq(std::move(values), true), residual};
}

Spectrum psd_spectrum(const SymMatrix& m) {
  Spectrum s = eigenvalues_sym(m);
  const double tau = kClampFactor * std::max(1.0, m.frobenius_norm());
  for (double& x : s.values.values)
    if (std::abs(x) <= tau) x = 0.0;
  s.values = sort_desc(s.values);
  return s;
}

Spectrum laplacian_spectrum(const Graph& g) {
  return psd_spectrum(SymMatrix::from_int(laplacian(g)));
}

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("algebraic connectivity needs n >= 2");
  const Spectrum s = laplacian_spectrum(g);
  return s.values.values[s.values.size() - 2];
}

}  // namespace gmv
