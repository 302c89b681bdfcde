#include "speclimit/monotone_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "speclimit/error.hpp"

namespace speclimit {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 3 || y_.size() != n) {
    throw Error(ErrorKind::InvalidModel,
                "potential table needs at least 3 samples with matching x and u lengths");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
      throw Error(ErrorKind::InvalidModel, "potential table contains a non-finite value");
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) {
      throw Error(ErrorKind::InvalidModel, "potential table abscissae must be strictly increasing");
    }
  }

  std::vector<double> secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
  }

  m_.assign(n, 0.0);
  m_.front() = secant.front();
  m_.back() = secant.back();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (secant[i - 1] * secant[i] <= 0.0) {
      m_[i] = 0.0;
    } else {
      m_[i] = 0.5 * (secant[i - 1] + secant[i]);
    }
  }

  // Fritsch-Carlson limiter: keep (alpha, beta) inside the circle of radius 3.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (secant[i] == 0.0) {
      m_[i] = 0.0;
      m_[i + 1] = 0.0;
      continue;
    }
    const double alpha = m_[i] / secant[i];
    const double beta = m_[i + 1] / secant[i];
    if (alpha < 0.0) m_[i] = 0.0;
    if (beta < 0.0) m_[i + 1] = 0.0;
    const double r2 = alpha * alpha + beta * beta;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      m_[i] = tau * alpha * secant[i];
      m_[i + 1] = tau * beta * secant[i];
    }
  }
}

std::size_t MonotoneCubic::interval(double x) const {
  if (!(x >= x_.front() && x <= x_.back())) {
    throw Error(ErrorKind::OutOfRange,
                "potential query x=" + std::to_string(x) + " outside the sampled table");
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double d00 = (6 * t2 - 6 * t) / h;
  const double d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (-6 * t2 + 6 * t) / h;
  const double d11 = 3 * t2 - 2 * t;
  return d00 * y_[i] + d10 * m_[i] + d01 * y_[i + 1] + d11 * m_[i + 1];
}

std::size_t MonotoneCubic::argmin() const {
  return static_cast<std::size_t>(std::min_element(y_.begin(), y_.end()) - y_.begin());
}

}  // namespace speclimit
