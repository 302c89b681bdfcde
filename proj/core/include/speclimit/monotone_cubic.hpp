#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace speclimit {

/**
 * Fritsch-Carlson monotone piecewise cubic Hermite interpolant.
 *
 * On every interval where the data are monotone the interpolant is
 * monotone too, and interior knots that are local extrema of the data get
 * a zero slope. Hence the minimum of the interpolant sits on a knot and no
 * spurious turning points appear between samples. Queries outside
 * [x.front(), x.back()] throw OutOfRange.
 */
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  std::span<const double> knots() const { return x_; }
  std::span<const double> values() const { return y_; }
  std::span<const double> slopes() const { return m_; }

  /// Index of the knot holding the smallest sample.
  std::size_t argmin() const;

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
};

}  // namespace speclimit
