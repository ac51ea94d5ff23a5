#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace smalldev {

struct SimplexCoefficients {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;

  bool valid() const {
    return reflection > 0.0 && expansion > 1.0 && contraction > 0.0 && contraction < 1.0 && shrink > 0.0 &&
           shrink < 1.0;
  }
};

struct NelderMeadOptions {
  SimplexCoefficients coefficients;
  std::size_t max_evals = 2000;
  double diameter_tolerance = 1e-10;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evals = 0;
  bool converged = false;  // simplex diameter fell below tolerance
};

/// Derivative-free minimization of `f` from `start`, with an axis-aligned
/// initial simplex of edge `initial_step`.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> start, const NelderMeadOptions& opt = {}) {
  if (!opt.coefficients.valid()) throw std::invalid_argument("invalid simplex coefficients");
  const std::size_t dim = start.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead needs at least one coordinate");
  const auto& c = opt.coefficients;

  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> pts(dim + 1, start);
  for (std::size_t k = 0; k < dim; ++k) pts[k + 1][k] += opt.initial_step;
  std::vector<double> vals(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) vals[k] = eval(pts[k]);

  std::vector<std::size_t> order(dim + 1);
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t a = 1; a <= dim; ++a) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += (pts[a][k] - pts[0][k]) * (pts[a][k] - pts[0][k]);
      d = std::max(d, std::sqrt(s));
    }
    return d;
  };
  auto along = [&](const std::vector<double>& centroid, const std::vector<double>& from, double t) {
    std::vector<double> x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[k] = centroid[k] + t * (from[k] - centroid[k]);
    return x;
  };

  bool converged = false;
  while (evals < opt.max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    {
      std::vector<std::vector<double>> p2;
      std::vector<double> v2;
      for (std::size_t k : order) {
        p2.push_back(pts[k]);
        v2.push_back(vals[k]);
      }
      pts.swap(p2);
      vals.swap(v2);
    }
    if (diameter() < opt.diameter_tolerance) {
      converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[a][k] / static_cast<double>(dim);
    }
    const auto& worst = pts[dim];

    const auto reflected = along(centroid, worst, -c.reflection);
    const double fr = eval(reflected);
    if (fr < vals[0]) {
      const auto expanded = along(centroid, worst, -c.reflection * c.expansion);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[dim] = expanded;
        vals[dim] = fe;
      } else {
        pts[dim] = reflected;
        vals[dim] = fr;
      }
      continue;
    }
    if (fr < vals[dim - 1]) {
      pts[dim] = reflected;
      vals[dim] = fr;
      continue;
    }
    // Outside contraction when the reflection beats the worst point, inside otherwise.
    const bool outside = fr < vals[dim];
    const auto contracted = along(centroid, worst, outside ? -c.reflection * c.contraction : c.contraction);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : vals[dim])) {
      pts[dim] = contracted;
      vals[dim] = fc;
      continue;
    }
    for (std::size_t a = 1; a <= dim; ++a) {
      for (std::size_t k = 0; k < dim; ++k) pts[a][k] = pts[0][k] + c.shrink * (pts[a][k] - pts[0][k]);
      vals[a] = eval(pts[a]);
    }
  }

  const auto best = std::min_element(vals.begin(), vals.end()) - vals.begin();
  return {pts[best], vals[best], evals, converged};
}

}  // namespace smalldev
