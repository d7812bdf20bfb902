#include "dorder/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "dorder/errors.hpp"

namespace dorder {

void QuadratureConfig::validate() const {
  auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_unit(abs_tol) || !in_unit(rel_tol) || !in_unit(tail_tol)) {
    throw_invalid("quadrature tolerances must lie in (0, 1)");
  }
  if (max_panels < 1 || panel_order < 1) {
    throw_invalid("max_panels and panel_order must be positive");
  }
}

namespace {

GaussRule make_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

struct Panel {
  double a;
  double b;
  Complex value;
  double error;
  bool frozen;
};

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw_invalid("Gauss-Legendre order must be positive");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

QuadResult integrate(const ComplexIntegrand& f, std::span<const double> breakpoints,
                     const QuadratureConfig& config, double noise_floor) {
  config.validate();
  if (breakpoints.size() < 2) throw_invalid("integrate needs at least two breakpoints");
  const GaussRule& rule = gauss_legendre(config.panel_order);
  const double noise = std::max(noise_floor, 50.0 * std::numeric_limits<double>::epsilon());

  // Returns the integral over [a, b] and accumulates integral |f| into abs_sum.
  auto apply = [&](double a, double b, double& abs_sum) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Complex sum{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const Complex v = f(mid + half * rule.nodes[i]);
      sum += rule.weights[i] * v;
      abs_sum += rule.weights[i] * std::abs(v) * std::abs(half);
    }
    return half * sum;
  };
  auto make_panel = [&](double a, double b) {
    double whole_abs = 0.0;
    double halves_abs = 0.0;
    const double m = 0.5 * (a + b);
    const Complex whole = apply(a, b, whole_abs);
    const Complex halves = apply(a, m, halves_abs) + apply(m, b, halves_abs);
    const double err = std::abs(whole - halves);
    return Panel{a, b, halves, err, err <= noise * halves_abs || m <= a || m >= b};
  };

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      if (breakpoints[i] == breakpoints[i + 1]) continue;
      throw_invalid("breakpoints must be ascending");
    }
    panels.push_back(make_panel(breakpoints[i], breakpoints[i + 1]));
  }

  while (true) {
    Complex total{};
    double error = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      error += p.error;
    }
    const double tol = std::max(config.abs_tol, config.rel_tol * std::abs(total));
    auto worst = panels.end();
    for (auto it = panels.begin(); it != panels.end(); ++it) {
      if (!it->frozen && (worst == panels.end() || it->error > worst->error)) worst = it;
    }
    if (error <= tol || worst == panels.end()) {
      return QuadResult{total, error, static_cast<int>(panels.size())};
    }
    if (static_cast<int>(panels.size()) >= config.max_panels) {
      throw Error(ErrorKind::NonConvergent,
                  "adaptive quadrature exhausted " + std::to_string(config.max_panels) +
                      " panels (error estimate " + std::to_string(error) + ")");
    }
    const double a = worst->a;
    const double b = worst->b;
    const double m = 0.5 * (a + b);
    *worst = make_panel(a, m);
    panels.push_back(make_panel(m, b));
  }
}

Complex simpson(std::span<const Complex> samples, double step) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) throw_invalid("Simpson needs an odd number (>= 3) of samples");
  Complex odd{};
  Complex even{};
  for (std::size_t j = 1; j + 1 < n; ++j) {
    (j % 2 == 1 ? odd : even) += samples[j];
  }
  return step / 3.0 * (samples.front() + 4.0 * odd + 2.0 * even + samples.back());
}

}  // namespace dorder
