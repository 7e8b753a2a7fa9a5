#include "luroth/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "luroth/errors.hpp"
#include "luroth/rng.hpp"

namespace luroth::experiments {

Digit sample_digit(double unit_draw) {
  if (!(unit_draw > 0.0 && unit_draw < 1.0))
    throw domain_error("digit sampler draw must lie strictly inside (0,1)");
  const double inv = 1.0 / (1.0 - unit_draw);
  if (inv >= 0x1p62) throw budget_error("sampled digit exceeds 2^62");
  return static_cast<Digit>(inv) + 1;
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

LlnSummary lln_experiment(const LlnConfig& config) {
  if (config.trials < 1) throw domain_error("trials must be >= 1");
  if (config.n < 2) throw domain_error("horizon n must be >= 2");

  const double log2n = std::log2(static_cast<double>(config.n));
  std::vector<double> ratios;
  ratios.reserve(config.trials);
  for (std::int64_t trial = 0; trial < config.trials; ++trial) {
    Rng rng(config.seed, static_cast<std::uint64_t>(trial));
    Digit prev = 0;
    std::int64_t cur = 0, best = 1;
    for (std::int64_t i = 0; i < config.n; ++i) {
      const Digit d = sample_digit(rng.unit_open());
      cur = d == prev ? cur + 1 : 1;
      best = std::max(best, cur);
      prev = d;
    }
    ratios.push_back(static_cast<double>(best) / log2n);
  }

  LlnSummary s;
  s.trials = config.trials;
  s.n = config.n;
  double sum = 0;
  for (double r : ratios) sum += r;
  s.mean = sum / static_cast<double>(ratios.size());
  std::sort(ratios.begin(), ratios.end());
  s.median = quantile(ratios, 0.5);
  s.q25 = quantile(ratios, 0.25);
  s.q75 = quantile(ratios, 0.75);
  s.min = ratios.front();
  s.max = ratios.back();
  return s;
}

std::vector<SurfaceRow> dim_surface(std::int64_t grid_resolution,
                                    const moran::SolveOptions& opts) {
  if (grid_resolution < 2) throw domain_error("grid resolution must be >= 2");
  std::vector<SurfaceRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_resolution * grid_resolution));
  const Integer den = grid_resolution - 1;
  for (std::int64_t i = 0; i < grid_resolution; ++i) {
    for (std::int64_t j = 0; j < grid_resolution; ++j) {
      SurfaceRow row;
      row.alpha = Rational(Integer(i), den);
      row.beta = Rational(Integer(j), den);
      if (row.alpha > row.beta) {
        row.valid = false;
      } else {
        row.dim_case = moran::dim_case(row.alpha, row.beta);
        row.dim = moran::dim_E(row.alpha, row.beta, opts);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace luroth::experiments
