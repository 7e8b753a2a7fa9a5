#pragma once

#include <cstdint>
#include <vector>

#include "luroth/moran.hpp"
#include "luroth/rational.hpp"

namespace luroth::experiments {

/// Inverse-CDF digit sampler for the stationary digit law
/// P(d = t) = 1/(t(t-1)), CDF(t) = 1 - 1/t: returns floor(1/(1-draw)) + 1.
/// The draw must lie strictly inside (0,1).
Digit sample_digit(double unit_draw);

struct LlnConfig {
  std::uint64_t seed = 0;
  std::int64_t trials = 1;
  std::int64_t n = 2;  ///< digits per trial, >= 2
};

struct LlnSummary {
  std::int64_t trials = 0;
  std::int64_t n = 0;
  double mean = 0;
  double median = 0;
  double q25 = 0;  ///< linearly interpolated quantiles of ell_n / log2 n
  double q75 = 0;
  double min = 0;
  double max = 0;
};

/// Draws `trials` independent digit strings of length n (substream per
/// trial, so parallel and serial runs agree), computes the maximal run
/// length of each, and summarizes the ratios ell_n / log2 n. Digits are
/// sampled i.i.d. from the stationary law rather than by exact orbit
/// iteration, which would cost exponential bit growth in n.
LlnSummary lln_experiment(const LlnConfig& config);

struct SurfaceRow {
  Rational alpha;
  Rational beta;
  bool valid = true;  ///< false for cells with alpha > beta (emitted empty)
  moran::DimCase dim_case = moran::DimCase::zero;
  moran::CertifiedValue dim;
};

/// Tabulates the dimension formula on the grid {i/(R-1)}^2, row-major in
/// alpha then beta. Middle-case cells carry the certified root.
std::vector<SurfaceRow> dim_surface(std::int64_t grid_resolution,
                                    const moran::SolveOptions& opts = {});

}  // namespace luroth::experiments
