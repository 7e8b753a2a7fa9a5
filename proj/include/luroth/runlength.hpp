#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "luroth/rational.hpp"

namespace luroth::runlength {

/// values[i] is the maximal run length of the first i+1 digits. Always
/// non-decreasing, starts at 1, steps by 0 or 1.
using RunTrajectory = std::vector<std::int64_t>;

/// Length of the longest block of identical digits. A string with no
/// adjacent repeats has max_run 1 (a single digit is a run).
std::int64_t max_run(const DigitString& word);

/// Prefix-wise max_run in one streaming pass.
RunTrajectory run_trajectory(const DigitString& word);

enum class RatioScale { linear, log2 };

/// linear: entry i is ell_{i+1}/(i+1), for n = 1..N.
/// log2:   entry i is ell_{i+2}/log2(i+2), reported only for n >= 2.
std::vector<double> growth_ratios(const RunTrajectory& traj, RatioScale scale);

/// (min, max) over the last ceil(tail_fraction * size) entries. A
/// finite-sample stand-in for liminf/limsup, and labelled as an estimate.
std::pair<double, double> inf_sup_estimate(const std::vector<double>& ratios,
                                           double tail_fraction);

}  // namespace luroth::runlength
