#include "luroth/runlength.hpp"

#include <algorithm>
#include <cmath>

#include "luroth/errors.hpp"

namespace luroth::runlength {

std::int64_t max_run(const DigitString& word) {
  if (word.empty()) throw domain_error("max_run of an empty digit string");
  std::int64_t best = 1, cur = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    cur = word[i] == word[i - 1] ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

RunTrajectory run_trajectory(const DigitString& word) {
  if (word.empty()) throw domain_error("run_trajectory of an empty digit string");
  RunTrajectory out;
  out.reserve(word.size());
  std::int64_t best = 1, cur = 1;
  out.push_back(1);
  for (std::size_t i = 1; i < word.size(); ++i) {
    cur = word[i] == word[i - 1] ? cur + 1 : 1;
    best = std::max(best, cur);
    out.push_back(best);
  }
  return out;
}

std::vector<double> growth_ratios(const RunTrajectory& traj, RatioScale scale) {
  std::vector<double> out;
  if (scale == RatioScale::linear) {
    out.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i)
      out.push_back(static_cast<double>(traj[i]) / static_cast<double>(i + 1));
  } else {
    for (std::size_t i = 1; i < traj.size(); ++i)
      out.push_back(static_cast<double>(traj[i]) / std::log2(static_cast<double>(i + 1)));
  }
  return out;
}

std::pair<double, double> inf_sup_estimate(const std::vector<double>& ratios,
                                           double tail_fraction) {
  if (ratios.empty()) throw domain_error("inf_sup_estimate of an empty ratio list");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw domain_error("tail_fraction must lie in (0,1]");
  std::size_t window =
      static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(ratios.size())));
  window = std::clamp<std::size_t>(window, 1, ratios.size());
  double lo = ratios.back(), hi = ratios.back();
  for (std::size_t i = ratios.size() - window; i < ratios.size(); ++i) {
    lo = std::min(lo, ratios[i]);
    hi = std::max(hi, ratios[i]);
  }
  return {lo, hi};
}

}  // namespace luroth::runlength
