#pragma once

#include <cstdint>
#include <vector>

#include "luroth/expansion.hpp"
#include "luroth/moran.hpp"
#include "luroth/rational.hpp"

namespace luroth::construction {

/// Integer sequences driving the explicit construction. All vectors are
/// 0-based storage for the 1-based sequences n_1..n_K etc.; use the *_at
/// accessors when mirroring the defining formulas.
///
/// Two coordinate systems coexist:
///  - "point" coordinates: positions of generated digit strings, where
///    block k opens with a separator digit 2M at position n'_k, a forced
///    run of 2s on [n'_k+1, n'_k+m_k], then separators every m_k positions;
///  - "word" coordinates: positions after deleting the separators, where
///    the forced run of block k occupies [n_k+1, n_k+m_k].
///
/// Note n'_k = n_k + 1 + sum_{i<k}(p_i+1): each block contributes its p_k
/// in-block separators plus the opening one, and only with the extra +1
/// does deleting the separators land the forced runs exactly on
/// [n_k+1, n_k+m_k] for every k (for k = 1 this is the familiar
/// n'_1 = n_1 + 1).
struct Schedule {
  Rational alpha;
  Rational beta;
  std::int64_t M = 3;
  int k_max = 1;
  std::vector<std::int64_t> n;        ///< n_1..n_K
  std::vector<std::int64_t> m;        ///< m_1..m_K, strictly increasing
  std::vector<std::int64_t> p;        ///< p_1..p_{K-1}, p_k = floor((n_{k+1}-n_k)/m_k)
  std::vector<std::int64_t> n_prime;  ///< n'_1..n'_K
  std::vector<Rational> u;            ///< u_k = m_k / (n_k - (n_{k-1}+m_{k-1}))

  std::int64_t point_horizon = 0;  ///< n'_K + m_K: max generated depth
  std::int64_t word_horizon = 0;   ///< n_K + m_K: max admissible-word depth

  std::int64_t n_at(int k) const { return n.at(k - 1); }
  std::int64_t m_at(int k) const { return m.at(k - 1); }
  std::int64_t p_at(int k) const { return p.at(k - 1); }
  std::int64_t n_prime_at(int k) const { return n_prime.at(k - 1); }
  const Rational& u_at(int k) const { return u.at(k - 1); }
};

/// Builds the schedule for parameters 0 <= alpha < beta/(1+beta) < beta < 1
/// and M >= 3. For alpha > 0: n_k = floor(r^k) + 4k and
/// m_k = floor((beta/(1-beta)) r^k) + 2 with r = beta(1-alpha)/(alpha(1-beta));
/// for alpha = 0 the factorial variant with 2^{k!}/(1-beta)^k in place of r^k.
/// Every Schedule invariant (2 <= m_k < n_{k+1}-n_k, strict m growth) is
/// verified here; violations raise domain_error, and sequences exceeding
/// digit_budget raise budget_error.
Schedule build_schedule(const Rational& alpha, const Rational& beta, std::int64_t M,
                        int k_max, std::int64_t digit_budget = 1'000'000);

/// Deleted (separator) positions {n'_k} U {n'_k + p m_k + 1 : 1 <= p <= p_k}
/// intersected with [1, N], ascending.
std::vector<std::int64_t> deletion_positions(const Schedule& sched, std::int64_t N);

/// #(deleted positions <= n); the density t(n)/n tends to 0.
std::int64_t deletion_count(const Schedule& sched, std::int64_t n);

struct Fill {
  enum class Kind { constant, seeded } kind = Kind::seeded;
  Digit value = 2;         ///< constant fill digit, in [2, M]
  std::uint64_t seed = 0;  ///< seeded fill stream

  static Fill constant(Digit c) { return {Kind::constant, c, 0}; }
  static Fill seeded(std::uint64_t s) { return {Kind::seeded, 2, s}; }
};

/// First N digits of a constructed point: separators 2M, forced runs of 2s,
/// fill digits in [2, M] elsewhere. Deterministic given the fill. Free
/// fills never extend a constant run up to the ambient block's forced-run
/// length m_k (a differing digit is substituted one step earlier), so the
/// run profile of the output depends only on the schedule; inside blocks
/// the separator spacing makes the cap vacuous, it only binds on the
/// unseparated prefix [1, n'_1).
DigitString generate_point(const Schedule& sched, const Fill& fill, std::int64_t N);

struct BlockRatios {
  int k = 0;
  double m_over_nk_mk = 0;   ///< m_k/(n_k + m_k), approaches beta
  double m_over_nk1_mk = 0;  ///< m_k/(n_{k+1} + m_k), approaches alpha
  double u_k = 0;
};

struct ProfileReport {
  bool ok = true;
  std::int64_t first_mismatch_n = -1;
  std::int64_t expected = -1;
  std::int64_t actual = -1;
  int blocks_checked = 0;
  std::vector<BlockRatios> ratios;
};

/// Verifies the piecewise run-length law of constructed points:
/// ell_n = m_k on [n'_k+m_k, n'_{k+1}+m_k] and ell_n = n - n'_{k+1} on
/// (n'_{k+1}+m_k, n'_{k+1}+m_{k+1}), for every complete block within the
/// input, against the streaming run trajectory. Also reports the per-block
/// ratios that converge to beta and alpha.
ProfileReport run_profile_check(const Schedule& sched, const DigitString& digits);

/// Deletes the separator positions. Validates the input structure
/// (separators must read 2M, forced runs 2, fill in [2,M]) and throws
/// domain_error at the first violation. The output prefix is an
/// admissible word at every depth.
DigitString project_f(const Schedule& sched, const DigitString& digits);

/// Admissible-word test in word coordinates: digit j forced to 2 when
/// n_k < j <= n_k + m_k for some k, otherwise in [2, M].
bool is_admissible(const Schedule& sched, const DigitString& word);

/// All admissible words of the given depth in lexicographic order.
/// (M-1)^{#free positions} words; guarded by enum_budget.
std::vector<DigitString> enumerate_D_n(const Schedule& sched, std::int64_t depth,
                                       std::int64_t enum_budget = std::int64_t{1} << 22);

/// Union of the admissible child cylinders of an admissible word:
/// (left(I) + |I|/M, right(I)] at free child depths (length (M-1)/M |I|),
/// (left(I) + |I|/2, right(I)] inside forced runs (length |I|/2).
struct FundamentalInterval {
  expansion::Interval interval;
  Rational length;
};

FundamentalInterval fundamental_interval(const Schedule& sched, const DigitString& word);

/// Per-block root exponents s_M(u_k) and derived per-position data for the
/// measure; compute once per schedule and reuse.
struct MeasureParams {
  std::vector<moran::CertifiedValue> s;  ///< s_M(u_k), k = 1..k_max
  double residual_tol = 0;               ///< residual certified for each root
};

MeasureParams measure_params(const Schedule& sched, const moran::SolveOptions& opts = {});

/// Smallest block index K such that |s_M(u_k) - s_M(zeta)| stays below
/// eps * log 2 / log(M(M-1)) for every k >= K within the schedule.
/// Throws domain_error when no block qualifies at this k_max.
int k0_for_epsilon(const Schedule& sched, const MeasureParams& params, double eps,
                   const moran::SolveOptions& opts = {});

/// Mass of the fundamental interval of a word: at block boundaries
/// n_k + m_k the product over blocks of (block cylinder factor)^{s_M(u_k)};
/// between boundaries, the closed-form marginal sum (one factor
/// sum_{t=2}^{M} (t(t-1))^{-s} per undetermined free position and 2^{-s}
/// per undetermined forced position). Parent/child additivity is exact in
/// real arithmetic by construction.
moran::CertifiedValue measure_mu(const Schedule& sched, const MeasureParams& params,
                                 const DigitString& word);

/// ln of measure_mu (usable at depths where the mass underflows a double).
moran::CertifiedValue log_measure_mu(const Schedule& sched, const MeasureParams& params,
                                     const DigitString& word);

struct MuCheckReport {
  std::int64_t words = 0;      ///< leaves at the requested depth
  std::int64_t nodes = 0;      ///< internal tree nodes checked
  double max_node_gap = 0;     ///< max |mu(parent) - sum mu(children)|
  double total_mass = 0;       ///< sum of leaf masses
  double mass_err_bound = 0;   ///< solver-residual bound on |total_mass - 1|
  double min_log_ratio = 0;    ///< min over leaves of log mu / log |J|
};

/// Exhaustive consistency scan of the measure tree down to `depth`:
/// additivity at every node, total leaf mass, and the leafwise
/// log mu / log |J| minimum.
MuCheckReport check_mu_consistency(const Schedule& sched, const MeasureParams& params,
                                   std::int64_t depth,
                                   std::int64_t enum_budget = std::int64_t{1} << 22);

/// Exact distance from the word's fundamental interval to the nearest
/// distinct fundamental interval of the same depth. Enumerates the whole
/// depth (budget-guarded).
Rational gap(const Schedule& sched, const DigitString& word,
             std::int64_t enum_budget = std::int64_t{1} << 22);

/// Gaps for every word of the depth, aligned with enumerate_D_n order.
std::vector<Rational> gap_table(const Schedule& sched, std::int64_t depth,
                                std::int64_t enum_budget = std::int64_t{1} << 22);

struct HolderReport {
  double slope = 0;            ///< least-squares slope of log|f(x)-f(y)| vs log|x-y|
  double intercept = 0;
  std::int64_t pairs_used = 0;
  double min_log_dist = 0;
  double max_log_dist = 0;
  bool inflation_ok = true;    ///< |f(x)-f(y)| <= |I_n| (2M(2M-1))^{t(n)} on every pair
  double max_inflation = 0;    ///< max observed log-inflation over t(n) log(2M(2M-1))
};

/// Samples seeded point pairs truncated at `depth`, maps them through the
/// separator deletion, and fits the log-distance slope; the deletion map
/// is Holder with exponent arbitrarily close to 1, so the fitted slope
/// approaches 1 from below as depth grows.
HolderReport holder_estimate(const Schedule& sched, std::int64_t depth,
                             std::int64_t pair_count, std::uint64_t seed);

}  // namespace luroth::construction
