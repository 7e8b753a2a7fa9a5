#include "luroth/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "luroth/errors.hpp"
#include "luroth/rng.hpp"
#include "luroth/runlength.hpp"

namespace luroth::construction {

namespace {

Integer floor_nonneg(const Rational& x) { return numerator(x) / denominator(x); }

Rational pow_rational(const Rational& base, int k) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(base), static_cast<unsigned>(k)),
                  pow(denominator(base), static_cast<unsigned>(k)));
}

std::int64_t to_int64_budget(const Integer& v, std::int64_t budget, int k, const char* what) {
  if (v > budget)
    throw budget_error(std::string("schedule ") + what + " exceeds the digit budget at k=" +
                       std::to_string(k) + " (" + v.str() + " > " + std::to_string(budget) + ")");
  return v.convert_to<std::int64_t>();
}

// ── point-coordinate classification ────────────────────────────────────────

enum class PointClass { separator, forced, fill };

struct PointInfo {
  PointClass cls;
  int block;  // ambient block (1-based); positions before n'_1 belong to block 1
};

PointInfo classify_point(const Schedule& s, std::int64_t pos) {
  if (pos < 1 || pos > s.point_horizon)
    throw budget_error("position " + std::to_string(pos) + " beyond the schedule horizon " +
                       std::to_string(s.point_horizon));
  auto it = std::upper_bound(s.n_prime.begin(), s.n_prime.end(), pos);
  int k = static_cast<int>(it - s.n_prime.begin());  // largest k with n'_k <= pos
  if (k == 0) return {PointClass::fill, 1};
  if (pos == s.n_prime_at(k)) return {PointClass::separator, k};
  if (pos <= s.n_prime_at(k) + s.m_at(k)) return {PointClass::forced, k};
  if (k < s.k_max) {
    const std::int64_t q = pos - s.n_prime_at(k) - 1;
    if (q % s.m_at(k) == 0 && q / s.m_at(k) <= s.p_at(k)) return {PointClass::separator, k};
  }
  return {PointClass::fill, k};
}

// ── word-coordinate classification ─────────────────────────────────────────

// block k spans word positions (n_{k-1}+m_{k-1}, n_k+m_k]
int word_block(const Schedule& s, std::int64_t j) {
  if (j < 1 || j > s.word_horizon)
    throw budget_error("word position " + std::to_string(j) + " beyond the schedule horizon " +
                       std::to_string(s.word_horizon));
  for (int k = 1; k <= s.k_max; ++k)
    if (j <= s.n_at(k) + s.m_at(k)) return k;
  return s.k_max;  // unreachable given the horizon check
}

bool word_forced(const Schedule& s, std::int64_t j) {
  const int k = word_block(s, j);
  return j > s.n_at(k);
}

std::int64_t free_positions_up_to(const Schedule& s, std::int64_t depth) {
  std::int64_t forced = 0;
  for (int k = 1; k <= s.k_max; ++k) {
    const std::int64_t lo = s.n_at(k), hi = s.n_at(k) + s.m_at(k);
    if (lo >= depth) break;
    forced += std::min(depth, hi) - lo;
  }
  return depth - forced;
}

void require_word_depth(const Schedule& s, std::int64_t depth) {
  if (depth < 1) throw domain_error("depth must be >= 1");
  if (depth > s.word_horizon)
    throw budget_error("depth " + std::to_string(depth) + " beyond the schedule horizon " +
                       std::to_string(s.word_horizon));
}

}  // namespace

Schedule build_schedule(const Rational& alpha, const Rational& beta, std::int64_t M,
                        int k_max, std::int64_t digit_budget) {
  if (M < 3) throw domain_error("alphabet bound M must be >= 3");
  if (k_max < 1) throw domain_error("k_max must be >= 1");
  if (!(beta > 0 && beta < 1 && alpha >= 0 && alpha < beta / (1 + beta)))
    throw domain_error("schedule parameters must satisfy 0 <= alpha < beta/(1+beta) < beta < 1");

  Schedule s;
  s.alpha = alpha;
  s.beta = beta;
  s.M = M;
  s.k_max = k_max;

  const Rational growth = beta / (1 - beta);
  for (int k = 1; k <= k_max; ++k) {
    Rational base;  // r^k, or 2^{k!}/(1-beta)^k when alpha = 0
    if (alpha > 0) {
      const Rational r = beta * (1 - alpha) / (alpha * (1 - beta));
      base = pow_rational(r, k);
    } else {
      std::int64_t fact = 1;
      for (int i = 2; i <= k; ++i) {
        fact *= i;
        if (fact > 62) throw budget_error("factorial schedule exceeds the digit budget at k=" +
                                          std::to_string(k));
      }
      base = Rational(Integer(1) << fact) / pow_rational(1 - beta, k);
    }
    const Integer nk = floor_nonneg(base) + 4 * k;
    const Integer mk = floor_nonneg(growth * base) + 2;
    s.n.push_back(to_int64_budget(nk, digit_budget, k, "n_k"));
    s.m.push_back(to_int64_budget(mk, digit_budget, k, "m_k"));
  }

  for (int k = 1; k <= k_max; ++k) {
    if (s.m_at(k) < 2) throw domain_error("schedule invariant violated: m_k < 2");
    if (k >= 2 && s.m_at(k) <= s.m_at(k - 1))
      throw domain_error("schedule invariant violated: m_k not strictly increasing at k=" +
                         std::to_string(k));
    if (k < k_max && s.m_at(k) >= s.n_at(k + 1) - s.n_at(k))
      throw domain_error("schedule invariant violated: m_k >= n_{k+1} - n_k at k=" +
                         std::to_string(k));
  }

  for (int k = 1; k < k_max; ++k)
    s.p.push_back((s.n_at(k + 1) - s.n_at(k)) / s.m_at(k));

  std::int64_t acc = 0;  // separators of all earlier blocks
  for (int k = 1; k <= k_max; ++k) {
    s.n_prime.push_back(s.n_at(k) + 1 + acc);
    if (k < k_max) acc += s.p_at(k) + 1;
  }

  for (int k = 1; k <= k_max; ++k) {
    const std::int64_t prev = k >= 2 ? s.n_at(k - 1) + s.m_at(k - 1) : 0;
    s.u.emplace_back(Integer(s.m_at(k)), Integer(s.n_at(k) - prev));
  }

  s.point_horizon = s.n_prime_at(k_max) + s.m_at(k_max);
  s.word_horizon = s.n_at(k_max) + s.m_at(k_max);
  return s;
}

std::vector<std::int64_t> deletion_positions(const Schedule& sched, std::int64_t N) {
  if (N < 1) throw domain_error("depth must be >= 1");
  if (N > sched.point_horizon)
    throw budget_error("depth beyond the schedule horizon");
  std::vector<std::int64_t> out;
  for (int k = 1; k <= sched.k_max; ++k) {
    if (sched.n_prime_at(k) > N) break;
    out.push_back(sched.n_prime_at(k));
    if (k == sched.k_max) break;
    for (std::int64_t p = 1; p <= sched.p_at(k); ++p) {
      const std::int64_t pos = sched.n_prime_at(k) + p * sched.m_at(k) + 1;
      if (pos > N) break;
      out.push_back(pos);
    }
  }
  return out;
}

std::int64_t deletion_count(const Schedule& sched, std::int64_t n) {
  std::int64_t count = 0;
  for (int k = 1; k <= sched.k_max; ++k) {
    if (sched.n_prime_at(k) > n) break;
    ++count;
    if (k == sched.k_max) break;
    const std::int64_t hits = (n - sched.n_prime_at(k) - 1) / sched.m_at(k);
    count += std::clamp<std::int64_t>(hits, 0, sched.p_at(k));
  }
  return count;
}

DigitString generate_point(const Schedule& sched, const Fill& fill, std::int64_t N) {
  if (N < 1) throw domain_error("depth must be >= 1");
  if (N > sched.point_horizon)
    throw budget_error("depth " + std::to_string(N) + " beyond the schedule horizon " +
                       std::to_string(sched.point_horizon));
  if (fill.kind == Fill::Kind::constant && (fill.value < 2 || fill.value > sched.M))
    throw domain_error("constant fill digit must lie in [2, M]");

  Rng rng(fill.seed, 0);
  DigitString out;
  out.reserve(N);
  Digit run_digit = -1;
  std::int64_t run_len = 0;  // current fill-run state, reset on any fixed digit
  for (std::int64_t pos = 1; pos <= N; ++pos) {
    const PointInfo info = classify_point(sched, pos);
    if (info.cls == PointClass::separator) {
      out.push_back(2 * sched.M);
      run_digit = -1;
      run_len = 0;
    } else if (info.cls == PointClass::forced) {
      out.push_back(2);
      run_digit = -1;
      run_len = 0;
    } else {
      Digit d = fill.kind == Fill::Kind::constant ? fill.value
                                                  : rng.uniform_int(2, sched.M);
      if (d == run_digit && run_len + 1 >= sched.m_at(info.block))
        d = run_digit == 2 ? 3 : 2;  // cap fill runs below the block's m_k
      if (d == run_digit) {
        ++run_len;
      } else {
        run_digit = d;
        run_len = 1;
      }
      out.push_back(d);
    }
  }
  return out;
}

ProfileReport run_profile_check(const Schedule& sched, const DigitString& digits) {
  if (digits.empty()) throw domain_error("run_profile_check of an empty digit string");
  const std::int64_t N = static_cast<std::int64_t>(digits.size());
  if (N > sched.point_horizon) throw budget_error("input longer than the schedule horizon");

  const runlength::RunTrajectory traj = runlength::run_trajectory(digits);
  ProfileReport rep;

  for (int k = 1; k < sched.k_max && rep.ok; ++k) {
    const std::int64_t plateau_lo = sched.n_prime_at(k) + sched.m_at(k);
    const std::int64_t plateau_hi = sched.n_prime_at(k + 1) + sched.m_at(k);
    const std::int64_t growth_hi = sched.n_prime_at(k + 1) + sched.m_at(k + 1) - 1;
    for (std::int64_t nn = plateau_lo; nn <= std::min(plateau_hi, N); ++nn) {
      if (traj[nn - 1] != sched.m_at(k)) {
        rep = {false, nn, sched.m_at(k), traj[nn - 1], rep.blocks_checked, {}};
        break;
      }
    }
    for (std::int64_t nn = plateau_hi + 1; rep.ok && nn <= std::min(growth_hi, N); ++nn) {
      const std::int64_t expected = nn - sched.n_prime_at(k + 1);
      if (traj[nn - 1] != expected) {
        rep = {false, nn, expected, traj[nn - 1], rep.blocks_checked, {}};
        break;
      }
    }
    if (rep.ok && growth_hi <= N) ++rep.blocks_checked;
  }

  for (int k = 1; k < sched.k_max; ++k) {
    BlockRatios row;
    row.k = k;
    row.m_over_nk_mk = static_cast<double>(sched.m_at(k)) /
                       static_cast<double>(sched.n_at(k) + sched.m_at(k));
    row.m_over_nk1_mk = static_cast<double>(sched.m_at(k)) /
                        static_cast<double>(sched.n_at(k + 1) + sched.m_at(k));
    row.u_k = to_double(sched.u_at(k));
    rep.ratios.push_back(row);
  }
  return rep;
}

DigitString project_f(const Schedule& sched, const DigitString& digits) {
  const std::int64_t N = static_cast<std::int64_t>(digits.size());
  if (N < 1) throw domain_error("project_f of an empty digit string");
  if (N > sched.point_horizon) throw budget_error("input longer than the schedule horizon");
  DigitString out;
  out.reserve(N);
  for (std::int64_t pos = 1; pos <= N; ++pos) {
    const Digit d = digits[pos - 1];
    switch (classify_point(sched, pos).cls) {
      case PointClass::separator:
        if (d != 2 * sched.M)
          throw domain_error("structural violation at position " + std::to_string(pos) +
                             ": expected separator digit " + std::to_string(2 * sched.M));
        break;
      case PointClass::forced:
        if (d != 2)
          throw domain_error("structural violation at position " + std::to_string(pos) +
                             ": expected forced digit 2");
        out.push_back(d);
        break;
      case PointClass::fill:
        if (d < 2 || d > sched.M)
          throw domain_error("structural violation at position " + std::to_string(pos) +
                             ": fill digit outside [2, M]");
        out.push_back(d);
        break;
    }
  }
  return out;
}

bool is_admissible(const Schedule& sched, const DigitString& word) {
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  if (n < 1 || n > sched.word_horizon) return false;
  for (std::int64_t j = 1; j <= n; ++j) {
    const Digit d = word[j - 1];
    if (word_forced(sched, j)) {
      if (d != 2) return false;
    } else if (d < 2 || d > sched.M) {
      return false;
    }
  }
  return true;
}

std::vector<DigitString> enumerate_D_n(const Schedule& sched, std::int64_t depth,
                                       std::int64_t enum_budget) {
  require_word_depth(sched, depth);
  const std::int64_t free_count = free_positions_up_to(sched, depth);
  const double words = std::pow(static_cast<double>(sched.M - 1),
                                static_cast<double>(free_count));
  if (words > static_cast<double>(enum_budget))
    throw budget_error("word enumeration budget exceeded at depth " + std::to_string(depth));

  std::vector<bool> forced(depth);
  for (std::int64_t j = 1; j <= depth; ++j) forced[j - 1] = word_forced(sched, j);

  std::vector<DigitString> out;
  out.reserve(static_cast<std::size_t>(words));
  DigitString cur(depth);
  auto rec = [&](auto&& self, std::int64_t pos) -> void {
    if (pos > depth) {
      out.push_back(cur);
      return;
    }
    if (forced[pos - 1]) {
      cur[pos - 1] = 2;
      self(self, pos + 1);
    } else {
      for (Digit d = 2; d <= sched.M; ++d) {
        cur[pos - 1] = d;
        self(self, pos + 1);
      }
    }
  };
  rec(rec, 1);
  return out;
}

FundamentalInterval fundamental_interval(const Schedule& sched, const DigitString& word) {
  if (!is_admissible(sched, word)) throw domain_error("inadmissible word");
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  require_word_depth(sched, n + 1);  // the child layer must exist
  const Rational len_I = expansion::cylinder_length(word);
  const Rational right = expansion::evaluate(word) + len_I;
  const bool forced_child = word_forced(sched, n + 1);
  const Rational length = forced_child ? len_I / 2
                                       : len_I * Rational(sched.M - 1, sched.M);
  return {expansion::Interval{right - length, right}, length};
}

// ── the measure ─────────────────────────────────────────────────────────────

MeasureParams measure_params(const Schedule& sched, const moran::SolveOptions& opts) {
  MeasureParams params;
  params.residual_tol = opts.tol;
  for (int k = 1; k <= sched.k_max; ++k)
    params.s.push_back(moran::solve_sM(to_double(sched.u_at(k)), sched.M, opts));
  return params;
}

int k0_for_epsilon(const Schedule& sched, const MeasureParams& params, double eps,
                   const moran::SolveOptions& opts) {
  if (!(eps > 0)) throw domain_error("epsilon must be positive");
  const double z = to_double(moran::zeta(sched.alpha, sched.beta));
  const double s_zeta = moran::solve_sM(z, sched.M, opts).value;
  const double threshold = eps * M_LN2 / std::log(static_cast<double>(sched.M) *
                                                  static_cast<double>(sched.M - 1));
  int k0 = sched.k_max + 1;
  for (int k = sched.k_max; k >= 1; --k) {
    if (std::abs(params.s[k - 1].value - s_zeta) >= threshold) break;
    k0 = k;
  }
  if (k0 > sched.k_max)
    throw domain_error("no block satisfies the exponent-continuity threshold at this k_max");
  return k0;
}

namespace {

// shared core: log mu and its error bound for a word of depth n
struct LogMu {
  double value = 0;
  double err = 0;
  double log_cyl = 0;  // log |I_n|
};

LogMu log_mu_core(const Schedule& sched, const MeasureParams& params, const DigitString& word) {
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  if (n > sched.word_horizon) throw budget_error("word beyond the schedule horizon");
  if (!is_admissible(sched, word)) throw domain_error("inadmissible word");

  double acc = 0;       // sum over determined positions of s_b log(d(d-1))
  double log_cyl = 0;   // sum log(d(d-1))
  double err_s_sum = 0; // accumulated exponent-error effect
  int k = 1;
  for (std::int64_t j = 1; j <= n; ++j) {
    while (j > sched.n_at(k) + sched.m_at(k)) ++k;
    const double ld = std::log(static_cast<double>(word[j - 1]) *
                               static_cast<double>(word[j - 1] - 1));
    acc += params.s[k - 1].value * ld;
    log_cyl += ld;
    err_s_sum += params.s[k - 1].error_bound * ld;
  }

  // undetermined positions of the partial block, if any
  double fm = 0;
  if (n < sched.word_horizon) {
    const int kc = word_block(sched, n + 1);
    const std::int64_t boundary_prev = kc >= 2 ? sched.n_at(kc - 1) + sched.m_at(kc - 1) : 0;
    if (n != boundary_prev) {
      const double s_hat = params.s[kc - 1].value;
      double free_marginal = 0;  // sum_{t=2}^{M} (t(t-1))^{-s}
      for (Digit t = 2; t <= sched.M; ++t)
        free_marginal += std::pow(static_cast<double>(t) * static_cast<double>(t - 1), -s_hat);
      const std::int64_t free_from = std::max(n + 1, boundary_prev + 1);
      const std::int64_t free_to = sched.n_at(kc);
      const std::int64_t n_free = std::max<std::int64_t>(0, free_to - free_from + 1);
      const std::int64_t forced_from = std::max(n + 1, sched.n_at(kc) + 1);
      const std::int64_t n_forced = sched.n_at(kc) + sched.m_at(kc) - forced_from + 1;
      fm = static_cast<double>(n_free) * std::log(free_marginal) -
           static_cast<double>(n_forced) * s_hat * M_LN2;
      const double lmm = std::log(static_cast<double>(sched.M) *
                                  static_cast<double>(sched.M - 1));
      err_s_sum += params.s[kc - 1].error_bound * lmm *
                   static_cast<double>(n_free + n_forced);
    }
  }

  const double eps = std::numeric_limits<double>::epsilon();
  const double rounding = 64 * eps * (std::abs(acc) + std::abs(fm) + 1);
  return {-acc + fm, err_s_sum + rounding, -log_cyl};
}

}  // namespace

moran::CertifiedValue measure_mu(const Schedule& sched, const MeasureParams& params,
                                 const DigitString& word) {
  const LogMu lm = log_mu_core(sched, params, word);
  const double v = std::exp(lm.value);
  // |e^{x+e} - e^x| <= e^x (e^e - 1); for the tiny e here, ~ e^x * e
  return {v, v * (std::expm1(lm.err) + 4 * std::numeric_limits<double>::epsilon())};
}

moran::CertifiedValue log_measure_mu(const Schedule& sched, const MeasureParams& params,
                                     const DigitString& word) {
  const LogMu lm = log_mu_core(sched, params, word);
  return {lm.value, lm.err};
}

MuCheckReport check_mu_consistency(const Schedule& sched, const MeasureParams& params,
                                   std::int64_t depth, std::int64_t enum_budget) {
  require_word_depth(sched, depth);
  require_word_depth(sched, depth + 1);  // leaf regime needs the child layer
  const std::int64_t free_count = free_positions_up_to(sched, depth);
  if (std::pow(static_cast<double>(sched.M - 1), static_cast<double>(free_count)) >
      static_cast<double>(enum_budget))
    throw budget_error("word enumeration budget exceeded at depth " + std::to_string(depth));

  MuCheckReport rep;
  rep.min_log_ratio = std::numeric_limits<double>::infinity();
  double total = 0, comp = 0;

  std::vector<bool> forced(depth + 1);
  std::vector<int> block(depth + 1);
  for (std::int64_t j = 1; j <= depth + 1; ++j) {
    forced[j - 1] = word_forced(sched, j);
    block[j - 1] = word_block(sched, j);
  }
  // per-depth future-marginal table (word independent)
  std::vector<double> fm(depth + 1, 0.0);
  std::vector<double> free_marginal_log(sched.k_max);
  for (int k = 1; k <= sched.k_max; ++k) {
    double m = 0;
    for (Digit t = 2; t <= sched.M; ++t)
      m += std::pow(static_cast<double>(t) * static_cast<double>(t - 1),
                    -params.s[k - 1].value);
    free_marginal_log[k - 1] = std::log(m);
  }
  for (std::int64_t j = 0; j <= depth; ++j) {
    const int kc = block[j];  // block of position j+1
    const std::int64_t boundary_prev = kc >= 2 ? sched.n_at(kc - 1) + sched.m_at(kc - 1) : 0;
    if (j == boundary_prev) continue;  // block boundary: mass fixed by the product rule
    const std::int64_t free_to = sched.n_at(kc);
    const std::int64_t n_free = std::max<std::int64_t>(0, free_to - j);
    const std::int64_t forced_from = std::max(j + 1, free_to + 1);
    const std::int64_t n_forced = sched.n_at(kc) + sched.m_at(kc) - forced_from + 1;
    fm[j] = static_cast<double>(n_free) * free_marginal_log[kc - 1] -
            static_cast<double>(n_forced) * params.s[kc - 1].value * M_LN2;
  }

  const double log_regime = forced[depth] ? std::log(0.5)
                                          : std::log(static_cast<double>(sched.M - 1) /
                                                     static_cast<double>(sched.M));

  // DFS: returns mu of the node at position pos-1 with accumulated exponents
  auto rec = [&](auto&& self, std::int64_t pos, double acc, double cyl) -> double {
    const std::int64_t j = pos - 1;  // depth of this node
    const double mu_here = std::exp(-acc + fm[j]);
    if (j == depth) {
      ++rep.words;
      const double y = mu_here - comp;
      const double v = total + y;
      comp = (v - total) - y;
      total = v;
      const double log_mu = -acc;  // fm[depth] vanishes at a block boundary;
                                   // kept general below for mid-block depths
      const double log_J = log_regime - cyl;
      rep.min_log_ratio = std::min(rep.min_log_ratio, (log_mu + fm[j]) / log_J);
      return mu_here;
    }
    double child_sum = 0;
    const double s_hat = params.s[block[j] - 1].value;
    if (forced[j]) {
      child_sum = self(self, pos + 1, acc + s_hat * M_LN2, cyl + M_LN2);
    } else {
      for (Digit d = 2; d <= sched.M; ++d) {
        const double ld = std::log(static_cast<double>(d) * static_cast<double>(d - 1));
        child_sum += self(self, pos + 1, acc + s_hat * ld, cyl + ld);
      }
    }
    ++rep.nodes;
    rep.max_node_gap = std::max(rep.max_node_gap, std::abs(mu_here - child_sum));
    return mu_here;
  };
  rec(rec, 1, 0.0, 0.0);

  rep.total_mass = total;
  // |total - 1| is driven by the per-block residuals: each of the L_k free
  // positions contributes a factor F(s_hat) = 1 +- residual
  double bound = 0;
  for (int k = 1; k <= sched.k_max; ++k) {
    const std::int64_t prev = k >= 2 ? sched.n_at(k - 1) + sched.m_at(k - 1) : 0;
    if (prev >= depth) break;
    const std::int64_t lk = sched.n_at(k) - prev;
    bound += static_cast<double>(lk) * (params.residual_tol + params.s[k - 1].error_bound);
  }
  rep.mass_err_bound = 2 * bound + 1e-12;
  return rep;
}

Rational gap(const Schedule& sched, const DigitString& word, std::int64_t enum_budget) {
  if (!is_admissible(sched, word)) throw domain_error("inadmissible word");
  const std::vector<Rational> gaps = gap_table(sched, static_cast<std::int64_t>(word.size()),
                                               enum_budget);
  // lexicographic index of the word among admissible words of its depth
  std::int64_t index = 0;
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  std::vector<std::int64_t> weight(n + 1);
  weight[n] = 1;
  for (std::int64_t j = n; j >= 1; --j)
    weight[j - 1] = weight[j] * (word_forced(sched, j) ? 1 : sched.M - 1);
  for (std::int64_t j = 1; j <= n; ++j)
    if (!word_forced(sched, j)) index += (word[j - 1] - 2) * weight[j];
  return gaps[index];
}

std::vector<Rational> gap_table(const Schedule& sched, std::int64_t depth,
                                std::int64_t enum_budget) {
  const std::vector<DigitString> words = enumerate_D_n(sched, depth, enum_budget);
  require_word_depth(sched, depth + 1);
  const bool forced_child = word_forced(sched, depth + 1);
  const Rational frac = forced_child ? Rational(1, 2) : Rational(1, sched.M);

  struct Item {
    Rational left;   // of the fundamental interval
    Rational right;
    std::size_t idx;
  };
  std::vector<Item> items;
  items.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Rational len_I = expansion::cylinder_length(words[i]);
    const Rational right = expansion::evaluate(words[i]) + len_I;
    items.push_back({right - len_I + frac * len_I, right, i});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.left < b.left; });

  std::vector<Rational> out(words.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool have = false;
    Rational g;
    if (i > 0) {
      g = items[i].left - items[i - 1].right;
      have = true;
    }
    if (i + 1 < items.size()) {
      const Rational g2 = items[i + 1].left - items[i].right;
      if (!have || g2 < g) g = g2;
      have = true;
    }
    if (!have) throw domain_error("gap undefined: only one word at this depth");
    out[items[i].idx] = g;
  }
  return out;
}

HolderReport holder_estimate(const Schedule& sched, std::int64_t depth,
                             std::int64_t pair_count, std::uint64_t seed) {
  if (depth < 2 || depth > sched.point_horizon)
    throw domain_error("holder_estimate depth out of range");
  if (pair_count < 1) throw domain_error("pair_count must be >= 1");

  const double log_infl_base = std::log(static_cast<double>(2 * sched.M) *
                                        static_cast<double>(2 * sched.M - 1));
  std::vector<double> lx, lf;
  HolderReport rep;
  for (std::int64_t i = 0; i < pair_count; ++i) {
    const DigitString a =
        generate_point(sched, Fill::seeded(derive_stream_key(seed, 2 * i)), depth);
    const DigitString b =
        generate_point(sched, Fill::seeded(derive_stream_key(seed, 2 * i + 1)), depth);
    if (a == b) continue;
    std::int64_t agree = 0;
    while (a[agree] == b[agree]) ++agree;

    const Rational dx = abs(expansion::evaluate(a) - expansion::evaluate(b));
    const Rational df =
        abs(expansion::evaluate(project_f(sched, a)) - expansion::evaluate(project_f(sched, b)));
    lx.push_back(log_rational(dx));
    lf.push_back(log_rational(df));

    if (agree >= 1) {
      const DigitString prefix(a.begin(), a.begin() + agree);
      const DigitString image = project_f(sched, prefix);
      const Rational bound = image.empty() ? Rational(1) : expansion::cylinder_length(image);
      if (df > bound) rep.inflation_ok = false;
      const std::int64_t t = deletion_count(sched, agree);
      if (t >= 1) {
        const double ratio = (log_rational(df) -
                              log_rational(expansion::cylinder_length(prefix))) /
                             (static_cast<double>(t) * log_infl_base);
        rep.max_inflation = std::max(rep.max_inflation, ratio);
      }
    }
  }
  if (lx.size() < 2) throw domain_error("degenerate sample: fewer than two distinct pairs");

  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += lf[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * lf[i];
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.intercept = (sy - rep.slope * sx) / n;
  rep.pairs_used = static_cast<std::int64_t>(lx.size());
  rep.min_log_dist = *std::min_element(lx.begin(), lx.end());
  rep.max_log_dist = *std::max_element(lx.begin(), lx.end());
  return rep;
}

}  // namespace luroth::construction
