// Acceptance suite: one checked criterion per numbered block, each printed
// as a single [PASS]/[FAIL] line with measured values and elapsed time.
// Exit status is nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "luroth/construction.hpp"
#include "luroth/expansion.hpp"
#include "luroth/experiments.hpp"
#include "luroth/moran.hpp"
#include "luroth/rng.hpp"
#include "luroth/runlength.hpp"

using namespace luroth;

namespace {

struct Harness {
  bool all_ok = true;

  void criterion(int id, const std::string& name,
                 const std::function<bool(std::ostringstream&)>& fn) {
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail << " exception: " << e.what();
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << " ("
              << detail.str() << " elapsed " << sec << "s)" << std::endl;
    all_ok = all_ok && ok;
  }
};

Rational rat(long long p, long long q) { return Rational(Integer(p), Integer(q)); }

// definitional O(n^2) run-length oracle, independent of the library path
std::int64_t brute_max_run(const DigitString& w, std::size_t n) {
  std::int64_t best = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t k = j + 1;
    while (k < n && w[k] == w[j]) ++k;
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(k - j));
  }
  return best;
}

}  // namespace

int main() {
  Harness h;

  // 1 ─ expansion round trip -------------------------------------------------
  h.criterion(1, "expansion round-trip, 500 rationals, depths 1..40", [](auto& d) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    for (int trial = 0; trial < 500; ++trial) {
      const std::int64_t q = rng.uniform_int(2, 1'000'000);
      const std::int64_t p = rng.uniform_int(1, q);
      const Rational x = rat(p, q);
      const DigitString w = expansion::digits(x, 40);
      for (std::size_t n = 1; n <= 40; ++n) {
        const DigitString prefix(w.begin(), w.begin() + n);
        if (!expansion::cylinder(prefix).contains(x)) {
          d << "failed at " << to_string(x) << " depth " << n << ";";
          return false;
        }
      }
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << "all containments exact, runtime " << sec << "s < 10s;";
    return sec < 10.0;
  });

  // 2 ─ telescoping partition ----------------------------------------------
  h.criterion(2, "telescoping partition of depth-1 cylinders up to T=10^4", [](auto& d) {
    Rational sum = 0;
    for (Digit t = 2; t <= 10'000; ++t) {
      sum += expansion::cylinder_length({t});
      if (sum != Rational(1) - rat(1, t)) {
        d << "mismatch at T=" << t << ";";
        return false;
      }
    }
    d << "exact equality at every T;";
    return true;
  });

  // 3 ─ run-length oracle ----------------------------------------------------
  h.criterion(3, "streaming run length vs definitional brute force", [](auto& d) {
    Rng rng(3003);
    for (int trial = 0; trial < 1000; ++trial) {
      DigitString w;
      const std::int64_t len = rng.uniform_int(1, 500);
      const std::int64_t hi = rng.uniform_int(2, 6);
      for (std::int64_t i = 0; i < len; ++i) w.push_back(rng.uniform_int(2, hi));
      if (runlength::max_run(w) != brute_max_run(w, w.size())) {
        d << "random mismatch at trial " << trial << ";";
        return false;
      }
    }
    for (int len = 1; len <= 12; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        DigitString w;
        for (int i = 0; i < len; ++i) w.push_back(2 + ((mask >> i) & 1));
        const auto traj = runlength::run_trajectory(w);
        for (std::size_t n = 1; n <= w.size(); ++n) {
          if (traj[n - 1] != brute_max_run(w, n)) {
            d << "exhaustive mismatch, len " << len << " mask " << mask << ";";
            return false;
          }
        }
      }
    }
    d << "1000 random strings and all {2,3}-strings to length 12 agree exactly;";
    return true;
  });

  // 4 ─ full-series root at 0 and strict monotonicity -------------------------
  h.criterion(4, "solve_s(0) = 1 within 1e-10, strictly decreasing in u", [](auto& d) {
    const auto s0 = moran::solve_s(0.0, {.tol = 1e-10});
    if (std::abs(s0.value - 1.0) > 1e-10) {
      d << "s(0) = " << s0.value << ";";
      return false;
    }
    double prev = 2;
    for (double u : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double s = moran::solve_s(u, {.tol = 1e-10}).value;
      if (!(s < prev)) {
        d << "not decreasing at u=" << u << ";";
        return false;
      }
      prev = s;
    }
    d << "|s(0)-1| = " << std::abs(s0.value - 1.0) << ", chain strictly decreasing;";
    return true;
  });

  // 5 ─ truncated roots approaching the full root ------------------------------
  h.criterion(5, "|s_M(u,10^4) - s(u)| < 1e-4 for u in {0,1,2}, s_M monotone in M",
              [](auto& d) {
    bool ok = true;
    for (double u : {0.0, 1.0, 2.0}) {
      double prev = -1;
      for (std::int64_t M : {10, 100, 1000, 10000}) {
        const double sM = moran::solve_sM(u, M, {.tol = 1e-11}).value;
        if (sM + 1e-12 < prev) {
          d << "s_M not monotone at u=" << u << " M=" << M << ";";
          ok = false;
        }
        prev = sM;
      }
      const double s_inf = moran::solve_s(u, {.tol = 1e-11}).value;
      const double gap = std::abs(prev - s_inf);
      d << " u=" << u << " gap=" << gap << (gap < 1e-4 ? " ok;" : " exceeds 1e-4;");
      if (gap >= 1e-4) ok = false;
    }
    return ok;
  });

  // 6 ─ depth independence of the enumerated pressure root ---------------------
  h.criterion(6, "enumerated pressure root is depth-independent (M=3..5, n=1..6)",
              [](auto& d) {
    double worst = 0;
    for (std::int64_t M = 3; M <= 5; ++M) {
      const double direct = moran::solve_sM(0.0, M, {.tol = 1e-12}).value;
      for (int depth = 1; depth <= 6; ++depth) {
        const double via = moran::finite_depth_pressure_root(M, depth, {.tol = 1e-12}).value;
        worst = std::max(worst, std::abs(via - direct));
      }
    }
    d << "max |enumerated - direct| = " << worst << ";";
    return worst < 1e-10;
  });

  // 7 ─ dimension case table ---------------------------------------------------
  h.criterion(7, "dimension formula case table", [](auto& d) {
    if (moran::dim_E(Rational(0), Rational(0)).value != 1.0) {
      d << "(0,0) != 1;";
      return false;
    }
    if (moran::dim_E(rat(2, 5), rat(1, 2)).value != 0.0) {
      d << "(0.4,0.5) != 0;";
      return false;
    }
    if (moran::dim_E(rat(1, 2), rat(1, 2)).value != 0.0) {
      d << "(0.5,0.5) != 0;";
      return false;
    }
    for (int i = 0; i <= 4; ++i) {
      if (moran::dim_E(rat(i, 4), Rational(1)).value != 0.0) {
        d << "beta=1 row not 0 at alpha=" << i << "/4;";
        return false;
      }
    }
    const Rational z = moran::zeta(rat(1, 5), rat(1, 2));
    if (z != Rational(2)) {
      d << "zeta(1/5,1/2) = " << to_string(z) << " != 2;";
      return false;
    }
    const auto dim = moran::dim_E(rat(1, 5), rat(1, 2), {.tol = 1e-11});
    const auto s2 = moran::solve_s(2.0, {.tol = 1e-11});
    const double diff = std::abs(dim.value - s2.value);
    d << "zeta exact, |dim(0.2,0.5) - s(2)| = " << diff << ";";
    return diff <= dim.error_bound + s2.error_bound + 1e-12;
  });

  // 8 ─ schedule asymptotics ----------------------------------------------------
  h.criterion(8, "schedule ratios at k=8 for (0.2, 0.5)", [](auto& d) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = construction::build_schedule(rat(1, 5), rat(1, 2), 3, 9);
    const Rational beta_ratio = rat(s.m_at(8), s.n_at(8) + s.m_at(8));
    const Rational alpha_ratio = rat(s.m_at(8), s.n_at(9) + s.m_at(8));
    const Rational tol = rat(1, 100);
    const bool ok = abs(beta_ratio - rat(1, 2)) < tol && abs(alpha_ratio - rat(1, 5)) < tol &&
                    abs(s.u_at(8) - Rational(2)) < tol;
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << "m8/(n8+m8)=" << to_double(beta_ratio) << " m8/(n9+m8)=" << to_double(alpha_ratio)
      << " u8=" << to_double(s.u_at(8)) << ", runtime " << sec << "s < 1s;";
    return ok && sec < 1.0;
  });

  // 9 ─ run profile of generated points ------------------------------------------
  h.criterion(9, "piecewise run profile exact through block 5, both fills", [](auto& d) {
    const auto s = construction::build_schedule(rat(1, 5), rat(1, 2), 3, 6);
    const std::int64_t depth = s.n_prime_at(6) + s.m_at(6);
    for (const auto& fill :
         {construction::Fill::constant(2), construction::Fill::constant(3),
          construction::Fill::seeded(2024), construction::Fill::seeded(99)}) {
      const DigitString pt = construction::generate_point(s, fill, depth);
      const auto rep = construction::run_profile_check(s, pt);
      if (!rep.ok || rep.blocks_checked < 5) {
        d << "mismatch at n=" << rep.first_mismatch_n << " expected " << rep.expected
          << " got " << rep.actual << ";";
        return false;
      }
    }
    d << "constant(2), constant(3) and two seeded fills match exactly on blocks 1..5;";
    return true;
  });

  // 10 ─ measure consistency at depth 42 -----------------------------------------
  construction::MuCheckReport mu_report{};
  bool mu_report_ready = false;
  h.criterion(10, "measure additivity and total mass at depth 42 (2^18 words)",
              [&](auto& d) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = construction::build_schedule(rat(1, 5), rat(1, 2), 3, 3);
    const auto params = construction::measure_params(s, {.tol = 1e-12});
    mu_report = construction::check_mu_consistency(s, params, 42);
    mu_report_ready = true;
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << "words=" << mu_report.words << " max node gap=" << mu_report.max_node_gap
      << " |total-1|=" << std::abs(mu_report.total_mass - 1.0) << ", runtime " << sec
      << "s < 120s;";
    return mu_report.words == (std::int64_t{1} << 18) && mu_report.max_node_gap < 1e-10 &&
           std::abs(mu_report.total_mass - 1.0) < 1e-6 && sec < 120.0;
  });

  // 11 ─ gap lower bound -----------------------------------------------------------
  h.criterion(11, "gap >= length/(M-1) for every word at depths 1..20", [](auto& d) {
    const auto s = construction::build_schedule(rat(1, 5), rat(1, 2), 3, 3);
    std::int64_t checked = 0;
    for (std::int64_t depth = 1; depth <= 20; ++depth) {
      const auto words = construction::enumerate_D_n(s, depth);
      const auto gaps = construction::gap_table(s, depth);
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto J = construction::fundamental_interval(s, words[i]);
        if (gaps[i] * (s.M - 1) < J.length) {  // exact rational comparison
          d << "violated at depth " << depth << " word " << format_digits(words[i]) << ";";
          return false;
        }
        ++checked;
      }
    }
    d << checked << " words verified exactly;";
    return true;
  });

  // 12 ─ mass-vs-length trend --------------------------------------------------------
  h.criterion(12, "min log mu / log |J| at depth 42 >= s_M(zeta) - 0.1", [&](auto& d) {
    if (!mu_report_ready) {
      d << "depends on criterion 10 scan;";
      return false;
    }
    const double s_zeta = moran::solve_sM(2.0, 3, {.tol = 1e-11}).value;
    d << "min ratio=" << mu_report.min_log_ratio << " threshold=" << s_zeta - 0.1 << ";";
    return mu_report.min_log_ratio >= s_zeta - 0.1;
  });

  // 13 ─ law of large numbers ----------------------------------------------------
  h.criterion(13, "run-length LLN band and shrinking IQR", [](auto& d) {
    const auto start = std::chrono::steady_clock::now();
    const auto small = experiments::lln_experiment({.seed = 13, .trials = 200, .n = 1'000});
    const auto large = experiments::lln_experiment({.seed = 13, .trials = 200, .n = 100'000});
    const double iqr_small = small.q75 - small.q25;
    const double iqr_large = large.q75 - large.q25;
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << "mean=" << large.mean << " in [0.85,1.25], IQR " << iqr_small << " -> " << iqr_large
      << ", runtime " << sec << "s < 30s;";
    return large.mean >= 0.85 && large.mean <= 1.25 && iqr_large < iqr_small && sec < 30.0;
  });

  // 14 ─ Holder slope ---------------------------------------------------------------
  h.criterion(14, "deletion-map log-distance slope >= 1/1.2 - 0.05", [](auto& d) {
    const auto s = construction::build_schedule(rat(1, 5), rat(1, 2), 3, 6);
    const auto rep = construction::holder_estimate(s, 40, 1000, 4040);
    d << "slope=" << rep.slope << " pairs=" << rep.pairs_used
      << " inflation bound " << (rep.inflation_ok ? "holds" : "violated") << ";";
    return rep.slope >= 1.0 / 1.2 - 0.05 && rep.inflation_ok;
  });

  std::cout << (h.all_ok ? "acceptance: all criteria passed"
                         : "acceptance: at least one criterion failed")
            << std::endl;
  return h.all_ok ? 0 : 1;
}
