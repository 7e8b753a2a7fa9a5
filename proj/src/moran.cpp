#include "luroth/moran.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <type_traits>
#include <vector>

#include "luroth/errors.hpp"

namespace luroth::moran {

namespace {

template <class Real>
struct Cert {
  Real value{};
  Real err{};
};

// ── certified series evaluation ─────────────────────────────────────────────

// Two-sided closed-form bracket for the tail  T(N) = sum_{t>N} (t(t-1))^{-s},
// s > 1/2, N >= 8. The summand f(x) = (x(x-1))^{-s} is decreasing and convex
// with decreasing f'', so the midpoint rule brackets the sum:
//   I - (f''(N+1/2) - f'(N+1/2))/24  <=  T(N)  <=  I,
//   I = int_{N+1/2}^inf f = int_N^inf (y^2 - 1/4)^{-s} dy,
// and I itself is squeezed between int y^{-2s} and its (1 - 1/(4N^2))^{-s}
// inflation. Bracket width is O(s N^{-2s-1}); the upper side reproduces the
// coarse (t-1)^2 integral bound.
template <class Real>
Cert<Real> tail_bracket(const Real& s, std::int64_t N) {
  using std::pow;
  const Real n = Real(N);
  const Real two_s1 = 2 * s - 1;
  const Real i_lo = pow(n, Real(1) - 2 * s) / two_s1;
  const Real i_hi = i_lo * pow(1 - 1 / (4 * n * n), -s);
  const Real g = n * n - Real(1) / 4;  // (N+1/2)(N-1/2)
  const Real fp = 2 * s * n * pow(g, -s - 1);
  const Real fpp = s * pow(g, -s - 2) * (4 * (s + 1) * n * n - 2 * g);
  Real lo = i_lo - (fpp + fp) / 24;
  if (lo < 0) lo = 0;
  return {(lo + i_hi) / 2, (i_hi - lo) / 2};
}

template <class Real>
Cert<Real> series_infinite(const Real& u, const Real& s, const Real& tol,
                           std::int64_t max_terms) {
  using std::exp;
  using std::log;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tiny = (std::numeric_limits<Real>::min)();
  const Real ln2 = log(Real(2));
  const Real scale = exp(-s * u * ln2);  // 2^{-us}

  std::int64_t N = 64;
  Cert<Real> tb = tail_bracket(s, N);
  while (scale * tb.err > tol / 2 && 2 * N <= max_terms) {
    N *= 2;
    tb = tail_bracket(s, N);
  }
  if (scale * tb.err > tol / 2)
    throw budget_error("pressure series truncation budget cannot reach the requested tolerance");

  // compensated sum of exp(-s*(log(t(t-1)) + u ln2)), t = 2..N
  Real sum = 0, comp = 0;
  const Real shift = s * u * ln2;
  for (std::int64_t t = 2; t <= N; ++t) {
    const Real term = exp(-s * log(Real(t) * Real(t - 1)) - shift);
    const Real y = term - comp;
    const Real v = sum + y;
    comp = (v - sum) - y;
    sum = v;
  }
  const Real value = sum + scale * tb.value;
  // rounding: per-term log/exp amplification plus the compensated sum, with
  // an absolute underflow guard for subnormal terms
  const Real rounding = 512 * eps * value + Real(N + 16) * tiny;
  return {value, scale * tb.err * (1 + 1024 * eps) + rounding};
}

template <class Real>
Cert<Real> series_finite(const Real& u, std::int64_t M, const Real& s) {
  using std::exp;
  using std::log;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tiny = (std::numeric_limits<Real>::min)();
  const Real ln2 = log(Real(2));
  Real sum = 0, comp = 0;
  const Real shift = s * u * ln2;
  for (std::int64_t t = 2; t <= M; ++t) {
    const Real term = exp(-s * log(Real(t) * Real(t - 1)) - shift);
    const Real y = term - comp;
    const Real v = sum + y;
    comp = (v - sum) - y;
    sum = v;
  }
  return {sum, 512 * eps * sum + Real(M + 16) * tiny};
}

// ── bisection ───────────────────────────────────────────────────────────────

// Bisection on a strictly decreasing certified map F with invariant
// F(lo) > 1 >= F(hi); both endpoint signs must be certified by the caller.
// Returns once an evaluation's enclosure straddles 1 within tol, i.e. the
// residual contract holds; error_bound is the live bracket half-width.
template <class Real, class Eval>
CertifiedValue bisect_decreasing(Eval&& F, Real lo, Real hi, const Real& tol, int max_iter) {
  using std::abs;
  for (int it = 0; it < max_iter; ++it) {
    const Real mid = (lo + hi) / 2;
    if (!(mid > lo && mid < hi)) {
      // Bracket exhausted at working precision with both endpoint signs
      // certified: the enclosure is as tight as this tier allows. The
      // residual check saturates here (the slope of F can dwarf any
      // representable step); callers needing it certified raise
      // precision_bits.
      return {static_cast<double>(mid), static_cast<double>(hi - lo)};
    }
    const Cert<Real> c = F(mid, tol);
    if (c.value - c.err > 1) {
      lo = mid;
    } else if (c.value + c.err < 1) {
      hi = mid;
    } else {
      const Real resid = abs(c.value - 1) + c.err;
      if (resid <= tol)
        return {static_cast<double>(mid), static_cast<double>(hi - lo)};
      throw budget_error("pressure root residual cannot be certified at this precision");
    }
  }
  throw budget_error("bisection iteration budget exceeded");
}

// ── precision tiers ─────────────────────────────────────────────────────────

using Quad = boost::multiprecision::cpp_bin_float_quad;
using Big = boost::multiprecision::cpp_bin_float_100;

template <class F>
auto dispatch_real(unsigned bits, F&& f) {
  if (bits <= 53) return f(std::type_identity<double>{});
  if (bits <= 64) return f(std::type_identity<long double>{});
  if (bits <= 113) return f(std::type_identity<Quad>{});
  if (bits <= 332) return f(std::type_identity<Big>{});
  throw budget_error("precision above 332 bits is not supported");
}

void require_nonneg_u(double u) {
  if (u < 0 || !std::isfinite(u)) throw domain_error("u must be a finite non-negative real");
}

}  // namespace

CertifiedValue pressure_sum(double u, std::optional<std::int64_t> cutoff, double s,
                            double tol, unsigned precision_bits, std::int64_t max_terms) {
  require_nonneg_u(u);
  if (!(s > 0)) throw domain_error("series exponent s must be positive");
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  if (cutoff) {
    if (*cutoff < 2) throw domain_error("cutoff M must be >= 2");
    if (*cutoff > max_terms) throw budget_error("cutoff exceeds the term budget");
  } else if (s <= 0.5) {
    throw domain_error("the full series diverges for s <= 1/2");
  }
  return dispatch_real(precision_bits, [&](auto tag) -> CertifiedValue {
    using R = typename decltype(tag)::type;
    const Cert<R> c = cutoff ? series_finite<R>(R(u), *cutoff, R(s))
                             : series_infinite<R>(R(u), R(s), R(tol), max_terms);
    if (static_cast<double>(c.err) > tol)
      throw budget_error("pressure sum error bound exceeds the requested tolerance");
    return {static_cast<double>(c.value), static_cast<double>(c.err)};
  });
}

CertifiedValue solve_s(double u, const SolveOptions& opts) {
  require_nonneg_u(u);
  if (!(opts.tol > 0)) throw domain_error("tolerance must be positive");
  return dispatch_real(opts.precision_bits, [&](auto tag) -> CertifiedValue {
    using R = typename decltype(tag)::type;
    const R eps = std::numeric_limits<R>::epsilon();
    const R tol = R(opts.tol);
    auto F = [&](const R& s, const R& t) {
      return series_infinite<R>(R(u), s, t, opts.max_terms);
    };

    // Upper bracket: F_u(1) = 2^{-u} <= 1 exactly, by the telescoping
    // identity sum 1/(t(t-1)) = 1. Lower bracket by halving the offset
    // above 1/2 until F is certified > 1 (F blows up at 1/2+).
    R hi = 1;
    R delta = R(1) / 4;
    const R coarse = std::max(tol, R(1) / 64);
    while (true) {
      const R lo = R(1) / 2 + delta;
      const Cert<R> c = F(lo, coarse);
      if (c.value - c.err > 1)
        return bisect_decreasing<R>(F, lo, hi, tol, opts.max_iter);
      if (c.value + c.err < 1 && lo < hi) hi = lo;
      delta /= 2;
      if (delta < 8 * eps) {
        // Root pinched against 1/2 at working precision: the enclosure
        // (1/2, 1/2 + 2 delta] is still certified even though the residual
        // check saturates.
        return {static_cast<double>(R(1) / 2 + delta), static_cast<double>(2 * delta)};
      }
    }
  });
}

CertifiedValue solve_sM(double u, std::int64_t M, const SolveOptions& opts) {
  require_nonneg_u(u);
  if (M < 2) throw domain_error("cutoff M must be >= 2");
  if (M > opts.max_terms) throw budget_error("cutoff exceeds the term budget");
  if (M == 2) return {0.0, 0.0};  // (2^{-u}/2)^s = 1 forces s = 0
  return dispatch_real(opts.precision_bits, [&](auto tag) -> CertifiedValue {
    using R = typename decltype(tag)::type;
    auto F = [&](const R& s, const R&) { return series_finite<R>(R(u), M, s); };
    // F(0) = M-1 >= 2 and F(1) = 2^{-u}(1 - 1/M) < 1: [0,1] brackets the root.
    return bisect_decreasing<R>(F, R(0), R(1), R(opts.tol), opts.max_iter);
  });
}

Rational zeta(const Rational& alpha, const Rational& beta) {
  if (!(beta > 0 && beta < 1))
    throw domain_error("zeta requires 0 < beta < 1");
  if (!(alpha >= 0 && alpha < beta / (1 + beta)))
    throw domain_error("zeta requires 0 <= alpha < beta/(1+beta)");
  return beta * beta * (1 - alpha) / ((1 - beta) * (beta - alpha * (1 + beta)));
}

DimCase dim_case(const Rational& alpha, const Rational& beta) {
  if (alpha < 0 || beta > 1 || alpha > beta)
    throw domain_error("dimension parameters must satisfy 0 <= alpha <= beta <= 1");
  if (beta == 0) return DimCase::one;
  if (beta < 1 && alpha < beta / (1 + beta)) return DimCase::middle;
  return DimCase::zero;
}

CertifiedValue dim_E(const Rational& alpha, const Rational& beta, const SolveOptions& opts) {
  switch (dim_case(alpha, beta)) {
    case DimCase::one:
      return {1.0, 0.0};
    case DimCase::zero:
      return {0.0, 0.0};
    case DimCase::middle: {
      const Rational z = zeta(alpha, beta);
      const double zd = to_double(z);
      CertifiedValue root = solve_s(zd, opts);
      // slack for converting the exact zeta to double
      root.error_bound += zd * 0x1p-50;
      return root;
    }
  }
  throw domain_error("unreachable dimension case");
}

CertifiedValue finite_depth_pressure_root(std::int64_t M, int depth,
                                          const SolveOptions& opts,
                                          std::int64_t enum_budget) {
  if (M < 2) throw domain_error("alphabet bound M must be >= 2");
  if (depth < 1) throw domain_error("depth must be >= 1");
  double words_est = std::pow(static_cast<double>(M - 1), depth);
  if (words_est > static_cast<double>(enum_budget))
    throw budget_error("word enumeration budget exceeded");
  if (M == 2) return {0.0, 0.0};  // single word per depth, length 2^{-n}

  // log cylinder lengths of all (M-1)^depth words, built level by level
  std::vector<double> log_len{0.0};
  for (int level = 0; level < depth; ++level) {
    std::vector<double> next;
    next.reserve(log_len.size() * (M - 1));
    for (double ll : log_len)
      for (std::int64_t d = 2; d <= M; ++d)
        next.push_back(ll + std::log(static_cast<double>(d) * static_cast<double>(d - 1)));
    log_len = std::move(next);
  }

  auto F = [&](const double& s, const double&) -> Cert<double> {
    double sum = 0, comp = 0;
    for (double ll : log_len) {
      const double term = std::exp(-s * ll);
      const double y = term - comp;
      const double v = sum + y;
      comp = (v - sum) - y;
      sum = v;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    return {sum, 512 * eps * sum + static_cast<double>(log_len.size()) * 4e-308};
  };
  // F(0) = (M-1)^depth >= 2, F(1) = (1 - 1/M)^depth < 1
  return bisect_decreasing<double>(F, 0.0, 1.0, opts.tol, opts.max_iter);
}

}  // namespace luroth::moran
