#pragma once

#include <cstdint>
#include <optional>

#include "luroth/rational.hpp"

namespace luroth::moran {

/// A numeric result with a rigorous enclosure: the true quantity lies in
/// [value - error_bound, value + error_bound].
struct CertifiedValue {
  double value = 0.0;
  double error_bound = 0.0;
};

struct SolveOptions {
  double tol = 1e-10;             ///< residual target |F(s_hat) - 1| <= tol
  int max_iter = 400;             ///< bisection budget
  unsigned precision_bits = 53;   ///< 53 = double, <=64 long double, <=113 quad, <=332 bin_float_100
  std::int64_t max_terms = std::int64_t{1} << 23;  ///< series truncation budget
};

/// Certified evaluation of the pressure series
///   F(s) = sum_{t=2}^{cutoff} (2^{-u} / (t(t-1)))^s.
///
/// Finite cutoff: direct summation, error is rounding only. Infinite
/// cutoff (cutoff == nullopt): partial sum to an adaptive N plus a
/// two-sided closed-form bracket of the tail; the bracket midpoint is
/// added to the value and its half-width (plus rounding) is the error.
/// The upper side of the bracket is the integral bound
/// 2^{-us} (N^{-2s} + N^{1-2s}/(2s-1)) obtained from t(t-1) >= (t-1)^2.
///
/// Requires s > 0; the infinite series diverges for s <= 1/2 (terms decay
/// like t^{-2s}) and such calls raise domain_error. Throws budget_error
/// when max_terms cannot certify the requested tol.
CertifiedValue pressure_sum(double u, std::optional<std::int64_t> cutoff, double s,
                            double tol, unsigned precision_bits = 53,
                            std::int64_t max_terms = SolveOptions{}.max_terms);

/// Root of F_u(s) = 1 over the full digit alphabet, bracketed in (1/2, 1].
/// s(0) = 1 (the u = 0 series telescopes to 1 at s = 1); s(u) is strictly
/// decreasing in u. Returned error_bound encloses the exact root (bisection
/// bracket half-width); the residual |F(s_hat)-1| is certified <= tol.
/// For extreme u the root merges with 1/2 at working precision; the
/// returned enclosure is still valid but the residual check saturates.
CertifiedValue solve_s(double u, const SolveOptions& opts = {});

/// Root of the M-truncated equation sum_{t=2}^{M} (2^{-u}/(t(t-1)))^s = 1
/// in [0, 1]. For M = 2 the root is exactly 0 for every u >= 0 (single
/// term with base <= 1/2).
CertifiedValue solve_sM(double u, std::int64_t M, const SolveOptions& opts = {});

/// zeta(alpha, beta) = beta^2 (1-alpha) / ((1-beta)(beta - alpha(1+beta))),
/// exact. Requires 0 <= alpha < beta/(1+beta) and 0 < beta < 1.
Rational zeta(const Rational& alpha, const Rational& beta);

enum class DimCase { one, middle, zero };

/// Case split of the dimension formula. Boundary equalities
/// (alpha = beta/(1+beta), beta = 1) route to the zero branch.
DimCase dim_case(const Rational& alpha, const Rational& beta);

/// Hausdorff dimension of the exceptional set with liminf alpha and
/// limsup beta of ell_n/n: 1 when beta = 0; solve_s(zeta(alpha,beta)) when
/// 0 <= alpha < beta/(1+beta) < beta < 1; 0 otherwise.
CertifiedValue dim_E(const Rational& alpha, const Rational& beta,
                     const SolveOptions& opts = {});

/// Root s of  sum over all depth-n words with digits in [2,M] of
/// (cylinder length)^s = 1, computed by explicit enumeration of the
/// (M-1)^n words. By the product structure this equals solve_sM(0, M) at
/// every depth; the operation exists so that identity can be tested.
CertifiedValue finite_depth_pressure_root(std::int64_t M, int depth,
                                          const SolveOptions& opts = {},
                                          std::int64_t enum_budget = std::int64_t{1} << 22);

}  // namespace luroth::moran
