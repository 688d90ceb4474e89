#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "equitynet/common.hpp"

namespace equitynet {

// Root of a continuous strictly decreasing f with f(lo) >= 0.  The upper
// bracket starts at hi_seed and doubles its distance from lo until f goes
// negative; bisection then runs until |f(y)| <= tol_scale * max(1, y), or,
// when width_tol > 0, until the bracket narrows to width_tol * max(1, y).
// Throws ConvergenceError if either phase exhausts its iteration cap.
template <class F>
double bisect_decreasing(F&& f, double lo, double hi_seed,
                         double tol_scale = 1e-12, double width_tol = 0.0,
                         int max_bisect = 200, int max_expand = 200) {
  auto tol_at = [tol_scale](double y) { return tol_scale * std::max(1.0, y); };
  double flo = f(lo);
  if (std::abs(flo) <= tol_at(lo)) return lo;
  if (flo < 0.0) throw SolverError("bisection: lower bracket is already negative");

  double hi = std::max(hi_seed, lo + 1e-3 * std::max(1.0, std::abs(lo)));
  double width = hi - lo;
  double fhi = f(hi);
  for (int i = 0; fhi > 0.0; ++i) {
    if (std::abs(fhi) <= tol_at(hi)) return hi;
    if (i >= max_expand) throw ConvergenceError("bisection: no upper bracket found");
    lo = hi;  // f(hi) > 0, so hi is a valid lower bracket
    width *= 2.0;
    hi = lo + width;
    fhi = f(hi);
  }
  for (int i = 0; i < max_bisect; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol_at(mid)) return mid;
    if (width_tol > 0.0 && hi - lo <= width_tol * std::max(1.0, mid)) return mid;
    if (fm > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  throw ConvergenceError("bisection: iteration cap reached");
}

// Maximizer of a unimodal f on [lo, hi], located to within x_tol.
template <class F>
double golden_section_maximize(F&& f, double lo, double hi,
                               double x_tol = 1e-10) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double u = b - inv_phi * (b - a);
  double v = a + inv_phi * (b - a);
  double fu = f(u), fv = f(v);
  while (b - a > x_tol) {
    if (fu < fv) {
      a = u;
      u = v;
      fu = fv;
      v = a + inv_phi * (b - a);
      fv = f(v);
    } else {
      b = v;
      v = u;
      fv = fu;
      u = b - inv_phi * (b - a);
      fu = f(u);
    }
  }
  return 0.5 * (a + b);
}

template <class F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Central difference at the fine step; when the 10x-coarser estimate
// disagrees by more than 1e-3 relative, fall back to their Richardson
// extrapolation.
template <class F>
double fd_derivative(F&& f, double x, double fine_step = 1e-5) {
  const double coarse = central_difference(f, x, 10.0 * fine_step);
  const double fine = central_difference(f, x, fine_step);
  if (std::abs(coarse - fine) <= 1e-3 * std::max(1.0, std::abs(fine)))
    return fine;
  return (100.0 * fine - coarse) / 99.0;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Spectral radius of diag(shares) * weights.  Power iteration on the shifted
// matrix B + I where B is the block restricted to positive shares; the shift
// makes the dominant eigenvalue strictly largest in magnitude so the norm
// ratio converges, and the restriction drops zero rows (the block is similar
// to a symmetric matrix, hence diagonalizable).
double spectral_radius_product(const Vector& shares, const Matrix& weights,
                               double tol = 1e-12, int max_iter = 100000);

}  // namespace equitynet
