#include "equitynet/numeric.hpp"

#include <cmath>
#include <vector>

namespace equitynet {

double spectral_radius_product(const Vector& shares, const Matrix& weights,
                               double tol, int max_iter) {
  std::vector<int> support;
  for (int i = 0; i < shares.size(); ++i)
    if (shares(i) > 0.0) support.push_back(i);
  const int m = static_cast<int>(support.size());
  if (m == 0) return 0.0;

  Matrix b(m, m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      b(p, q) = shares(support[p]) * weights(support[p], support[q]);
  if (b.maxCoeff() <= 0.0) return 0.0;

  // Deterministic positive start with a generic tilt.
  Vector v(m);
  for (int p = 0; p < m; ++p)
    v(p) = 1.0 + 0.25 * static_cast<double>(splitmix64(p) >> 40) * 0x1p-24;
  v /= v.norm();

  double est = 0.0;
  int calm = 0;
  for (int it = 0; it < max_iter; ++it) {
    Vector w = b * v + v;  // (B + I) v
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    const double next = norm;  // ||(B+I)v|| with ||v|| = 1
    v = w / norm;
    if (std::abs(next - est) <= tol * std::max(1.0, next)) {
      if (++calm >= 2 && it >= 8) return std::max(0.0, next - 1.0);
    } else {
      calm = 0;
    }
    est = next;
  }
  throw ConvergenceError("power iteration did not settle");
}

}  // namespace equitynet
