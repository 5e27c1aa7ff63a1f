#include "phlo/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "phlo/parallel.hpp"

namespace phlo {

namespace {

double midpoint_spatial(const std::function<double(const Point4&)>& f, const Box4& box,
                        double xi, std::array<int, 3> n, int threads) {
  double h[3];
  for (int d = 0; d < 3; ++d) h[d] = (box.hi[d] - box.lo[d]) / n[d];
  std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2];
  double sum = sum_chunked(total, threads, [&](std::size_t idx) {
    // z varies fastest, x slowest.
    int iz = static_cast<int>(idx % n[2]);
    int iy = static_cast<int>((idx / n[2]) % n[1]);
    int ix = static_cast<int>(idx / (static_cast<std::size_t>(n[2]) * n[1]));
    Point4 p;
    p[0] = box.lo[0] + (ix + 0.5) * h[0];
    p[1] = box.lo[1] + (iy + 0.5) * h[1];
    p[2] = box.lo[2] + (iz + 0.5) * h[2];
    p[3] = xi;
    return f(p);
  });
  return sum * h[0] * h[1] * h[2];
}

double midpoint_box4(const std::function<double(const Point4&)>& f, const Box4& box,
                     std::array<int, 4> n, int threads) {
  double h[4];
  std::size_t total = 1;
  for (int d = 0; d < 4; ++d) {
    h[d] = (box.hi[d] - box.lo[d]) / n[d];
    total *= static_cast<std::size_t>(n[d]);
  }
  double sum = sum_chunked(total, threads, [&](std::size_t idx) {
    Point4 p;
    std::size_t rest = idx;
    // xi varies fastest, x slowest.
    for (int d = 3; d >= 0; --d) {
      std::size_t nd = static_cast<std::size_t>(n[d]);
      p[d] = box.lo[d] + (static_cast<double>(rest % nd) + 0.5) * h[d];
      rest /= nd;
    }
    return f(p);
  });
  return sum * h[0] * h[1] * h[2] * h[3];
}

QuadratureResult with_richardson(double fine, double coarse) {
  QuadratureResult r;
  r.value = fine;
  r.coarse = coarse;
  // Midpoint rule is second order, so halving the step scales the error by 4.
  r.refined = fine + (fine - coarse) / 3.0;
  r.error_estimate = std::abs(fine - coarse) / 3.0;
  return r;
}

}  // namespace

QuadratureResult integrate_spatial(const std::function<double(const Point4&)>& f,
                                   const Box4& box, double xi, std::array<int, 3> n,
                                   int threads) {
  std::array<int, 3> half;
  for (int d = 0; d < 3; ++d) half[d] = std::max(1, n[d] / 2);
  return with_richardson(midpoint_spatial(f, box, xi, n, threads),
                         midpoint_spatial(f, box, xi, half, threads));
}

QuadratureResult integrate_box4(const std::function<double(const Point4&)>& f,
                                const Box4& box, std::array<int, 4> n, int threads) {
  std::array<int, 4> half;
  for (int d = 0; d < 4; ++d) half[d] = std::max(1, n[d] / 2);
  return with_richardson(midpoint_box4(f, box, n, threads),
                         midpoint_box4(f, box, half, threads));
}

}  // namespace phlo
