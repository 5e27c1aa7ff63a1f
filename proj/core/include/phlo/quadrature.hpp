#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "phlo/geometry.hpp"

namespace phlo {

struct QuadratureResult {
  double value{0.0};        // midpoint value at the requested resolution
  double coarse{0.0};       // value at half resolution
  double refined{0.0};      // Richardson extrapolation of the two
  double error_estimate{0.0};  // |value - coarse| / 3
};

// Midpoint rule over the spatial block [lo,hi]^3 at fixed xi; n[d] cells on
// axis d. Deterministic for any thread count.
QuadratureResult integrate_spatial(const std::function<double(const Point4&)>& f,
                                   const Box4& box, double xi, std::array<int, 3> n,
                                   int threads);

// Midpoint rule over the full 4d box; n[d] cells on axis d.
QuadratureResult integrate_box4(const std::function<double(const Point4&)>& f,
                                const Box4& box, std::array<int, 4> n, int threads);

inline QuadratureResult integrate_spatial(const std::function<double(const Point4&)>& f,
                                          const Box4& box, double xi, int n, int threads) {
  return integrate_spatial(f, box, xi, std::array<int, 3>{n, n, n}, threads);
}

inline QuadratureResult integrate_box4(const std::function<double(const Point4&)>& f,
                                       const Box4& box, int n, int threads) {
  return integrate_box4(f, box, std::array<int, 4>{n, n, n, n}, threads);
}

}  // namespace phlo
