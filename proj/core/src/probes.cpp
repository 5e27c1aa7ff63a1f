#include "phlo/probes.hpp"

namespace phlo {

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

std::vector<Point4> halton_probes(std::size_t n, const Box4& box, std::uint64_t seed) {
  static constexpr std::uint64_t kBases[4] = {2, 3, 5, 7};
  // Skip the first few terms (they cluster near corners), then offset by seed.
  std::uint64_t start = 17 + (seed % 1009) * 13;
  std::vector<Point4> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Point4 p;
    for (int d = 0; d < kDim; ++d) {
      double t = radical_inverse(start + k, kBases[d]);
      p[d] = box.lo[d] + t * (box.hi[d] - box.lo[d]);
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace phlo
