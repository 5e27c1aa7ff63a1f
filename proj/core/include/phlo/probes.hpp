#pragma once

#include <cstdint>
#include <vector>

#include "phlo/geometry.hpp"

namespace phlo {

// Low-discrepancy probe points inside a box. Halton bases (2,3,5,7) with a
// seed-derived start index, so the sequence is reproducible per seed and
// independent of platform RNG implementations.
std::vector<Point4> halton_probes(std::size_t n, const Box4& box, std::uint64_t seed);

}  // namespace phlo
