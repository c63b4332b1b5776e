#pragma once

#include "tifs/system.hpp"

namespace tifs {
namespace fixtures {

/// Binary interval system: two halving maps on the unit interval.
SystemConfig bin_config();
/// Golden-ratio system with scale exponents (1, 2) tiling the unit interval.
SystemConfig fib_config();
/// Three quarter-scale maps in the plane (Sierpinski triangle).
SystemConfig sier_config();
/// Two-vertex graph system with exponents (1, 1, 2) and disjoint Cantor
/// components.
SystemConfig gd2_config();

const System& bin();
const System& fib();
const System& sier();
const System& gd2();

} // namespace fixtures
} // namespace tifs
