#pragma once

namespace obslab {

struct DimensionConstants {
  int d;
  double omega_d;    // volume of the unit ball
  double cap_const;  // C_d with sigma(cap of chord radius delta) <= C_d delta^{d-1}
  double cd_prime;   // C_d 2^{d-1}
};

// Computed once per dimension and cached. cap_const is the maximum over a
// fixed delta grid in (0, 2] of the Monte Carlo cap ratio, 10^6 seeded samples
// on the sphere.
const DimensionConstants& dimension_constants(int d);

double unit_ball_volume(int d);

}  // namespace obslab
