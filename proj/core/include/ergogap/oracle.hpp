#pragma once

#include <cstdint>
#include <span>

#include "ergogap/ladder.hpp"
#include "ergogap/state.hpp"

namespace ergogap {

// Slow, independent reference implementations.  Nothing here shares code
// paths with the production routines they are meant to check.

// Minimum of sum_k spec[k] * energies[perm(k)] over every permutation, by
// exhaustive enumeration.  Permutations suffice as an oracle for the unitary
// minimization because H is diagonal: the optimal unitary can always send
// eigenvectors of rho to energy basis states, reducing the search to how the
// spectrum is assigned to slots.  Throws TooLarge for more than 8 levels.
double brute_force_passive_energy(const Spectrum& spectrum,
                                  std::span<const double> energies);

// Degeneracy by triple loop over (a, b, c).
long long brute_force_degeneracy(int energy, std::size_t d);

// Lowest Tr(U rho U^dagger H) found over `trials` random unitaries, each a
// product of 2n random phased Givens rotations.  Probes that the passive
// energy is a true floor: no trial may land below it.
double random_unitary_energy_probe(const DensityMatrix& rho, const LadderSpec& spec,
                                   int trials, std::uint64_t seed);

} // namespace ergogap
