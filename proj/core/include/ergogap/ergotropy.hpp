#pragma once

#include <array>
#include <span>

#include "ergogap/ladder.hpp"
#include "ergogap/state.hpp"

namespace ergogap {

// Everything below is reported in units of the ladder quantum E.

// Minimal energy reachable by unitaries: pair the nonincreasing spectrum with
// nondecreasing energies.  Throws LengthMismatch if sizes differ.
double passive_energy(const Spectrum& spectrum, std::span<const double> energies);

// The passive state of rho: its spectrum placed on the energy-sorted slot
// basis, largest population on the lowest slot.  Diagonal by construction.
DensityMatrix passive_state(const DensityMatrix& rho, const LadderSpec& spec);

// Tr(rho H) - Tr(rho_passive H) for the global ladder Hamiltonian.
double global_ergotropy(const DensityMatrix& rho, const LadderSpec& spec);

struct LocalErgotropy {
    double total;
    std::array<double, 3> per_subsystem;
};

// Sum of single-subsystem ergotropies, extracted one marginal at a time.
LocalErgotropy local_ergotropy(const DensityMatrix& rho, const LadderSpec& spec);

struct GapReport {
    double gap;
    double global_ergotropy;
    double local_ergotropy_total;
    std::array<double, 3> local_ergotropy;
    double mean_energy;
    double global_passive_energy;
    std::array<double, 3> local_passive_energy;
};

// Ergotropic gap: global minus local ergotropy, computed as
//   sum_X E(rho_X passive) - E(rho_ABC passive),
// which is algebraically identical because the mean energy cancels.
GapReport ergotropic_gap(const DensityMatrix& rho, const LadderSpec& spec);

} // namespace ergogap
