#pragma once

#include <cstddef>
#include <vector>

#include "ergogap/matrix.hpp"

namespace ergogap {

// Three identical d-level subsystems, each with the uniform ladder
// Hamiltonian diag(0, E, 2E, ..., (d-1)E).  The quantum E only scales
// energies; every derived quantity in this library is reported in units of E,
// so tables and bounds below work with integer energies.
struct LadderSpec {
    LadderSpec(std::size_t d, double quantum = 1.0);

    std::size_t d;
    double quantum; // E
};

// One energy level of the composite ladder: total energy a+b+c = energy, with
// `degeneracy` basis states, the first of which sits at slot index
// `cumulative_start` once slots are sorted by energy.
struct SlotLevel {
    int energy;
    int degeneracy;
    std::size_t cumulative_start;
};

// The d^3 composite basis states ordered by total energy, ties broken by
// ascending basis index.  slot_energies()[k] is the energy (in units of E) of
// slot k; slot_basis_index()[k] is the basis index occupying slot k.
class SlotTable {
public:
    explicit SlotTable(std::size_t d);

    std::size_t local_dim() const { return d_; }
    const std::vector<SlotLevel>& levels() const { return levels_; }
    const std::vector<int>& slot_energies() const { return slot_energies_; }
    const std::vector<std::size_t>& slot_basis_index() const { return slot_basis_; }

    // slot_energies() widened to double, for passive-energy pairing.
    std::vector<double> energies_as_real() const;

private:
    std::size_t d_;
    std::vector<SlotLevel> levels_;
    std::vector<int> slot_energies_;
    std::vector<std::size_t> slot_basis_;
};

SlotTable slot_table(const LadderSpec& spec);

ComplexMatrix local_hamiltonian(const LadderSpec& spec);

// H (x) I (x) I + I (x) H (x) I + I (x) I (x) H, side d^3.
ComplexMatrix global_hamiltonian(const LadderSpec& spec);

// Number of triples (a, b, c) in [0, d)^3 with a + b + c = energy.
// Throws OutOfRange unless 0 <= energy <= 3(d-1).
int degeneracy(int energy, std::size_t d);

// D_i = i(i+1)(i+2)/6, the number of slots with energy below i when i <= d-1.
long long cumulative_D(long long i);

// Decomposition n = D_l + m with l maximal, i.e. l = max{k : D_k <= n} and
// 0 <= m < D_{l+1} - D_l = (l+1)(l+2)/2.  Maximality makes the pair unique.
struct LevelDecomposition {
    long long l;
    long long m;
};
LevelDecomposition decompose_level(long long n);

} // namespace ergogap
