#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ergogap/state.hpp"

namespace ergogap {

// |GHZ_d> = (1/sqrt(d)) sum_i |iii>.  For d > 2 this is the natural qudit
// generalization of the three-qubit state.
DensityMatrix ghz(std::size_t d);

// |W> = (|001> + |010> + |100>) / sqrt(3).  Three qubits only.
DensityMatrix w_state();

// sqrt(p) |GHZ> + sqrt(1-p) |W>, three qubits.  Orthogonal branches, so the
// vector is normalized for every p in [0, 1].
DensityMatrix ghz_w_superposition(double p);

// (p/2) |000><000| + (p/2) |111><111| + (1-p) |GHZ><GHZ|, three qubits.
DensityMatrix ghz_colored_noise(double p);

// p |GHZ><GHZ| + (1-p) I/8, three qubits.
DensityMatrix ghz_white_noise(double p);

// (1/d) sum_i |iii><iii|: the fully dephased GHZ, a separable state that
// saturates the M(d) bound.
DensityMatrix classical_ghz_diag(std::size_t d);

// Haar-like random pure state: d^3 complex Gaussian amplitudes, normalized.
DensityMatrix random_pure(std::size_t d, std::uint64_t seed);

// Random rank-limited mixture.  Stream order: `rank` exponential weights,
// then per component the d^3 amplitude Gaussians.
DensityMatrix random_mixed(std::size_t d, std::size_t rank, std::uint64_t seed);

// Random separable state: mixture of `components` pure product states.
// Stream order: `components` exponential weights, then per component three
// normalized single-site Gaussian vectors.
DensityMatrix product_mixture(std::size_t d, std::size_t components,
                              std::uint64_t seed);

enum class StateFamily {
    Ghz,
    W,
    GhzWSuperposition,
    GhzColoredNoise,
    GhzWhiteNoise,
    ClassicalGhzDiag,
    RandomPure,
    RandomMixed,
    ProductMixture,
};

// Parameters for make_state; unused fields are ignored by families that do
// not take them.  Families built on the W state require d = 2.
struct FamilySpec {
    StateFamily family = StateFamily::Ghz;
    std::size_t d = 2;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::size_t rank = 1;
};

DensityMatrix make_state(const FamilySpec& spec);

// Kebab-case family names as accepted on the command line; nullopt if
// unrecognized.
std::optional<StateFamily> parse_family(std::string_view name);
std::string_view family_name(StateFamily family);

// True for families whose make_state uses the p parameter.
bool family_uses_p(StateFamily family);

} // namespace ergogap
