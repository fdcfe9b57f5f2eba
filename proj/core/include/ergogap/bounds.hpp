#pragma once

#include <cstddef>
#include <vector>

#include "ergogap/ergotropy.hpp"
#include "ergogap/ladder.hpp"
#include "ergogap/state.hpp"

namespace ergogap {

// All bounds are in units of the ladder quantum E and are functions of the
// global spectrum x (nonincreasing, length d^3) alone.

// Y = 3 sum_{i<d} i x_i + 3(d-1) sum_{i>=d} x_i: the largest mean energy any
// separable state with spectrum x can reach, hence an upper bound on the sum
// of local passive energies.
double bound_Y(const Spectrum& x, std::size_t d);

// Z = sum_k x_k e_k with e the ascending slot energies: the global passive
// energy of any state with spectrum x.  Cross-checked against
// bound_Z_by_levels on every call; disagreement beyond 1e-9 throws
// InternalInconsistency (it would mean a slot-table bug).
double bound_Z(const Spectrum& x, std::size_t d);

// The same quantity assembled level by level from the closed-form start
// indices (D_i arithmetic) instead of the slot table.  Public so tests can
// pit the two routes against each other.
double bound_Z_by_levels(const Spectrum& x, std::size_t d);

// M(d) = 3(d-1)/2 - (1/d) * (sum of the d lowest slot energies): the
// spectrum-independent cap on (Y - Z)/E.
double bound_M(std::size_t d);

// Closed-form variant of the same quantity,
//   3(d-1)/2 - (l/d) * ((l^3 + 2l^2 - 5l + 2)/8 + m + 1)  with (l, m) from
// decompose_level(d-1).  Kept for comparison; it drifts from bound_M once
// d >= 5, so bound_M is authoritative.
double bound_M_polynomial(std::size_t d);

struct SeparableBounds {
    double y;
    double z;
    double y_minus_z;
    double m_d;
    double min_bound; // min(y_minus_z, m_d)
};

SeparableBounds separable_bound(const DensityMatrix& rho, const LadderSpec& spec);

enum class Verdict { Entangled, Inconclusive };

struct WitnessVerdict {
    double gap;
    double y;
    double z;
    double y_minus_z;
    double m_d;
    double min_bound;
    double margin; // gap - min_bound
    Verdict verdict;
};

// Entangled iff the ergotropic gap exceeds min((Y-Z), M(d)) by more than
// decision_tol.  A separable state can never do that, so the verdict is
// one-sided: Inconclusive does not certify separability.
WitnessVerdict witness(const DensityMatrix& rho, const LadderSpec& spec,
                       double decision_tol = 1e-9);

// True iff every prefix sum of a dominates the corresponding prefix sum of b
// (within slack) and the totals agree within slack.  Shorter spectra are
// zero-padded.
bool majorizes(const Spectrum& a, const Spectrum& b, double slack = 1e-9);

struct NielsenKempeResult {
    bool passes; // all three marginals majorize the global spectrum
    std::vector<Subsystem> failing;
};

// Separability precondition: each marginal spectrum must majorize the global
// spectrum.  Any failure certifies entanglement.
NielsenKempeResult nielsen_kempe_check(const DensityMatrix& rho);

enum class OperatorFamily { GhzType, WType };

struct FixedOperatorResult {
    double max_abs_value;
    bool violated;
};

// Three-qubit correlation witness: evaluates the pair of inequalities
// |<O1> + <O2> +/- <O3>| <= 1 for the family's operator triple; violation of
// either certifies entanglement.  Throws UnsupportedDimension unless d = 2.
FixedOperatorResult fixed_operator_witness(const DensityMatrix& rho,
                                           OperatorFamily family);

} // namespace ergogap
