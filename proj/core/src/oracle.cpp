#include "ergogap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "ergogap/errors.hpp"
#include "ergogap/rng.hpp"

namespace ergogap {

double brute_force_passive_energy(const Spectrum& spectrum,
                                  std::span<const double> energies) {
    if (spectrum.size() != energies.size())
        throw LengthMismatch(energies.size(), spectrum.size());
    if (spectrum.size() > 8) throw TooLarge(spectrum.size(), 8);

    std::vector<std::size_t> perm(spectrum.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    double best = std::numeric_limits<double>::infinity();
    do {
        double sum = 0.0;
        for (std::size_t k = 0; k < perm.size(); ++k)
            sum += spectrum[k] * energies[perm[k]];
        best = std::min(best, sum);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

long long brute_force_degeneracy(int energy, std::size_t d) {
    const int top = static_cast<int>(3 * (d - 1));
    if (energy < 0 || energy > top)
        throw OutOfRange("level energy " + std::to_string(energy) + " outside [0, " +
                         std::to_string(top) + "]");
    long long count = 0;
    for (int a = 0; a < static_cast<int>(d); ++a)
        for (int b = 0; b < static_cast<int>(d); ++b)
            for (int c = 0; c < static_cast<int>(d); ++c)
                if (a + b + c == energy) ++count;
    return count;
}

double random_unitary_energy_probe(const DensityMatrix& rho, const LadderSpec& spec,
                                   int trials, std::uint64_t seed) {
    if (rho.local_dim() != spec.d)
        throw DimensionMismatch("state has local dimension " +
                                std::to_string(rho.local_dim()) + ", ladder has " +
                                std::to_string(spec.d));
    SplitMix64 rng(seed);
    const std::size_t n = rho.dim();
    const std::size_t d = spec.d;

    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        ComplexMatrix m = rho.matrix();
        // Conjugate by a product of random phased Givens rotations, applied
        // as rank-2 row and column updates.
        for (std::size_t rot = 0; rot < 2 * n; ++rot) {
            const std::size_t p = rng.next_u64() % n;
            std::size_t q = rng.next_u64() % (n - 1);
            if (q >= p) ++q;
            const double theta = 2.0 * std::numbers::pi * rng.next_uniform();
            const double phi = 2.0 * std::numbers::pi * rng.next_uniform();
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            const std::complex<double> ph{std::cos(phi), std::sin(phi)};

            for (std::size_t j = 0; j < n; ++j) {
                const auto x = m(p, j);
                const auto y = m(q, j);
                m(p, j) = c * x - s * std::conj(ph) * y;
                m(q, j) = s * ph * x + c * y;
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto x = m(i, p);
                const auto y = m(i, q);
                m(i, p) = c * x - s * ph * y;
                m(i, q) = s * std::conj(ph) * x + c * y;
            }
        }

        double energy = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double level =
                static_cast<double>(k / (d * d) + (k / d) % d + k % d);
            energy += m(k, k).real() * level;
        }
        best = std::min(best, energy);
    }
    return best;
}

} // namespace ergogap
