#include "ergogap/ergotropy.hpp"

#include <numeric>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

// Occupation-number digits of composite basis index k, most significant = A.
std::array<std::size_t, 3> digits(std::size_t k, std::size_t d) {
    return {k / (d * d), (k / d) % d, k % d};
}

std::vector<double> local_level_energies(std::size_t d) {
    std::vector<double> e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<double>(i);
    return e;
}

} // namespace

double passive_energy(const Spectrum& spectrum, std::span<const double> energies) {
    if (spectrum.size() != energies.size())
        throw LengthMismatch(energies.size(), spectrum.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) sum += spectrum[k] * energies[k];
    return sum;
}

DensityMatrix passive_state(const DensityMatrix& rho, const LadderSpec& spec) {
    if (rho.local_dim() != spec.d)
        throw DimensionMismatch("state has local dimension " +
                                std::to_string(rho.local_dim()) + ", ladder has " +
                                std::to_string(spec.d));
    const SlotTable table(spec.d);
    const Spectrum& x = rho.global_spectrum();

    std::vector<double> diag(rho.dim(), 0.0);
    for (std::size_t k = 0; k < x.size(); ++k) diag[table.slot_basis_index()[k]] = x[k];
    return DensityMatrix::from_matrix(spec.d, ComplexMatrix::diagonal(diag));
}

double global_ergotropy(const DensityMatrix& rho, const LadderSpec& spec) {
    if (rho.local_dim() != spec.d)
        throw DimensionMismatch("state has local dimension " +
                                std::to_string(rho.local_dim()) + ", ladder has " +
                                std::to_string(spec.d));
    const SlotTable table(spec.d);
    const std::size_t d = spec.d;

    double mean = 0.0;
    for (std::size_t k = 0; k < rho.dim(); ++k) {
        const auto [a, b, c] = digits(k, d);
        mean += rho.matrix()(k, k).real() * static_cast<double>(a + b + c);
    }
    return mean - passive_energy(rho.global_spectrum(), table.energies_as_real());
}

LocalErgotropy local_ergotropy(const DensityMatrix& rho, const LadderSpec& spec) {
    if (rho.local_dim() != spec.d)
        throw DimensionMismatch("state has local dimension " +
                                std::to_string(rho.local_dim()) + ", ladder has " +
                                std::to_string(spec.d));
    const auto level = local_level_energies(spec.d);

    LocalErgotropy out{0.0, {}};
    for (std::size_t s = 0; s < 3; ++s) {
        const auto which = static_cast<Subsystem>(s);
        const ComplexMatrix reduced = rho.marginal(which);
        double mean = 0.0;
        for (std::size_t i = 0; i < spec.d; ++i)
            mean += reduced(i, i).real() * level[i];
        out.per_subsystem[s] = mean - passive_energy(rho.marginal_spectrum(which), level);
        out.total += out.per_subsystem[s];
    }
    return out;
}

GapReport ergotropic_gap(const DensityMatrix& rho, const LadderSpec& spec) {
    if (rho.local_dim() != spec.d)
        throw DimensionMismatch("state has local dimension " +
                                std::to_string(rho.local_dim()) + ", ladder has " +
                                std::to_string(spec.d));
    const SlotTable table(spec.d);
    const std::size_t d = spec.d;
    const auto level = local_level_energies(d);

    GapReport r{};
    for (std::size_t k = 0; k < rho.dim(); ++k) {
        const auto [a, b, c] = digits(k, d);
        r.mean_energy += rho.matrix()(k, k).real() * static_cast<double>(a + b + c);
    }
    r.global_passive_energy =
        passive_energy(rho.global_spectrum(), table.energies_as_real());
    r.global_ergotropy = r.mean_energy - r.global_passive_energy;

    double local_passive_sum = 0.0;
    for (std::size_t s = 0; s < 3; ++s) {
        const auto which = static_cast<Subsystem>(s);
        const ComplexMatrix reduced = rho.marginal(which);
        double mean = 0.0;
        for (std::size_t i = 0; i < d; ++i) mean += reduced(i, i).real() * level[i];
        r.local_passive_energy[s] =
            passive_energy(rho.marginal_spectrum(which), level);
        r.local_ergotropy[s] = mean - r.local_passive_energy[s];
        r.local_ergotropy_total += r.local_ergotropy[s];
        local_passive_sum += r.local_passive_energy[s];
    }

    r.gap = local_passive_sum - r.global_passive_energy;
    return r;
}

} // namespace ergogap
