#include "ergogap/ladder.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

LadderSpec::LadderSpec(std::size_t d, double quantum) : d(d), quantum(quantum) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2, got " + std::to_string(d));
    if (!(quantum > 0.0)) throw OutOfRange("energy quantum must be positive");
}

SlotTable::SlotTable(std::size_t d) : d_(d) {
    const std::size_t n = d * d * d;
    slot_basis_.resize(n);
    std::iota(slot_basis_.begin(), slot_basis_.end(), std::size_t{0});

    const auto energy_of = [d](std::size_t k) {
        return static_cast<int>(k / (d * d) + (k / d) % d + k % d);
    };

    // stable_sort keeps ascending basis index within each level.
    std::stable_sort(slot_basis_.begin(), slot_basis_.end(),
                     [&](std::size_t a, std::size_t b) { return energy_of(a) < energy_of(b); });

    slot_energies_.resize(n);
    for (std::size_t k = 0; k < n; ++k) slot_energies_[k] = energy_of(slot_basis_[k]);

    std::size_t start = 0;
    for (int e = 0; e <= static_cast<int>(3 * (d - 1)); ++e) {
        const int g = degeneracy(e, d);
        levels_.push_back({e, g, start});
        start += static_cast<std::size_t>(g);
    }
}

std::vector<double> SlotTable::energies_as_real() const {
    return {slot_energies_.begin(), slot_energies_.end()};
}

SlotTable slot_table(const LadderSpec& spec) { return SlotTable(spec.d); }

ComplexMatrix local_hamiltonian(const LadderSpec& spec) {
    std::vector<double> diag(spec.d);
    for (std::size_t i = 0; i < spec.d; ++i) diag[i] = static_cast<double>(i) * spec.quantum;
    return ComplexMatrix::diagonal(diag);
}

ComplexMatrix global_hamiltonian(const LadderSpec& spec) {
    const ComplexMatrix h = local_hamiltonian(spec);
    const ComplexMatrix id = ComplexMatrix::identity(spec.d);
    ComplexMatrix out = tensor_product(tensor_product(h, id), id);
    out += tensor_product(tensor_product(id, h), id);
    out += tensor_product(tensor_product(id, id), h);
    return out;
}

int degeneracy(int energy, std::size_t d) {
    const int top = static_cast<int>(3 * (d - 1));
    if (energy < 0 || energy > top)
        throw OutOfRange("level energy " + std::to_string(energy) + " outside [0, " +
                         std::to_string(top) + "]");
    int count = 0;
    for (int a = 0; a < static_cast<int>(d); ++a)
        for (int b = 0; b < static_cast<int>(d); ++b) {
            const int c = energy - a - b;
            if (c >= 0 && c < static_cast<int>(d)) ++count;
        }
    return count;
}

long long cumulative_D(long long i) {
    return i * (i + 1) * (i + 2) / 6;
}

LevelDecomposition decompose_level(long long n) {
    if (n < 0) throw OutOfRange("level index must be nonnegative");
    long long l = 0;
    while (cumulative_D(l + 1) <= n) ++l;
    return {l, n - cumulative_D(l)};
}

} // namespace ergogap
