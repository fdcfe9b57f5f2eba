#include "ergogap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

void require_length(const Spectrum& x, std::size_t d) {
    if (x.size() != d * d * d) throw LengthMismatch(x.size(), d * d * d);
}

} // namespace

// Levels split into three ranges: e < d starts at D_e; d <= e <= 2d-2 starts
// at D_{d+j-1} - 3 D_{j-1} with j = e - d + 1; e > 2d-2 starts at
// d^3 - D_{d-j} with j = e - 2d + 2.
double bound_Z_by_levels(const Spectrum& x, std::size_t d) {
    require_length(x, d);
    const long long dd = static_cast<long long>(d);
    const long long cube = dd * dd * dd;
    double z = 0.0;

    const auto add_level = [&](long long energy, long long start, long long count) {
        for (long long k = 0; k < count; ++k)
            z += static_cast<double>(energy) * x[static_cast<std::size_t>(start + k)];
    };

    for (long long e = 0; e < dd; ++e)
        add_level(e, cumulative_D(e), cumulative_D(e + 1) - cumulative_D(e));

    for (long long j = 1; j <= dd - 1; ++j) {
        const long long e = dd + j - 1;
        const long long start = cumulative_D(dd + j - 1) - 3 * cumulative_D(j - 1);
        const long long next = cumulative_D(dd + j) - 3 * cumulative_D(j);
        add_level(e, start, next - start);
    }

    for (long long j = 1; j <= dd - 1; ++j) {
        const long long e = 2 * dd - 2 + j;
        const long long start = cube - cumulative_D(dd - j);
        const long long next = cube - cumulative_D(dd - j - 1);
        add_level(e, start, next - start);
    }
    return z;
}

double bound_Y(const Spectrum& x, std::size_t d) {
    require_length(x, d);
    double y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t coeff = std::min(i, d - 1);
        y += 3.0 * static_cast<double>(coeff) * x[i];
    }
    return y;
}

double bound_Z(const Spectrum& x, std::size_t d) {
    require_length(x, d);
    const SlotTable table(d);
    double z = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        z += x[k] * static_cast<double>(table.slot_energies()[k]);

    const double z_alt = bound_Z_by_levels(x, d);
    if (std::abs(z - z_alt) > 1e-9)
        throw InternalInconsistency("Z routes disagree: " + std::to_string(z) +
                                    " vs " + std::to_string(z_alt));
    return z;
}

double bound_M(std::size_t d) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    const long long dd = static_cast<long long>(d);

    // Sum of the d lowest slot energies, done twice: once from the level
    // decomposition of d-1, once straight off the slot table.
    const auto [l, m] = decompose_level(dd - 1);
    long long filled = 0;
    for (long long i = 1; i <= l - 1; ++i) filled += i * (i + 1) * (i + 2) / 2;
    filled += l * (m + 1);

    const SlotTable table(d);
    long long direct = 0;
    for (std::size_t k = 0; k < d; ++k) direct += table.slot_energies()[k];

    if (filled != direct)
        throw InternalInconsistency("lowest-slot energy sums disagree: " +
                                    std::to_string(filled) + " vs " +
                                    std::to_string(direct));

    return 1.5 * static_cast<double>(dd - 1) -
           static_cast<double>(filled) / static_cast<double>(dd);
}

double bound_M_polynomial(std::size_t d) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    const auto [l, m] = decompose_level(static_cast<long long>(d) - 1);
    const double ld = static_cast<double>(l);
    const double inner = (ld * ld * ld + 2.0 * ld * ld - 5.0 * ld + 2.0) / 8.0 +
                         static_cast<double>(m) + 1.0;
    return 1.5 * static_cast<double>(d - 1) - ld / static_cast<double>(d) * inner;
}

SeparableBounds separable_bound(const DensityMatrix& rho, const LadderSpec& spec) {
    if (rho.local_dim() != spec.d)
        throw DimensionMismatch("state has local dimension " +
                                std::to_string(rho.local_dim()) + ", ladder has " +
                                std::to_string(spec.d));
    const Spectrum& x = rho.global_spectrum();
    SeparableBounds b{};
    b.y = bound_Y(x, spec.d);
    b.z = bound_Z(x, spec.d);
    b.y_minus_z = b.y - b.z;
    b.m_d = bound_M(spec.d);
    b.min_bound = std::min(b.y_minus_z, b.m_d);
    return b;
}

WitnessVerdict witness(const DensityMatrix& rho, const LadderSpec& spec,
                       double decision_tol) {
    const GapReport report = ergotropic_gap(rho, spec);
    const SeparableBounds b = separable_bound(rho, spec);

    WitnessVerdict v{};
    v.gap = report.gap;
    v.y = b.y;
    v.z = b.z;
    v.y_minus_z = b.y_minus_z;
    v.m_d = b.m_d;
    v.min_bound = b.min_bound;
    v.margin = v.gap - v.min_bound;
    v.verdict = v.margin > decision_tol ? Verdict::Entangled : Verdict::Inconclusive;
    return v;
}

bool majorizes(const Spectrum& a, const Spectrum& b, double slack) {
    const std::size_t n = std::max(a.size(), b.size());
    const auto at = [](const Spectrum& s, std::size_t k) {
        return k < s.size() ? s[k] : 0.0;
    };

    double pa = 0.0;
    double pb = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        pa += at(a, k);
        pb += at(b, k);
        if (pa < pb - slack) return false;
    }
    return std::abs(pa - pb) <= slack;
}

NielsenKempeResult nielsen_kempe_check(const DensityMatrix& rho) {
    NielsenKempeResult r{true, {}};
    const Spectrum& global = rho.global_spectrum();
    for (std::size_t s = 0; s < 3; ++s) {
        const auto which = static_cast<Subsystem>(s);
        if (!majorizes(rho.marginal_spectrum(which), global)) {
            r.passes = false;
            r.failing.push_back(which);
        }
    }
    return r;
}

namespace {

ComplexMatrix pauli(char which) {
    ComplexMatrix m(2);
    switch (which) {
        case 'i': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'y': m(0, 1) = {0.0, -1.0}; m(1, 0) = {0.0, 1.0}; break;
        case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

ComplexMatrix three_site(char a, char b, char c) {
    return tensor_product(tensor_product(pauli(a), pauli(b)), pauli(c));
}

} // namespace

FixedOperatorResult fixed_operator_witness(const DensityMatrix& rho,
                                           OperatorFamily family) {
    if (rho.local_dim() != 2)
        throw UnsupportedDimension("fixed-operator witnesses are defined for d = 2, got " +
                                   std::to_string(rho.local_dim()));

    double o1, o2, o3;
    if (family == OperatorFamily::GhzType) {
        o1 = expectation_value(rho.matrix(), three_site('x', 'x', 'x'));
        o2 = expectation_value(rho.matrix(), three_site('i', 'z', 'z'));
        o3 = expectation_value(rho.matrix(), three_site('y', 'y', 'x'));
    } else {
        o1 = expectation_value(rho.matrix(), three_site('i', 'x', 'x'));
        o2 = expectation_value(rho.matrix(), three_site('i', 'y', 'y'));
        o3 = expectation_value(rho.matrix(), three_site('z', 'z', 'z'));
    }

    FixedOperatorResult r{};
    r.max_abs_value = std::max(std::abs(o1 + o2 + o3), std::abs(o1 + o2 - o3));
    r.violated = r.max_abs_value > 1.0 + 1e-9;
    return r;
}

} // namespace ergogap
