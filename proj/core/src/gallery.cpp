#include "ergogap/gallery.hpp"

#include <cmath>
#include <string>

#include "ergogap/errors.hpp"
#include "ergogap/rng.hpp"

namespace ergogap {

namespace {

void require_unit_interval(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw OutOfRange("p must lie in [0, 1], got " + std::to_string(p));
}

std::vector<std::complex<double>> normalized_gaussian_vector(SplitMix64& rng,
                                                             std::size_t n) {
    std::vector<std::complex<double>> v(n);
    double norm_sq = 0.0;
    for (auto& a : v) {
        a = rng.next_complex_gaussian();
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : v) a *= inv;
    return v;
}

std::vector<double> normalized_exponential_weights(SplitMix64& rng, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = rng.next_exponential();
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

} // namespace

DensityMatrix ghz(std::size_t d) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    std::vector<std::complex<double>> amps(d * d * d);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) amps[i * d * d + i * d + i] = a;
    return DensityMatrix::from_pure(amps);
}

DensityMatrix w_state() {
    std::vector<std::complex<double>> amps(8);
    const double a = 1.0 / std::sqrt(3.0);
    amps[0b001] = a;
    amps[0b010] = a;
    amps[0b100] = a;
    return DensityMatrix::from_pure(amps);
}

DensityMatrix ghz_w_superposition(double p) {
    require_unit_interval(p);
    std::vector<std::complex<double>> amps(8);
    const double g = std::sqrt(p / 2.0);
    const double w = std::sqrt((1.0 - p) / 3.0);
    amps[0b000] = g;
    amps[0b111] = g;
    amps[0b001] = w;
    amps[0b010] = w;
    amps[0b100] = w;
    return DensityMatrix::from_pure(amps);
}

DensityMatrix ghz_colored_noise(double p) {
    require_unit_interval(p);
    std::vector<std::complex<double>> e000(8), e111(8);
    e000[0b000] = 1.0;
    e111[0b111] = 1.0;
    return DensityMatrix::mix({{p / 2.0, DensityMatrix::from_pure(e000)},
                               {p / 2.0, DensityMatrix::from_pure(e111)},
                               {1.0 - p, ghz(2)}});
}

DensityMatrix ghz_white_noise(double p) {
    require_unit_interval(p);
    std::vector<double> uniform(8, 1.0 / 8.0);
    const auto maximally_mixed =
        DensityMatrix::from_matrix(2, ComplexMatrix::diagonal(uniform));
    return DensityMatrix::mix({{p, ghz(2)}, {1.0 - p, maximally_mixed}});
}

DensityMatrix classical_ghz_diag(std::size_t d) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    std::vector<double> diag(d * d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        diag[i * d * d + i * d + i] = 1.0 / static_cast<double>(d);
    return DensityMatrix::from_matrix(d, ComplexMatrix::diagonal(diag));
}

DensityMatrix random_pure(std::size_t d, std::uint64_t seed) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    SplitMix64 rng(seed);
    return DensityMatrix::from_pure(normalized_gaussian_vector(rng, d * d * d));
}

DensityMatrix random_mixed(std::size_t d, std::size_t rank, std::uint64_t seed) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    if (rank < 1) throw OutOfRange("rank must be at least 1");
    SplitMix64 rng(seed);
    const auto weights = normalized_exponential_weights(rng, rank);

    std::vector<std::pair<double, DensityMatrix>> parts;
    parts.reserve(rank);
    for (std::size_t r = 0; r < rank; ++r)
        parts.emplace_back(weights[r],
                           DensityMatrix::from_pure(normalized_gaussian_vector(rng, d * d * d)));
    return DensityMatrix::mix(parts);
}

DensityMatrix product_mixture(std::size_t d, std::size_t components,
                              std::uint64_t seed) {
    if (d < 2) throw OutOfRange("local dimension must be at least 2");
    if (components < 1) throw OutOfRange("component count must be at least 1");
    SplitMix64 rng(seed);
    const auto weights = normalized_exponential_weights(rng, components);

    std::vector<std::pair<double, DensityMatrix>> parts;
    parts.reserve(components);
    for (std::size_t r = 0; r < components; ++r) {
        const auto a = normalized_gaussian_vector(rng, d);
        const auto b = normalized_gaussian_vector(rng, d);
        const auto c = normalized_gaussian_vector(rng, d);
        std::vector<std::complex<double>> amps(d * d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    amps[(i * d + j) * d + k] = a[i] * b[j] * c[k];
        parts.emplace_back(weights[r], DensityMatrix::from_pure(amps));
    }
    return DensityMatrix::mix(parts);
}

DensityMatrix make_state(const FamilySpec& spec) {
    switch (spec.family) {
        case StateFamily::Ghz:
            return ghz(spec.d);
        case StateFamily::W:
            if (spec.d != 2) throw UnsupportedDimension("the W state requires d = 2");
            return w_state();
        case StateFamily::GhzWSuperposition:
            if (spec.d != 2)
                throw UnsupportedDimension("ghz-w-superposition requires d = 2");
            return ghz_w_superposition(spec.p);
        case StateFamily::GhzColoredNoise:
            if (spec.d != 2)
                throw UnsupportedDimension("ghz-colored-noise requires d = 2");
            return ghz_colored_noise(spec.p);
        case StateFamily::GhzWhiteNoise:
            if (spec.d != 2)
                throw UnsupportedDimension("ghz-white-noise requires d = 2");
            return ghz_white_noise(spec.p);
        case StateFamily::ClassicalGhzDiag:
            return classical_ghz_diag(spec.d);
        case StateFamily::RandomPure:
            return random_pure(spec.d, spec.seed);
        case StateFamily::RandomMixed:
            return random_mixed(spec.d, spec.rank, spec.seed);
        case StateFamily::ProductMixture:
            return product_mixture(spec.d, spec.rank, spec.seed);
    }
    throw OutOfRange("unknown state family");
}

namespace {

struct FamilyName {
    StateFamily family;
    std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {StateFamily::Ghz, "ghz"},
    {StateFamily::W, "w"},
    {StateFamily::GhzWSuperposition, "ghz-w-superposition"},
    {StateFamily::GhzColoredNoise, "ghz-colored-noise"},
    {StateFamily::GhzWhiteNoise, "ghz-white-noise"},
    {StateFamily::ClassicalGhzDiag, "classical-ghz-diag"},
    {StateFamily::RandomPure, "random-pure"},
    {StateFamily::RandomMixed, "random-mixed"},
    {StateFamily::ProductMixture, "product-mixture"},
};

} // namespace

std::optional<StateFamily> parse_family(std::string_view name) {
    for (const auto& entry : kFamilyNames)
        if (entry.name == name) return entry.family;
    return std::nullopt;
}

std::string_view family_name(StateFamily family) {
    for (const auto& entry : kFamilyNames)
        if (entry.family == family) return entry.name;
    return "unknown";
}

bool family_uses_p(StateFamily family) {
    switch (family) {
        case StateFamily::GhzWSuperposition:
        case StateFamily::GhzColoredNoise:
        case StateFamily::GhzWhiteNoise:
            return true;
        default:
            return false;
    }
}

} // namespace ergogap
