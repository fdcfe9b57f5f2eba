#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string_view>
#include <vector>

#include "ergogap/bounds.hpp"
#include "ergogap/errors.hpp"
#include "ergogap/gallery.hpp"
#include "ergogap/ladder.hpp"
#include "ergogap/state.hpp"

using ergogap::DensityMatrix;
using ergogap::FamilySpec;
using ergogap::LadderSpec;
using ergogap::StateFamily;
using ergogap::Verdict;

namespace {

bool matrices_equal(const DensityMatrix& a, const DensityMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (std::abs(a.matrix()(i, j) - b.matrix()(i, j)) > tol) return false;
    return true;
}

bool matrices_identical(const DensityMatrix& a, const DensityMatrix& b) {
    return matrices_equal(a, b, 0.0);
}

} // namespace

TEST_CASE("every family produces a valid state") {
    const std::vector<FamilySpec> specs{
        {StateFamily::Ghz, 2}, {StateFamily::Ghz, 4},
        {StateFamily::W, 2},
        {StateFamily::GhzWSuperposition, 2, 0.3},
        {StateFamily::GhzColoredNoise, 2, 0.7},
        {StateFamily::GhzWhiteNoise, 2, 0.2},
        {StateFamily::ClassicalGhzDiag, 3},
        {StateFamily::RandomPure, 2, 0.0, 42},
        {StateFamily::RandomMixed, 3, 0.0, 42, 4},
        {StateFamily::ProductMixture, 2, 0.0, 42, 5},
    };
    for (const auto& spec : specs) {
        const auto rho = ergogap::make_state(spec);
        const auto check = DensityMatrix::check(rho.local_dim(), rho.matrix());
        CHECK(check.ok());
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    }
}

TEST_CASE("W state basics") {
    const auto w = ergogap::w_state();
    const auto ms = w.marginal_spectrum(ergogap::Subsystem::A);
    CHECK(ms[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(ms[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const auto report = ergogap::ergotropic_gap(w, LadderSpec(2));
    CHECK(report.gap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.mean_energy == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("superposition family interpolates between its endpoints") {
    CHECK(matrices_equal(ergogap::ghz_w_superposition(1.0), ergogap::ghz(2), 1e-15));
    CHECK(matrices_equal(ergogap::ghz_w_superposition(0.0), ergogap::w_state(), 1e-15));

    // Midpoint of the gap curve: smallest gap at p = 2/5.
    const auto rho = ergogap::ghz_w_superposition(0.4);
    const auto report = ergogap::ergotropic_gap(rho, LadderSpec(2));
    CHECK(report.gap ==
          doctest::Approx((3.0 - std::sqrt(1.8)) / 2.0).epsilon(1e-9));
}

TEST_CASE("superposition gap closed form across the grid") {
    // Pure state: marginal spectra {lambda, 1-lambda} with
    // lambda = (1 + sqrt(1 - 4 det)) / 2; the gap works out to
    // (3 - sqrt(1 + 4p - 5p^2)) / 2, and the bound side is identically zero.
    const LadderSpec spec(2);
    for (int k = 0; k <= 10; ++k) {
        const double p = 0.1 * k;
        const auto rho = ergogap::ghz_w_superposition(p);
        const auto v = ergogap::witness(rho, spec);
        const double expect = (3.0 - std::sqrt(1.0 + 4.0 * p - 5.0 * p * p)) / 2.0;
        CHECK(std::abs(v.gap - expect) < 1e-9);
        CHECK(std::abs(v.y_minus_z) < 1e-12);
        CHECK(v.verdict == Verdict::Entangled);
    }
}

TEST_CASE("colored-noise family endpoints and closed forms") {
    CHECK(matrices_equal(ergogap::ghz_colored_noise(0.0), ergogap::ghz(2), 1e-15));

    // Full dephasing leaves the classical corner mixture: gap 1 = M(2).
    const auto dephased = ergogap::ghz_colored_noise(1.0);
    CHECK(matrices_equal(dephased, ergogap::classical_ghz_diag(2), 1e-15));
    CHECK(ergogap::ergotropic_gap(dephased, LadderSpec(2)).gap ==
          doctest::Approx(1.0).epsilon(1e-9));

    const LadderSpec spec(2);
    for (int k = 0; k <= 10; ++k) {
        const double p = 0.1 * k;
        const auto v = ergogap::witness(ergogap::ghz_colored_noise(p), spec);
        CHECK(std::abs(v.gap - (3.0 - p) / 2.0) < 1e-9);
        CHECK(std::abs(v.y_minus_z - p) < 1e-9);
    }
}

TEST_CASE("white-noise family endpoints and closed forms") {
    const auto mm = ergogap::ghz_white_noise(0.0);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(mm.matrix()(i, i).real() == doctest::Approx(0.125).epsilon(1e-15));

    CHECK(ergogap::ergotropic_gap(ergogap::ghz_white_noise(1.0), LadderSpec(2)).gap ==
          doctest::Approx(1.5).epsilon(1e-9));

    const LadderSpec spec(2);
    for (int k = 0; k <= 10; ++k) {
        const double p = 0.1 * k;
        const auto v = ergogap::witness(ergogap::ghz_white_noise(p), spec);
        CHECK(std::abs(v.gap - 1.5 * p) < 1e-9);
        CHECK(std::abs(v.y_minus_z - 1.125 * (1.0 - p)) < 1e-9);
    }

    // The verdict flips across p = 3/7.
    CHECK(ergogap::witness(ergogap::ghz_white_noise(3.0 / 7.0 + 0.01), spec).verdict ==
          Verdict::Entangled);
    CHECK(ergogap::witness(ergogap::ghz_white_noise(3.0 / 7.0 - 0.01), spec).verdict ==
          Verdict::Inconclusive);
}

TEST_CASE("classical diagonal family") {
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto rho = ergogap::classical_ghz_diag(d);
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t corner = i * d * d + i * d + i;
            CHECK(rho.matrix()(corner, corner).real() ==
                  doctest::Approx(1.0 / double(d)).epsilon(1e-15));
        }
        CHECK(rho.global_spectrum()[0] == doctest::Approx(1.0 / double(d)));
        CHECK(rho.global_spectrum()[d] < 1e-15);
    }
}

TEST_CASE("random families are deterministic in the seed") {
    CHECK(matrices_identical(ergogap::random_pure(2, 99), ergogap::random_pure(2, 99)));
    CHECK_FALSE(matrices_equal(ergogap::random_pure(2, 99),
                               ergogap::random_pure(2, 100), 1e-6));

    CHECK(matrices_identical(ergogap::random_mixed(2, 3, 7),
                             ergogap::random_mixed(2, 3, 7)));
    CHECK(matrices_identical(ergogap::product_mixture(3, 4, 21),
                             ergogap::product_mixture(3, 4, 21)));
    CHECK_FALSE(matrices_equal(ergogap::product_mixture(3, 4, 21),
                               ergogap::product_mixture(3, 4, 22), 1e-6));
}

TEST_CASE("random pure states are normalized and entangled in practice") {
    for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        const auto rho = ergogap::random_pure(2, seed);
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
        CHECK(rho.global_spectrum()[0] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("product mixtures never trip the witness") {
    const LadderSpec spec2(2);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto rho = ergogap::product_mixture(2, 1 + seed % 5, seed);
        const auto v = ergogap::witness(rho, spec2);
        CHECK(v.verdict == Verdict::Inconclusive);
        CHECK(v.gap <= v.min_bound + 1e-7);
        CHECK(ergogap::nielsen_kempe_check(rho).passes);
    }
    const LadderSpec spec3(3);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto rho = ergogap::product_mixture(3, 2, seed);
        CHECK(ergogap::witness(rho, spec3).verdict == Verdict::Inconclusive);
    }
}

TEST_CASE("family name parsing round-trips") {
    const std::vector<StateFamily> all{
        StateFamily::Ghz,           StateFamily::W,
        StateFamily::GhzWSuperposition, StateFamily::GhzColoredNoise,
        StateFamily::GhzWhiteNoise, StateFamily::ClassicalGhzDiag,
        StateFamily::RandomPure,    StateFamily::RandomMixed,
        StateFamily::ProductMixture,
    };
    for (const auto family : all) {
        const auto name = ergogap::family_name(family);
        const auto parsed = ergogap::parse_family(name);
        REQUIRE(parsed.has_value());
        CHECK(*parsed == family);
    }
    CHECK(ergogap::parse_family("ghz") == StateFamily::Ghz);
    CHECK(ergogap::parse_family("ghz-white-noise") == StateFamily::GhzWhiteNoise);
    CHECK_FALSE(ergogap::parse_family("no-such-family").has_value());
    CHECK_FALSE(ergogap::parse_family("").has_value());
}

TEST_CASE("family_uses_p marks exactly the noise and superposition families") {
    CHECK(ergogap::family_uses_p(StateFamily::GhzWSuperposition));
    CHECK(ergogap::family_uses_p(StateFamily::GhzColoredNoise));
    CHECK(ergogap::family_uses_p(StateFamily::GhzWhiteNoise));
    CHECK_FALSE(ergogap::family_uses_p(StateFamily::Ghz));
    CHECK_FALSE(ergogap::family_uses_p(StateFamily::W));
    CHECK_FALSE(ergogap::family_uses_p(StateFamily::RandomPure));
    CHECK_FALSE(ergogap::family_uses_p(StateFamily::ProductMixture));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ergogap::ghz_w_superposition(1.2), ergogap::OutOfRange);
    CHECK_THROWS_AS(ergogap::ghz_colored_noise(-0.1), ergogap::OutOfRange);
    CHECK_THROWS_AS(ergogap::ghz(1), ergogap::OutOfRange);
    CHECK_THROWS_AS(ergogap::random_mixed(2, 0, 1), ergogap::OutOfRange);
    CHECK_THROWS_AS(ergogap::product_mixture(2, 0, 1), ergogap::OutOfRange);

    FamilySpec w_at_3{StateFamily::W, 3};
    CHECK_THROWS_AS(ergogap::make_state(w_at_3), ergogap::UnsupportedDimension);
    FamilySpec noise_at_3{StateFamily::GhzWhiteNoise, 3, 0.5};
    CHECK_THROWS_AS(ergogap::make_state(noise_at_3), ergogap::UnsupportedDimension);
}
