#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ergogap/errors.hpp"
#include "ergogap/matrix.hpp"
#include "ergogap/state.hpp"

using ergogap::ComplexMatrix;
using ergogap::DensityMatrix;
using ergogap::Spectrum;
using ergogap::Subsystem;

namespace {

using complexd = std::complex<double>;

std::vector<complexd> ghz_amplitudes() {
    std::vector<complexd> a(8, 0.0);
    a[0] = 1.0 / std::sqrt(2.0);
    a[7] = 1.0 / std::sqrt(2.0);
    return a;
}

std::vector<complexd> w_amplitudes() {
    std::vector<complexd> a(8, 0.0);
    const double v = 1.0 / std::sqrt(3.0);
    a[1] = v;
    a[2] = v;
    a[4] = v;
    return a;
}

} // namespace

TEST_CASE("Spectrum constructor enforces its invariants") {
    CHECK_NOTHROW(Spectrum({0.5, 0.3, 0.2}));
    CHECK_NOTHROW(Spectrum({1.0}));
    CHECK_THROWS_AS(Spectrum({0.3, 0.5, 0.2}), ergogap::ValidationError);
    CHECK_THROWS_AS(Spectrum({1.2, -0.2}), ergogap::ValidationError);
    CHECK_THROWS_AS(Spectrum({0.5, 0.3}), ergogap::ValidationError);
    CHECK_THROWS_AS(Spectrum({0.7, 0.7}), ergogap::ValidationError);
}

TEST_CASE("pure ground state") {
    std::vector<complexd> a(8, 0.0);
    a[0] = 1.0;
    const auto rho = DensityMatrix::from_pure(a);

    CHECK(rho.local_dim() == 2);
    CHECK(rho.dim() == 8);
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho.matrix()(1, 1)) < 1e-15);

    const auto& spec = rho.global_spectrum();
    CHECK(spec[0] == doctest::Approx(1.0));
    for (std::size_t k = 1; k < 8; ++k) CHECK(spec[k] < 1e-12);

    for (const auto which : {Subsystem::A, Subsystem::B, Subsystem::C}) {
        const auto ms = rho.marginal_spectrum(which);
        CHECK(ms[0] == doctest::Approx(1.0));
        CHECK(ms[1] < 1e-12);
    }
}

TEST_CASE("GHZ state: corner matrix entries and maximally mixed marginals") {
    const auto rho = DensityMatrix::from_pure(ghz_amplitudes());

    const auto& m = rho.matrix();
    for (const auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 0},
                              {0, 7},
                              {7, 0},
                              {7, 7}})
        CHECK(m(i, j).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(m(1, 1)) < 1e-15);
    CHECK(std::abs(m(0, 1)) < 1e-15);

    CHECK(rho.global_spectrum()[0] == doctest::Approx(1.0));

    for (const auto which : {Subsystem::A, Subsystem::B, Subsystem::C}) {
        const auto ms = rho.marginal_spectrum(which);
        CHECK(ms[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(ms[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("W state matrix support and skewed marginals") {
    const auto rho = DensityMatrix::from_pure(w_amplitudes());

    const auto& m = rho.matrix();
    for (const std::size_t i : {1, 2, 4})
        for (const std::size_t j : {1, 2, 4})
            CHECK(m(i, j).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(m(0, 0)) < 1e-15);
    CHECK(std::abs(m(7, 7)) < 1e-15);

    for (const auto which : {Subsystem::A, Subsystem::B, Subsystem::C}) {
        const auto ms = rho.marginal_spectrum(which);
        CHECK(ms[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(ms[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("rank-2 corner mixture has the closed-form spectrum") {
    // rho = 1/2 (|000><000| + |111><111|) + (1-p)/2 (|000><111| + h.c.)
    // is supported on the corner 2x2 block, whose eigenvalues follow from the
    // characteristic polynomial: 1/2 +- (1-p)/2, i.e. {1 - p/2, p/2}.
    for (const double p : {0.0, 0.1, 0.3, 0.5, 0.8, 1.0}) {
        ComplexMatrix m(8);
        m(0, 0) = 0.5;
        m(7, 7) = 0.5;
        m(0, 7) = (1.0 - p) / 2.0;
        m(7, 0) = (1.0 - p) / 2.0;
        const auto rho = DensityMatrix::from_matrix(2, m);

        const double tr = 1.0;
        const double det = 0.25 - (1.0 - p) * (1.0 - p) / 4.0;
        const double disc = std::sqrt(tr * tr - 4.0 * det);
        const double hi = (tr + disc) / 2.0;
        const double lo = (tr - disc) / 2.0;
        CHECK(hi == doctest::Approx(1.0 - p / 2.0).epsilon(1e-12));
        CHECK(lo == doctest::Approx(p / 2.0).epsilon(1e-12));

        const auto& spec = rho.global_spectrum();
        CHECK(spec[0] == doctest::Approx(hi).epsilon(1e-9));
        CHECK(std::abs(spec[1] - lo) < 1e-9);
        for (std::size_t k = 2; k < 8; ++k) CHECK(spec[k] < 1e-12);
    }
}

TEST_CASE("isotropic corner state at p = 3/7") {
    // p |GHZ><GHZ| + (1-p) I/8 written out entry by entry.
    const double p = 3.0 / 7.0;
    ComplexMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = (1.0 - p) / 8.0;
    m(0, 0) += p / 2.0;
    m(7, 7) += p / 2.0;
    m(0, 7) = p / 2.0;
    m(7, 0) = p / 2.0;

    CHECK(m(1, 1).real() == doctest::Approx(1.0 / 14.0).epsilon(1e-15));
    CHECK(m(0, 0).real() == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK(m(0, 7).real() == doctest::Approx(3.0 / 14.0).epsilon(1e-15));

    const auto rho = DensityMatrix::from_matrix(2, m);
    const auto& spec = rho.global_spectrum();
    // Corner block {2/7 +- 3/14} = {1/2, 1/14}; bulk contributes 1/14 six more
    // times.
    CHECK(spec[0] == doctest::Approx(0.5).epsilon(1e-12));
    for (std::size_t k = 1; k < 8; ++k)
        CHECK(spec[k] == doctest::Approx(1.0 / 14.0).epsilon(1e-10));
}

TEST_CASE("mix is entrywise linear and validates weights") {
    const auto ghz = DensityMatrix::from_pure(ghz_amplitudes());
    const auto w = DensityMatrix::from_pure(w_amplitudes());

    const auto mixed = DensityMatrix::mix({{0.25, ghz}, {0.75, w}});
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const auto expect = 0.25 * ghz.matrix()(i, j) + 0.75 * w.matrix()(i, j);
            CHECK(std::abs(mixed.matrix()(i, j) - expect) < 1e-15);
        }

    CHECK_THROWS_AS(DensityMatrix::mix({{0.25, ghz}, {0.65, w}}), ergogap::WeightSum);
    CHECK_THROWS_AS(DensityMatrix::mix({{-0.1, ghz}, {1.1, w}}), ergogap::WeightSum);
    CHECK_THROWS_AS(DensityMatrix::mix({}), ergogap::WeightSum);
}

TEST_CASE("product of diagonal marginals has the product spectrum") {
    const std::vector<double> pa{0.7, 0.3};
    const std::vector<double> pb{0.6, 0.4};
    const std::vector<double> pc{0.9, 0.1};
    const auto m = ergogap::tensor_product(
        ergogap::tensor_product(ComplexMatrix::diagonal(pa), ComplexMatrix::diagonal(pb)),
        ComplexMatrix::diagonal(pc));
    const auto rho = DensityMatrix::from_matrix(2, m);

    std::vector<double> expect;
    for (const double a : pa)
        for (const double b : pb)
            for (const double c : pc) expect.push_back(a * b * c);
    std::sort(expect.begin(), expect.end(), std::greater<>());

    const auto& spec = rho.global_spectrum();
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(spec[k] == doctest::Approx(expect[k]).epsilon(1e-10));

    // Marginals recover the local distributions.
    const auto ma = rho.marginal_spectrum(Subsystem::A);
    CHECK(ma[0] == doctest::Approx(0.7).epsilon(1e-10));
    const auto mc = rho.marginal_spectrum(Subsystem::C);
    CHECK(mc[0] == doctest::Approx(0.9).epsilon(1e-10));
}

TEST_CASE("slightly negative eigenvalues are clamped, real negativity rejected") {
    ComplexMatrix ok(8);
    ok(0, 0) = 0.5;
    ok(1, 1) = 0.5 + 5e-10;
    ok(2, 2) = -5e-10;
    const auto rho = DensityMatrix::from_matrix(2, ok);
    const auto& spec = rho.global_spectrum();
    double sum = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(spec[k] >= 0.0);
        sum += spec[k];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix bad(8);
    bad(0, 0) = 0.55;
    bad(1, 1) = 0.55;
    bad(2, 2) = -0.1;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(2, bad), ergogap::ValidationError);
}

TEST_CASE("from_matrix rejects wrong shapes, asymmetry, and bad traces") {
    CHECK_THROWS_AS(DensityMatrix::from_matrix(2, ComplexMatrix(6)),
                    ergogap::DimensionMismatch);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(1, ComplexMatrix(1)),
                    ergogap::DimensionMismatch);

    ComplexMatrix skew(8);
    skew(0, 0) = 1.0;
    skew(0, 1) = 0.5;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(2, skew), ergogap::NotHermitian);

    ComplexMatrix low_trace(8);
    low_trace(0, 0) = 0.9;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(2, low_trace), ergogap::ValidationError);
}

TEST_CASE("from_pure norm handling") {
    // Norm off by 5e-7: inside the slack, silently renormalized.
    auto near = ghz_amplitudes();
    for (auto& v : near) v *= 1.0 + 5e-7 / 2.0;
    const auto rho = DensityMatrix::from_pure(near);
    CHECK(rho.global_spectrum()[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));

    // Norm 1.1: rejected with the measured norm attached.
    auto far = ghz_amplitudes();
    for (auto& v : far) v *= 1.1;
    CHECK_THROWS_AS(DensityMatrix::from_pure(far), ergogap::NotNormalized);
    try {
        DensityMatrix::from_pure(far);
    } catch (const ergogap::NotNormalized& e) {
        CHECK(e.norm == doctest::Approx(1.1).epsilon(1e-12));
    }

    // Length without an integer cube root.
    std::vector<complexd> seven(7, 0.0);
    seven[0] = 1.0;
    CHECK_THROWS_AS(DensityMatrix::from_pure(seven), ergogap::BadLength);
}

TEST_CASE("check reports each defect without throwing") {
    const auto ghz = DensityMatrix::from_pure(ghz_amplitudes());
    const auto good = DensityMatrix::check(2, ghz.matrix());
    CHECK(good.ok());
    CHECK(good.hermitian_ok);
    CHECK(good.trace_ok);
    CHECK(good.positive_ok);
    CHECK(good.dimension_ok);
    CHECK(good.min_eigenvalue >= -1e-12);

    ComplexMatrix low_trace(8);
    low_trace(0, 0) = 0.9;
    const auto traceless = DensityMatrix::check(2, low_trace);
    CHECK_FALSE(traceless.ok());
    CHECK_FALSE(traceless.trace_ok);
    CHECK(traceless.trace_deviation == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(traceless.hermitian_ok);

    ComplexMatrix skew(8);
    skew(0, 0) = 1.0;
    skew(0, 1) = 0.5;
    const auto asym = DensityMatrix::check(2, skew);
    CHECK_FALSE(asym.ok());
    CHECK_FALSE(asym.hermitian_ok);
    CHECK(asym.hermiticity_deviation == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(asym.positive_ok);

    ComplexMatrix negative(8);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    const auto neg = DensityMatrix::check(2, negative);
    CHECK_FALSE(neg.ok());
    CHECK_FALSE(neg.positive_ok);
    CHECK(neg.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(neg.trace_ok);

    const auto wrong_dim = DensityMatrix::check(2, ComplexMatrix::identity(6));
    CHECK_FALSE(wrong_dim.dimension_ok);
    CHECK_FALSE(wrong_dim.ok());
}
