#include "ergogap/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

constexpr double kEigenvalueSlack = 1e-9;  // negativity tolerated before rejection
constexpr double kTraceSlack = 1e-9;
constexpr double kPureNormSlack = 1e-6;

// Clamp policy for eigenvalues of a unit-trace positive operator: values in
// [-slack, 0) become 0, values in (1, 1+slack] become 1, anything further out
// is rejected.  The survivors are renormalized to sum exactly to one.
std::vector<double> clamp_to_probabilities(std::vector<double> evals) {
    for (double& v : evals) {
        if (v < -kEigenvalueSlack)
            throw ValidationError("eigenvalue " + std::to_string(v) +
                                  " below -1e-9; matrix is not positive semidefinite");
        if (v > 1.0 + kEigenvalueSlack)
            throw ValidationError("eigenvalue " + std::to_string(v) + " exceeds 1 + 1e-9");
        v = std::clamp(v, 0.0, 1.0);
    }
    const double sum = std::accumulate(evals.begin(), evals.end(), 0.0);
    if (std::abs(sum - 1.0) > kTraceSlack)
        throw ValidationError("clamped spectrum sums to " + std::to_string(sum));
    for (double& v : evals) v /= sum;
    return evals;
}

std::size_t cube_root_of_length(std::size_t len) {
    for (std::size_t d = 2; d * d * d <= len; ++d)
        if (d * d * d == len) return d;
    return 0;
}

} // namespace

Spectrum::Spectrum(std::vector<double> values, double sum_tol)
    : values_(std::move(values)) {
    double sum = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double v = values_[k];
        if (v < 0.0 || v > 1.0)
            throw ValidationError("spectrum entry " + std::to_string(v) +
                                  " outside [0, 1]");
        if (k > 0 && v > values_[k - 1])
            throw ValidationError("spectrum is not nonincreasing at position " +
                                  std::to_string(k));
        sum += v;
    }
    if (std::abs(sum - 1.0) > sum_tol)
        throw ValidationError("spectrum sums to " + std::to_string(sum));
}

StateCheck DensityMatrix::check(std::size_t local_dim, const ComplexMatrix& m,
                                double tol) {
    StateCheck r;
    r.dimension_ok = local_dim >= 2 && m.size() == local_dim * local_dim * local_dim;

    r.hermiticity_deviation = m.hermiticity_deviation();
    r.hermitian_ok = r.hermiticity_deviation <= tol;

    r.trace_deviation = std::abs(m.trace() - std::complex<double>(1.0));
    r.trace_ok = r.trace_deviation <= kTraceSlack;

    if (r.hermitian_ok && m.size() > 0) {
        const auto evals = hermitian_eigenvalues(m, tol);
        r.min_eigenvalue = evals.back();
        r.positive_ok = r.min_eigenvalue >= -kEigenvalueSlack;
    }
    return r;
}

DensityMatrix::DensityMatrix(std::size_t d, ComplexMatrix m, Spectrum spectrum)
    : d_(d), matrix_(std::move(m)), spectrum_(std::move(spectrum)) {}

DensityMatrix DensityMatrix::from_matrix(std::size_t local_dim, ComplexMatrix m,
                                         double tol) {
    if (local_dim < 2)
        throw DimensionMismatch("local dimension must be at least 2, got " +
                                std::to_string(local_dim));
    const std::size_t n = local_dim * local_dim * local_dim;
    if (m.size() != n)
        throw DimensionMismatch("matrix side " + std::to_string(m.size()) +
                                " does not equal d^3 = " + std::to_string(n));

    const double dev = m.hermiticity_deviation();
    if (dev > tol) throw NotHermitian(dev);

    const double trace_dev = std::abs(m.trace() - std::complex<double>(1.0));
    if (trace_dev > kTraceSlack)
        throw ValidationError("trace deviates from 1 by " + std::to_string(trace_dev));

    auto evals = hermitian_eigenvalues(m, tol);
    Spectrum spectrum(clamp_to_probabilities(std::move(evals)));
    return DensityMatrix(local_dim, std::move(m), std::move(spectrum));
}

DensityMatrix DensityMatrix::from_pure(
    std::span<const std::complex<double>> amplitudes) {
    const std::size_t d = cube_root_of_length(amplitudes.size());
    if (d == 0) throw BadLength(amplitudes.size());

    double norm_sq = 0.0;
    for (const auto& a : amplitudes) norm_sq += std::norm(a);
    const double norm = std::sqrt(norm_sq);
    if (std::abs(norm - 1.0) > kPureNormSlack) throw NotNormalized(norm);

    const std::size_t n = amplitudes.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ai = amplitudes[i] / norm;
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = ai * std::conj(amplitudes[j] / norm);
    }
    return from_matrix(d, std::move(m));
}

DensityMatrix DensityMatrix::mix(
    const std::vector<std::pair<double, DensityMatrix>>& components) {
    if (components.empty()) throw WeightSum("mixture has no components");

    double sum = 0.0;
    for (const auto& [w, state] : components) {
        if (w < 0.0) throw WeightSum("negative weight " + std::to_string(w));
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw WeightSum("weights sum to " + std::to_string(sum));

    const std::size_t d = components.front().second.local_dim();
    ComplexMatrix acc(d * d * d);
    for (const auto& [w, state] : components) {
        if (state.local_dim() != d)
            throw DimensionMismatch("mixture components have local dimensions " +
                                    std::to_string(d) + " and " +
                                    std::to_string(state.local_dim()));
        ComplexMatrix term = state.matrix();
        term *= w;
        acc += term;
    }
    return from_matrix(d, std::move(acc));
}

ComplexMatrix DensityMatrix::marginal(Subsystem which) const {
    return partial_trace(matrix_, {d_, d_, d_}, which);
}

Spectrum DensityMatrix::marginal_spectrum(Subsystem which) const {
    auto evals = hermitian_eigenvalues(marginal(which));
    return Spectrum(clamp_to_probabilities(std::move(evals)));
}

} // namespace ergogap
