#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ergogap/matrix.hpp"

namespace ergogap {

// Probability spectrum: nonincreasing values in [0, 1] summing to one.
class Spectrum {
public:
    // Validates ordering, bounds, and the total (within sum_tol).
    explicit Spectrum(std::vector<double> values, double sum_tol = 1e-9);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// Non-throwing physicality check used by `ergogap validate`.
struct StateCheck {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool positive_ok = false;
    bool dimension_ok = false;

    bool ok() const { return dimension_ok && hermitian_ok && trace_ok && positive_ok; }
};

// Tripartite d x d x d density matrix.  Construction validates Hermiticity,
// unit trace (within 1e-9) and positivity: eigenvalues in [-1e-9, 0) are
// clamped to zero and the spectrum renormalized, anything more negative is
// rejected.  The global spectrum is computed once at construction.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(std::size_t local_dim, ComplexMatrix m,
                                     double tol = kDefaultTol);

    // Outer product of an amplitude vector of length d^3.  Norms within 1e-6
    // of one are renormalized; anything further off throws NotNormalized.
    static DensityMatrix from_pure(std::span<const std::complex<double>> amplitudes);

    // Convex combination.  Weights must be nonnegative and sum to one within
    // 1e-9; all components must share the same local dimension.
    static DensityMatrix mix(
        const std::vector<std::pair<double, DensityMatrix>>& components);

    static StateCheck check(std::size_t local_dim, const ComplexMatrix& m,
                            double tol = kDefaultTol);

    std::size_t local_dim() const { return d_; }
    std::size_t dim() const { return d_ * d_ * d_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    const Spectrum& global_spectrum() const { return spectrum_; }

    ComplexMatrix marginal(Subsystem which) const;
    Spectrum marginal_spectrum(Subsystem which) const;

private:
    DensityMatrix(std::size_t d, ComplexMatrix m, Spectrum spectrum);

    std::size_t d_;
    ComplexMatrix matrix_;
    Spectrum spectrum_;
};

} // namespace ergogap
