#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ergogap {

// Default relative tolerance for Hermiticity checks and eigensolver
// convergence.
inline constexpr double kDefaultTol = 1e-10;

// Largest matrix side a tensor product is allowed to produce.  Tripartite
// states stay well below this (16^3 = 4096 covers local dimensions up to 16).
inline constexpr std::size_t kTensorSizeCap = 4096;

// Jacobi sweep cap.  Hermitian Jacobi converges quadratically; matrices in
// this library finish in well under ten sweeps.
inline constexpr int kMaxJacobiSweeps = 100;

enum class Subsystem { A = 0, B = 1, C = 2 };

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> entries);

    std::size_t size() const { return n_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const {
        return data_[i * n_ + j];
    }

    const std::vector<value_type>& data() const { return data_; }

    std::complex<double> trace() const;
    double frobenius_norm() const;

    // max_ij |m_ij - conj(m_ji)|
    double hermiticity_deviation() const;
    bool is_hermitian(double tol = kDefaultTol) const {
        return hermiticity_deviation() <= tol;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(double factor);

private:
    std::size_t n_;
    std::vector<value_type> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(double factor, ComplexMatrix m);

// Matrix product lhs * rhs.  Both operands must have the same side.
ComplexMatrix matmul(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// Re Tr(rho * op), the expectation value of a Hermitian operator.
double expectation_value(const ComplexMatrix& rho, const ComplexMatrix& op);

// Eigenvalues of a Hermitian matrix, sorted nonincreasing, by cyclic complex
// Jacobi rotations.  Throws NotHermitian if the Hermiticity deviation exceeds
// tol, NoConvergence if the off-diagonal Frobenius norm fails to fall below
// tol * ||m||_F within the sweep cap.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tol = kDefaultTol);

// Kronecker product a (x) b.  Throws SizeOverflow beyond cap.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t cap = kTensorSizeCap);

// Reduced matrix of a tripartite operator on subsystems of sizes dims,
// tracing out everything except `keep`.  Basis convention: composite index
// i_A * dims[1] * dims[2] + i_B * dims[2] + i_C.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::array<std::size_t, 3>& dims,
                            Subsystem keep);

} // namespace ergogap
