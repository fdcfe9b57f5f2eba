#include "ergogap/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "ergogap/errors.hpp"

namespace ergogap {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

std::complex<double> ComplexMatrix::trace() const {
    std::complex<double> t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& v : data_) sum += std::norm(v);
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_deviation() const {
    double dev = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.n_ != n_)
        throw DimensionMismatch("cannot add " + std::to_string(n_) + "x" +
                                std::to_string(n_) + " and " + std::to_string(other.n_) +
                                "x" + std::to_string(other.n_));
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double factor) {
    for (auto& v : data_) v *= factor;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator*(double factor, ComplexMatrix m) {
    m *= factor;
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const std::size_t n = lhs.size();
    if (rhs.size() != n)
        throw DimensionMismatch("matmul operands have sides " + std::to_string(n) +
                                " and " + std::to_string(rhs.size()));
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const auto lik = lhs(i, k);
            if (lik == std::complex<double>(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    return out;
}

double expectation_value(const ComplexMatrix& rho, const ComplexMatrix& op) {
    const std::size_t n = rho.size();
    if (op.size() != n)
        throw DimensionMismatch("state has side " + std::to_string(n) +
                                ", operator has side " + std::to_string(op.size()));
    std::complex<double> t = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t += rho(i, j) * op(j, i);
    return t.real();
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += std::norm(m(i, j));
    return std::sqrt(sum);
}

std::vector<double> sorted_diagonal(const ComplexMatrix& m) {
    std::vector<double> evals(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) evals[i] = m(i, i).real();
    std::sort(evals.begin(), evals.end(), std::greater<>());
    return evals;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    const double dev = m.hermiticity_deviation();
    if (dev > tol) throw NotHermitian(dev);

    const std::size_t n = m.size();
    if (n == 0) return {};
    if (n == 1) return {m(0, 0).real()};

    // Work on the symmetrized copy so roundoff asymmetry cannot accumulate.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    const double target = tol * a.frobenius_norm();

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) return sorted_diagonal(a);

        for (std::size_t p = 0; p < n - 1; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) {
                    // Too small to matter and too small to divide by.
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }

                // Factor out the phase of a_pq; the remaining rotation is the
                // classic real symmetric Jacobi rotation through angle theta
                // with tan(2 theta) = 2|a_pq| / (a_qq - a_pp).
                const std::complex<double> phase = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // a <- J^dagger a J with J the identity except
                // J(p,p) = phase * c, J(p,q) = phase * s, J(q,p) = -s, J(q,q) = c.
                for (std::size_t i = 0; i < n; ++i) {
                    const auto x = a(i, p);
                    const auto y = a(i, q);
                    a(i, p) = c * (phase * x) - s * y;
                    a(i, q) = s * (phase * x) + c * y;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const auto x = a(p, j);
                    const auto y = a(q, j);
                    a(p, j) = c * (std::conj(phase) * x) - s * y;
                    a(q, j) = s * (std::conj(phase) * x) + c * y;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    if (off_diagonal_norm(a) <= target) return sorted_diagonal(a);
    throw NoConvergence(kMaxJacobiSweeps);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t cap) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    if (na != 0 && nb > cap / na) throw SizeOverflow(na * nb, cap);

    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const auto aij = a(i, j);
            if (aij == std::complex<double>(0.0)) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::array<std::size_t, 3>& dims,
                            Subsystem keep) {
    const std::size_t total = dims[0] * dims[1] * dims[2];
    if (m.size() != total)
        throw DimensionMismatch("matrix side " + std::to_string(m.size()) +
                                " does not factor as " + std::to_string(dims[0]) + "x" +
                                std::to_string(dims[1]) + "x" + std::to_string(dims[2]));

    const auto idx = [&](std::size_t ia, std::size_t ib, std::size_t ic) {
        return (ia * dims[1] + ib) * dims[2] + ic;
    };

    const std::size_t dk = dims[static_cast<std::size_t>(keep)];
    ComplexMatrix out(dk);

    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            std::complex<double> sum = 0.0;
            switch (keep) {
                case Subsystem::A:
                    for (std::size_t b = 0; b < dims[1]; ++b)
                        for (std::size_t c = 0; c < dims[2]; ++c)
                            sum += m(idx(i, b, c), idx(j, b, c));
                    break;
                case Subsystem::B:
                    for (std::size_t aa = 0; aa < dims[0]; ++aa)
                        for (std::size_t c = 0; c < dims[2]; ++c)
                            sum += m(idx(aa, i, c), idx(aa, j, c));
                    break;
                case Subsystem::C:
                    for (std::size_t aa = 0; aa < dims[0]; ++aa)
                        for (std::size_t b = 0; b < dims[1]; ++b)
                            sum += m(idx(aa, b, i), idx(aa, b, j));
                    break;
            }
            out(i, j) = sum;
        }
    return out;
}

} // namespace ergogap
