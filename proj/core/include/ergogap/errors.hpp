#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ergogap {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix handed to the eigensolver (or a state constructor) deviates from
// Hermitian symmetry by more than the allowed tolerance.
class NotHermitian : public Error {
public:
    explicit NotHermitian(double max_deviation)
        : Error("matrix is not Hermitian: max |m_ij - conj(m_ji)| = " +
                std::to_string(max_deviation)),
          max_deviation(max_deviation) {}
    double max_deviation;
};

// The Jacobi eigensolver failed to reach the requested off-diagonal norm
// within the sweep cap.
class NoConvergence : public Error {
public:
    explicit NoConvergence(int sweeps)
        : Error("eigensolver did not converge after " + std::to_string(sweeps) +
                " sweeps"),
          sweeps(sweeps) {}
    int sweeps;
};

// A tensor product would exceed the configured dimension cap.
class SizeOverflow : public Error {
public:
    SizeOverflow(std::size_t requested, std::size_t cap)
        : Error("tensor product dimension " + std::to_string(requested) +
                " exceeds cap " + std::to_string(cap)),
          requested(requested), cap(cap) {}
    std::size_t requested;
    std::size_t cap;
};

// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

// A pure-state amplitude vector is too far from unit norm to renormalize.
class NotNormalized : public Error {
public:
    explicit NotNormalized(double norm)
        : Error("amplitude vector has norm " + std::to_string(norm) +
                ", beyond the renormalization tolerance"),
          norm(norm) {}
    double norm;
};

// An amplitude vector length is not a cube d^3 with d >= 2.
class BadLength : public Error {
public:
    explicit BadLength(std::size_t length)
        : Error("amplitude vector length " + std::to_string(length) +
                " is not d^3 for any local dimension d >= 2"),
          length(length) {}
    std::size_t length;
};

// Mixture weights are negative or do not sum to one.
class WeightSum : public Error {
public:
    explicit WeightSum(const std::string& what) : Error("bad mixture weights: " + what) {}
};

// Two lists that must run in lockstep have different lengths.
class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t got, std::size_t expected)
        : Error("length mismatch: got " + std::to_string(got) + ", expected " +
                std::to_string(expected)),
          got(got), expected(expected) {}
    std::size_t got;
    std::size_t expected;
};

// Two independent computations of the same quantity disagree.  Always a bug.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what)
        : Error("internal inconsistency: " + what) {}
};

// A scalar argument lies outside its documented range.
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

// A brute-force routine was asked for more work than it is willing to do.
class TooLarge : public Error {
public:
    TooLarge(std::size_t length, std::size_t limit)
        : Error("brute-force input of length " + std::to_string(length) +
                " exceeds limit " + std::to_string(limit)),
          length(length), limit(limit) {}
    std::size_t length;
    std::size_t limit;
};

// An operation is only defined for specific local dimensions.
class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& what)
        : Error("unsupported dimension: " + what) {}
};

// A candidate density matrix failed physical validation.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("invalid state: " + what) {}
};

// Malformed input file or JSON document.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace ergogap
