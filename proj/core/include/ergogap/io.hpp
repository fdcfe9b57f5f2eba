#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "ergogap/bounds.hpp"
#include "ergogap/ergotropy.hpp"
#include "ergogap/state.hpp"

namespace ergogap {

// State files are JSON objects:
//   {"d": 2, "format": "dense", "matrix": [[[re, im], ...], ...]}
//   {"d": 2, "format": "pure",  "amplitudes": [[re, im], ...]}
// The matrix is d^3 x d^3, amplitudes have length d^3, every entry an
// [re, im] pair.  Parsing validates the schema (ParseError) and then the
// physics (the DensityMatrix constructors' errors pass through).
DensityMatrix parse_state_json(std::string_view text);
DensityMatrix load_state_file(const std::filesystem::path& path);

// Schema-checked but physically unvalidated payload, for `ergogap validate`.
// Pure amplitudes within the from_pure renormalization tolerance are
// normalized before the outer product, so the check mirrors what loading
// would accept.
struct StateFilePayload {
    std::size_t d;
    ComplexMatrix matrix;
};
StateFilePayload parse_state_payload(std::string_view text);
StateFilePayload load_state_payload(const std::filesystem::path& path);

std::string dense_state_json(const DensityMatrix& state);
std::string pure_state_json(std::size_t d,
                            std::span<const std::complex<double>> amplitudes);

// Single-line JSON reports, all energies in units of E.
std::string verdict_json(const WitnessVerdict& v, std::size_t d);
std::string gap_report_json(const GapReport& r, std::size_t d);
std::string state_check_json(const StateCheck& c);

struct SweepRow {
    double p;
    double gap;
    double y_minus_z;
    double m_d;
    double min_bound;
    double margin;
    Verdict verdict;
};

// Deterministic CSV: a unit comment line, a fixed header, then one row per
// grid point with numbers rendered by format_number and LF line ends.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

// Shortest %.12g rendering; byte-identical across runs for identical input.
std::string format_number(double v);

std::string_view verdict_name(Verdict v);

} // namespace ergogap
