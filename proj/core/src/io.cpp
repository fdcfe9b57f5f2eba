#include "ergogap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

using nlohmann::json;

std::complex<double> parse_entry(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("matrix entries must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json entry_to_json(const std::complex<double>& v) {
    return json::array({v.real(), v.imag()});
}

struct RawState {
    std::size_t d = 0;
    bool pure = false;
    std::vector<std::complex<double>> amplitudes;
    std::vector<std::complex<double>> entries; // row-major dense matrix
};

RawState parse_raw_state(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object()) throw ParseError("state file must be a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw ParseError("missing integer field \"d\"");
    if (!j.contains("format") || !j["format"].is_string())
        throw ParseError("missing string field \"format\"");

    const auto d_raw = j["d"].get<long long>();
    if (d_raw < 2) throw ParseError("\"d\" must be at least 2");

    RawState raw;
    raw.d = static_cast<std::size_t>(d_raw);
    const std::size_t n = raw.d * raw.d * raw.d;
    const std::string format = j["format"].get<std::string>();

    if (format == "pure") {
        if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
            throw ParseError("pure format requires an \"amplitudes\" array");
        const json& amps = j["amplitudes"];
        if (amps.size() != n)
            throw ParseError("expected " + std::to_string(n) + " amplitudes, got " +
                             std::to_string(amps.size()));
        raw.pure = true;
        raw.amplitudes.resize(n);
        for (std::size_t i = 0; i < n; ++i) raw.amplitudes[i] = parse_entry(amps[i]);
        return raw;
    }

    if (format == "dense") {
        if (!j.contains("matrix") || !j["matrix"].is_array())
            throw ParseError("dense format requires a \"matrix\" array");
        const json& rows = j["matrix"];
        if (rows.size() != n)
            throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                             std::to_string(rows.size()));
        raw.entries.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || row.size() != n)
                throw ParseError("matrix row " + std::to_string(i) + " must have " +
                                 std::to_string(n) + " entries");
            for (std::size_t k = 0; k < n; ++k)
                raw.entries[i * n + k] = parse_entry(row[k]);
        }
        return raw;
    }

    throw ParseError("unknown format \"" + format + "\" (expected \"dense\" or \"pure\")");
}

ComplexMatrix dense_from_raw(const RawState& raw) {
    const std::size_t n = raw.d * raw.d * raw.d;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) m(i, k) = raw.entries[i * n + k];
    return m;
}

} // namespace

DensityMatrix parse_state_json(std::string_view text) {
    const RawState raw = parse_raw_state(text);
    if (raw.pure) return DensityMatrix::from_pure(raw.amplitudes);
    return DensityMatrix::from_matrix(raw.d, dense_from_raw(raw));
}

DensityMatrix load_state_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

StateFilePayload parse_state_payload(std::string_view text) {
    const RawState raw = parse_raw_state(text);
    if (!raw.pure) return {raw.d, dense_from_raw(raw)};

    double norm_sq = 0.0;
    for (const auto& a : raw.amplitudes) norm_sq += std::norm(a);
    const double norm = std::sqrt(norm_sq);
    const double scale = std::abs(norm - 1.0) <= 1e-6 && norm > 0.0 ? 1.0 / norm : 1.0;

    const std::size_t n = raw.amplitudes.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = (scale * raw.amplitudes[i]) * std::conj(scale * raw.amplitudes[k]);
    return {raw.d, std::move(m)};
}

StateFilePayload load_state_payload(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_payload(buffer.str());
}

std::string dense_state_json(const DensityMatrix& state) {
    const std::size_t n = state.dim();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k)
            row.push_back(entry_to_json(state.matrix()(i, k)));
        rows.push_back(std::move(row));
    }
    const json j{{"d", state.local_dim()}, {"format", "dense"}, {"matrix", std::move(rows)}};
    return j.dump();
}

std::string pure_state_json(std::size_t d,
                            std::span<const std::complex<double>> amplitudes) {
    if (amplitudes.size() != d * d * d)
        throw LengthMismatch(amplitudes.size(), d * d * d);
    json amps = json::array();
    for (const auto& a : amplitudes) amps.push_back(entry_to_json(a));
    const json j{{"d", d}, {"format", "pure"}, {"amplitudes", std::move(amps)}};
    return j.dump();
}

std::string verdict_json(const WitnessVerdict& v, std::size_t d) {
    const json j{{"d", d},
                 {"units", "E"},
                 {"gap", v.gap},
                 {"y", v.y},
                 {"z", v.z},
                 {"y_minus_z", v.y_minus_z},
                 {"m_d", v.m_d},
                 {"min_bound", v.min_bound},
                 {"margin", v.margin},
                 {"verdict", std::string(verdict_name(v.verdict))}};
    return j.dump();
}

std::string gap_report_json(const GapReport& r, std::size_t d) {
    const json j{{"d", d},
                 {"units", "E"},
                 {"gap", r.gap},
                 {"global_ergotropy", r.global_ergotropy},
                 {"local_ergotropy_total", r.local_ergotropy_total},
                 {"local_ergotropy_A", r.local_ergotropy[0]},
                 {"local_ergotropy_B", r.local_ergotropy[1]},
                 {"local_ergotropy_C", r.local_ergotropy[2]},
                 {"mean_energy", r.mean_energy},
                 {"global_passive_energy", r.global_passive_energy},
                 {"local_passive_energy_A", r.local_passive_energy[0]},
                 {"local_passive_energy_B", r.local_passive_energy[1]},
                 {"local_passive_energy_C", r.local_passive_energy[2]}};
    return j.dump();
}

std::string state_check_json(const StateCheck& c) {
    const json j{{"valid", c.ok()},
                 {"dimension_ok", c.dimension_ok},
                 {"hermitian_ok", c.hermitian_ok},
                 {"trace_ok", c.trace_ok},
                 {"positive_ok", c.positive_ok},
                 {"hermiticity_deviation", c.hermiticity_deviation},
                 {"trace_deviation", c.trace_deviation},
                 {"min_eigenvalue", c.min_eigenvalue}};
    return j.dump();
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "# energies in units of E\n";
    out << "p,gap,y_minus_z,m_d,min_bound,verdict,margin\n";
    for (const auto& r : rows) {
        out << format_number(r.p) << ',' << format_number(r.gap) << ','
            << format_number(r.y_minus_z) << ',' << format_number(r.m_d) << ','
            << format_number(r.min_bound) << ',' << verdict_name(r.verdict) << ','
            << format_number(r.margin) << '\n';
    }
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

} // namespace ergogap
