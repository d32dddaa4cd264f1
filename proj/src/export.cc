#include "anyon/export.h"

#include <cstdio>
#include <numbers>
#include <sstream>

#include "anyon/error.h"
#include "anyon/modular_data.h"

namespace anyon {

using nlohmann::json;

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

json state_to_json(const StateVector &state) {
    json amps = json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    return json{{"amplitudes", amps}, {"n", state.num_qubits()}};
}

StateVector state_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes") || doc.size() != 2) {
        fail(ErrorKind::parse_error, "state document needs exactly the fields 'amplitudes' and 'n'");
    }
    if (!doc["n"].is_number_unsigned()) {
        fail(ErrorKind::parse_error, "field 'n': expected a non-negative integer");
    }
    std::size_t n = doc["n"].get<std::size_t>();
    const json &amps = doc["amplitudes"];
    if (!amps.is_array()) {
        fail(ErrorKind::parse_error, "field 'amplitudes': expected an array");
    }
    std::vector<Complex> values;
    for (std::size_t i = 0; i < amps.size(); i++) {
        const json &a = amps[i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            fail(ErrorKind::parse_error, "field 'amplitudes[" + std::to_string(i) + "]': expected [re, im]");
        }
        values.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return StateVector(n, std::move(values));
}

json record_to_json(const ExperimentRecord &record) {
    json doc;
    doc["name"] = record.name;
    doc["phase"] = record.phase;
    doc["phase_over_pi"] = record.phase / std::numbers::pi;
    doc["fidelities"] = record.fidelities;
    doc["metadata"] = record.metadata;
    if (record.sz) {
        doc["sz"] = *record.sz;
    }
    if (record.sy) {
        doc["sy"] = *record.sy;
    }
    if (record.name == "f-phase") {
        doc["F"] = complex_to_json(std::polar(1.0, record.phase));
    }
    return doc;
}

json lattice_to_json(const StabilizerCell &cell) {
    json doc;
    doc["name"] = cell.name;
    doc["n"] = cell.n;
    json qubits = json::array();
    for (std::size_t q = 0; q < cell.sites.size(); q++) {
        qubits.push_back({{"index", q}, {"row", cell.sites[q].row}, {"col", cell.sites[q].col}});
    }
    doc["qubits"] = qubits;
    json plaquettes = json::array();
    for (const auto &p : cell.plaquettes) {
        plaquettes.push_back({{"kind", p.kind == PlaquetteKind::white ? "white" : "blue"},
                              {"row", p.row},
                              {"col", p.col},
                              {"truncated", p.truncated},
                              {"qubits", p.qubits}});
    }
    doc["plaquettes"] = plaquettes;
    json stabilizers = json::array();
    for (const auto &s : cell.stabilizers) {
        stabilizers.push_back(s.str());
    }
    doc["stabilizers"] = stabilizers;
    doc["excitation"] = cell.excitation.str();
    if (!cell.sites.empty()) {
        doc["boundaries"] = {{"top", boundary_name(cell.boundaries[0])},
                             {"bottom", boundary_name(cell.boundaries[1])},
                             {"left", boundary_name(cell.boundaries[2])},
                             {"right", boundary_name(cell.boundaries[3])}};
    }
    return doc;
}

json triples_to_json(const std::vector<BulkAnyonTriple> &triples) {
    json out = json::array();
    for (const auto &t : triples) {
        json hb = json::object();
        for (const auto &h : t.half_braiding) {
            hb[h.around] = h.phase.str();
        }
        out.push_back({{"bulk", t.bulk_label},
                       {"boundary", boundary_name(t.boundary)},
                       {"boundary_label", t.boundary_label},
                       {"half_braiding", hb}});
    }
    return out;
}

json braiding_to_json(const BraidingTable &table) {
    json out = json::array();
    for (const auto &[key, phase] : table) {
        out.push_back({key.first, key.second, complex_to_json(phase.to_complex()), phase.str()});
    }
    return out;
}

json measured_table_to_json(const MeasuredRTable &table, const AnyonModel &reference) {
    auto pair_list = [](const std::map<std::pair<std::string, std::string>, Complex> &m) {
        json out = json::array();
        for (const auto &[key, value] : m) {
            out.push_back({key.first, key.second, complex_to_json(value)});
        }
        return out;
    };
    std::map<std::pair<std::string, std::string>, Complex> ref;
    for (const auto &[key, value] : reference.r_data) {
        ref[{reference.labels[key.a], reference.labels[key.b]}] = value;
    }
    json doc;
    doc["measured_r"] = pair_list(table.measured);
    doc["assembled_r"] = pair_list(table.assembled);
    doc["reference"] = pair_list(ref);
    doc["s"] = matrix_to_json(table.modular.s);
    doc["t"] = matrix_to_json(table.modular.t);
    doc["labels"] = reference.labels;
    doc["max_deviation"] = table.max_deviation;
    doc["verdict"] = table.pass ? "PASS" : "FAIL";
    if (table.worst) {
        doc["worst_pair"] = {table.worst->first, table.worst->second};
    }
    return doc;
}

std::string matrix_to_csv(const ComplexMatrix &m, const std::vector<std::string> &labels) {
    std::ostringstream out;
    out << "label";
    for (const auto &l : labels) {
        out << "," << l;
    }
    out << "\n";
    char buf[96];
    for (std::size_t r = 0; r < m.rows(); r++) {
        out << labels.at(r);
        for (std::size_t c = 0; c < m.cols(); c++) {
            // Normalize -0 so output does not depend on rounding noise signs.
            double re = m(r, c).real() + 0.0;
            double im = m(r, c).imag() + 0.0;
            std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", re, im);
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace anyon
