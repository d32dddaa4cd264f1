#pragma once

#include <string>

#include "anyon/boundary_bulk.h"
#include "anyon/lattice.h"
#include "anyon/matrix.h"
#include "anyon/protocols.h"
#include "anyon/state_vector.h"
#include "json.hpp"

namespace anyon {

// JSON views of results. Objects use nlohmann's sorted map, so keys come out
// in lexicographic order and identical inputs serialize byte-identically.
// Complex numbers are [re, im]; doubles use the shortest representation that
// reads back bit-exactly.

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const ComplexMatrix &m);

/// {"amplitudes": [[re, im], ...], "n": n}, basis order.
nlohmann::json state_to_json(const StateVector &state);
/// Throws parse_error on schema violations.
StateVector state_from_json(const nlohmann::json &doc);

nlohmann::json record_to_json(const ExperimentRecord &record);
/// {"boundaries", "plaquettes", "qubits", "stabilizers", ...}.
nlohmann::json lattice_to_json(const StabilizerCell &cell);
nlohmann::json triples_to_json(const std::vector<BulkAnyonTriple> &triples);
/// [[a, b, [re, im], "exact phase"], ...] in table order.
nlohmann::json braiding_to_json(const BraidingTable &table);
nlohmann::json measured_table_to_json(const MeasuredRTable &table, const AnyonModel &reference);

/// Comma-separated rows, one "re+imi" cell per entry, preceded by a header
/// row of labels.
std::string matrix_to_csv(const ComplexMatrix &m, const std::vector<std::string> &labels);

}  // namespace anyon
