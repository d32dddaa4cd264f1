#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "anyon/boundary_bulk.h"
#include "anyon/circuit.h"
#include "anyon/pauli_operator.h"

namespace anyon {

enum class PlaquetteKind {
    white,  ///< A_p, product of sigma_x
    blue,   ///< B_p, product of sigma_z
};

struct Plaquette {
    PlaquetteKind kind = PlaquetteKind::white;
    /// Face position; boundary faces sit at row -1 / rows-1 or column -1 /
    /// cols-1 of the face grid.
    int row = 0;
    int col = 0;
    bool truncated = false;
    std::vector<std::size_t> qubits;
};

struct QubitSite {
    int row = 0;
    int col = 0;
};

/// Boundary types in the order top, bottom, left, right.
using LatticeBoundaries = std::array<Boundary, 4>;

/// A small planar toric-code fragment. Qubits are 0-based; the presets name
/// them q1..qn in 1-based form, so qk is index k-1.
struct StabilizerCell {
    std::string name;
    std::size_t n = 0;
    std::vector<PauliOperator> stabilizers;
    /// Creates the boundary e pair.
    PauliOperator excitation;
    /// Ordered qubits that receive one sigma_x each when the m anyon is
    /// dragged along the path.
    std::map<std::string, std::vector<std::size_t>> paths;
    /// The two fusion-order operators A1, A2 used by the F protocol.
    std::map<std::string, PauliOperator> fusion_ops;

    // Filled by build_lattice only.
    std::vector<QubitSite> sites;
    std::vector<Plaquette> plaquettes;
    LatticeBoundaries boundaries{};

    /// Throws invalid_argument listing the known names.
    const std::vector<std::size_t> &path(const std::string &name) const;
    /// Product of the path's sigma_x steps.
    PauliOperator path_operator(const std::string &name) const;
    /// One PauliGate per step, in path order.
    Circuit path_circuit(const std::string &name) const;
};

/// Rank over GF(2) of the symplectic vectors (x | z) of the operators.
std::size_t symplectic_rank(std::span<const PauliOperator> ops);

/// Checks that the stabilizers commute pairwise and are independent, and that
/// the excitation anticommutes with at least one of them. Throws
/// invalid_stabilizer_set otherwise.
void validate_cell(const StabilizerCell &cell);

/// Three qubits, stabilizers {X1X2, X1X3, Z1Z2Z3}, excitation Z1,
/// Path1 = [q1, q2], Path2 = [q2, q3], A1 = X3 Z3, A2 = Z2 X3 Z1.
StabilizerCell cell3();

/// Four qubits, stabilizers {X1X2, X2X3, X3X4, Z1Z2Z3Z4}, excitation Z2,
/// Path1 = [q1, q2], Path2 = [q3, q4].
StabilizerCell cell4();

/// rows x cols grid of qubits on plaquette corners, checkerboard of white
/// (A_p) and blue (B_p) faces with face (0,0) white. A smooth side keeps the
/// white two-body boundary faces, a rough side the blue ones. Dependent
/// generators are dropped. Throws resource_limit above 24 qubits and
/// invalid_argument for grids smaller than 2x2.
StabilizerCell build_lattice(int rows, int cols, const LatticeBoundaries &boundaries);

enum class StringKind { e, m };

/// sigma_z (kind e) or sigma_x (kind m) on every listed qubit.
PauliOperator string_operator(const StabilizerCell &cell, StringKind kind, std::span<const std::size_t> qubits);

}  // namespace anyon
