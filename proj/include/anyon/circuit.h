#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "anyon/pauli_operator.h"
#include "anyon/state_vector.h"

namespace anyon {

struct PauliGate {
    PauliOperator pauli;
};
struct Hadamard {
    std::size_t qubit;
};
struct SGate {
    std::size_t qubit;
};
struct PhaseShift {
    std::size_t qubit;
    double angle;
};
struct ControlledPauli {
    std::size_t control;
    PauliOperator pauli;
};

using Gate = std::variant<PauliGate, Hadamard, SGate, PhaseShift, ControlledPauli>;

/// Ordered gate list on a fixed number of qubits.
class Circuit {
   public:
    explicit Circuit(std::size_t n) : n_(n) {
    }

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }

    /// Throws invalid_argument if the gate touches a qubit >= n.
    Circuit &append(Gate gate);

    void apply_to(StateVector &state) const;
    StateVector run(StateVector state) const {
        apply_to(state);
        return state;
    }

   private:
    std::size_t n_;
    std::vector<Gate> gates_;
};

}  // namespace anyon
