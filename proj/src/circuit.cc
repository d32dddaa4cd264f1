#include "anyon/circuit.h"

#include "anyon/error.h"

namespace anyon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

Circuit &Circuit::append(Gate gate) {
    auto in_range = [this](std::size_t q) {
        return q < n_;
    };
    bool ok = std::visit(overloaded{
                             [&](const PauliGate &g) {
                                 return g.pauli.num_qubits() == n_;
                             },
                             [&](const Hadamard &g) {
                                 return in_range(g.qubit);
                             },
                             [&](const SGate &g) {
                                 return in_range(g.qubit);
                             },
                             [&](const PhaseShift &g) {
                                 return in_range(g.qubit);
                             },
                             [&](const ControlledPauli &g) {
                                 return in_range(g.control) && g.pauli.num_qubits() == n_;
                             },
                         },
                         gate);
    if (!ok) {
        fail(ErrorKind::invalid_argument, "gate acts outside the " + std::to_string(n_) + "-qubit register");
    }
    gates_.push_back(std::move(gate));
    return *this;
}

void Circuit::apply_to(StateVector &state) const {
    if (state.num_qubits() != n_) {
        fail(ErrorKind::dimension_mismatch, "circuit and state qubit counts differ");
    }
    for (const auto &gate : gates_) {
        std::visit(overloaded{
                       [&](const PauliGate &g) {
                           state.apply_pauli(g.pauli);
                       },
                       [&](const Hadamard &g) {
                           state.apply_hadamard(g.qubit);
                       },
                       [&](const SGate &g) {
                           state.apply_s(g.qubit);
                       },
                       [&](const PhaseShift &g) {
                           state.apply_phase_shift(g.qubit, g.angle);
                       },
                       [&](const ControlledPauli &g) {
                           state.apply_controlled_pauli(g.control, g.pauli);
                       },
                   },
                   gate);
    }
}

}  // namespace anyon
