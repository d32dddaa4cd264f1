#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anyon/matrix.h"
#include "anyon/pauli_operator.h"

namespace anyon {

inline constexpr std::size_t kMaxStateQubits = 24;

/// Dense pure state over n <= 24 qubits. Basis index bit q is qubit q.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(std::size_t n);
    /// Takes ownership of 2^n amplitudes; throws invalid_argument unless the
    /// norm is 1 within 1e-10.
    StateVector(std::size_t n, std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t n, std::uint64_t index);
    /// Rescales to unit norm; throws numerical_failure for (near) zero input.
    static StateVector normalized(std::size_t n, std::vector<Complex> amplitudes);

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    std::size_t dimension() const noexcept {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    const Complex &operator[](std::size_t index) const {
        return amps_[index];
    }
    double norm() const;

    // In-place gates. All are unitary and keep the norm.
    void apply_pauli(const PauliOperator &p);
    void apply_hadamard(std::size_t q);
    void apply_s(std::size_t q);
    /// diag(1, exp(i angle)) on qubit q.
    void apply_phase_shift(std::size_t q, double angle);
    /// P (with its phase) on the control = 1 subspace. Throws
    /// invalid_argument if the control lies in P's support.
    void apply_controlled_pauli(std::size_t control, const PauliOperator &p);

    /// Appends `extra` qubits in |0> as the highest-index qubits.
    StateVector with_ancillas(std::size_t extra) const;

   private:
    std::size_t n_;
    std::vector<Complex> amps_;
};

StateVector apply_pauli(StateVector state, const PauliOperator &p);
StateVector apply_controlled_pauli(StateVector state, std::size_t control, const PauliOperator &p);

/// <a|b>.
Complex inner_product(const StateVector &a, const StateVector &b);

/// <psi|P|psi> for any Pauli string.
Complex matrix_element(const StateVector &state, const PauliOperator &p);

/// <psi|P|psi> for hermitian P. Throws invalid_argument for non-hermitian P.
double expectation(const StateVector &state, const PauliOperator &p);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Applies prod_i (1 + S_i)/2 to |0...0> (then to later basis states in
/// index order if that is annihilated) and normalizes. Throws
/// invalid_stabilizer_set for non-commuting or non-hermitian generators and
/// frustrated_projector if every basis state is annihilated.
StateVector ground_state_from_stabilizers(std::span<const PauliOperator> generators);

inline constexpr std::size_t kMaxTomographyQubits = 8;

/// Expectations of all 4^n Pauli strings. Entry `index` is the string whose
/// qubit q factor is base-4 digit q of the index, digits 0..3 = I, X, Y, Z.
class TomographyTable {
   public:
    TomographyTable(std::size_t n, std::vector<double> values);

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    std::span<const double> values() const noexcept {
        return values_;
    }
    static PauliOperator pauli_at(std::size_t n, std::size_t index);
    /// Label without sign, qubit 0 first, e.g. "XIZ".
    std::string label(std::size_t index) const;
    double at(const std::string &label) const;

    /// rho = 2^-n sum_P <P> P.
    ComplexMatrix density_matrix() const;

   private:
    std::size_t n_;
    std::vector<double> values_;
};

/// Throws resource_limit for more than 8 qubits.
TomographyTable pauli_tomography(const StateVector &state);

}  // namespace anyon
