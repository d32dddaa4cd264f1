#include "anyon/state_vector.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "anyon/error.h"

namespace anyon {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kAnnihilatedNorm = 1e-8;

std::size_t checked_dimension(std::size_t n) {
    if (n > kMaxStateQubits) {
        fail(ErrorKind::resource_limit,
             std::to_string(n) + " qubits exceed the statevector cap of " + std::to_string(kMaxStateQubits));
    }
    return std::size_t{1} << n;
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        fail(ErrorKind::dimension_mismatch,
             "operands act on " + std::to_string(a) + " and " + std::to_string(b) + " qubits");
    }
}

Complex i_power(unsigned k) {
    static constexpr Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[k % 4];
}

/// Coefficient c such that P|s> = c |s ^ x>.
Complex pauli_coefficient(const PauliOperator &p, std::uint64_t s) {
    unsigned k = p.phase() + static_cast<unsigned>(std::popcount(p.x_mask() & p.z_mask())) +
                 2 * static_cast<unsigned>(std::popcount(p.z_mask() & s));
    return i_power(k);
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n), amps_(checked_dimension(n)) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (amps_.size() != checked_dimension(n)) {
        fail(ErrorKind::dimension_mismatch, "expected 2^" + std::to_string(n) + " amplitudes");
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        fail(ErrorKind::invalid_argument, "state is not normalized");
    }
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dimension()) {
        fail(ErrorKind::invalid_argument, "basis index out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::normalized(std::size_t n, std::vector<Complex> amplitudes) {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    if (total < kAnnihilatedNorm * kAnnihilatedNorm) {
        fail(ErrorKind::numerical_failure, "cannot normalize a zero vector");
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::apply_pauli(const PauliOperator &p) {
    require_same_size(n_, p.num_qubits());
    std::uint64_t x = p.x_mask();
    std::vector<Complex> out(amps_.size());
    for (std::uint64_t s = 0; s < amps_.size(); s++) {
        out[s ^ x] = pauli_coefficient(p, s) * amps_[s];
    }
    amps_.swap(out);
}

void StateVector::apply_hadamard(std::size_t q) {
    if (q >= n_) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    const double h = std::numbers::sqrt2 / 2.0;
    std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t s = 0; s < amps_.size(); s++) {
        if (s & bit) {
            continue;
        }
        Complex a0 = amps_[s];
        Complex a1 = amps_[s | bit];
        amps_[s] = h * (a0 + a1);
        amps_[s | bit] = h * (a0 - a1);
    }
}

void StateVector::apply_s(std::size_t q) {
    if (q >= n_) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t s = 0; s < amps_.size(); s++) {
        if (s & bit) {
            amps_[s] *= Complex(0, 1);
        }
    }
}

void StateVector::apply_phase_shift(std::size_t q, double angle) {
    if (q >= n_) {
        fail(ErrorKind::invalid_argument, "qubit index out of range");
    }
    Complex w = std::polar(1.0, angle);
    std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t s = 0; s < amps_.size(); s++) {
        if (s & bit) {
            amps_[s] *= w;
        }
    }
}

void StateVector::apply_controlled_pauli(std::size_t control, const PauliOperator &p) {
    require_same_size(n_, p.num_qubits());
    if (control >= n_) {
        fail(ErrorKind::invalid_argument, "control qubit out of range");
    }
    std::uint64_t cbit = std::uint64_t{1} << control;
    if (p.support() & cbit) {
        fail(ErrorKind::invalid_argument,
             "control qubit " + std::to_string(control) + " lies in the support of " + p.str());
    }
    std::uint64_t x = p.x_mask();
    std::vector<Complex> out(amps_);
    for (std::uint64_t s = 0; s < amps_.size(); s++) {
        if (s & cbit) {
            out[s ^ x] = pauli_coefficient(p, s) * amps_[s];
        }
    }
    amps_.swap(out);
}

StateVector StateVector::with_ancillas(std::size_t extra) const {
    std::vector<Complex> out(checked_dimension(n_ + extra));
    std::copy(amps_.begin(), amps_.end(), out.begin());
    return StateVector(n_ + extra, std::move(out));
}

StateVector apply_pauli(StateVector state, const PauliOperator &p) {
    state.apply_pauli(p);
    return state;
}

StateVector apply_controlled_pauli(StateVector state, std::size_t control, const PauliOperator &p) {
    state.apply_controlled_pauli(control, p);
    return state;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_same_size(a.num_qubits(), b.num_qubits());
    Complex acc = 0;
    for (std::size_t s = 0; s < a.dimension(); s++) {
        acc += std::conj(a[s]) * b[s];
    }
    return acc;
}

Complex matrix_element(const StateVector &state, const PauliOperator &p) {
    require_same_size(state.num_qubits(), p.num_qubits());
    std::uint64_t x = p.x_mask();
    Complex acc = 0;
    for (std::uint64_t s = 0; s < state.dimension(); s++) {
        acc += std::conj(state[s ^ x]) * pauli_coefficient(p, s) * state[s];
    }
    return acc;
}

double expectation(const StateVector &state, const PauliOperator &p) {
    if (!p.is_hermitian()) {
        fail(ErrorKind::invalid_argument, p.str() + " is not hermitian");
    }
    Complex v = matrix_element(state, p);
    if (std::abs(v.imag()) > kNormTolerance) {
        fail(ErrorKind::numerical_failure, "hermitian expectation has imaginary part");
    }
    return v.real();
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

StateVector ground_state_from_stabilizers(std::span<const PauliOperator> generators) {
    if (generators.empty()) {
        fail(ErrorKind::invalid_stabilizer_set, "no stabilizer generators");
    }
    std::size_t n = generators.front().num_qubits();
    for (std::size_t i = 0; i < generators.size(); i++) {
        require_same_size(n, generators[i].num_qubits());
        if (!generators[i].is_hermitian()) {
            fail(ErrorKind::invalid_stabilizer_set, generators[i].str() + " is not hermitian");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (!generators[i].commutes_with(generators[j])) {
                fail(ErrorKind::invalid_stabilizer_set,
                     generators[j].str() + " and " + generators[i].str() + " anticommute");
            }
        }
    }
    const std::size_t dim = checked_dimension(n);
    for (std::uint64_t seed = 0; seed < dim; seed++) {
        StateVector psi = StateVector::basis(n, seed);
        std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
        for (const auto &g : generators) {
            std::vector<Complex> next(amps);
            std::uint64_t x = g.x_mask();
            for (std::uint64_t s = 0; s < dim; s++) {
                next[s ^ x] += pauli_coefficient(g, s) * amps[s];
            }
            for (auto &a : next) {
                a *= 0.5;
            }
            amps.swap(next);
        }
        double total = 0;
        for (const auto &a : amps) {
            total += std::norm(a);
        }
        if (std::sqrt(total) >= kAnnihilatedNorm) {
            return StateVector::normalized(n, std::move(amps));
        }
    }
    fail(ErrorKind::frustrated_projector, "the stabilizer projector annihilates every basis state");
}

TomographyTable::TomographyTable(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << (2 * n))) {
        fail(ErrorKind::dimension_mismatch, "tomography table needs 4^n entries");
    }
}

PauliOperator TomographyTable::pauli_at(std::size_t n, std::size_t index) {
    static constexpr char digits[4] = {'I', 'X', 'Y', 'Z'};
    PauliOperator p = PauliOperator::identity(n);
    for (std::size_t q = 0; q < n; q++) {
        p = p * PauliOperator::single(n, q, digits[(index >> (2 * q)) & 3]);
    }
    return p;
}

std::string TomographyTable::label(std::size_t index) const {
    return pauli_at(n_, index).str().substr(1);
}

double TomographyTable::at(const std::string &label) const {
    if (label.size() != n_) {
        fail(ErrorKind::invalid_argument, "label '" + label + "' has the wrong length");
    }
    std::size_t index = 0;
    for (std::size_t q = 0; q < n_; q++) {
        std::size_t digit;
        switch (label[q]) {
            case 'I':
                digit = 0;
                break;
            case 'X':
                digit = 1;
                break;
            case 'Y':
                digit = 2;
                break;
            case 'Z':
                digit = 3;
                break;
            default:
                fail(ErrorKind::invalid_argument, "bad Pauli label '" + label + "'");
        }
        index |= digit << (2 * q);
    }
    return values_[index];
}

ComplexMatrix TomographyTable::density_matrix() const {
    std::size_t dim = std::size_t{1} << n_;
    ComplexMatrix rho(dim, dim);
    for (std::size_t k = 0; k < values_.size(); k++) {
        if (values_[k] == 0.0) {
            continue;
        }
        PauliOperator p = pauli_at(n_, k);
        for (std::uint64_t s = 0; s < dim; s++) {
            rho(s ^ p.x_mask(), s) += values_[k] * pauli_coefficient(p, s);
        }
    }
    double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            rho(r, c) *= scale;
        }
    }
    return rho;
}

TomographyTable pauli_tomography(const StateVector &state) {
    std::size_t n = state.num_qubits();
    if (n > kMaxTomographyQubits) {
        fail(ErrorKind::resource_limit, "tomography is limited to " + std::to_string(kMaxTomographyQubits) + " qubits");
    }
    std::vector<double> values(std::size_t{1} << (2 * n));
    for (std::size_t k = 0; k < values.size(); k++) {
        values[k] = expectation(state, TomographyTable::pauli_at(n, k));
    }
    return TomographyTable(n, std::move(values));
}

}  // namespace anyon
