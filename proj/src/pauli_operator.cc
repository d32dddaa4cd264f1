#include "anyon/pauli_operator.h"

#include <bit>

#include "anyon/error.h"

namespace anyon {

namespace {

unsigned popcount(std::uint64_t v) {
    return static_cast<unsigned>(std::popcount(v));
}

void check_qubit(std::size_t n, std::size_t q) {
    if (q >= n) {
        fail(ErrorKind::invalid_argument,
             "qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask, unsigned phase)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase % 4) {
    if (n > kMaxQubits) {
        fail(ErrorKind::resource_limit, "Pauli strings are limited to 64 qubits");
    }
    std::uint64_t allowed = n == kMaxQubits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if ((x_mask | z_mask) & ~allowed) {
        fail(ErrorKind::invalid_argument, "Pauli mask has bits beyond qubit " + std::to_string(n));
    }
}

PauliOperator PauliOperator::identity(std::size_t n) {
    return PauliOperator(n, 0, 0, 0);
}

PauliOperator PauliOperator::x_string(std::size_t n, std::span<const std::size_t> qubits) {
    PauliOperator p = identity(n);
    for (auto q : qubits) {
        check_qubit(n, q);
        p = p * PauliOperator(n, std::uint64_t{1} << q, 0);
    }
    return p;
}

PauliOperator PauliOperator::z_string(std::size_t n, std::span<const std::size_t> qubits) {
    PauliOperator p = identity(n);
    for (auto q : qubits) {
        check_qubit(n, q);
        p = p * PauliOperator(n, 0, std::uint64_t{1} << q);
    }
    return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char pauli) {
    check_qubit(n, q);
    std::uint64_t bit = std::uint64_t{1} << q;
    switch (pauli) {
        case 'X':
            return PauliOperator(n, bit, 0);
        case 'Y':
            return PauliOperator(n, bit, bit);
        case 'Z':
            return PauliOperator(n, 0, bit);
        case 'I':
            return identity(n);
        default:
            fail(ErrorKind::invalid_argument, std::string("unknown Pauli '") + pauli + "'");
    }
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    unsigned phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
        if (!text.empty() && text[0] == 'i') {
            phase += 1;
            text.remove_prefix(1);
        }
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    if (text.size() > kMaxQubits) {
        fail(ErrorKind::resource_limit, "Pauli strings are limited to 64 qubits");
    }
    for (std::size_t q = 0; q < text.size(); q++) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (text[q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                fail(ErrorKind::invalid_argument, "bad Pauli character '" + std::string(1, text[q]) + "'");
        }
    }
    return PauliOperator(text.size(), x, z, phase);
}

std::complex<double> PauliOperator::coefficient() const {
    static constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[phase_];
}

std::size_t PauliOperator::weight() const {
    return popcount(x_ | z_);
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    if (n_ != other.n_) {
        fail(ErrorKind::dimension_mismatch, "Pauli operators act on different qubit counts");
    }
    return (popcount(x_ & other.z_) + popcount(z_ & other.x_)) % 2 == 0;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    if (n_ != other.n_) {
        fail(ErrorKind::dimension_mismatch, "Pauli operators act on different qubit counts");
    }
    // Each factor is i^k i^{|x&z|} X^x Z^z; moving Z^{z1} past X^{x2} costs
    // (-1)^{|z1 & x2|}, and the Y bookkeeping of the result is divided out.
    std::uint64_t x = x_ ^ other.x_;
    std::uint64_t z = z_ ^ other.z_;
    unsigned k = phase_ + other.phase_ + popcount(x_ & z_) + popcount(other.x_ & other.z_) +
                 2 * popcount(z_ & other.x_) + 3 * popcount(x & z);
    return PauliOperator(n_, x, z, k % 4);
}

PauliOperator PauliOperator::times_i(unsigned k) const {
    return PauliOperator(n_, x_, z_, (phase_ + k) % 4);
}

PauliOperator PauliOperator::adjoint() const {
    // Each I/X/Y/Z factor is hermitian, so only the scalar is conjugated.
    return PauliOperator(n_, x_, z_, (4 - phase_) % 4);
}

std::string PauliOperator::str() const {
    static constexpr const char *signs[4] = {"+", "+i", "-", "-i"};
    std::string out = signs[phase_];
    for (std::size_t q = 0; q < n_; q++) {
        bool xb = (x_ >> q) & 1;
        bool zb = (z_ >> q) & 1;
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

}  // namespace anyon
