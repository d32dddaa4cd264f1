#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace anyon {

/// n-qubit Pauli string i^phase * P_0 (x) P_1 (x) ... with P_q in {I,X,Y,Z}
/// packed into X and Z bit masks (bit q set in both means Y = i X Z).
/// Qubit 0 is the least significant bit, both in the masks and in the
/// computational basis index of a StateVector.
class PauliOperator {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliOperator() = default;
    PauliOperator(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask, unsigned phase = 0);

    static PauliOperator identity(std::size_t n);
    /// Product of sigma_x on the listed qubits.
    static PauliOperator x_string(std::size_t n, std::span<const std::size_t> qubits);
    /// Product of sigma_z on the listed qubits.
    static PauliOperator z_string(std::size_t n, std::span<const std::size_t> qubits);
    /// Single-qubit operator 'X', 'Y' or 'Z' on qubit q.
    static PauliOperator single(std::size_t n, std::size_t q, char pauli);
    /// Parses "+XYZ_", "-iZZ", "IXI" (qubit 0 first; '_' and 'I' are both the
    /// identity). Throws invalid_argument on malformed text.
    static PauliOperator from_str(std::string_view text);

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    std::uint64_t x_mask() const noexcept {
        return x_;
    }
    std::uint64_t z_mask() const noexcept {
        return z_;
    }
    /// Exponent k of the leading i^k.
    unsigned phase() const noexcept {
        return phase_;
    }
    std::complex<double> coefficient() const;
    std::uint64_t support() const noexcept {
        return x_ | z_;
    }
    std::size_t weight() const;

    bool is_hermitian() const noexcept {
        return phase_ % 2 == 0;
    }
    bool commutes_with(const PauliOperator &other) const;

    PauliOperator operator*(const PauliOperator &other) const;
    /// Scales by i^k.
    PauliOperator times_i(unsigned k) const;
    PauliOperator operator-() const {
        return times_i(2);
    }
    PauliOperator adjoint() const;
    bool operator==(const PauliOperator &) const = default;

    /// Sign prefix ("+", "-", "+i", "-i") followed by one of IXYZ per qubit.
    std::string str() const;

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    unsigned phase_ = 0;
};

}  // namespace anyon
