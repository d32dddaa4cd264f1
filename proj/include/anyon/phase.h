#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace anyon {

/// A root of unity exp(2*pi*i * num/den), stored as a reduced fraction of a
/// full turn with 0 <= num < den. Products and conjugates stay exact, which
/// lets braiding tables be compared without tolerances.
class Phase {
   public:
    constexpr Phase() = default;
    Phase(std::int64_t num, std::int64_t den);

    static Phase one() {
        return Phase{};
    }
    /// exp(2*pi*i * k/n).
    static Phase root_of_unity(std::int64_t k, std::int64_t n) {
        return Phase(k, n);
    }

    std::int64_t num() const noexcept {
        return num_;
    }
    std::int64_t den() const noexcept {
        return den_;
    }
    bool is_one() const noexcept {
        return num_ == 0;
    }

    Phase conj() const;
    Phase operator*(const Phase &other) const;
    Phase &operator*=(const Phase &other);
    bool operator==(const Phase &other) const = default;

    /// Angle in (-pi, pi].
    double angle() const;
    /// Exact for quarter turns; otherwise std::polar.
    std::complex<double> to_complex() const;
    /// e.g. "1", "-1", "i", "exp(2pi i 1/3)".
    std::string str() const;

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace anyon
