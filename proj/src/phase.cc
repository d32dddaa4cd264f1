#include "anyon/phase.h"

#include <numbers>
#include <numeric>

#include "anyon/error.h"

namespace anyon {

Phase::Phase(std::int64_t num, std::int64_t den) {
    if (den <= 0) {
        fail(ErrorKind::invalid_argument, "phase denominator must be positive");
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) {
        g = den;
    }
    num_ = num / g;
    den_ = den / g;
}

Phase Phase::conj() const {
    return Phase(-num_, den_);
}

Phase Phase::operator*(const Phase &other) const {
    std::int64_t l = std::lcm(den_, other.den_);
    return Phase(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Phase &Phase::operator*=(const Phase &other) {
    *this = *this * other;
    return *this;
}

double Phase::angle() const {
    // num/den in [0, 1); fold the upper half onto (-1/2, 0).
    double turns = static_cast<double>(num_) / static_cast<double>(den_);
    if (2 * num_ > den_) {
        turns -= 1.0;
    }
    return 2.0 * std::numbers::pi * turns;
}

std::complex<double> Phase::to_complex() const {
    if (4 % den_ == 0) {
        switch (num_ * (4 / den_)) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    return std::polar(1.0, angle());
}

std::string Phase::str() const {
    if (4 % den_ == 0) {
        switch (num_ * (4 / den_)) {
            case 0:
                return "1";
            case 1:
                return "i";
            case 2:
                return "-1";
            default:
                return "-i";
        }
    }
    return "exp(2pi i " + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

}  // namespace anyon
