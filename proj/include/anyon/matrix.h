#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace anyon {

using Complex = std::complex<double>;

/// Small dense row-major complex matrix for modular data. Sizes here are
/// the number of anyon labels, so no BLAS is involved.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;

    /// Largest |a_ij - b_ij|; shapes must agree.
    double max_abs_diff(const ComplexMatrix &other) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

}  // namespace anyon
