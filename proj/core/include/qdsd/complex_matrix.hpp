#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdsd {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. This is the value type every other
/// module works with; all operations on it are pure.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// rows x cols matrix, zero-filled.
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    /// Builds from nested row lists; rows must have equal length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    double frobenius_norm() const;
    /// Largest |entry|.
    double max_abs() const;
    /// max_ij |m(i,j) - conj(m(j,i))|; zero for exactly Hermitian input.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

    /// Matrix product.
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// max_ij |a(i,j) - b(i,j)|.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qdsd
