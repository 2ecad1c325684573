#pragma once

#include "greenchain/signlog.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace greenchain {

/// Small dense square matrix, row-major.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}
    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T{1};
        }
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Maximum absolute row sum.
    double norm_inf() const;

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

/// Partial-pivoting LU factorization P A = L U. L has a unit diagonal and is
/// stored below the diagonal of `packed`; U occupies the rest.
struct LuFactors {
    Matrix packed;
    std::vector<std::size_t> permutation; ///< row i of P A is row permutation[i] of A
    int permutation_sign = 1;
    double norm = 0.0;            ///< infinity norm of A
    double min_pivot_ratio = 0.0; ///< min |U_ii| / norm

    std::size_t size() const { return packed.size(); }
    Matrix lower() const;
    Matrix upper() const;
    /// P A, for reconstruction checks.
    Matrix permute(const Matrix& a) const;
};

/// Pivots below this magnitude make the matrix singular.
inline constexpr double kSingularPivot = 1e-300;

/// Throws SingularMatrixError if a pivot falls below kSingularPivot.
LuFactors lu(const Matrix& a);
std::vector<double> solve(const LuFactors& factors, std::span<const double> rhs);
/// Product of the pivots and the permutation sign.
SignLog det(const LuFactors& factors);

/// Determinant of a complex matrix by partial-pivoting elimination.
std::complex<double> determinant(const ComplexMatrix& a);

} // namespace greenchain
