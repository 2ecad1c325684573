#include "greenchain/linalg.hpp"

#include "greenchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace greenchain {

template <class T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : n_(rows.size()), data_()
{
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw ContractError("DenseMatrix: rows must form a square matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

template <class T>
double DenseMatrix<T>::norm_inf() const
{
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            row += std::abs((*this)(i, j));
        }
        best = std::max(best, row);
    }
    return best;
}

template class DenseMatrix<double>;
template class DenseMatrix<std::complex<double>>;

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.size() != b.size()) {
        throw ContractError("matrix product: size mismatch");
    }
    const std::size_t n = a.size();
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x)
{
    if (a.size() != x.size()) {
        throw ContractError("matrix-vector product: size mismatch");
    }
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            y[i] += a(i, j) * x[j];
        }
    }
    return y;
}

Matrix LuFactors::lower() const
{
    const std::size_t n = size();
    Matrix l = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = packed(i, j);
        }
    }
    return l;
}

Matrix LuFactors::upper() const
{
    const std::size_t n = size();
    Matrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            u(i, j) = packed(i, j);
        }
    }
    return u;
}

Matrix LuFactors::permute(const Matrix& a) const
{
    const std::size_t n = size();
    Matrix pa(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pa(i, j) = a(permutation[i], j);
        }
    }
    return pa;
}

LuFactors lu(const Matrix& a)
{
    const std::size_t n = a.size();
    LuFactors f;
    f.packed = a;
    f.permutation.resize(n);
    std::iota(f.permutation.begin(), f.permutation.end(), std::size_t{0});
    f.norm = a.norm_inf();
    double min_pivot = std::numeric_limits<double>::infinity();

    Matrix& m = f.packed;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::fabs(m(i, k)) > std::fabs(m(p, k))) {
                p = i;
            }
        }
        if (!(std::fabs(m(p, k)) >= kSingularPivot)) {
            throw SingularMatrixError("lu: matrix is singular (pivot below 1e-300)");
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
            }
            std::swap(f.permutation[k], f.permutation[p]);
            f.permutation_sign = -f.permutation_sign;
        }
        const double pivot = m(k, k);
        min_pivot = std::min(min_pivot, std::fabs(pivot));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = m(i, k) / pivot;
            m(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) -= factor * m(k, j);
            }
        }
    }
    f.min_pivot_ratio = (n == 0 || f.norm == 0.0) ? 0.0 : min_pivot / f.norm;
    return f;
}

std::vector<double> solve(const LuFactors& factors, std::span<const double> rhs)
{
    const std::size_t n = factors.size();
    if (rhs.size() != n) {
        throw ContractError("solve: right-hand side has the wrong length");
    }
    const Matrix& m = factors.packed;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = rhs[factors.permutation[i]];
        for (std::size_t j = 0; j < i; ++j) {
            s -= m(i, j) * x[j];
        }
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= m(i, j) * x[j];
        }
        x[i] = s / m(i, i);
    }
    return x;
}

SignLog det(const LuFactors& factors)
{
    SignLog d = SignLog::from_value(static_cast<double>(factors.permutation_sign));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        d *= SignLog::from_value(factors.packed(i, i));
    }
    return d;
}

std::complex<double> determinant(const ComplexMatrix& a)
{
    ComplexMatrix m = a;
    const std::size_t n = m.size();
    std::complex<double> d{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > std::abs(m(p, k))) {
                p = i;
            }
        }
        if (std::abs(m(p, k)) == 0.0) {
            return {0.0, 0.0};
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
            }
            d = -d;
        }
        d *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto factor = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) -= factor * m(k, j);
            }
        }
    }
    return d;
}

} // namespace greenchain
