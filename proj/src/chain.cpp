#include "greenchain/chain.hpp"

#include "greenchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace greenchain {

namespace {

void check_compatible(const DeltaChain& chain, const FreeGreens& g0)
{
    if (chain.geometry() != Geometry::custom && chain.geometry() != g0.geometry()) {
        throw ContractError("chain geometry '" + std::string(to_string(chain.geometry())) +
                            "' does not match Green's function geometry '" +
                            std::string(to_string(g0.geometry())) + "'");
    }
}

std::vector<double> column_to_walls(const DeltaChain& chain, const FreeGreens& g0, double x,
                                    double param)
{
    std::vector<double> column;
    column.reserve(chain.size());
    for (double a : chain.positions()) {
        column.push_back(g0(x, a, param));
    }
    return column;
}

LuFactors factor_or_pole(const Matrix& a, const char* what)
{
    LuFactors f;
    try {
        f = lu(a);
    } catch (const SingularMatrixError&) {
        throw NearPoleError(std::string(what) + ": system matrix is singular", 0.0);
    }
    if (f.min_pivot_ratio < kNearPoleRatio) {
        throw NearPoleError(std::string(what) + ": parameter is at a pole (pivot ratio " +
                                std::to_string(f.min_pivot_ratio) + ")",
                            f.min_pivot_ratio);
    }
    return f;
}

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

// ------------------------------------------------------------ DeltaChain

DeltaChain::DeltaChain(Geometry geometry, std::vector<double> positions, UnitSystem units)
    : geometry_(geometry), positions_(std::move(positions)), units_(units)
{
    units_.validate();
    if (positions_.empty()) {
        throw DomainError("delta chain: at least one wall is required");
    }
    if (positions_.size() > kMaxWalls) {
        throw DomainError("delta chain: at most 64 walls are supported");
    }
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (!std::isfinite(positions_[i])) {
            throw DomainError("delta chain: wall positions must be finite");
        }
        if (i > 0 && !(positions_[i] > positions_[i - 1])) {
            throw DomainError("delta chain: wall positions must be strictly increasing");
        }
    }
    if ((geometry_ == Geometry::cylindrical || geometry_ == Geometry::spherical) &&
        !(positions_.front() > 0.0)) {
        throw DomainError("delta chain: radial wall positions must be positive");
    }
}

DeltaChain DeltaChain::finite(Geometry geometry, std::vector<double> positions,
                              std::vector<double> raw_couplings, UnitSystem units)
{
    if (raw_couplings.size() != positions.size()) {
        throw DomainError("delta chain: one coupling per wall is required");
    }
    const auto infinite = std::count_if(raw_couplings.begin(), raw_couplings.end(),
                                        [](double c) { return std::isinf(c) && c > 0; });
    if (infinite == static_cast<std::ptrdiff_t>(raw_couplings.size())) {
        return impenetrable(geometry, std::move(positions), units);
    }
    if (infinite > 0) {
        throw DomainError("delta chain: mixed finite and infinite couplings are not supported");
    }
    DeltaChain chain(geometry, std::move(positions), units);
    for (double c : raw_couplings) {
        if (!std::isfinite(c)) {
            throw DomainError("delta chain: couplings must be finite or all +infinity");
        }
        chain.lambdas_.push_back(units.rescale_coupling(c));
    }
    chain.raw_ = std::move(raw_couplings);
    return chain;
}

DeltaChain DeltaChain::rescaled(Geometry geometry, std::vector<double> positions,
                                std::vector<double> lambdas, UnitSystem units)
{
    units.validate();
    std::vector<double> raw;
    raw.reserve(lambdas.size());
    for (double l : lambdas) {
        raw.push_back(l * units.hbar * units.hbar / (2.0 * units.mass));
    }
    DeltaChain chain = finite(geometry, std::move(positions), std::move(raw), units);
    if (!chain.all_infinite_) {
        chain.lambdas_ = std::move(lambdas);
    }
    return chain;
}

DeltaChain DeltaChain::impenetrable(Geometry geometry, std::vector<double> positions,
                                    UnitSystem units)
{
    DeltaChain chain(geometry, std::move(positions), units);
    chain.all_infinite_ = true;
    return chain;
}

// ------------------------------------------------------------ matrices

BoundaryMatrix boundary_matrix(const DeltaChain& chain, const FreeGreens& g0, double param)
{
    check_compatible(chain, g0);
    const auto a = chain.positions();
    const std::size_t n = a.size();
    BoundaryMatrix m{Matrix(n), {}, param};
    m.weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.weights.push_back(g0.weight(a[i]));
        for (std::size_t j = 0; j <= i; ++j) {
            const double value = g0(a[i], a[j], param);
            if (!std::isfinite(value)) {
                throw RangeError("boundary matrix: g0 is not finite at a wall pair");
            }
            m.entries(i, j) = value;
            m.entries(j, i) = value;
        }
    }
    return m;
}

LambdaMatrix lambda_matrix(const BoundaryMatrix& g0_walls, const DeltaChain& chain)
{
    if (chain.all_infinite()) {
        throw ContractError("lambda matrix: impenetrable chain, use the strong-coupling path");
    }
    const std::size_t n = chain.size();
    if (g0_walls.entries.size() != n) {
        throw ContractError("lambda matrix: boundary matrix does not match the chain");
    }
    LambdaMatrix out{Matrix::identity(n), {}};
    out.weighted_couplings.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.weighted_couplings.push_back(g0_walls.weights[j] * chain.lambdas()[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.entries(i, j) += g0_walls.entries(i, j) * out.weighted_couplings[j];
        }
    }
    return out;
}

// ------------------------------------------------------- Green's functions

double greens_finite(const DeltaChain& chain, const FreeGreens& g0, double x, double xp,
                     double param)
{
    const auto walls = boundary_matrix(chain, g0, param);
    const auto lambda = lambda_matrix(walls, chain);
    const auto factors = factor_or_pole(lambda.entries, "greens_finite");
    const auto u = column_to_walls(chain, g0, x, param);
    const auto v = column_to_walls(chain, g0, xp, param);
    const auto y = solve(factors, v);
    double correction = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        correction += u[i] * lambda.weighted_couplings[i] * y[i];
    }
    return g0(x, xp, param) - correction;
}

double greens_finite_push_through(const DeltaChain& chain, const FreeGreens& g0, double x,
                                  double xp, double param)
{
    const auto walls = boundary_matrix(chain, g0, param);
    const auto lambda = lambda_matrix(walls, chain);
    const std::size_t n = chain.size();
    const auto& w = lambda.weighted_couplings;
    Matrix row_scaled = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            row_scaled(i, j) += w[i] * walls.entries(i, j);
        }
    }
    const auto factors = factor_or_pole(row_scaled, "greens_finite");
    const auto u = column_to_walls(chain, g0, x, param);
    auto v = column_to_walls(chain, g0, xp, param);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] *= w[i];
    }
    return g0(x, xp, param) - dot(u, solve(factors, v));
}

double greens_strong(const DeltaChain& chain, const FreeGreens& g0, double x, double xp,
                     double param)
{
    const auto walls = boundary_matrix(chain, g0, param);
    const auto factors = factor_or_pole(walls.entries, "greens_strong");
    const auto u = column_to_walls(chain, g0, x, param);
    const auto v = column_to_walls(chain, g0, xp, param);
    return g0(x, xp, param) - dot(u, solve(factors, v));
}

SignLog char_func(const DeltaChain& chain, const FreeGreens& g0, double param)
{
    const auto walls = boundary_matrix(chain, g0, param);
    try {
        return det(lu(walls.entries));
    } catch (const SingularMatrixError&) {
        return SignLog::zero();
    }
}

} // namespace greenchain
