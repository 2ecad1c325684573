#pragma once

#include "greenchain/greens.hpp"
#include "greenchain/linalg.hpp"
#include "greenchain/signlog.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace greenchain {

/// Largest chain the dense solvers are meant for.
inline constexpr std::size_t kMaxWalls = 64;

/// Pivot ratio (|pivot| / ||A||) below which a system matrix is reported as
/// sitting on a pole.
inline constexpr double kNearPoleRatio = 1e-12;

/// Ordered delta walls sum_j mu_j delta(x - a_j). Couplings are either all
/// finite or all infinite (impenetrable walls); mixtures are rejected.
class DeltaChain {
public:
    /// Raw strengths mu_j; stored alongside lambda_j = 2 m mu_j / hbar^2.
    /// A list made only of +inf yields an impenetrable chain.
    static DeltaChain finite(Geometry geometry, std::vector<double> positions,
                             std::vector<double> raw_couplings, UnitSystem units = {});
    /// Already rescaled couplings lambda_j.
    static DeltaChain rescaled(Geometry geometry, std::vector<double> positions,
                               std::vector<double> lambdas, UnitSystem units = {});
    static DeltaChain impenetrable(Geometry geometry, std::vector<double> positions,
                                   UnitSystem units = {});

    Geometry geometry() const { return geometry_; }
    std::size_t size() const { return positions_.size(); }
    std::span<const double> positions() const { return positions_; }
    bool all_infinite() const { return all_infinite_; }
    /// Rescaled couplings; empty for an impenetrable chain.
    std::span<const double> lambdas() const { return lambdas_; }
    /// Couplings as supplied by the caller, in the units of the potential.
    std::span<const double> raw_couplings() const { return raw_; }
    const UnitSystem& units() const { return units_; }

    bool operator==(const DeltaChain&) const = default;

private:
    DeltaChain(Geometry geometry, std::vector<double> positions, UnitSystem units);

    Geometry geometry_;
    std::vector<double> positions_;
    std::vector<double> raw_;
    std::vector<double> lambdas_;
    bool all_infinite_ = false;
    UnitSystem units_;
};

/// g0(a_i, a_j) at the spectral parameter it was built for, together with the
/// measure weights of the walls.
struct BoundaryMatrix {
    Matrix entries;
    std::vector<double> weights;
    double param = 0.0;
};

/// I + G0 W with W = diag(weight_i lambda_i) (couplings scale columns).
struct LambdaMatrix {
    Matrix entries;
    std::vector<double> weighted_couplings;
};

BoundaryMatrix boundary_matrix(const DeltaChain& chain, const FreeGreens& g0, double param);

/// Throws ContractError for an impenetrable chain.
LambdaMatrix lambda_matrix(const BoundaryMatrix& g0_walls, const DeltaChain& chain);

/// Green's function with finite couplings,
///   g = g0(x, x') - u^T W (I + G0 W)^{-1} v,  u_i = g0(x, a_i), v_j = g0(a_j, x').
/// Throws NearPoleError when the system matrix is numerically singular.
double greens_finite(const DeltaChain& chain, const FreeGreens& g0, double x, double xp,
                     double param);

/// Same scalar evaluated as u^T (I + W G0)^{-1} W v.
double greens_finite_push_through(const DeltaChain& chain, const FreeGreens& g0, double x,
                                  double xp, double param);

/// Impenetrable-wall limit g = g0(x, x') - u^T G0^{-1} v. Couplings are
/// ignored. Throws NearPoleError when param sits on a characteristic root.
double greens_strong(const DeltaChain& chain, const FreeGreens& g0, double x, double xp,
                     double param);

/// det G0 as a SignLog; exactly zero when G0 is singular.
SignLog char_func(const DeltaChain& chain, const FreeGreens& g0, double param);

} // namespace greenchain
