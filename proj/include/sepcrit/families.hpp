#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sepcrit/qstate.hpp"

namespace sepcrit {

/// 2x2 X-class state with zero (2,2) diagonal entry:
/// diag(r11, 0, r33, r44) plus corner entries r14 / conj(r14).
/// Requires r11 + r33 + r44 = 1 (within 1e-12) and |r14|^2 <= r11*r44.
DensityMatrix make_xstate(double r11, double r33, double r44, Complex r14);

/// The two worked 2x2 states: (5/8, 1/8, 1/4, 1/32) and
/// (7/12, 1/6, 1/4, 1/28).
DensityMatrix make_rho1();
DensityMatrix make_rho2();

/// 3x3 chessboard-style family parameterized by f in [0,1]; separable for
/// f <= 1/3.
DensityMatrix make_horodecki_f(double f);

/// 3x3 family (2/7)|psi+><psi+| + (beta/7) sigma+ + ((5-beta)/7) sigma-,
/// beta in [2,5]; PPT up to beta = 4, bound entangled for beta in (3,4].
DensityMatrix make_horodecki_beta(double beta);

/// Projector onto (1/sqrt(d)) sum_i |ii>, d >= 2.
DensityMatrix make_max_entangled(int d);

/// Normalized G G^dagger for a seeded complex Ginibre matrix G.
/// Deterministic: identical seed gives a bit-identical state.
DensityMatrix random_ginibre_state(int dA, int dB, std::uint64_t seed);

/// Seeded convex mixture of k random pure product states (separable by
/// construction), with Dirichlet-uniform weights.
DensityMatrix random_separable_state(int dA, int dB, int k, std::uint64_t seed);

/// Constructs a family by its CLI name with named parameters:
///   rho1, rho2                      (no parameters)
///   x-state                         r11, r33, r44, re14, im14
///   horodecki-f                     f
///   horodecki-beta                  beta
///   max-entangled                   d
///   ginibre                         da, db, seed
///   random-separable                da, db, k, seed
/// Throws ParamOutOfRange on an unknown family or missing parameter.
DensityMatrix make_family(const std::string& name,
                          const std::map<std::string, double>& params);

} // namespace sepcrit
