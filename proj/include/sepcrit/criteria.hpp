#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sepcrit/qstate.hpp"

namespace sepcrit {

// Tolerance used for all verdict threshold comparisons.
inline constexpr double kCriterionTol = 1e-9;

enum class Verdict { Entangled, SeparableCertified, Inconclusive };

const char* to_string(Verdict v);

/// One criterion's named statistics, threshold and verdict.
struct CriterionResult {
    std::string criterion_name;
    std::vector<std::pair<std::string, double>> statistics;
    double threshold = 0.0;
    Verdict verdict = Verdict::Inconclusive;

    /// Looks up a statistic by name; throws Error if absent.
    double stat(const std::string& name) const;
};

/// Parabola geometry of the separability bound: the quadratic
/// q(x) = x^2 + A x + 1 with A = 2(1 - 2 d^2 s_min).
struct ParabolaWitness {
    double A = 0.0;
    double discriminant = 0.0;          // A^2 - 4
    std::pair<double, double> vertex;   // (-A/2, (4 - A^2)/4)
    double q_at_lambda_min = 0.0;
    bool inside = false;                // q(lambda_min) < 0
};

/// Peres-Horodecki test: entangled when the partial transpose has a negative
/// eigenvalue; certifies separability only for 2x2 and 2x3 systems.
CriterionResult ppt_criterion(const DensityMatrix& rho,
                              double tol = kCriterionTol);

/// Trace norm of the realigned matrix; > 1 certifies entanglement.
CriterionResult realignment_criterion(const DensityMatrix& rho,
                                      double tol = kCriterionTol);

/// State-dependent realignment test for the two-qubit X class with zero
/// (2,2) diagonal.  Entangled iff the trace norm of the realigned matrix
/// reaches the state-dependent bound and the corner entry is nonzero.
/// Throws NotXClass when the zero pattern is violated beyond tol.
CriterionResult xstate_theorem1(const DensityMatrix& rho,
                                double tol = kCriterionTol);

/// True when the 2x2 state matches the X-class zero pattern within tol.
bool is_xclass(const DensityMatrix& rho, double tol = kCriterionTol);

/// Minimum-singular-value test for d x d systems: a separable state must
/// have s_min(R(rho)) < 1/d^2, so reaching the threshold certifies
/// entanglement.  Never certifies separability.
/// Throws NotSquareDims when d_A != d_B.
CriterionResult min_singular_criterion(const DensityMatrix& rho,
                                       double tol = kCriterionTol);

/// Structural physical approximation of the partial transpose:
/// (1-p) rho^T_B + p I/d^2 with p = d^2/(d^2+2), the minimal mixing weight
/// that restores positivity given the PT spectrum bound of -1/2.
/// Throws NotSquareDims when d_A != d_B.
DensityMatrix spa_pt(const DensityMatrix& rho);

/// Evaluates the parabola geometry at a given (s_min, d, lambda_min).
ParabolaWitness quadratic_witness(double s_min, int d, double lambda_min);

struct Evaluation {
    std::vector<CriterionResult> results;
    Verdict overall = Verdict::Inconclusive;
};

/// Runs every applicable criterion in order ppt, realignment, min_singular,
/// xstate (the latter two only where their preconditions hold).
Evaluation evaluate_all(const DensityMatrix& rho, double tol = kCriterionTol);

} // namespace sepcrit
