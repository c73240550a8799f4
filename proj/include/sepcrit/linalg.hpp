#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "sepcrit/errors.hpp"

namespace sepcrit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Default absolute tolerance on the max entrywise deviation |m - m^dagger|.
inline constexpr double kHermitianTol = 1e-9;
// Default PSD tolerance, relative to the trace of the matrix.
inline constexpr double kPsdTol = 1e-9;

/// Real eigenvalues of a Hermitian matrix, sorted descending.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;

    double min() const { return eigenvalues.back(); }
    double max() const { return eigenvalues.front(); }
};

/// Singular values, sorted descending; all entries are >= 0.
struct SingularSpectrum {
    std::vector<double> values;

    double min() const { return values.back(); }
    double sum() const;
};

/// Max entrywise deviation from Hermiticity, max_ij |m_ij - conj(m_ji)|.
double hermiticity_deviation(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, sorted descending.
/// Throws NotSquare, NotHermitian (deviation beyond `tol`), NotFinite.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m,
                                        double tol = kHermitianTol);

/// Singular values of an arbitrary finite matrix, sorted descending.
SingularSpectrum singular_values(const ComplexMatrix& m);

/// Sum of the singular values.
double trace_norm(const ComplexMatrix& m);

/// Smallest singular value; agrees with singular_values(m).min().
double min_singular_value(const ComplexMatrix& m);

/// Smallest singular value via the smallest eigenvalue of the Gram matrix.
/// Cheaper route used by the benchmark; must agree with min_singular_value.
double min_singular_value_gram(const ComplexMatrix& m);

/// True iff the smallest eigenvalue is >= -tol * Re(trace(m)).
/// Throws NotHermitian when m deviates from Hermiticity beyond `tol`.
bool is_positive_semidefinite(const ComplexMatrix& m, double tol = kPsdTol);

} // namespace sepcrit
