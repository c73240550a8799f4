#pragma once

#include <random>

#include "sepcrit/families.hpp"
#include "sepcrit/qstate.hpp"

namespace test_helpers {

using sepcrit::Complex;
using sepcrit::ComplexMatrix;

inline ComplexMatrix random_gaussian_matrix(int rows, int cols,
                                            std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            m(i, j) = Complex(re, im);
        }
    return m;
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix,
/// with the R-diagonal phases normalized.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    ComplexMatrix g = random_gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

inline sepcrit::DensityMatrix bell_state() {
    return sepcrit::make_max_entangled(2);
}

inline sepcrit::DensityMatrix maximally_mixed(int dA, int dB) {
    const int n = dA * dB;
    return sepcrit::validate_density_matrix(
        ComplexMatrix::Identity(n, n) / static_cast<double>(n), {dA, dB});
}

} // namespace test_helpers
