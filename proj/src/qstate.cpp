#include "sepcrit/qstate.hpp"

#include <cmath>
#include <sstream>

namespace sepcrit {

DensityMatrix validate_density_matrix(const ComplexMatrix& m, BipartiteDims dims,
                                      double tol) {
    if (dims.d_A < 2 || dims.d_B < 2) {
        std::ostringstream os;
        os << "subsystem dimensions must be >= 2, got " << dims.d_A << "x"
           << dims.d_B;
        throw DimensionMismatch(os.str());
    }
    if (m.rows() != dims.total() || m.cols() != dims.total()) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols() << ", expected "
           << dims.total() << "x" << dims.total() << " for dims (" << dims.d_A
           << "," << dims.d_B << ")";
        throw DimensionMismatch(os.str());
    }
    const double herm_dev = hermiticity_deviation(m);
    if (herm_dev > tol) {
        std::ostringstream os;
        os << "NotHermitian deviation " << herm_dev;
        throw NotHermitian(os.str());
    }
    const double trace_dev = std::abs(m.trace().real() - 1.0) +
                             std::abs(m.trace().imag());
    if (trace_dev > tol) {
        std::ostringstream os;
        os << "TraceNotOne deviation " << trace_dev;
        throw TraceNotOne(os.str());
    }
    const double min_eig = hermitian_eigenvalues(m, tol).min();
    if (min_eig < -tol) {
        std::ostringstream os;
        os << "NotPSD min eigenvalue " << min_eig;
        throw NotPSD(os.str());
    }
    return DensityMatrix(dims, m);
}

ComplexMatrix block(const DensityMatrix& rho, int i, int j) {
    const int dA = rho.dims().d_A;
    const int dB = rho.dims().d_B;
    if (i < 0 || i >= dA || j < 0 || j >= dA) {
        std::ostringstream os;
        os << "block index (" << i << "," << j << ") out of range for d_A=" << dA;
        throw IndexOutOfRange(os.str());
    }
    return rho.matrix().block(i * dB, j * dB, dB, dB);
}

ComplexMatrix partial_transpose_blocks(const ComplexMatrix& m, int dA, int dB) {
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dA; ++j)
            out.block(i * dB, j * dB, dB, dB) =
                m.block(i * dB, j * dB, dB, dB).transpose();
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
    return partial_transpose_blocks(rho.matrix(), rho.dims().d_A,
                                    rho.dims().d_B);
}

ComplexMatrix realign_general(const ComplexMatrix& m, int p, int q, int r,
                              int s) {
    if (m.rows() != static_cast<long>(p) * r ||
        m.cols() != static_cast<long>(q) * s) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols()
           << ", expected " << p * r << "x" << q * s;
        throw DimensionMismatch(os.str());
    }
    ComplexMatrix out(p * q, r * s);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < s; ++d)
                    out(a * q + b, c * s + d) = m(a * r + c, b * s + d);
    return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
    const int dA = rho.dims().d_A;
    const int dB = rho.dims().d_B;
    return realign_general(rho.matrix(), dA, dA, dB, dB);
}

} // namespace sepcrit
