#pragma once

#include "sepcrit/linalg.hpp"

namespace sepcrit {

struct BipartiteDims {
    int d_A = 2;
    int d_B = 2;

    int total() const { return d_A * d_B; }
    bool square() const { return d_A == d_B; }
    bool operator==(const BipartiteDims&) const = default;
};

/// A validated bipartite density matrix: Hermitian, unit trace, positive
/// semi-definite (all within tolerance).  Construct via
/// validate_density_matrix; instances are immutable.
class DensityMatrix {
public:
    const BipartiteDims& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    DensityMatrix(BipartiteDims dims, ComplexMatrix m)
        : dims_(dims), matrix_(std::move(m)) {}

    friend DensityMatrix validate_density_matrix(const ComplexMatrix&,
                                                 BipartiteDims, double);

    BipartiteDims dims_;
    ComplexMatrix matrix_;
};

/// Checks the three state invariants and wraps the matrix.
/// Throws DimensionMismatch, NotHermitian, TraceNotOne or NotPSD, each
/// carrying the measured violation in its message.
DensityMatrix validate_density_matrix(const ComplexMatrix& m, BipartiteDims dims,
                                      double tol = kHermitianTol);

/// The d_B x d_B block at block-row i, block-column j.
ComplexMatrix block(const DensityMatrix& rho, int i, int j);

/// Transposes each d_B x d_B block in place (partial transposition on B).
/// The result is Hermitian with unit trace but not necessarily PSD.
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// Same block-transposition applied to a raw (dA*dB)x(dA*dB) matrix.
ComplexMatrix partial_transpose_blocks(const ComplexMatrix& m, int dA, int dB);

/// Realignment: a dA^2 x dB^2 matrix whose row for block position (i,j)
/// (row-major over block indices) is the row-major vectorization of
/// block(rho, i, j).
ComplexMatrix realign(const DensityMatrix& rho);

/// Generalized realignment of a (p*r) x (q*s) matrix viewed as a p x q grid
/// of r x s blocks; the output is (p*q) x (r*s) with
/// out[(a,b), (c,d)] = in[(a,c), (b,d)].  Applying it to realign's output
/// with (p, q, r, s) = (dA, dB, dA, dB) recovers the original matrix, so
/// for d_A = d_B the operation is an involution.
ComplexMatrix realign_general(const ComplexMatrix& m, int p, int q, int r, int s);

} // namespace sepcrit
