#include "sepcrit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sepcrit {

namespace {

void require_finite(const ComplexMatrix& m) {
    if (!m.allFinite())
        throw NotFinite("matrix contains NaN or Inf entries");
}

void require_square(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols() << ", expected square";
        throw NotSquare(os.str());
    }
}

} // namespace

double SingularSpectrum::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

double hermiticity_deviation(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    require_finite(m);
    require_square(m);
    const double dev = hermiticity_deviation(m);
    if (dev > tol) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max deviation " << dev
           << " exceeds tolerance " << tol;
        throw NotHermitian(os.str());
    }

    // Symmetrize so the solver sees an exactly Hermitian operator.
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigensolver failed to converge");

    HermitianSpectrum spec;
    spec.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + m.rows());
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(),
              std::greater<double>());
    return spec;
}

SingularSpectrum singular_values(const ComplexMatrix& m) {
    require_finite(m);
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    SingularSpectrum spec;
    spec.values.assign(svd.singularValues().data(),
                       svd.singularValues().data() + svd.singularValues().size());
    // Eigen already sorts descending; the clamp guards against -0.0.
    for (double& v : spec.values)
        v = std::max(v, 0.0);
    return spec;
}

double trace_norm(const ComplexMatrix& m) {
    return singular_values(m).sum();
}

double min_singular_value(const ComplexMatrix& m) {
    return singular_values(m).min();
}

double min_singular_value_gram(const ComplexMatrix& m) {
    require_finite(m);
    // Work with the smaller Gram matrix; its eigenvalues are the squared
    // singular values (padding zeros live on the larger side).
    ComplexMatrix gram = (m.rows() <= m.cols()) ? ComplexMatrix(m * m.adjoint())
                                                : ComplexMatrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Gram eigensolver failed to converge");
    double lo = solver.eigenvalues().minCoeff();
    if (m.rows() != m.cols())
        lo = std::min(lo, 0.0);
    return std::sqrt(std::max(lo, 0.0));
}

bool is_positive_semidefinite(const ComplexMatrix& m, double tol) {
    HermitianSpectrum spec = hermitian_eigenvalues(m, tol);
    const double tr = m.trace().real();
    return spec.min() >= -tol * tr;
}

} // namespace sepcrit
