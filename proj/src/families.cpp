#include "sepcrit/families.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace sepcrit {

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Eigen::VectorXcd random_unit_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

} // namespace

DensityMatrix make_xstate(double r11, double r33, double r44, Complex r14) {
    const double trace = r11 + r33 + r44;
    if (std::abs(trace - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "diagonal entries sum to " << trace << ", expected 1";
        throw TraceConstraintViolated(os.str());
    }
    if (r11 < 0 || r33 < 0 || r44 < 0 || std::norm(r14) > r11 * r44) {
        std::ostringstream os;
        os << "corner block not PSD: |r14|^2 = " << std::norm(r14)
           << " exceeds r11*r44 = " << r11 * r44;
        throw NotPSD(os.str());
    }
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = r11;
    m(2, 2) = r33;
    m(3, 3) = r44;
    m(0, 3) = r14;
    m(3, 0) = std::conj(r14);
    return validate_density_matrix(m, {2, 2});
}

DensityMatrix make_rho1() {
    return make_xstate(5.0 / 8, 1.0 / 8, 1.0 / 4, Complex(1.0 / 32, 0));
}

DensityMatrix make_rho2() {
    // The 1/2 global factor of the published matrix is multiplied through.
    return make_xstate(7.0 / 12, 1.0 / 6, 1.0 / 4, Complex(1.0 / 28, 0));
}

DensityMatrix make_horodecki_f(double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
        std::ostringstream os;
        os << "f = " << f << " outside [0, 1]";
        throw ParamOutOfRange(os.str());
    }
    const double a = (2.0 + 6.0 * f) / 24.0;
    const double b = (1.0 - f) / 8.0;
    const double c = (9.0 * f - 1.0) / 24.0;

    ComplexMatrix m = ComplexMatrix::Zero(9, 9);
    // Diagonal blocks diag(a,b,b), diag(b,a,b), diag(b,b,a).
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            m(3 * i + k, 3 * i + k) = (i == k) ? a : b;
    // Off-diagonal coupling entries, one per upper block, plus conjugates.
    m(0, 4) = c;  // block (0,1), entry (0,1)
    m(0, 8) = c;  // block (0,2), entry (0,2)
    m(4, 8) = c;  // block (1,2), entry (1,2)
    m(4, 0) = c;
    m(8, 0) = c;
    m(8, 4) = c;
    return validate_density_matrix(m, {3, 3});
}

DensityMatrix make_horodecki_beta(double beta) {
    if (!(beta >= 2.0 && beta <= 5.0)) {
        std::ostringstream os;
        os << "beta = " << beta << " outside [2, 5]";
        throw ParamOutOfRange(os.str());
    }
    ComplexMatrix m = ComplexMatrix::Zero(9, 9);
    // (2/7) |psi+><psi+| with |psi+> = (|00>+|11>+|22>)/sqrt(3).
    const int diag[3] = {0, 4, 8};
    for (int i : diag)
        for (int j : diag)
            m(i, j) += 2.0 / 21.0;
    // sigma+ on |01>,|12>,|20>; sigma- on |10>,|21>,|02>.
    for (int i : {1, 5, 6})
        m(i, i) += beta / 21.0;
    for (int i : {3, 7, 2})
        m(i, i) += (5.0 - beta) / 21.0;
    return validate_density_matrix(m, {3, 3});
}

DensityMatrix make_max_entangled(int d) {
    if (d < 2) {
        std::ostringstream os;
        os << "d = " << d << " must be >= 2";
        throw ParamOutOfRange(os.str());
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i)
        psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix m = psi * psi.adjoint();
    return validate_density_matrix(m, {d, d});
}

DensityMatrix random_ginibre_state(int dA, int dB, std::uint64_t seed) {
    const int n = dA * dB;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return validate_density_matrix(m, {dA, dB});
}

DensityMatrix random_separable_state(int dA, int dB, int k, std::uint64_t seed) {
    if (k < 1)
        throw ParamOutOfRange("k must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    // Dirichlet-uniform weights from normalized exponential draws.
    std::vector<double> weights(k);
    double total = 0.0;
    for (double& w : weights) {
        w = -std::log(1.0 - uniform(rng));
        total += w;
    }

    ComplexMatrix m = ComplexMatrix::Zero(dA * dB, dA * dB);
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXcd a = random_unit_vector(dA, rng);
        Eigen::VectorXcd b = random_unit_vector(dB, rng);
        m += (weights[i] / total) *
             kron(ComplexMatrix(a * a.adjoint()), ComplexMatrix(b * b.adjoint()));
    }
    return validate_density_matrix(m, {dA, dB});
}

namespace {

double get_param(const std::map<std::string, double>& params,
                 const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw ParamOutOfRange("missing parameter '" + key + "'");
    return it->second;
}

double get_param_or(const std::map<std::string, double>& params,
                    const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

DensityMatrix make_family(const std::string& name,
                          const std::map<std::string, double>& params) {
    if (name == "rho1")
        return make_rho1();
    if (name == "rho2")
        return make_rho2();
    if (name == "x-state")
        return make_xstate(get_param(params, "r11"), get_param(params, "r33"),
                           get_param(params, "r44"),
                           Complex(get_param(params, "re14"),
                                   get_param_or(params, "im14", 0.0)));
    if (name == "horodecki-f")
        return make_horodecki_f(get_param(params, "f"));
    if (name == "horodecki-beta")
        return make_horodecki_beta(get_param(params, "beta"));
    if (name == "max-entangled")
        return make_max_entangled(static_cast<int>(get_param(params, "d")));
    if (name == "ginibre")
        return random_ginibre_state(
            static_cast<int>(get_param(params, "da")),
            static_cast<int>(get_param(params, "db")),
            static_cast<std::uint64_t>(get_param_or(params, "seed", 0)));
    if (name == "random-separable")
        return random_separable_state(
            static_cast<int>(get_param(params, "da")),
            static_cast<int>(get_param(params, "db")),
            static_cast<int>(get_param(params, "k")),
            static_cast<std::uint64_t>(get_param_or(params, "seed", 0)));
    throw ParamOutOfRange("unknown family '" + name + "'");
}

} // namespace sepcrit
