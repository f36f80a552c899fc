#include "opstft/hs_algebra.hpp"

#include "opstft/phase_space.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace opstft {

Complex hs_inner(const OperatorMatrix& s, const OperatorMatrix& t) {
    require_square(s, "hs_inner");
    require_dim(t.rows(), s.rows(), "hs_inner");
    require_dim(t.cols(), s.cols(), "hs_inner");
    return (s * t.adjoint()).trace();
}

double hs_norm(const OperatorMatrix& s) { return s.norm(); }

Eigen::VectorXd singular_values(const OperatorMatrix& t) {
    require_square(t, "singular_values");
    Eigen::JacobiSVD<OperatorMatrix> svd(t);
    return svd.singularValues();
}

double schatten_norm(const OperatorMatrix& t, double p) {
    if (!(p >= 1.0)) {
        throw std::invalid_argument("schatten_norm: p must be >= 1 or infinity, got " +
                                    std::to_string(p));
    }
    Eigen::VectorXd sv = singular_values(t);
    if (std::isinf(p)) return sv.size() > 0 ? sv(0) : 0.0;
    double acc = 0.0;
    for (int i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
    return std::pow(acc, 1.0 / p);
}

OperatorMatrix conjugate_shift(PhasePoint z, const OperatorMatrix& s) {
    require_square(s, "conjugate_shift");
    OperatorMatrix u = tf_shift_matrix(z, static_cast<int>(s.rows()));
    return u * s * u.adjoint();
}

Signal parity_apply(const Signal& f) {
    const int n = static_cast<int>(f.size());
    Signal out(n);
    for (int t = 0; t < n; ++t) out(t) = f(mod_n(-t, n));
    return out;
}

OperatorMatrix parity(const OperatorMatrix& s) {
    require_square(s, "parity");
    const int n = static_cast<int>(s.rows());
    OperatorMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s(mod_n(-i, n), mod_n(-j, n));
    return out;
}

OperatorMatrix conv_fun_op(const ScalarField& h, const OperatorMatrix& s) {
    require_square(s, "conv_fun_op");
    const int n = static_cast<int>(s.rows());
    require_dim(h.rows(), n, "conv_fun_op");
    require_dim(h.cols(), n, "conv_fun_op");
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += h(k, l) * conjugate_shift({k, l}, s);
    return acc / static_cast<double>(n);
}

ScalarField conv_op_op(const OperatorMatrix& s, const OperatorMatrix& t) {
    require_square(s, "conv_op_op");
    require_dim(t.rows(), s.rows(), "conv_op_op");
    require_dim(t.cols(), s.cols(), "conv_op_op");
    const int n = static_cast<int>(s.rows());
    OperatorMatrix tc = parity(t);
    ScalarField field(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) field(k, l) = (s * conjugate_shift({k, l}, tc)).trace();
    return field;
}

}  // namespace opstft
