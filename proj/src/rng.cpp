#include "opstft/rng.hpp"

namespace opstft {

Signal SeededRng::signal(int n) {
    Signal f(n);
    for (int t = 0; t < n; ++t) f(t) = cgaussian();
    return f;
}

Signal SeededRng::unit_signal(int n) {
    Signal f = signal(n);
    double norm = f.norm();
    if (norm == 0.0) return basis_vector(n, 0);
    return f / norm;
}

OperatorMatrix SeededRng::matrix(int n) {
    OperatorMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cgaussian();
    return a;
}

OperatorMatrix SeededRng::unit_matrix(int n) {
    OperatorMatrix a = matrix(n);
    double norm = a.norm();
    if (norm == 0.0) {
        a = OperatorMatrix::Zero(n, n);
        a(0, 0) = 1.0;
        return a;
    }
    return a / norm;
}

ScalarField SeededRng::scalar_field(int n) {
    ScalarField f(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) f(k, l) = cgaussian();
    return f;
}

RealGrid SeededRng::nonneg_grid(int n) {
    RealGrid g(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) g(k, l) = uniform();
    return g;
}

}  // namespace opstft
