#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace opstft {

using Complex = std::complex<double>;
using Signal = Eigen::VectorXcd;          // vector in C^N, plain Euclidean norm
using OperatorMatrix = Eigen::MatrixXcd;  // operator on C^N, entry (i,j) = <A d_j, d_i>
using ScalarField = Eigen::MatrixXcd;     // grid (k,l) -> complex; row k (time), column l (frequency)
using RealGrid = Eigen::ArrayXXd;         // grid (k,l) -> real

inline constexpr double kPi = 3.14159265358979323846;

// A point z = (k, l) of the phase space Z_N x Z_N.
struct PhasePoint {
    int k = 0;  // time index
    int l = 0;  // frequency index
};

inline int mod_n(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

inline PhasePoint canonical(PhasePoint z, int n) { return {mod_n(z.k, n), mod_n(z.l, n)}; }

inline PhasePoint pp_add(PhasePoint a, PhasePoint b, int n) {
    return {mod_n(a.k + b.k, n), mod_n(a.l + b.l, n)};
}

inline PhasePoint pp_sub(PhasePoint a, PhasePoint b, int n) {
    return {mod_n(a.k - b.k, n), mod_n(a.l - b.l, n)};
}

inline PhasePoint pp_neg(PhasePoint a, int n) { return {mod_n(-a.k, n), mod_n(-a.l, n)}; }

// <u, v>: linear in u, conjugate-linear in v (Eigen's dot conjugates its
// object, so the arguments swap).
inline Complex inner(const Signal& u, const Signal& v) { return v.dot(u); }

// Rank-one operator u (x) v acting as (u (x) v) h = <h, v> u.
inline OperatorMatrix rank_one(const Signal& u, const Signal& v) { return u * v.adjoint(); }

inline Signal basis_vector(int n, int j) {
    Signal e = Signal::Zero(n);
    e(j) = 1.0;
    return e;
}

// exp(2 pi i num / n); the numerator is reduced mod n first so equal phases
// are always computed from the same angle.
Complex root_of_unity(long long num, int n);

void require_square(const OperatorMatrix& m, const char* what);
void require_dim(Eigen::Index actual, Eigen::Index expected, const char* what);

// Sublattice alpha Z_N x beta Z_N of phase space; both steps must divide N.
struct Lattice {
    int alpha = 1;
    int beta = 1;
    int n = 0;

    Lattice(int alpha_, int beta_, int n_);

    int count_k() const { return n / alpha; }
    int count_l() const { return n / beta; }
    int size() const { return count_k() * count_l(); }
    PhasePoint point(int i, int j) const { return {mod_n(alpha * i, n), mod_n(beta * j, n)}; }
    // Flat index of lattice point (alpha*i, beta*j); row-major over (i, j).
    int flat(int i, int j) const { return i * count_l() + j; }
};

}  // namespace opstft
