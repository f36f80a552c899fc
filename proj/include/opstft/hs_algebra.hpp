#pragma once

#include "opstft/types.hpp"

namespace opstft {

// =====================================================================
// Operator algebra on C^N: Hilbert-Schmidt geometry, phase-space
// conjugation, parity, and the function/operator convolutions of
// quantum harmonic analysis.
// =====================================================================

// <S, T> = tr(S T*).
Complex hs_inner(const OperatorMatrix& s, const OperatorMatrix& t);

// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const OperatorMatrix& s);

// Singular values, sorted nonincreasing; squares sum to ||T||_HS^2.
// Values below 1e-12 of the largest are reported as computed, never
// truncated.
Eigen::VectorXd singular_values(const OperatorMatrix& t);

// l^p norm of the singular values, p in [1, inf]; p = inf gives the
// largest singular value (operator norm).
double schatten_norm(const OperatorMatrix& t, double p);

// a_z(S) = pi(z) S pi(z)*.
OperatorMatrix conjugate_shift(PhasePoint z, const OperatorMatrix& s);

// (P f)(t) = f(-t mod N): index 0 fixed, 1..N-1 reversed.
Signal parity_apply(const Signal& f);

// S-check = P S P.
OperatorMatrix parity(const OperatorMatrix& s);

// h * S = (1/N) sum_z h(z) a_z(S).  With h == 1 this is tr(S) I.
OperatorMatrix conv_fun_op(const ScalarField& h, const OperatorMatrix& s);

// S * T: scalar field z -> tr(S a_z(T-check)).
ScalarField conv_op_op(const OperatorMatrix& s, const OperatorMatrix& t);

}  // namespace opstft
