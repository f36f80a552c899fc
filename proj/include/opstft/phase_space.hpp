#pragma once

#include "opstft/types.hpp"

namespace opstft {

// =====================================================================
// Discrete phase space Z_N x Z_N.
//
// Time-frequency shift: pi(z) = M_l T_k with (T_k f)(t) = f(t-k mod N)
// and (M_l f)(t) = e^{2 pi i l t/N} f(t).  Every phase-space sum that
// discretizes an integral carries mass 1/N per point; with that
// normalization sum_z pi(z) A pi(z)* = N tr(A) I, which makes Moyal's
// identity and all reconstruction formulas exact.
// =====================================================================

// pi(z) f.  Indices of z reduce mod N (N taken from f).
Signal tf_shift_apply(PhasePoint z, const Signal& f);

// The N x N unitary matrix of pi(z).
OperatorMatrix tf_shift_matrix(PhasePoint z, int n);

/**
 * 2-cocycle c(z,z') = e^{-2 pi i k'(l-l')/N}, the phase in
 * pi(z)* pi(z') = c(z,z') pi(z-z')*.
 */
Complex cocycle(PhasePoint z, PhasePoint zp, int n);

// V_g f: field z -> <f, pi(z) g>, row k (time), column l (frequency).
ScalarField fstft(const Signal& g, const Signal& f);

// V_g* F = (1/N) sum_z F(z) pi(z) g; V_g* V_g = I when ||g|| = 1.
Signal fstft_adjoint(const Signal& g, const ScalarField& field);

}  // namespace opstft
