#pragma once

// Operator-valued short-time Fourier transform on the discrete phase
// space Z_N x Z_N, together with the algebraic machinery it carries:
// the adjoint synthesis map, Moyal-type orthogonality, the reproducing
// kernel of the range, twisted convolution of operator fields, and the
// induced projection / membership tests.
//
// Conventions (matching phase_space.hpp):
//   V_S T(z)   = S* pi(z)* T
//   V_S* Psi   = (1/N) sum_z pi(z) S Psi(z)
//   (F nat H)(z) = (1/N) sum_{z'} H(z - z') F(z') c(z, z')
// with c the cocycle from phase_space.hpp.  All identities below are
// exact in exact arithmetic because phase-space sums carry mass 1/N.

#include "opstft/operator_field.hpp"
#include "opstft/types.hpp"

#include <vector>

namespace opstft {

// analysis: field z -> S* pi(z)* T
OperatorField op_stft(const OperatorMatrix& s, const OperatorMatrix& t);

// synthesis: (1/N) sum_z pi(z) S Psi(z)
OperatorMatrix op_stft_adjoint(const OperatorMatrix& s, const OperatorField& psi);

// streaming variant for fields produced cell by cell
OperatorMatrix op_stft_adjoint(const OperatorMatrix& s, const FieldEvaluator& psi, int n);

// Both sides of the orthogonality relation
//   (1/N) sum_z <V_S T(z), V_Q R(z)>  =  <Q, S> <T, R>.
struct MoyalPair {
    Complex lhs;
    Complex rhs;
};
MoyalPair moyal_orthogonality(const OperatorMatrix& s, const OperatorMatrix& t,
                              const OperatorMatrix& q, const OperatorMatrix& r);

// max_z || V_S T(z) - e^{-2 pi i k l / N} (V_T S(-z))* ||_HS
double flip_identity_check(const OperatorMatrix& s, const OperatorMatrix& t);

// Reproducing kernel K(z, z') = c(z, z') S* pi(z - z')* S of the range
// of V_S.  Entries are served from N^2 cached matrices pi(z) S.
class KernelTable {
public:
    KernelTable(const OperatorMatrix& s, int n);

    int dim() const { return n_; }
    OperatorMatrix at(PhasePoint z, PhasePoint zp) const;

private:
    int n_ = 0;
    std::vector<OperatorMatrix> shifted_;  // pi(z) S, flat index k * n + l
};

KernelTable reproducing_kernel(const OperatorMatrix& s);

// P_S Psi = Psi nat V_S S, the orthogonal projection onto the range of
// V_S when ||S||_HS = 1 (general S: V_S V_S* scaled by ||S||^2).
OperatorField kernel_project(const OperatorMatrix& s, const OperatorField& psi);

// twisted convolution of operator fields
OperatorField twisted_conv(const OperatorField& f, const OperatorField& h);
OperatorField twisted_conv(const FieldEvaluator& f, const FieldEvaluator& h, int n);

// Does Psi lie in the range of V_S (windows normalized internally)?
// residual = max_z ||(P_S Psi - Psi)(z)||_HS, compared against
// tol_scale * max_z ||Psi(z)||_HS.
struct MembershipResult {
    bool is_member = false;
    double residual = 0.0;
};
MembershipResult membership_check(const OperatorField& psi, const OperatorMatrix& s,
                                  double tol_scale = 1e-9);

// pointwise Hilbert-Schmidt magnitude of V_S T
RealGrid spectrogram(const OperatorMatrix& s, const OperatorMatrix& t);

}  // namespace opstft
