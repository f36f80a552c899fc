#pragma once

// Gabor g-frames over sublattices of phase space: analysis/synthesis
// with an operator window, the frame matrix and its spectral bounds,
// canonical dual reconstruction, localization operators, and the
// characterization of targets by localization-operator translates.
//
// The family under study is {C_lambda = S* pi(lambda)*}.  Its frame
// operator is left multiplication by M_{S,S} = sum_lambda
// alpha_lambda(S S*) (counting measure on the lattice), so all frame
// bounds reduce to the N x N eigenproblem for M; the lifted map on
// Hilbert-Schmidt space has the same spectrum with multiplicity N.
// The frame condition is used in squared form:
//   A ||T||^2 <= sum_lambda ||C_lambda T||^2 <= B ||T||^2.

#include "opstft/norms.hpp"
#include "opstft/types.hpp"
#include "opstft/weights.hpp"

namespace opstft {

// {S* pi(lambda)* T}_lambda in Lattice::flat order
LatticeSeq analysis(const OperatorMatrix& s, const Lattice& lat, const OperatorMatrix& t);

// sum_lambda pi(lambda) S seq_lambda
OperatorMatrix synthesis(const OperatorMatrix& s, const Lattice& lat, const LatticeSeq& seq);

// M_{S,R} = sum_lambda alpha_lambda(S R*); the composite synthesis
// after analysis acts on T as M_{S,R} T.
OperatorMatrix frame_matrix(const OperatorMatrix& s, const OperatorMatrix& r,
                            const Lattice& lat);

// Optimal squared frame bounds: extreme eigenvalues of M_{S,S}.
// A lattice family with lower <= kFrameTol * upper is not a frame
// (exact zeros arise from orbit degeneracy and must not be inverted).
inline constexpr double kFrameTol = 1e-10;
struct FrameReport {
    double lower = 0.0;
    double upper = 0.0;
    bool is_frame = false;
    double condition = 0.0;  // upper / lower, inf when not a frame
};
FrameReport frame_bounds(const OperatorMatrix& s, const Lattice& lat);

// synthesis of the canonical-dual analysis {S* pi(lambda)* M^{-1} T};
// reconstructs T exactly for frames, throws otherwise
OperatorMatrix canonical_dual_apply(const OperatorMatrix& s, const Lattice& lat,
                                    const OperatorMatrix& t);

// matrix of f -> V_phi*(h . V_phi f); equals conv_fun_op(h, phi (x) phi)
OperatorMatrix localization_op(const Signal& phi, const ScalarField& h);

// extreme values over z of sum_lambda h(z - lambda), h >= 0
struct SymbolBounds {
    double lower = 0.0;
    double upper = 0.0;
};
SymbolBounds symbol_frame_condition(const RealGrid& h, const Lattice& lat);

// seq_mixed_norm of {A_h^phi pi(lambda)* T}_lambda (h real nonnegative)
double characterization_seq(const OperatorMatrix& t, const Signal& phi, const RealGrid& h,
                            const Lattice& lat, double p, double q, const Weight& m);

// At p = q = 2, m = 1 the squared sequence norm is <M T, T> with
// M = sum_lambda alpha_lambda((A_h^phi)* A_h^phi); these are its
// extreme eigenvalues, bracketing the squared norm per unit ||T||^2.
struct EigenBracket {
    double lower = 0.0;
    double upper = 0.0;
};
EigenBracket characterization_bracket(const Signal& phi, const RealGrid& h, const Lattice& lat);

}  // namespace opstft
