#pragma once

// Coorbit machinery: admissibility of analyzing windows, weighted
// coorbit norms of operators, window-equivalence constants, the
// correspondence between operators and reproducing fields, the duality
// pairing, and Toeplitz operators with phase-space symbols.
//
// In finite dimensions every operator has finite coorbit norm for every
// admissible window, so the library exposes norms and constants, never
// membership booleans; what varies between windows and exponents is the
// size of the norm, not the underlying set.

#include "opstft/norms.hpp"
#include "opstft/operator_field.hpp"
#include "opstft/types.hpp"
#include "opstft/weights.hpp"

namespace opstft {

// unit-norm periodized Gaussian g(t) ~ exp(-pi c(t)^2 / N) with c(t)
// the centered representative of t in [-N/2, N/2)
Signal gaussian_window(int n);

// canonical analyzing window: gaussian_window (x) delta_0, hs norm 1
OperatorMatrix default_window(int n);

// ||V_S S||_{L1_v}; v must be submultiplicative.  Finite for every S
// here; the value (>= 1 for unit S) quantifies window quality.
double admissibility(const OperatorMatrix& s, const Weight& v);

// Validated bundle for coorbit norms: nonzero window, submultiplicative
// v, and m certified v-moderate (envelope constant retained).
struct CoorbitParams {
    OperatorMatrix window;
    MixedNormParams norm;
    Weight v;
    double moderate_constant;
};
CoorbitParams make_coorbit_params(OperatorMatrix window, double p, double q, Weight m,
                                  Weight v);

// ||T||: mixed norm of V_window T under params.norm
double coorbit_norm(const OperatorMatrix& t, const CoorbitParams& params);

// Sandwich constants with lower ||T||_(S0) <= ||T||_(R) <= upper ||T||_(S0):
//   lower = ||R||^2_HS / (C_{v,m} max(cross norms))
//   upper = C_{v,m} max(cross norms) / ||S0||^2_HS
// where the cross norms are ||V_{S0} R||_{L1_v} and ||V_R S0||_{L1_v}.
// The two differ by a flip and reflection, so the conservative max is
// used on both sides; both values are reported.
struct EquivalenceBounds {
    double lower;
    double upper;
    double cross_s0_r;  // ||V_{S0} R||_{L1_v}
    double cross_r_s0;  // ||V_R S0||_{L1_v}
    double moderate_constant;
};
// params supplies the exponents and weights; its window is not used
// (the windows under comparison are the explicit arguments).
EquivalenceBounds window_equivalence(const OperatorMatrix& r, const OperatorMatrix& s0,
                                     const CoorbitParams& params);

// operator <-> reproducing-field correspondence (unit window intended)
OperatorField correspondence_forward(const OperatorMatrix& t, const OperatorMatrix& s);
OperatorMatrix correspondence_inverse(const OperatorField& psi, const OperatorMatrix& s);

// (1/N) sum_z <V_S T(z), V_S R(z)> = <T, R>_HS for unit S
Complex duality_pairing(const OperatorMatrix& t, const OperatorMatrix& r,
                        const OperatorMatrix& s);

// V_S* (f . V_S T); equals conv_fun_op(f, S S*) T
OperatorMatrix toeplitz(const OperatorMatrix& s, const ScalarField& f, const OperatorMatrix& t);

}  // namespace opstft
