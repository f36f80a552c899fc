#pragma once

// Weighted mixed norms on operator fields, sequence norms on lattice
// restrictions, Wiener-amalgam norms, and the Young-inequality checker
// for twisted convolution.
//
// Continuous-style field norms carry axis mass N^{-1/2} per coordinate
// (so p = q = 2 reproduces the 1/N phase-space mass exactly); sequence
// norms over lattices use counting measure.  The inner exponent p runs
// over the time axis k, the outer exponent q over the frequency axis l.

#include "opstft/operator_field.hpp"
#include "opstft/types.hpp"
#include "opstft/weights.hpp"

#include <limits>
#include <vector>

namespace opstft {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct MixedNormParams {
    double p;
    double q;
    Weight m;
};

double mixed_norm(const OperatorField& psi, const MixedNormParams& params);
double mixed_norm(const OperatorField& psi, double p, double q, const Weight& m);

// lattice-indexed values in Lattice::flat order
using LatticeSeq = std::vector<OperatorMatrix>;

LatticeSeq restrict_field(const OperatorField& psi, const Lattice& lat);

// counting-measure norm; the ambient weight is sampled at lattice points
double seq_mixed_norm(const LatticeSeq& seq, const Lattice& lat, double p, double q,
                      const Weight& m);

// Per-block sup of the cell hs norm over the a x b partition anchored
// at the block lattice, then the weighted sequence norm over anchors.
double amalgam_norm(const OperatorField& psi, int block_a, int block_b, double p, double q,
                    const Weight& m);

// lhs = ||twisted_conv(F, H)||_{p,q,m}
// rhs = C_{m,v} ||F||_{1,1,v} ||H||_{p,q,m}
// Requires v submultiplicative and m v-moderate; lhs <= rhs then holds.
struct YoungPair {
    double lhs;
    double rhs;
};
YoungPair young_twisted_check(const OperatorField& f, const OperatorField& h, const Weight& v,
                              const Weight& m, double p, double q);

}  // namespace opstft
