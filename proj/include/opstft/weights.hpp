#pragma once

// Weights on discrete phase space.  A weight is a strictly positive
// function on Z_N x Z_N; submultiplicativity and moderateness are
// finite properties here and are checked exhaustively, never assumed.

#include "opstft/types.hpp"

#include <utility>
#include <vector>

namespace opstft {

class Weight {
public:
    explicit Weight(RealGrid grid);  // throws unless square and positive
    static Weight ones(int n);

    int dim() const { return static_cast<int>(grid_.rows()); }
    double at(int k, int l) const {
        int n = dim();
        return grid_(mod_n(k, n), mod_n(l, n));
    }
    double at(PhasePoint z) const { return at(z.k, z.l); }
    const RealGrid& grid() const { return grid_; }

    Weight reciprocal() const;

private:
    RealGrid grid_;
};

// wraparound l1 distance to the origin: min(k, N-k) + min(l, N-l)
int wrap_distance(PhasePoint z, int n);

// v_s(z) = (1 + d(z, 0))^s, submultiplicative for every s >= 0
Weight polynomial_weight(double s, int n);

// Exhaustive scan for v(z1 + z2) <= v(z1) v(z2); z1, z2 reported for
// the first violating pair in lexicographic order.
struct SubmultReport {
    bool ok = true;
    PhasePoint z1{};
    PhasePoint z2{};
};
SubmultReport check_submultiplicative(const Weight& v);

// Scan of the moderate inequality m(z1 + z2) <= v(z1) m(z2).  The
// constant is the envelope comparison max_z max(m/v, 1/(m v)), the
// smallest C with 1/(C v) <= m <= C v.
struct ModerateCertificate {
    bool moderate = false;
    double constant = 1.0;
    std::vector<std::pair<PhasePoint, PhasePoint>> violations;
};
ModerateCertificate check_moderate(const Weight& m, const Weight& v);

}  // namespace opstft
