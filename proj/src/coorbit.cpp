#include "opstft/coorbit.hpp"

#include "opstft/hs_algebra.hpp"
#include "opstft/op_stft.hpp"
#include "opstft/phase_space.hpp"

#include <cmath>
#include <stdexcept>

namespace opstft {

namespace {
void require_nonzero(const OperatorMatrix& s, const char* what) {
    if (s.norm() == 0.0) throw std::invalid_argument(std::string(what) + ": window must be nonzero");
}
}  // namespace

Signal gaussian_window(int n) {
    if (n < 2) throw std::invalid_argument("gaussian_window: need N >= 2");
    Signal g(n);
    for (int t = 0; t < n; ++t) {
        double centered = std::fmod(t + n / 2.0, static_cast<double>(n)) - n / 2.0;
        g(t) = std::exp(-kPi * centered * centered / n);
    }
    return g / g.norm();
}

OperatorMatrix default_window(int n) {
    return rank_one(gaussian_window(n), basis_vector(n, 0));
}

double admissibility(const OperatorMatrix& s, const Weight& v) {
    require_square(s, "admissibility window");
    if (!check_submultiplicative(v).ok)
        throw std::invalid_argument("admissibility: v is not submultiplicative");
    return mixed_norm(op_stft(s, s), 1.0, 1.0, v);
}

CoorbitParams make_coorbit_params(OperatorMatrix window, double p, double q, Weight m,
                                  Weight v) {
    require_nonzero(window, "make_coorbit_params");
    if (!check_submultiplicative(v).ok)
        throw std::invalid_argument("make_coorbit_params: v is not submultiplicative");
    ModerateCertificate cert = check_moderate(m, v);
    if (!cert.moderate)
        throw std::invalid_argument("make_coorbit_params: m is not v-moderate");
    if (!(p >= 1.0) || !(q >= 1.0))
        throw std::invalid_argument("make_coorbit_params: exponents must be >= 1");
    return {std::move(window), {p, q, std::move(m)}, std::move(v), cert.constant};
}

double coorbit_norm(const OperatorMatrix& t, const CoorbitParams& params) {
    return mixed_norm(op_stft(params.window, t), params.norm);
}

EquivalenceBounds window_equivalence(const OperatorMatrix& r, const OperatorMatrix& s0,
                                     const CoorbitParams& params) {
    require_nonzero(r, "window_equivalence");
    require_nonzero(s0, "window_equivalence");
    double cross_s0_r = mixed_norm(op_stft(s0, r), 1.0, 1.0, params.v);
    double cross_r_s0 = mixed_norm(op_stft(r, s0), 1.0, 1.0, params.v);
    double cross = std::max(cross_s0_r, cross_r_s0);
    double c = params.moderate_constant;
    double lower = r.squaredNorm() / (c * cross);
    double upper = c * cross / s0.squaredNorm();
    return {lower, upper, cross_s0_r, cross_r_s0, c};
}

OperatorField correspondence_forward(const OperatorMatrix& t, const OperatorMatrix& s) {
    require_nonzero(s, "correspondence_forward");
    return op_stft(s, t);
}

OperatorMatrix correspondence_inverse(const OperatorField& psi, const OperatorMatrix& s) {
    require_nonzero(s, "correspondence_inverse");
    return op_stft_adjoint(s, psi);
}

Complex duality_pairing(const OperatorMatrix& t, const OperatorMatrix& r,
                        const OperatorMatrix& s) {
    require_nonzero(s, "duality_pairing");
    const int n = static_cast<int>(s.rows());
    OperatorField vt = op_stft(s, t), vr = op_stft(s, r);
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += hs_inner(vt.at(k, l), vr.at(k, l));
    return acc / static_cast<double>(n);
}

OperatorMatrix toeplitz(const OperatorMatrix& s, const ScalarField& f,
                        const OperatorMatrix& t) {
    require_nonzero(s, "toeplitz");
    const int n = static_cast<int>(s.rows());
    if (f.rows() != n || f.cols() != n)
        throw std::invalid_argument("toeplitz: symbol grid must be N x N");
    OperatorField weighted = op_stft(s, t);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) weighted.at(k, l) *= f(k, l);
    return op_stft_adjoint(s, weighted);
}

}  // namespace opstft
