#include "opstft/op_stft.hpp"

#include "opstft/hs_algebra.hpp"
#include "opstft/phase_space.hpp"

#include <cmath>
#include <stdexcept>

namespace opstft {

OperatorField op_stft(const OperatorMatrix& s, const OperatorMatrix& t) {
    require_square(s, "op_stft window");
    require_square(t, "op_stft target");
    if (s.rows() != t.rows()) throw std::invalid_argument("op_stft: dimension mismatch");
    const int n = static_cast<int>(s.rows());
    const OperatorMatrix s_adj = s.adjoint();
    OperatorField out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            out.at(k, l) = s_adj * tf_shift_matrix({k, l}, n).adjoint() * t;
    return out;
}

OperatorMatrix op_stft_adjoint(const OperatorMatrix& s, const OperatorField& psi) {
    return op_stft_adjoint(s, as_evaluator(psi), psi.dim());
}

OperatorMatrix op_stft_adjoint(const OperatorMatrix& s, const FieldEvaluator& psi, int n) {
    require_square(s, "op_stft_adjoint window");
    require_dim(s.rows(), n, "op_stft_adjoint window");
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            acc += tf_shift_matrix({k, l}, n) * s * psi({k, l});
    return acc / static_cast<double>(n);
}

MoyalPair moyal_orthogonality(const OperatorMatrix& s, const OperatorMatrix& t,
                              const OperatorMatrix& q, const OperatorMatrix& r) {
    const int n = static_cast<int>(s.rows());
    OperatorField a = op_stft(s, t);
    OperatorField b = op_stft(q, r);
    Complex lhs = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lhs += hs_inner(a.at(k, l), b.at(k, l));
    lhs /= static_cast<double>(n);
    return {lhs, hs_inner(q, s) * hs_inner(t, r)};
}

double flip_identity_check(const OperatorMatrix& s, const OperatorMatrix& t) {
    const int n = static_cast<int>(s.rows());
    OperatorField vst = op_stft(s, t);
    OperatorField vts = op_stft(t, s);
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Complex phase = root_of_unity(-static_cast<long long>(k) * l, n);
            PhasePoint mz = pp_neg({k, l}, n);
            double res = (vst.at(k, l) - phase * vts.at(mz.k, mz.l).adjoint()).norm();
            worst = std::max(worst, res);
        }
    return worst;
}

// ── reproducing kernel ───────────────────────────────────────────────

KernelTable::KernelTable(const OperatorMatrix& s, int n) : n_(n) {
    shifted_.reserve(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) shifted_.push_back(tf_shift_matrix({k, l}, n) * s);
}

OperatorMatrix KernelTable::at(PhasePoint z, PhasePoint zp) const {
    // K(z, z') = c(z, z') S* pi(z - z')* S = (pi(z) S)* (pi(z') S):
    // the cocycle is exactly the phase picked up when the difference of
    // shifts is recombined, so the cached products suffice.
    z = canonical(z, n_);
    zp = canonical(zp, n_);
    const OperatorMatrix& left = shifted_[static_cast<size_t>(z.k) * n_ + z.l];
    const OperatorMatrix& right = shifted_[static_cast<size_t>(zp.k) * n_ + zp.l];
    return left.adjoint() * right;
}

KernelTable reproducing_kernel(const OperatorMatrix& s) {
    require_square(s, "reproducing_kernel window");
    if (s.norm() == 0.0)
        throw std::invalid_argument("reproducing_kernel: window must be nonzero");
    return KernelTable(s, static_cast<int>(s.rows()));
}

OperatorField kernel_project(const OperatorMatrix& s, const OperatorField& psi) {
    double nrm = s.norm();
    if (nrm == 0.0) throw std::invalid_argument("kernel_project: window must be nonzero");
    if (s.rows() != psi.dim())
        throw std::invalid_argument("kernel_project: dimension mismatch");
    const int n = psi.dim();
    KernelTable kt(s / nrm, n);
    OperatorField out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            OperatorMatrix acc = OperatorMatrix::Zero(n, n);
            for (int kp = 0; kp < n; ++kp)
                for (int lp = 0; lp < n; ++lp)
                    acc += kt.at({k, l}, {kp, lp}) * psi.at(kp, lp);
            out.at(k, l) = acc / static_cast<double>(n);
        }
    return out;
}

// ── twisted convolution ──────────────────────────────────────────────

OperatorField twisted_conv(const OperatorField& f, const OperatorField& h) {
    if (f.dim() != h.dim()) throw std::invalid_argument("twisted_conv: dimension mismatch");
    return twisted_conv(as_evaluator(f), as_evaluator(h), f.dim());
}

OperatorField twisted_conv(const FieldEvaluator& f, const FieldEvaluator& h, int n) {
    OperatorField out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            OperatorMatrix acc = OperatorMatrix::Zero(n, n);
            for (int kp = 0; kp < n; ++kp)
                for (int lp = 0; lp < n; ++lp)
                    acc += h({k - kp, l - lp}) * f({kp, lp}) *
                           cocycle({k, l}, {kp, lp}, n);
            out.at(k, l) = acc / static_cast<double>(n);
        }
    return out;
}

MembershipResult membership_check(const OperatorField& psi, const OperatorMatrix& s,
                                  double tol_scale) {
    if (s.norm() == 0.0)
        throw std::invalid_argument("membership_check: window must be nonzero");
    OperatorField residual_field = kernel_project(s, psi) - psi;
    double residual = residual_field.max_cell_norm();
    double scale = psi.max_cell_norm();
    return {residual <= tol_scale * scale, residual};
}

RealGrid spectrogram(const OperatorMatrix& s, const OperatorMatrix& t) {
    return op_stft(s, t).hs_norm_field();
}

}  // namespace opstft
