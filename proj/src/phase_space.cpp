#include "opstft/phase_space.hpp"

namespace opstft {

Signal tf_shift_apply(PhasePoint z, const Signal& f) {
    const int n = static_cast<int>(f.size());
    Signal out(n);
    for (int t = 0; t < n; ++t) {
        out(t) = root_of_unity(static_cast<long long>(z.l) * t, n) * f(mod_n(t - z.k, n));
    }
    return out;
}

OperatorMatrix tf_shift_matrix(PhasePoint z, int n) {
    OperatorMatrix u = OperatorMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        int i = mod_n(j + z.k, n);
        u(i, j) = root_of_unity(static_cast<long long>(z.l) * i, n);
    }
    return u;
}

Complex cocycle(PhasePoint z, PhasePoint zp, int n) {
    return root_of_unity(-static_cast<long long>(zp.k) * (z.l - zp.l), n);
}

ScalarField fstft(const Signal& g, const Signal& f) {
    require_dim(f.size(), g.size(), "fstft");
    const int n = static_cast<int>(g.size());
    ScalarField v(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            v(k, l) = inner(f, tf_shift_apply({k, l}, g));
        }
    }
    return v;
}

Signal fstft_adjoint(const Signal& g, const ScalarField& field) {
    const int n = static_cast<int>(g.size());
    require_dim(field.rows(), n, "fstft_adjoint");
    require_dim(field.cols(), n, "fstft_adjoint");
    Signal out = Signal::Zero(n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            out += field(k, l) * tf_shift_apply({k, l}, g);
        }
    }
    return out / static_cast<double>(n);
}

}  // namespace opstft
