#include "opstft/norms.hpp"

#include "opstft/op_stft.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opstft {

namespace {

void require_exponent(double p, const char* what) {
    if (!(p >= 1.0)) throw std::invalid_argument(std::string(what) + ": exponent must be >= 1");
}

// (sum_i mass * x_i^p)^{1/p}; sup (no mass) at p = inf
double lp_reduce(const std::vector<double>& xs, double p, double mass) {
    if (p == kInf) {
        double sup = 0.0;
        for (double x : xs) sup = std::max(sup, x);
        return sup;
    }
    double acc = 0.0;
    for (double x : xs) acc += mass * std::pow(x, p);
    return std::pow(acc, 1.0 / p);
}

// inner p over i (time axis), outer q over j; values flat-indexed i * nj + j
double grid_reduce(const std::vector<double>& vals, int ni, int nj, double p, double q,
                   double mass) {
    std::vector<double> inner(nj), column(ni);
    for (int j = 0; j < nj; ++j) {
        for (int i = 0; i < ni; ++i) column[i] = vals[static_cast<size_t>(i) * nj + j];
        inner[j] = lp_reduce(column, p, mass);
    }
    return lp_reduce(inner, q, mass);
}

}  // namespace

double mixed_norm(const OperatorField& psi, const MixedNormParams& params) {
    return mixed_norm(psi, params.p, params.q, params.m);
}

double mixed_norm(const OperatorField& psi, double p, double q, const Weight& m) {
    require_exponent(p, "mixed_norm p");
    require_exponent(q, "mixed_norm q");
    const int n = psi.dim();
    if (m.dim() != n) throw std::invalid_argument("mixed_norm: weight dimension mismatch");
    std::vector<double> vals(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            vals[static_cast<size_t>(k) * n + l] = m.at(k, l) * psi.at(k, l).norm();
    return grid_reduce(vals, n, n, p, q, 1.0 / std::sqrt(static_cast<double>(n)));
}

LatticeSeq restrict_field(const OperatorField& psi, const Lattice& lat) {
    if (lat.n != psi.dim())
        throw std::invalid_argument("restrict_field: lattice dimension mismatch");
    LatticeSeq seq;
    seq.reserve(lat.size());
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j) seq.push_back(psi.at(lat.point(i, j)));
    return seq;
}

double seq_mixed_norm(const LatticeSeq& seq, const Lattice& lat, double p, double q,
                      const Weight& m) {
    require_exponent(p, "seq_mixed_norm p");
    require_exponent(q, "seq_mixed_norm q");
    if (static_cast<int>(seq.size()) != lat.size())
        throw std::invalid_argument("seq_mixed_norm: sequence does not cover the lattice");
    if (m.dim() != lat.n)
        throw std::invalid_argument("seq_mixed_norm: weight dimension mismatch");
    std::vector<double> vals(seq.size());
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j)
            vals[lat.flat(i, j)] = m.at(lat.point(i, j)) * seq[lat.flat(i, j)].norm();
    return grid_reduce(vals, lat.count_k(), lat.count_l(), p, q, 1.0);
}

double amalgam_norm(const OperatorField& psi, int block_a, int block_b, double p, double q,
                    const Weight& m) {
    require_exponent(p, "amalgam_norm p");
    require_exponent(q, "amalgam_norm q");
    const int n = psi.dim();
    if (m.dim() != n) throw std::invalid_argument("amalgam_norm: weight dimension mismatch");
    Lattice anchors(block_a, block_b, n);  // validates divisibility
    RealGrid cell_norms = psi.hs_norm_field();
    std::vector<double> vals(static_cast<size_t>(anchors.size()));
    for (int i = 0; i < anchors.count_k(); ++i)
        for (int j = 0; j < anchors.count_l(); ++j) {
            double sup = 0.0;
            for (int dk = 0; dk < block_a; ++dk)
                for (int dl = 0; dl < block_b; ++dl)
                    sup = std::max(sup, cell_norms(block_a * i + dk, block_b * j + dl));
            vals[anchors.flat(i, j)] = m.at(anchors.point(i, j)) * sup;
        }
    return grid_reduce(vals, anchors.count_k(), anchors.count_l(), p, q, 1.0);
}

YoungPair young_twisted_check(const OperatorField& f, const OperatorField& h, const Weight& v,
                              const Weight& m, double p, double q) {
    if (!check_submultiplicative(v).ok)
        throw std::invalid_argument("young_twisted_check: v is not submultiplicative");
    ModerateCertificate cert = check_moderate(m, v);
    if (!cert.moderate)
        throw std::invalid_argument("young_twisted_check: m is not v-moderate");
    double lhs = mixed_norm(twisted_conv(f, h), p, q, m);
    double rhs = cert.constant * mixed_norm(f, 1.0, 1.0, v) * mixed_norm(h, p, q, m);
    return {lhs, rhs};
}

}  // namespace opstft
