#include "opstft/gframe.hpp"

#include "opstft/hs_algebra.hpp"
#include "opstft/phase_space.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace opstft {

namespace {

void require_symbol(const RealGrid& h, int n, const char* what) {
    if (h.rows() != n || h.cols() != n)
        throw std::invalid_argument(std::string(what) + ": symbol grid must be N x N");
    if ((h < 0.0).any())
        throw std::invalid_argument(std::string(what) + ": symbol must be nonnegative");
}

}  // namespace

LatticeSeq analysis(const OperatorMatrix& s, const Lattice& lat, const OperatorMatrix& t) {
    require_square(s, "analysis window");
    require_dim(s.rows(), lat.n, "analysis window");
    require_dim(t.rows(), lat.n, "analysis target");
    const OperatorMatrix s_adj = s.adjoint();
    LatticeSeq seq;
    seq.reserve(lat.size());
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j)
            seq.push_back(s_adj * tf_shift_matrix(lat.point(i, j), lat.n).adjoint() * t);
    return seq;
}

OperatorMatrix synthesis(const OperatorMatrix& s, const Lattice& lat, const LatticeSeq& seq) {
    require_square(s, "synthesis window");
    require_dim(s.rows(), lat.n, "synthesis window");
    if (static_cast<int>(seq.size()) != lat.size())
        throw std::invalid_argument("synthesis: sequence does not cover the lattice");
    OperatorMatrix acc = OperatorMatrix::Zero(lat.n, lat.n);
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j)
            acc += tf_shift_matrix(lat.point(i, j), lat.n) * s * seq[lat.flat(i, j)];
    return acc;
}

OperatorMatrix frame_matrix(const OperatorMatrix& s, const OperatorMatrix& r,
                            const Lattice& lat) {
    require_square(s, "frame_matrix window");
    require_dim(s.rows(), lat.n, "frame_matrix window");
    require_dim(r.rows(), lat.n, "frame_matrix second window");
    OperatorMatrix cross = s * r.adjoint();
    OperatorMatrix acc = OperatorMatrix::Zero(lat.n, lat.n);
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j)
            acc += conjugate_shift(lat.point(i, j), cross);
    return acc;
}

FrameReport frame_bounds(const OperatorMatrix& s, const Lattice& lat) {
    OperatorMatrix m = frame_matrix(s, s, lat);
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(0.5 * (m + m.adjoint()));
    FrameReport rep;
    rep.lower = eig.eigenvalues()(0);
    rep.upper = eig.eigenvalues()(lat.n - 1);
    rep.is_frame = rep.lower > kFrameTol * rep.upper && rep.upper > 0.0;
    rep.condition = rep.is_frame ? rep.upper / rep.lower
                                 : std::numeric_limits<double>::infinity();
    return rep;
}

OperatorMatrix canonical_dual_apply(const OperatorMatrix& s, const Lattice& lat,
                                    const OperatorMatrix& t) {
    require_dim(t.rows(), lat.n, "canonical_dual_apply target");
    OperatorMatrix m = frame_matrix(s, s, lat);
    FrameReport rep = frame_bounds(s, lat);
    if (!rep.is_frame)
        throw std::invalid_argument("canonical_dual_apply: window is not a frame over the lattice");
    OperatorMatrix inverted = (0.5 * (m + m.adjoint())).ldlt().solve(t);
    return synthesis(s, lat, analysis(s, lat, inverted));
}

OperatorMatrix localization_op(const Signal& phi, const ScalarField& h) {
    const int n = static_cast<int>(phi.size());
    if (phi.norm() == 0.0)
        throw std::invalid_argument("localization_op: window must be nonzero");
    if (h.rows() != n || h.cols() != n)
        throw std::invalid_argument("localization_op: symbol grid must be N x N");
    return conv_fun_op(h, rank_one(phi, phi));
}

SymbolBounds symbol_frame_condition(const RealGrid& h, const Lattice& lat) {
    require_symbol(h, lat.n, "symbol_frame_condition");
    const int n = lat.n;
    SymbolBounds bounds{std::numeric_limits<double>::infinity(), 0.0};
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            double sum = 0.0;
            for (int i = 0; i < lat.count_k(); ++i)
                for (int j = 0; j < lat.count_l(); ++j) {
                    PhasePoint d = pp_sub({k, l}, lat.point(i, j), n);
                    sum += h(d.k, d.l);
                }
            bounds.lower = std::min(bounds.lower, sum);
            bounds.upper = std::max(bounds.upper, sum);
        }
    return bounds;
}

double characterization_seq(const OperatorMatrix& t, const Signal& phi, const RealGrid& h,
                            const Lattice& lat, double p, double q, const Weight& m) {
    require_symbol(h, lat.n, "characterization_seq");
    OperatorMatrix a = localization_op(phi, h.cast<Complex>().matrix());
    LatticeSeq seq;
    seq.reserve(lat.size());
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j)
            seq.push_back(a * tf_shift_matrix(lat.point(i, j), lat.n).adjoint() * t);
    return seq_mixed_norm(seq, lat, p, q, m);
}

EigenBracket characterization_bracket(const Signal& phi, const RealGrid& h,
                                      const Lattice& lat) {
    require_symbol(h, lat.n, "characterization_bracket");
    OperatorMatrix a = localization_op(phi, h.cast<Complex>().matrix());
    OperatorMatrix gram = a.adjoint() * a;
    OperatorMatrix acc = OperatorMatrix::Zero(lat.n, lat.n);
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j) acc += conjugate_shift(lat.point(i, j), gram);
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(0.5 * (acc + acc.adjoint()));
    return {eig.eigenvalues()(0), eig.eigenvalues()(lat.n - 1)};
}

}  // namespace opstft
