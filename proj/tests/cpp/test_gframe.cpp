#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opstft/coorbit.hpp"
#include "opstft/gframe.hpp"
#include "opstft/hs_algebra.hpp"
#include "opstft/norms.hpp"
#include "opstft/op_stft.hpp"
#include "opstft/phase_space.hpp"
#include "opstft/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

using namespace opstft;

namespace {

constexpr double kTight = 1e-12;
constexpr double kLoose = 1e-10;

// independent frame matrix: explicit conjugation loop over the lattice
OperatorMatrix frame_matrix_oracle(const OperatorMatrix& s, const OperatorMatrix& r,
                                   const Lattice& lat) {
    const int n = lat.n;
    OperatorMatrix m = OperatorMatrix::Zero(n, n);
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j) {
            OperatorMatrix u = tf_shift_matrix(lat.point(i, j), n);
            m += u * (s * r.adjoint()) * u.adjoint();
        }
    return m;
}

}  // namespace

// ── analysis and synthesis ───────────────────────────────────────────

TEST_CASE("analysis restricts the operator STFT to the lattice") {
    const int n = 4;
    SeededRng rng(1);
    OperatorMatrix s = rng.matrix(n), t = rng.matrix(n);

    Lattice sub(2, 1, n);
    LatticeSeq seq = analysis(s, sub, t);
    REQUIRE(static_cast<int>(seq.size()) == sub.size());
    for (int i = 0; i < sub.count_k(); ++i)
        for (int j = 0; j < sub.count_l(); ++j) {
            PhasePoint lam = sub.point(i, j);
            OperatorMatrix want = s.adjoint() * tf_shift_matrix(lam, n).adjoint() * t;
            CHECK((seq[sub.flat(i, j)] - want).norm() < kTight);
        }

    Lattice full(1, 1, n);
    LatticeSeq grid = analysis(s, full, t);
    OperatorField field = op_stft(s, t);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            CHECK((grid[full.flat(k, l)] - field.at(k, l)).norm() < kTight);

    LatticeSeq zero = analysis(s, sub, OperatorMatrix::Zero(n, n));
    for (const auto& cell : zero) CHECK(cell.norm() == 0.0);
}

TEST_CASE("synthesis: zero, one-term sum, adjointness with analysis") {
    const int n = 6;
    SeededRng rng(2);
    OperatorMatrix s = rng.matrix(n);
    Lattice lat(2, 3, n);

    LatticeSeq zeros(lat.size(), OperatorMatrix::Zero(n, n));
    CHECK(synthesis(s, lat, zeros).norm() == 0.0);

    OperatorMatrix a = rng.matrix(n);
    LatticeSeq single(lat.size(), OperatorMatrix::Zero(n, n));
    single[lat.flat(1, 1)] = a;  // lattice point (2, 3)
    OperatorMatrix want = tf_shift_matrix({2, 3}, n) * s * a;
    CHECK((synthesis(s, lat, single) - want).norm() < kTight);

    // <D_S seq, T> = sum_lambda <seq_lambda, S* pi(lambda)* T>
    LatticeSeq seq;
    for (int i = 0; i < lat.size(); ++i) seq.push_back(SeededRng(40 + i).matrix(n));
    OperatorMatrix t = rng.matrix(n);
    Complex lhs = hs_inner(synthesis(s, lat, seq), t);
    Complex rhs = 0.0;
    LatticeSeq coeffs = analysis(s, lat, t);
    for (int i = 0; i < lat.size(); ++i) rhs += hs_inner(seq[i], coeffs[i]);
    CHECK(std::abs(lhs - rhs) < kLoose * std::abs(rhs));

    LatticeSeq bad(lat.size() - 1, OperatorMatrix::Zero(n, n));
    CHECK_THROWS_AS(synthesis(s, lat, bad), std::invalid_argument);
}

// ── frame matrix and bounds ──────────────────────────────────────────

TEST_CASE("frame_matrix: full-lattice collapse, delta orbit, zero, oracle") {
    const int n = 4;
    SeededRng rng(3);
    OperatorMatrix s = rng.unit_matrix(n);
    Lattice full(1, 1, n);

    OperatorMatrix m = frame_matrix(s, s, full);
    CHECK((m - double(n) * OperatorMatrix::Identity(n, n)).norm() < kLoose);

    OperatorMatrix d00 = rank_one(basis_vector(n, 0), basis_vector(n, 0));
    Lattice sub(2, 1, n);
    OperatorMatrix orbit = frame_matrix(d00, d00, sub);
    OperatorMatrix want = 4.0 * (rank_one(basis_vector(n, 0), basis_vector(n, 0)) +
                                 rank_one(basis_vector(n, 2), basis_vector(n, 2)));
    CHECK((orbit - want).norm() < kTight);

    CHECK(frame_matrix(s, OperatorMatrix::Zero(n, n), sub).norm() == 0.0);

    OperatorMatrix r = rng.matrix(n);
    Lattice mixed(2, 2, n);
    CHECK((frame_matrix(s, r, mixed) - frame_matrix_oracle(s, r, mixed)).norm() < kLoose);
}

TEST_CASE("frame_bounds: tightness, orbit counterexample, zero window, psd") {
    const int n = 4;
    for (int seed = 1; seed <= 10; ++seed) {
        OperatorMatrix s = SeededRng(seed).matrix(n);
        FrameReport rep = frame_bounds(s, Lattice(1, 1, n));
        double want = n * s.squaredNorm();
        CHECK(rep.lower == doctest::Approx(want).epsilon(kLoose));
        CHECK(rep.upper == doctest::Approx(want).epsilon(kLoose));
        CHECK(rep.is_frame);
        CHECK(rep.condition == doctest::Approx(1.0).epsilon(kLoose));
    }

    OperatorMatrix d00 = rank_one(basis_vector(n, 0), basis_vector(n, 0));
    FrameReport orbit = frame_bounds(d00, Lattice(2, 1, n));
    CHECK(std::abs(orbit.lower) <= kTight);
    CHECK(orbit.upper == doctest::Approx(4.0).epsilon(kLoose));
    CHECK_FALSE(orbit.is_frame);
    CHECK(std::isinf(orbit.condition));

    FrameReport zero = frame_bounds(OperatorMatrix::Zero(n, n), Lattice(2, 1, n));
    CHECK(zero.lower == 0.0);
    CHECK(zero.upper == 0.0);
    CHECK_FALSE(zero.is_frame);

    // positive semidefiniteness across seeds and lattices
    const int m = 8;
    for (int seed = 1; seed <= 5; ++seed) {
        OperatorMatrix s = SeededRng(100 + seed).matrix(m);
        for (auto [a, b] : {std::pair{2, 4}, std::pair{4, 2}, std::pair{2, 2}}) {
            FrameReport rep = frame_bounds(s, Lattice(a, b, m));
            CHECK(rep.lower >= -kTight * std::max(rep.upper, 1.0));
            CHECK(rep.lower <= rep.upper);
        }
    }
}

TEST_CASE("squared g-frame identity and extremal transfer") {
    const int n = 8;
    SeededRng rng(4);
    OperatorMatrix s = rng.matrix(n);
    Lattice lat(2, 2, n);
    OperatorMatrix m = frame_matrix(s, s, lat);

    for (int seed = 1; seed <= 5; ++seed) {
        OperatorMatrix t = SeededRng(200 + seed).matrix(n);
        double sum = 0.0;
        for (const auto& cell : analysis(s, lat, t)) sum += cell.squaredNorm();
        double quad = hs_inner(m * t, t).real();
        CHECK(sum == doctest::Approx(quad).epsilon(kLoose));
    }

    // vector extremals transfer to rank-one operator extremals
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(0.5 * (m + m.adjoint()));
    FrameReport rep = frame_bounds(s, lat);
    Signal u_min = eig.eigenvectors().col(0);
    Signal u_max = eig.eigenvectors().col(n - 1);
    Signal e = basis_vector(n, 5);
    for (auto [u, bound] : {std::pair{u_min, rep.lower}, std::pair{u_max, rep.upper}}) {
        OperatorMatrix t = rank_one(u, e);
        double sum = 0.0;
        for (const auto& cell : analysis(s, lat, t)) sum += cell.squaredNorm();
        CHECK(sum == doctest::Approx(bound * t.squaredNorm()).epsilon(kLoose));
    }
}

TEST_CASE("analysis sequence norm is controlled by the aligned-block amalgam norm") {
    const int n = 8;
    SeededRng rng(5);
    OperatorMatrix s = rng.unit_matrix(n);
    Weight m = polynomial_weight(1.0, n);
    const double ps[] = {1.0, 2.0, kInf};
    for (int seed = 1; seed <= 5; ++seed) {
        OperatorMatrix t = SeededRng(300 + seed).matrix(n);
        OperatorField field = op_stft(s, t);
        for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 4}}) {
            Lattice lat(a, b, n);
            LatticeSeq seq = analysis(s, lat, t);
            for (double p : ps)
                for (double q : ps)
                    CHECK(seq_mixed_norm(seq, lat, p, q, m) <=
                          amalgam_norm(field, a, b, p, q, m) * (1.0 + kLoose));
        }
    }
}

// ── canonical dual ───────────────────────────────────────────────────

TEST_CASE("canonical_dual_apply reconstructs") {
    const int n = 8;
    SeededRng rng(6);
    OperatorMatrix s = rng.unit_matrix(n);
    Lattice full(1, 1, n);

    CHECK(canonical_dual_apply(s, full, OperatorMatrix::Zero(n, n)).norm() == 0.0);

    for (int seed = 1; seed <= 5; ++seed) {
        OperatorMatrix t = SeededRng(400 + seed).matrix(n);
        // full lattice: M = N I, so the dual analysis is analysis / N
        OperatorMatrix direct = synthesis(s, full, analysis(s, full, t));
        CHECK((direct / double(n) - t).norm() < kLoose * t.norm());
        CHECK((canonical_dual_apply(s, full, t) - t).norm() < kLoose * t.norm());
    }

    Lattice sub(2, 2, n);
    for (int seed = 1; seed <= 5; ++seed) {
        OperatorMatrix w = SeededRng(500 + seed).unit_matrix(n);
        FrameReport rep = frame_bounds(w, sub);
        REQUIRE(rep.is_frame);
        for (int ts = 1; ts <= 5; ++ts) {
            OperatorMatrix t = SeededRng(600 + ts).matrix(n);
            CHECK((canonical_dual_apply(w, sub, t) - t).norm() < 1e-9 * t.norm());
        }
    }

    const int m = 4;
    OperatorMatrix d00 = rank_one(basis_vector(m, 0), basis_vector(m, 0));
    CHECK_THROWS_AS(canonical_dual_apply(d00, Lattice(2, 1, m), OperatorMatrix::Identity(m, m)),
                    std::invalid_argument);
}

// ── localization operators ───────────────────────────────────────────

TEST_CASE("localization_op: flat symbol, zero symbol, convolution identity") {
    const int n = 8;
    SeededRng rng(7);
    Signal phi = rng.unit_signal(n);

    OperatorMatrix id = localization_op(phi, ScalarField::Ones(n, n));
    CHECK((id - OperatorMatrix::Identity(n, n)).norm() < kTight * n);

    CHECK(localization_op(phi, ScalarField::Zero(n, n)).norm() == 0.0);

    for (int seed = 1; seed <= 5; ++seed) {
        SeededRng r2(700 + seed);
        ScalarField h = r2.scalar_field(n);
        Signal psi = r2.signal(n);
        OperatorMatrix got = localization_op(psi, h);
        OperatorMatrix want = conv_fun_op(h, rank_one(psi, psi));
        CHECK((got - want).norm() <= 1e-10 * want.norm());

        // matrix action matches the analysis -> mask -> synthesis pipeline
        Signal f = r2.signal(n);
        ScalarField masked = fstft(psi, f).cwiseProduct(h);
        Signal direct = fstft_adjoint(psi, masked);
        CHECK((got * f - direct).norm() < kLoose * direct.norm());
    }

    CHECK_THROWS_AS(localization_op(Signal::Zero(n), ScalarField::Ones(n, n)),
                    std::invalid_argument);
}

TEST_CASE("symbol_frame_condition: constant, tiling, half-domain, negativity") {
    const int n = 8;
    Lattice lat(2, 4, n);  // |lattice| = 4 * 2 = 8

    SymbolBounds flat = symbol_frame_condition(2.5 * RealGrid::Ones(n, n), lat);
    CHECK(flat.lower == doctest::Approx(2.5 * lat.size()).epsilon(kTight));
    CHECK(flat.upper == doctest::Approx(2.5 * lat.size()).epsilon(kTight));

    RealGrid tile = RealGrid::Zero(n, n);
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 4; ++l) tile(k, l) = 1.0;
    SymbolBounds tiling = symbol_frame_condition(tile, lat);
    CHECK(tiling.lower == doctest::Approx(1.0).epsilon(kTight));
    CHECK(tiling.upper == doctest::Approx(1.0).epsilon(kTight));

    RealGrid half = RealGrid::Zero(n, n);
    for (int l = 0; l < 4; ++l) half(0, l) = 1.0;  // only k = 0 of the domain
    SymbolBounds gap = symbol_frame_condition(half, lat);
    CHECK(gap.lower == 0.0);
    CHECK(gap.upper == doctest::Approx(1.0).epsilon(kTight));

    RealGrid neg = RealGrid::Ones(n, n);
    neg(3, 3) = -0.25;
    CHECK_THROWS_AS(symbol_frame_condition(neg, lat), std::invalid_argument);
}

// ── characterization by localization translates ──────────────────────

TEST_CASE("characterization_seq: zero, unit symbol closed form, eigen bracket") {
    const int n = 8;
    SeededRng rng(8);
    Signal phi = rng.unit_signal(n);
    Weight one = Weight::ones(n);
    Lattice full(1, 1, n);
    RealGrid ones = RealGrid::Ones(n, n);

    CHECK(characterization_seq(OperatorMatrix::Zero(n, n), phi, ones, full, 2.0, 2.0, one) ==
          0.0);

    for (int seed = 1; seed <= 5; ++seed) {
        OperatorMatrix t = SeededRng(800 + seed).matrix(n);
        double norm = characterization_seq(t, phi, ones, full, 2.0, 2.0, one);
        CHECK(norm == doctest::Approx(double(n) * t.norm()).epsilon(kLoose));
    }

    // delta symbol on the full lattice: bracket collapses to ||T||^2 / N
    RealGrid delta = RealGrid::Zero(n, n);
    delta(0, 0) = 1.0;
    EigenBracket tightb = characterization_bracket(phi, delta, full);
    CHECK(tightb.lower == doctest::Approx(1.0 / n).epsilon(kLoose));
    CHECK(tightb.upper == doctest::Approx(1.0 / n).epsilon(kLoose));

    // seeded nonnegative symbol on a sublattice: the squared sequence
    // norm sits inside the independently computed eigen bracket
    Lattice lat(2, 2, n);
    RealGrid h = SeededRng(9).nonneg_grid(n);
    OperatorMatrix a = localization_op(phi, h.cast<Complex>().matrix());
    OperatorMatrix big = OperatorMatrix::Zero(n, n);
    for (int i = 0; i < lat.count_k(); ++i)
        for (int j = 0; j < lat.count_l(); ++j) {
            OperatorMatrix u = tf_shift_matrix(lat.point(i, j), n);
            big += u * (a.adjoint() * a) * u.adjoint();
        }
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(0.5 * (big + big.adjoint()));
    EigenBracket bracket = characterization_bracket(phi, h, lat);
    CHECK(bracket.lower == doctest::Approx(eig.eigenvalues()(0)).epsilon(kLoose));
    CHECK(bracket.upper == doctest::Approx(eig.eigenvalues()(n - 1)).epsilon(kLoose));
    for (int seed = 1; seed <= 10; ++seed) {
        OperatorMatrix t = SeededRng(900 + seed).matrix(n);
        double norm = characterization_seq(t, phi, h, lat, 2.0, 2.0, one);
        double sq = norm * norm;
        CHECK(sq >= bracket.lower * t.squaredNorm() * (1.0 - kLoose) - kTight);
        CHECK(sq <= bracket.upper * t.squaredNorm() * (1.0 + kLoose) + kTight);
    }

    RealGrid neg = RealGrid::Ones(n, n);
    neg(0, 0) = -1.0;
    CHECK_THROWS_AS(characterization_seq(OperatorMatrix::Identity(n, n), phi, neg, full, 2.0,
                                         2.0, one),
                    std::invalid_argument);
}
