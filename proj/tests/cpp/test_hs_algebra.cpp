#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opstft/hs_algebra.hpp"
#include "opstft/phase_space.hpp"
#include "opstft/rng.hpp"

#include <cmath>
#include <stdexcept>

using namespace opstft;

namespace {

constexpr double kTight = 1e-12;
constexpr double kLoose = 1e-10;

Complex trace_oracle(const OperatorMatrix& a) {
    Complex t = 0.0;
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

}  // namespace

// ── Hilbert-Schmidt inner product ────────────────────────────────────

TEST_CASE("hs_inner basics") {
    const int n = 4;
    OperatorMatrix id = OperatorMatrix::Identity(n, n);
    CHECK(std::abs(hs_inner(id, id) - Complex(4.0, 0.0)) < kTight);

    SeededRng rng(1);
    Signal f = rng.signal(n), g = rng.signal(n), u = rng.signal(n), v = rng.signal(n);
    Complex got = hs_inner(rank_one(f, g), rank_one(u, v));
    Complex want = inner(f, u) * inner(v, g);
    CHECK(std::abs(got - want) < kLoose);

    const int m = 8;
    SeededRng rng2(2);
    OperatorMatrix s = rng2.matrix(m), t = rng2.matrix(m);
    Complex entrywise = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) entrywise += s(i, j) * std::conj(t(i, j));
    CHECK(std::abs(hs_inner(s, t) - entrywise) < kLoose);

    // genuine inner product
    Complex ss = hs_inner(s, s);
    CHECK(std::abs(ss.imag()) < kTight);
    CHECK(ss.real() > 0.0);
    CHECK(std::abs(hs_inner(OperatorMatrix::Zero(m, m), OperatorMatrix::Zero(m, m))) == 0.0);
    CHECK(std::abs(hs_inner(s, t) - std::conj(hs_inner(t, s))) < kLoose);

    CHECK_THROWS_AS(hs_inner(s, OperatorMatrix::Zero(4, 4)), std::invalid_argument);
}

// ── singular values and Schatten norms ───────────────────────────────

TEST_CASE("singular_values: identity, rank one, Frobenius consistency") {
    const int n = 4;
    Eigen::VectorXd sv = singular_values(OperatorMatrix::Identity(n, n));
    REQUIRE(sv.size() == n);
    for (int i = 0; i < n; ++i) CHECK(sv(i) == doctest::Approx(1.0).epsilon(kTight));

    SeededRng rng(7);
    Signal f = rng.signal(n), g = rng.signal(n);
    sv = singular_values(rank_one(f, g));
    CHECK(sv(0) == doctest::Approx(f.norm() * g.norm()).epsilon(kLoose));
    for (int i = 1; i < n; ++i) CHECK(sv(i) < kLoose * sv(0));

    const int m = 8;
    OperatorMatrix t = SeededRng(8).matrix(m);
    sv = singular_values(t);
    for (int i = 0; i + 1 < m; ++i) CHECK(sv(i) >= sv(i + 1));  // sorted
    double frob = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) frob += std::norm(t(i, j));
    CHECK(sv.squaredNorm() == doctest::Approx(frob).epsilon(1e-12));
}

TEST_CASE("schatten_norm: values, p=2 collapse, monotonicity, errors") {
    const int n = 4;
    OperatorMatrix id = OperatorMatrix::Identity(n, n);
    CHECK(schatten_norm(id, 1.0) == doctest::Approx(4.0).epsilon(kTight));
    CHECK(schatten_norm(id, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(1.0).epsilon(kTight));

    OperatorMatrix t = SeededRng(9).matrix(8);
    CHECK(schatten_norm(t, 2.0) ==
          doctest::Approx(std::sqrt(hs_inner(t, t).real())).epsilon(1e-12));
    double p1 = schatten_norm(t, 1.0);
    double p2 = schatten_norm(t, 2.0);
    double p4 = schatten_norm(t, 4.0);
    double pinf = schatten_norm(t, std::numeric_limits<double>::infinity());
    CHECK(p1 >= p2);
    CHECK(p2 >= p4);
    CHECK(p4 >= pinf);

    CHECK_THROWS_AS(schatten_norm(t, 0.5), std::invalid_argument);
}

// ── conjugation and parity ───────────────────────────────────────────

TEST_CASE("conjugate_shift: fixed point, delta orbit, group law, isometry") {
    const int n = 4;
    SeededRng rng(10);
    OperatorMatrix s = rng.matrix(n);
    CHECK((conjugate_shift({0, 0}, s) - s).norm() < kTight);

    OperatorMatrix d00 = rank_one(basis_vector(n, 0), basis_vector(n, 0));
    for (int x = 0; x < n; ++x)
        for (int w = 0; w < n; ++w) {
            OperatorMatrix got = conjugate_shift({x, w}, d00);
            OperatorMatrix want = rank_one(basis_vector(n, x), basis_vector(n, x));
            CHECK((got - want).norm() < kTight);
        }

    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int kp = 0; kp < n; ++kp)
                for (int lp = 0; lp < n; ++lp) {
                    OperatorMatrix two = conjugate_shift({k, l}, conjugate_shift({kp, lp}, s));
                    OperatorMatrix one = conjugate_shift(pp_add({k, l}, {kp, lp}, n), s);
                    CHECK((two - one).norm() < kLoose);
                }

    // unitary conjugation preserves trace and Schatten norms
    OperatorMatrix c = conjugate_shift({2, 3}, s);
    CHECK(std::abs(trace_oracle(c) - trace_oracle(s)) < kLoose);
    CHECK(schatten_norm(c, 1.0) == doctest::Approx(schatten_norm(s, 1.0)).epsilon(kLoose));
    CHECK(schatten_norm(c, 2.0) == doctest::Approx(schatten_norm(s, 2.0)).epsilon(kLoose));
}

TEST_CASE("parity: involution, deltas, trace") {
    const int n = 4;
    OperatorMatrix id = OperatorMatrix::Identity(n, n);
    CHECK((parity(id) - id).norm() < kTight);

    OperatorMatrix d11 = rank_one(basis_vector(n, 1), basis_vector(n, 1));
    OperatorMatrix d33 = rank_one(basis_vector(n, 3), basis_vector(n, 3));
    CHECK((parity(d11) - d33).norm() < kTight);

    SeededRng rng(11);
    OperatorMatrix s = rng.matrix(n);
    CHECK((parity(parity(s)) - s).norm() < kTight);
    CHECK(std::abs(trace_oracle(parity(s)) - trace_oracle(s)) < kLoose);

    Signal f = rng.signal(5);  // odd N: 0 fixed, t <-> 5-t
    Signal pf = parity_apply(f);
    CHECK(std::abs(pf(0) - f(0)) < kTight);
    for (int t = 1; t < 5; ++t) CHECK(std::abs(pf(t) - f(5 - t)) < kTight);
}

// ── QHA convolutions ─────────────────────────────────────────────────

TEST_CASE("conv_fun_op: identity symbol, zero operator, brute force") {
    const int n = 8;
    SeededRng rng(12);
    OperatorMatrix s = rng.matrix(n);

    OperatorMatrix got = conv_fun_op(ScalarField::Ones(n, n), s);
    OperatorMatrix want = trace_oracle(s) * OperatorMatrix::Identity(n, n);
    CHECK((got - want).norm() < kLoose * std::abs(trace_oracle(s)));

    CHECK(conv_fun_op(rng.scalar_field(n), OperatorMatrix::Zero(n, n)).norm() == 0.0);

    ScalarField h = rng.scalar_field(n);
    OperatorMatrix naive = OperatorMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            OperatorMatrix u = tf_shift_matrix({k, l}, n);
            naive += h(k, l) * (u * s * u.adjoint());
        }
    naive /= static_cast<double>(n);
    CHECK((conv_fun_op(h, s) - naive).norm() < kLoose * naive.norm());
}

TEST_CASE("conjugating conv_fun_op translates the symbol") {
    // alpha_w (h * S) = h(. - w) * S because alpha_w alpha_z = alpha_{z+w}
    // (the composition phases cancel under conjugation).
    const int n = 6;
    SeededRng rng(13);
    ScalarField h = rng.scalar_field(n);
    OperatorMatrix s = rng.matrix(n);
    for (int wk = 0; wk < n; ++wk)
        for (int wl = 0; wl < n; ++wl) {
            PhasePoint w{wk, wl};
            OperatorMatrix lhs = conjugate_shift(w, conv_fun_op(h, s));
            ScalarField ht(n, n);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    PhasePoint d = pp_sub({k, l}, w, n);
                    ht(k, l) = h(d.k, d.l);
                }
            OperatorMatrix rhs = conv_fun_op(ht, s);
            CHECK((lhs - rhs).norm() < kLoose * (1.0 + lhs.norm()));
        }
}

TEST_CASE("conv_op_op: delta field, generalized Moyal, zero") {
    const int n = 4;
    OperatorMatrix d00 = rank_one(basis_vector(n, 0), basis_vector(n, 0));
    ScalarField field = conv_op_op(d00, d00);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            CHECK(std::abs(field(k, l) - (k == 0 ? 1.0 : 0.0)) < kTight);

    const int m = 8;
    SeededRng rng(14);
    OperatorMatrix s = rng.matrix(m), t = rng.matrix(m);
    Complex acc = 0.0;
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) acc += trace_oracle(s * conjugate_shift({k, l}, t));
    acc /= static_cast<double>(m);
    Complex want = trace_oracle(s) * trace_oracle(t);
    CHECK(std::abs(acc - want) < kLoose * std::abs(want));

    CHECK(conv_op_op(s, OperatorMatrix::Zero(m, m)).norm() == 0.0);
}
